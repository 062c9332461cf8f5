"""Spin decisions through quadratic forms.

A twist word constrains the quadratic refinements q of the mod-2
intersection form: a twist along c survives to the total space exactly
when q(c) = 1. Solving those affine conditions over GF(2), classifying
solutions by Arf invariant, and wiring the outcomes to the spin
statements for pencils, fibrations and doubles is what lives here.
Forms stand in for spin structures throughout; no separate spin
structure type exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .surface import CurveClass, QuadraticFormZ2, SurfaceModel, arf
from .twists import Factorization, factor_matrix_mod2


@dataclass(frozen=True)
class FormSolutionSet:
    """Affine set of quadratic forms meeting the twist conditions.

    Empty when count == 0; otherwise the solutions are the particular
    form XORed with any subset of the homogeneous basis, 2^dim in all.
    """

    surface: SurfaceModel
    particular: QuadraticFormZ2 | None
    homogeneous_basis: tuple[tuple[int, ...], ...]
    count: int

    def __iter__(self):
        if self.particular is None:
            return
        n = self.surface.rank
        base = gf2.to_mask(self.particular.values)
        masks = [gf2.to_mask(v) for v in self.homogeneous_basis]
        for h in gf2.span_members(masks):
            yield QuadraticFormZ2(gf2.to_bits(base ^ h, n))

    def __contains__(self, q: QuadraticFormZ2) -> bool:
        if self.particular is None:
            return False
        diff = gf2.to_mask(q.values) ^ gf2.to_mask(self.particular.values)
        masks = [gf2.to_mask(v) for v in self.homogeneous_basis]
        return gf2.rank(masks) == gf2.rank(masks + [diff])


def solve_forms(cycles, surface: SurfaceModel, extra=()) -> FormSolutionSet:
    """All q with q(c) = 1 on every cycle, plus extra (class, value) pins.

    Each condition is affine in the basis values: writing c = sum c_i e_i,
    q(c) = sum c_i q(e_i) + sum_{i<j} c_i c_j <e_i, e_j>  (mod 2),
    so the linear part is c's mod-2 coordinate vector and the constant
    absorbs the pairing cross-terms.
    """
    n = surface.rank
    equations = []

    def add_condition(cls, value):
        coords = (
            cls.mod2() if isinstance(cls, CurveClass) else tuple(c & 1 for c in cls)
        )
        if len(coords) != n:
            raise ValueError("cycle length does not match surface rank")
        cross = 0
        for k in range(surface.genus):
            cross ^= coords[2 * k] & coords[2 * k + 1]
        equations.append((gf2.to_mask(coords), (value ^ cross) & 1))

    for c in cycles:
        add_condition(c, 1)
    for cls, value in extra:
        add_condition(cls, value)
    particular, basis = gf2.solve_affine(equations, n)
    if particular is None:
        return FormSolutionSet(surface, None, (), 0)
    return FormSolutionSet(
        surface,
        QuadraticFormZ2(gf2.to_bits(particular, n)),
        tuple(gf2.to_bits(b, n) for b in basis),
        1 << len(basis),
    )


def classify_arf(solutions: FormSolutionSet, surface: SurfaceModel) -> tuple[int, int]:
    """(count with Arf 0, count with Arf 1), by enumeration.

    Enumeration respects the cap in gf2.span_members; genus-9 solution
    sets (512 forms) are far below it.
    """
    count0 = count1 = 0
    for q in solutions:
        if arf(q, surface):
            count1 += 1
        else:
            count0 += 1
    return count0, count1


@dataclass(frozen=True)
class SpinVerdict:
    """status is "spin", "not_spin" or "inconclusive"; spin verdicts
    always carry a witness form."""

    status: str
    witness: QuadraticFormZ2 | None = None
    reason: str = ""

    def __post_init__(self) -> None:
        if self.status not in ("spin", "not_spin", "inconclusive"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "spin" and self.witness is None:
            raise ValueError("spin verdicts need a witness form")


def pencil_spin_check(f: Factorization) -> SpinVerdict:
    """Spin test for pencil words (b >= 1).

    The total space is spin exactly when some q gives every vanishing
    cycle value 1 and gives some boundary component's class value 1.
    The boundary components play symmetric roles, so each is tried in
    turn and the first solvable pin wins.
    """
    s = f.surface
    if s.boundary < 1:
        raise ValueError("pencil check needs a bounded fiber")
    cycles = [t.curve for t in f.terms if t.kind == "dehn"]
    for j in range(1, s.boundary + 1):
        delta = s.boundary_class(j)
        sols = solve_forms(cycles, s, extra=[(delta, 1)])
        if sols.count:
            return SpinVerdict(
                "spin",
                witness=sols.particular,
                reason=f"solvable with boundary component {j} pinned to 1",
            )
    return SpinVerdict(
        "not_spin",
        reason="no form gives all cycles 1 and any boundary class 1",
    )


def _halves_match(f: Factorization) -> bool:
    n = len(f.terms)
    if n % 2:
        return False
    half = n // 2
    for a, b in zip(f.terms[:half], f.terms[half:]):
        if a.curve.coords != b.curve.coords or a.sign != b.sign:
            return False
    return True


def fibration_spin_check(
    f: Factorization, dual_parity: str | None = None, doubled: bool = False
) -> SpinVerdict:
    """Spin test for fibration words on a closed fiber.

    An empty solution set refutes spin outright. With doubled=True the
    word must visibly be w w; solvability alone then decides spin. An
    undoubled word needs the caller to supply the parity of the dual
    pairing data ("even" or "odd"): even plus solvability gives spin,
    odd refutes it, absent stays inconclusive.
    """
    if f.surface.boundary:
        raise ValueError("fibration check needs a closed fiber")
    cycles = [t.curve for t in f.terms if t.kind == "dehn"]
    sols = solve_forms(cycles, f.surface)
    if sols.count == 0:
        return SpinVerdict(
            "not_spin", reason="no form gives every vanishing cycle value 1"
        )
    if doubled:
        if not _halves_match(f):
            raise ValueError("doubled=True but the word is not a double")
        # The double-branch argument needs the half itself to act
        # trivially on homology, not just the full word.
        half = Factorization(
            f.surface,
            f.terms[: len(f.terms) // 2],
            coefficients=f.coefficients,
        )
        m2 = factor_matrix_mod2(half)
        n = f.surface.rank
        if any(m2[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
            raise ValueError("doubled=True but the half word is not trivial mod 2")
        return SpinVerdict(
            "spin", witness=sols.particular, reason="doubled word with solvable forms"
        )
    if dual_parity == "even":
        return SpinVerdict(
            "spin",
            witness=sols.particular,
            reason="solvable forms and even dual pairing",
        )
    if dual_parity == "odd":
        return SpinVerdict("not_spin", reason="odd dual pairing obstructs spin")
    return SpinVerdict(
        "inconclusive",
        reason="forms solvable but dual pairing parity not supplied",
    )


def spin_via_arf(f: Factorization, sigma: int, divisibility) -> SpinVerdict:
    """Spin from signature, divisibility and an Arf-1 solution.

    A closed spin 4-manifold has signature divisible by 16, so any
    other signature refutes spin. With the fiber-dual class primitive
    (d = 1), a vanishing signature mod 16 and a solution of Arf
    invariant 1 certify spin; every such solution is a valid witness.
    The converse fails, so the remaining cases stay inconclusive.
    """
    if f.surface.boundary:
        raise ValueError("Arf route needs a closed fiber")
    d = getattr(divisibility, "d", divisibility)
    cycles = [t.curve for t in f.terms if t.kind == "dehn"]
    sols = solve_forms(cycles, f.surface)
    if sols.count == 0:
        return SpinVerdict(
            "not_spin", reason="no form gives every vanishing cycle value 1"
        )
    if sigma % 16 != 0:
        return SpinVerdict(
            "not_spin", reason=f"signature {sigma} is not divisible by 16"
        )
    if d == 1:
        for q in sols:
            if arf(q, f.surface) == 1:
                return SpinVerdict(
                    "spin",
                    witness=q,
                    reason="d = 1, signature 0 mod 16, Arf-1 solution",
                )
        return SpinVerdict(
            "inconclusive", reason="no Arf-1 solution among the forms"
        )
    return SpinVerdict(
        "inconclusive",
        reason=f"fiber-dual divisibility d = {d} blocks the Arf route",
    )
