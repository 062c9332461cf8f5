"""Twist words and their symplectic shadows.

A factorization is an ordered word of twist terms on a fixed surface.
The word t_{c_1} t_{c_2} ... t_{c_n} acts on homology with the
rightmost factor applied first, so its matrix is the product
T_{c_1} T_{c_2} ... T_{c_n} in the listed order. t_c denotes the
right-handed twist; its homology action is the symplectic transvection

    T_c(x) = x + <x, c> c

and the left-handed twist inverts the sign. Point pushes and
boundary-parallel twists act trivially on homology but are carried in
words because their classes feed divisibility and bookkeeping.

Words over mod-2-only class data (coefficients "Z2") support the
operations that make sense there; integer-only operations refuse them.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .ledger import LedgerEntry, inverse_entry, merge_ledgers
from .surface import CurveClass, SurfaceModel, pairing

KINDS = ("dehn", "point_push", "boundary")


@dataclass(frozen=True)
class TwistTerm:
    kind: str
    curve: CurveClass
    sign: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown term kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def acts(self) -> bool:
        """Whether the term acts nontrivially on homology."""
        return self.kind == "dehn" and not self.curve.is_zero

    @property
    def label_component(self) -> int | None:
        """Boundary component index when the label reads 'delta<j>'."""
        lbl = self.curve.label
        if lbl and lbl.startswith("delta") and lbl[5:].isdigit():
            return int(lbl[5:])
        return None


def dehn(curve: CurveClass, sign: int = 1) -> TwistTerm:
    return TwistTerm("dehn", curve, sign)


@dataclass(frozen=True)
class Factorization:
    """Ordered twist word with an optional boundary multi-twist target.

    target lists one exponent per boundary component; empty target means
    the word is a relator (product is the identity mapping class). The
    ledger accumulates substitution events. All operations return new
    objects; nothing here mutates.
    """

    surface: SurfaceModel
    terms: tuple[TwistTerm, ...]
    target: tuple[int, ...] = ()
    ledger: tuple[LedgerEntry, ...] = ()
    coefficients: str = "Z"

    def __post_init__(self) -> None:
        if self.coefficients not in ("Z", "Z2"):
            raise ValueError("coefficients must be 'Z' or 'Z2'")
        if self.target and len(self.target) != self.surface.boundary:
            raise ValueError("target must list one exponent per boundary component")
        for t in self.terms:
            if len(t.curve.coords) != self.surface.rank:
                raise ValueError("term class length does not match surface rank")

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def dehn_count(self) -> int:
        return sum(1 for t in self.terms if t.kind == "dehn")

    def require_integer(self, op: str) -> None:
        if self.coefficients != "Z":
            raise ValueError(
                f"{op} needs integer class data; this word is mod-2 only"
            )

    def classes(self, kind: str | None = "dehn") -> tuple[CurveClass, ...]:
        return tuple(
            t.curve for t in self.terms if kind is None or t.kind == kind
        )


def _sym_dual(c: tuple[int, ...], genus: int) -> tuple[int, ...]:
    # w = J c, so that <x, c> = sum_i w_i x_i; delta directions drop out
    w = [0] * len(c)
    for k in range(genus):
        w[2 * k] = c[2 * k + 1]
        w[2 * k + 1] = -c[2 * k]
    return tuple(w)


def apply_transvection(
    x: tuple[int, ...], c: tuple[int, ...], surface: SurfaceModel, sign: int = 1
) -> tuple[int, ...]:
    """Raw coordinates of T_c^sign(x)."""
    coeff = sign * pairing(x, c, surface)
    if coeff == 0:
        return tuple(x)
    return tuple(xi + coeff * ci for xi, ci in zip(x, c))


def transvection(curve: CurveClass, x, surface: SurfaceModel, sign: int = 1):
    """Image of x under the transvection along curve.

    Identity when the curve class is zero. Given a CurveClass, returns a
    CurveClass (sign-normalized); given raw coordinates, returns the raw
    image tuple, e.g. the image of b1 under T_{a1} is b1 - a1.
    """
    if isinstance(x, CurveClass):
        return CurveClass(
            apply_transvection(x.coords, curve.coords, surface, sign),
            label=x.label,
        )
    return apply_transvection(tuple(x), curve.coords, surface, sign)


def transvection_matrix(
    curve: CurveClass, surface: SurfaceModel, sign: int = 1
) -> list[list[int]]:
    n = surface.rank
    c = curve.coords
    w = _sym_dual(c, surface.genus)
    return [
        [(1 if i == j else 0) + sign * c[i] * w[j] for j in range(n)]
        for i in range(n)
    ]


def _term_matrix_update(m: list[list[int]], term: TwistTerm, surface: SurfaceModel) -> None:
    # left-multiply m by the term's transvection, in place (rank-1 update)
    if not term.acts:
        return
    c = term.curve.coords
    w = _sym_dual(c, surface.genus)
    n = len(m)
    row = [0] * n
    for i, wi in enumerate(w):
        if wi:
            mi = m[i]
            for j in range(n):
                row[j] += wi * mi[j]
    s = term.sign
    for i, ci in enumerate(c):
        if ci:
            mi = m[i]
            sc = s * ci
            for j in range(n):
                mi[j] += sc * row[j]


def word_matrix(
    terms, surface: SurfaceModel
) -> list[list[int]]:
    """Product of the terms' transvections, rightmost factor first."""
    n = surface.rank
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for term in reversed(tuple(terms)):
        _term_matrix_update(m, term, surface)
    return m


def factor_matrix(f: Factorization) -> list[list[int]]:
    f.require_integer("factor_matrix")
    return word_matrix(f.terms, f.surface)


def factor_matrix_mod2(f: Factorization) -> list[list[int]]:
    """Mod-2 shadow of the word's action; legal for Z2-only words."""
    m = word_matrix(f.terms, f.surface)
    return [[x & 1 for x in row] for row in m]


def homological_triviality(f: Factorization) -> bool:
    """Whether the word acts as the identity on (mod-2 for Z2 words) H1.

    The boundary multi-twist target is recorded but not checked here:
    boundary twists already act trivially on homology.
    """
    if f.coefficients == "Z2":
        m = factor_matrix_mod2(f)
    else:
        m = factor_matrix(f)
    n = f.surface.rank
    return all(
        m[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
    )


def _conjugate_class(
    mover: TwistTerm, passed: CurveClass, surface: SurfaceModel, sign: int
) -> CurveClass:
    if not mover.acts:
        return passed
    return CurveClass(
        apply_transvection(
            passed.coords, mover.curve.coords, surface, sign * mover.sign
        ),
        label=passed.label,
    )


def hurwitz_move(f: Factorization, i: int, direction: str = "right") -> Factorization:
    """Elementary Hurwitz move on the adjacent pair at positions (i, i+1).

    right:  t_a t_b  ->  t_b t_{b^{-1}(a)}   (b slides left unchanged)
    left:   t_a t_b  ->  t_{a(b)} t_a        (a slides right unchanged)

    Signs and kinds travel with their terms; the product of the word is
    unchanged. left at i undoes right at i.
    """
    if not 0 <= i < len(f.terms) - 1:
        raise IndexError(f"no adjacent pair at position {i}")
    a, b = f.terms[i], f.terms[i + 1]
    if direction == "right":
        conj = _conjugate_class(b, a.curve, f.surface, -1)
        new_pair = (b, replace(a, curve=conj))
    elif direction == "left":
        conj = _conjugate_class(a, b.curve, f.surface, +1)
        new_pair = (replace(b, curve=conj), a)
    else:
        raise ValueError("direction must be 'right' or 'left'")
    terms = f.terms[:i] + new_pair + f.terms[i + 2 :]
    return replace(f, terms=terms)


def cyclic_permute(f: Factorization, k: int) -> Factorization:
    """Rotate the word left by k (negative k rotates right).

    Valid for relators, and for boundary multi-twist targets too since
    boundary twists are central: w1 w2 = target implies w2 w1 = target.
    """
    n = len(f.terms)
    if n == 0:
        return f
    k %= n
    return replace(f, terms=f.terms[k:] + f.terms[:k])


def _conjugate_terms(f: Factorization, m: list[list[int]]) -> Factorization:
    new_terms = []
    n = len(m)
    for t in f.terms:
        img = tuple(
            sum(m[i][j] * t.curve.coords[j] for j in range(n)) for i in range(n)
        )
        new_terms.append(replace(t, curve=CurveClass(img, label=t.curve.label)))
    return replace(f, terms=tuple(new_terms))


def conjugate_global(f: Factorization, w) -> Factorization:
    """Replace every class by its image under the word w's action.

    w may be a Factorization, an iterable of terms on the same surface,
    or an explicit matrix (which must preserve the pairing). Boundary
    classes are fixed by any twist word, so the target is unchanged.
    """
    f.require_integer("conjugate_global")
    if isinstance(w, Factorization):
        m = word_matrix(w.terms, f.surface)
    else:
        seq = tuple(w)
        if not seq:
            return f
        if isinstance(seq[0], TwistTerm):
            m = word_matrix(seq, f.surface)
        else:
            m = [list(row) for row in seq]
            if not is_symplectic(m, f.surface):
                raise ValueError(
                    "conjugating matrix does not preserve the pairing"
                )
    return _conjugate_terms(f, m)


def cancel_pairs(f: Factorization) -> Factorization:
    """Delete adjacent equal-class, equal-kind, opposite-sign pairs."""
    stack: list[TwistTerm] = []
    for t in f.terms:
        if (
            stack
            and stack[-1].kind == t.kind
            and stack[-1].curve.coords == t.curve.coords
            and stack[-1].sign == -t.sign
        ):
            stack.pop()
        else:
            stack.append(t)
    return replace(f, terms=tuple(stack))


def is_symplectic(m: list[list[int]], surface: SurfaceModel) -> bool:
    n = surface.rank
    cols = [tuple(m[i][j] for i in range(n)) for j in range(n)]
    for i in range(n):
        for j in range(n):
            want = 0
            if i < 2 * surface.genus and j < 2 * surface.genus:
                if j == i + 1 and i % 2 == 0:
                    want = 1
                elif j == i - 1 and i % 2 == 1:
                    want = -1
            if pairing(cols[i], cols[j], surface) != want:
                return False
    return True


def fiber_sum(f1: Factorization, f2: Factorization, glue=None) -> Factorization:
    """Concatenate two relators, conjugating the second by the glue.

    Both words must live on the same surface and be relators (empty
    target). glue is a word or matrix whose action must preserve the
    intersection pairing; None means the identity gluing.
    """
    if f1.surface != f2.surface:
        raise ValueError("fiber summands must share a surface model")
    if f1.target or f2.target:
        raise ValueError("fiber sum needs relators with empty targets")
    f1.require_integer("fiber_sum")
    f2.require_integer("fiber_sum")
    glued = f2 if glue is None else conjugate_global(f2, glue)
    return Factorization(
        surface=f1.surface,
        terms=f1.terms + glued.terms,
        target=(),
        ledger=merge_ledgers(f1.ledger, f2.ledger),
    )


def substitute(
    f: Factorization,
    start: int,
    stop: int,
    template,
    embedding,
    side: str = "rhs",
    ledger_entry: LedgerEntry | None = None,
) -> Factorization:
    """Swap one embedded side of a relation for the other.

    The terms at [start, stop) must match the embedded image of the
    template's `side` word exactly: same classes (sign-normalized) in
    the same order with the same twist signs. No Hurwitz search is
    attempted; align the word first. The replacement is the embedded
    other side, and the segment product is verified unchanged before
    committing. The ledger gains the template's entry (side="rhs",
    splicing the relation in) or its inverse (side="lhs", splicing it
    out); templates without a ledger constant need an explicit
    ledger_entry.
    """
    f.require_integer("substitute")
    if side not in ("lhs", "rhs"):
        raise ValueError("side must be 'lhs' or 'rhs'")
    if not 0 <= start <= stop <= len(f.terms):
        raise IndexError("substitution range out of bounds")
    present = template.rhs if side == "rhs" else template.lhs
    incoming = template.lhs if side == "rhs" else template.rhs
    segment = f.terms[start:stop]
    if len(segment) != len(present):
        raise ValueError(
            f"range holds {len(segment)} terms, template side has {len(present)}"
        )
    for k, (seg, tmpl) in enumerate(zip(segment, present)):
        want = CurveClass(embedding.apply(tmpl.curve.coords))
        if seg.curve.coords != want.coords:
            raise ValueError(
                f"class mismatch at offset {k}: word has "
                f"{seg.curve.coords}, embedded template needs {want.coords}"
            )
        if seg.sign != tmpl.sign:
            raise ValueError(f"sign mismatch at offset {k}")
    replacement = tuple(
        TwistTerm(
            "dehn",
            CurveClass(embedding.apply(t.curve.coords), label=t.curve.label),
            t.sign,
        )
        for t in incoming
    )
    if word_matrix(segment, f.surface) != word_matrix(replacement, f.surface):
        raise ValueError(
            "substitution would change the word's action on homology"
        )
    if ledger_entry is None:
        kind = getattr(template, "ledger_kind", None)
        if kind is None:
            raise ValueError(
                "template carries no ledger constant; pass ledger_entry"
            )
        ledger_entry = (
            LedgerEntry(kind) if side == "rhs" else inverse_entry(kind)
        )
    return replace(
        f,
        terms=f.terms[:start] + replacement + f.terms[stop:],
        ledger=merge_ledgers(f.ledger, (ledger_entry,)),
    )


def _match_boundary_component(
    term: TwistTerm, surface: SurfaceModel
) -> int:
    """Which boundary component a boundary-kind term twists along."""
    if term.label_component is not None:
        return term.label_component
    candidates = [
        j
        for j in range(1, surface.boundary + 1)
        if surface.boundary_class(j).coords == term.curve.coords
    ]
    if len(candidates) == 1:
        return candidates[0]
    raise ValueError(
        "boundary term is ambiguous between components "
        f"{candidates}; label it 'deltaJ' to disambiguate"
    )


def cap_boundary(f: Factorization, which) -> Factorization:
    """Glue disks to the listed boundary components (1-based indices).

    Classes are projected to the capped surface's homology; boundary
    twists along capped components become trivial and are deleted; the
    target drops the capped exponents. Marked points are unaffected.
    """
    capped = sorted(set(int(j) for j in which))
    s = f.surface
    if any(j < 1 or j > s.boundary for j in capped):
        raise IndexError("boundary component index out of range")
    new_b = s.boundary - len(capped)
    new_s = SurfaceModel(s.genus, new_b, s.marked)
    survivors = [j for j in range(1, s.boundary + 1) if j not in capped]
    # projection on basis vectors: handles map identically, each old
    # delta_j goes to its component's class in the capped surface
    proj = [[0] * s.rank for _ in range(new_s.rank)]
    for i in range(2 * s.genus):
        proj[i][i] = 1
    new_class = {}
    for p, j in enumerate(survivors, start=1):
        new_class[j] = new_s.boundary_class(p).coords if new_b else None
    for j in range(1, s.boundary):
        col = s.delta_index(j)
        img = new_class.get(j)
        if img is None:
            continue
        for i in range(2 * s.genus, new_s.rank):
            proj[i][col] = img[i]
    terms = []
    for t in f.terms:
        if t.kind == "boundary":
            comp = _match_boundary_component(t, s)
            if comp in capped:
                continue
        img = tuple(
            sum(proj[i][j] * t.curve.coords[j] for j in range(s.rank))
            for i in range(new_s.rank)
        )
        terms.append(replace(t, curve=CurveClass(img, label=t.curve.label)))
    target = ()
    if f.target:
        target = tuple(f.target[j - 1] for j in survivors)
    return Factorization(
        surface=new_s,
        terms=tuple(terms),
        target=target,
        ledger=f.ledger,
        coefficients=f.coefficients,
    )
