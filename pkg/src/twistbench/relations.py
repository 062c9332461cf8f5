"""Builtin relation templates and subsurface embeddings.

A template records one relation of the mapping class group at the
homology level: a left word of twists, a right word (boundary twists,
or nothing for closed relators), and the signature constant its
substitution carries. The curve classes follow the standard chain
presentation: c_1 = a_1, c_{2i} = b_i, c_{2i+1} = a_i + a_{i+1}, with
the final odd curve a_g picking up one boundary winding when the chain
fills a two-holed surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import CurveClass, SurfaceModel, pairing
from .twists import Factorization, TwistTerm


@dataclass(frozen=True)
class RelationTemplate:
    name: str
    surface: SurfaceModel
    lhs: tuple[TwistTerm, ...]
    rhs: tuple[TwistTerm, ...]
    ledger_kind: str | None = None
    coefficients: str = "Z"

    def as_factorization(self) -> Factorization:
        """The lhs word, targeting the rhs boundary multi-twist."""
        target = ()
        if self.rhs:
            exps = [0] * self.surface.boundary
            for t in self.rhs:
                comp = t.label_component
                if comp is None:
                    raise ValueError("rhs boundary terms must be labelled")
                exps[comp - 1] += t.sign
            target = tuple(exps)
        return Factorization(
            surface=self.surface,
            terms=self.lhs,
            target=target,
            coefficients=self.coefficients,
        )


@dataclass(frozen=True)
class EmbeddingMap:
    """Linear model of a subsurface inclusion: preserves the pairing.

    matrix has one column per small-surface basis vector, written in
    big-surface coordinates. Boundary directions of the small surface
    may land anywhere that keeps all pairings intact (their columns
    pair to zero against everything in the image, as disjoint curves
    must).
    """

    small: SurfaceModel
    big: SurfaceModel
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, coords) -> tuple[int, ...]:
        cs = tuple(coords)
        if len(cs) != self.small.rank:
            raise ValueError("coordinate length does not match small surface")
        return tuple(
            sum(self.matrix[i][j] * cs[j] for j in range(self.small.rank))
            for i in range(self.big.rank)
        )


def make_embedding(small: SurfaceModel, big: SurfaceModel, images) -> EmbeddingMap:
    """Embedding from per-basis-vector images; checks the pairing."""
    cols = [
        (c.coords if isinstance(c, CurveClass) else tuple(c)) for c in images
    ]
    if len(cols) != small.rank:
        raise ValueError(
            f"need {small.rank} images, one per small basis vector"
        )
    for c in cols:
        if len(c) != big.rank:
            raise ValueError("image length does not match big surface rank")
    for i in range(small.rank):
        ei = tuple(1 if t == i else 0 for t in range(small.rank))
        for j in range(small.rank):
            ej = tuple(1 if t == j else 0 for t in range(small.rank))
            if pairing(cols[i], cols[j], big) != pairing(ei, ej, small):
                raise ValueError(
                    f"images of basis vectors {i} and {j} change the pairing"
                )
    matrix = tuple(
        tuple(cols[j][i] for j in range(small.rank)) for i in range(big.rank)
    )
    return EmbeddingMap(small, big, matrix)


def identity_embedding(surface: SurfaceModel) -> EmbeddingMap:
    n = surface.rank
    return EmbeddingMap(
        surface,
        surface,
        tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
    )


def _unit(rank: int, idx: int, label: str) -> CurveClass:
    return CurveClass(
        tuple(1 if i == idx else 0 for i in range(rank)), label=label
    )


def _dehn(cls: CurveClass) -> TwistTerm:
    return TwistTerm("dehn", cls)


def _chain_classes(g: int, surface: SurfaceModel, odd: bool) -> list[CurveClass]:
    """Standard chain classes c_1 .. c_{2g} (+ c_{2g+1} when odd)."""
    rank = surface.rank
    out = []

    def mk(coords, label):
        out.append(CurveClass(tuple(coords), label=label))

    for i in range(1, g + 1):
        # c_{2i-1}
        coords = [0] * rank
        coords[surface.alpha_index(i)] = 1
        if i > 1:
            coords[surface.alpha_index(i - 1)] = 1
        mk(coords, f"c{2 * i - 1}")
        # c_{2i}
        coords = [0] * rank
        coords[surface.beta_index(i)] = 1
        mk(coords, f"c{2 * i}")
    if odd:
        coords = [0] * rank
        coords[surface.alpha_index(g)] = 1
        if surface.boundary == 2:
            # the chain's top curve winds once around one boundary hole
            coords[surface.delta_index(1)] = 1
        mk(coords, f"c{2 * g + 1}")
    return out


def _boundary_term(surface: SurfaceModel, j: int) -> TwistTerm:
    return TwistTerm("boundary", surface.boundary_class(j))


def odd_chain(g: int) -> RelationTemplate:
    """(t_{c_1} ... t_{c_{2g+1}})^{2g+2} = t_{d_1} t_{d_2} on a two-holed
    genus-g surface."""
    if g < 1:
        raise ValueError("odd chains need genus at least 1")
    s = SurfaceModel(g, 2)
    cs = _chain_classes(g, s, odd=True)
    lhs = tuple(_dehn(c) for _ in range(2 * g + 2) for c in cs)
    rhs = (_boundary_term(s, 1), _boundary_term(s, 2))
    kind = {1: "chain_3", 2: "chain_5"}.get(g)
    return RelationTemplate(f"odd_chain_{g}", s, lhs, rhs, ledger_kind=kind)


def even_chain(g: int) -> RelationTemplate:
    """(t_{c_1} ... t_{c_{2g}})^{4g+2} = t_d on a one-holed genus-g
    surface; the boundary class is zero."""
    if g < 1:
        raise ValueError("even chains need genus at least 1")
    s = SurfaceModel(g, 1)
    cs = _chain_classes(g, s, odd=False)
    lhs = tuple(_dehn(c) for _ in range(4 * g + 2) for c in cs)
    rhs = (_boundary_term(s, 1),)
    kind = {1: "chain_2", 2: "chain_4"}.get(g)
    return RelationTemplate(f"even_chain_{g}", s, lhs, rhs, ledger_kind=kind)


def hyperelliptic(g: int) -> RelationTemplate:
    """(t_{c_1} .. t_{c_{2g}} t_{c_{2g+1}}^2 t_{c_{2g}} .. t_{c_1})^2 = 1
    on the closed genus-g surface; the half word acts as -identity."""
    if g < 1:
        raise ValueError("hyperelliptic relators need genus at least 1")
    s = SurfaceModel(g, 0)
    cs = _chain_classes(g, s, odd=True)
    half = cs[: 2 * g] + [cs[2 * g], cs[2 * g]] + cs[: 2 * g][::-1]
    lhs = tuple(_dehn(c) for c in half + half)
    return RelationTemplate(f"hyperelliptic_{g}", s, lhs, ())


def lantern() -> RelationTemplate:
    """t_{d1} t_{d2} t_{d3} t_{d4} = t_x t_y t_z on the four-holed
    sphere; x, y, z pair the holes (1,2), (2,3), (1,3)."""
    s = SurfaceModel(0, 4)
    x = CurveClass((1, 1, 0), label="x")
    y = CurveClass((0, 1, 1), label="y")
    z = CurveClass((1, 0, 1), label="z")
    lhs = (_dehn(x), _dehn(y), _dehn(z))
    rhs = tuple(_boundary_term(s, j) for j in range(1, 5))
    return RelationTemplate("lantern", s, lhs, rhs, ledger_kind="lantern")


def yun(m: int, n: int) -> RelationTemplate:
    """Squared mod-2 relator on the closed surface of genus 2m + n - 1.

    Only mod-2 classes are published for these words, so the template
    is mod-2 native: handles 1..n-1 carry the A-chain, handles
    n..n+2m-1 carry the B-family (primed coordinates below).
    """
    if m < 1 or n < 2:
        raise ValueError("need m >= 1 and n >= 2")
    g = 2 * m + n - 1
    s = SurfaceModel(g, 0)
    rank = s.rank

    def alpha(i):  # chain handles
        return s.alpha_index(i)

    def beta(i):
        return s.beta_index(i)

    def alpha_p(j):  # primed handles live above the chain part
        return s.alpha_index(n - 1 + j)

    def beta_p(j):
        return s.beta_index(n - 1 + j)

    def cls(idxs, label):
        coords = [0] * rank
        for i in idxs:
            coords[i] ^= 1
        return CurveClass(tuple(coords), label=label)

    a: dict[int, CurveClass] = {1: cls([beta(1)], "A1")}
    for i in range(2, n):
        a[2 * i - 1] = cls([beta(i - 1), beta(i)], f"A{2 * i - 1}")
    for i in range(1, n):
        a[2 * i] = cls([alpha(i)], f"A{2 * i}")
    a[2 * n - 1] = cls([beta(n - 1)], f"A{2 * n - 1}")

    b: dict[int, CurveClass] = {}
    b[0] = cls(
        [alpha_p(j) for j in range(1, 2 * m + 1)] + [beta(n - 1)], "B0"
    )
    for j in range(1, m):
        b[2 * j] = cls(
            [alpha_p(t) for t in range(j + 1, 2 * m - j + 1)]
            + [beta_p(j), beta_p(2 * m + 1 - j), beta(n - 1)],
            f"B{2 * j}",
        )
    b[2 * m] = cls([beta_p(m), beta_p(m + 1), beta(n - 1)], f"B{2 * m}")
    for j in range(1, m + 1):
        b[2 * j - 1] = cls(
            [alpha_p(t) for t in range(j, 2 * m + 2 - j)]
            + [beta_p(j), beta_p(2 * m + 1 - j), beta(n - 1)],
            f"B{2 * j - 1}",
        )

    inner: list[CurveClass] = []
    inner.extend(a[i] for i in range(2 * n - 2, 1, -1))
    inner.extend([a[1], a[1]])
    inner.extend(a[i] for i in range(2, 2 * n - 1))
    inner.extend(b[j] for j in range(0, 2 * m + 1))
    inner.append(a[2 * n - 1])
    lhs = tuple(_dehn(c) for c in inner + inner)
    return RelationTemplate(
        f"yun_{m}_{n}", s, lhs, (), coefficients="Z2"
    )


def builtin_relation(name: str, *args: int) -> RelationTemplate:
    """Look up a builtin template by name.

    Names: lantern; chain_2 .. chain_5; odd_chain g; even_chain g;
    hyperelliptic g; yun m n.
    """
    if name == "lantern":
        return lantern()
    if name in ("chain_2", "chain_3", "chain_4", "chain_5"):
        k = int(name[-1])
        return odd_chain(k // 2) if k % 2 else even_chain(k // 2)
    if name == "odd_chain":
        return odd_chain(*args)
    if name == "even_chain":
        return even_chain(*args)
    if name == "hyperelliptic":
        return hyperelliptic(*args)
    if name == "yun":
        return yun(*args)
    raise ValueError(f"unknown relation {name!r}")
