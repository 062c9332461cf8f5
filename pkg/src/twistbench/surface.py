"""Surface homology models.

A compact oriented surface of genus g with b boundary components and k
marked points is modelled by the free part of its first homology:

    rank = 2g + max(b - 1, 0)

with ordered basis  a_1, b_1, a_2, b_2, ..., a_g, b_g, d_1, ..., d_{b-1}.
The a_i, b_i are a geometric symplectic basis with <a_i, b_i> = +1; the
d_j are boundary-parallel classes, which pair trivially with everything.
The last boundary component's class is not a basis vector: it equals
-(d_1 + ... + d_{b-1}) so that the total boundary is null-homologous.
With b = 1 the single boundary class is the zero vector.

Marked points do not change the homology rank; the count is carried so
point-push data stays attached to the right surface.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SurfaceModel:
    """Genus, boundary count and marked-point count of a surface."""

    genus: int
    boundary: int = 0
    marked: int = 0

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary < 0 or self.marked < 0:
            raise ValueError("surface parameters must be non-negative")

    @property
    def rank(self) -> int:
        return 2 * self.genus + max(self.boundary - 1, 0)

    def alpha_index(self, i: int) -> int:
        """Basis position of a_i (1-based i)."""
        if not 1 <= i <= self.genus:
            raise IndexError(f"a_{i} out of range for genus {self.genus}")
        return 2 * (i - 1)

    def beta_index(self, i: int) -> int:
        """Basis position of b_i (1-based i)."""
        if not 1 <= i <= self.genus:
            raise IndexError(f"b_{i} out of range for genus {self.genus}")
        return 2 * (i - 1) + 1

    def delta_index(self, j: int) -> int:
        """Basis position of d_j (1-based j, j < boundary count)."""
        if not 1 <= j <= self.boundary - 1:
            raise IndexError(f"d_{j} is not a basis vector here")
        return 2 * self.genus + (j - 1)

    def boundary_class(self, j: int) -> "CurveClass":
        """Homology class of the j-th boundary component, 1 <= j <= b.

        For j < b this is the basis vector d_j. The last component
        carries -(d_1 + ... + d_{b-1}); with one boundary component the
        class is zero.
        """
        if not 1 <= j <= self.boundary:
            raise IndexError(f"boundary component {j} of {self.boundary}")
        coords = [0] * self.rank
        if self.boundary == 1:
            return CurveClass(tuple(coords), label=f"delta{j}")
        if j < self.boundary:
            coords[self.delta_index(j)] = 1
        else:
            for jj in range(1, self.boundary):
                coords[self.delta_index(jj)] = -1
        return CurveClass(tuple(coords), label=f"delta{j}")

    def basis_name(self, idx: int) -> str:
        if idx < 2 * self.genus:
            i = idx // 2 + 1
            return f"a{i}" if idx % 2 == 0 else f"b{i}"
        return f"d{idx - 2 * self.genus + 1}"


def _normalize(coords: tuple[int, ...]) -> tuple[int, ...]:
    for c in coords:
        if c > 0:
            return coords
        if c < 0:
            return tuple(-x for x in coords)
    return coords


@dataclass(frozen=True)
class CurveClass:
    """Integer homology class of a curve, sign-normalized.

    A curve and its reverse induce the same twist, so classes are stored
    with the first nonzero coordinate positive. The zero vector is legal
    (null-homologous curves, boundary of a one-holed surface).
    """

    coords: tuple[int, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", _normalize(coords))

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def mod2(self) -> tuple[int, ...]:
        return tuple(c & 1 for c in self.coords)

    def relabel(self, label: str | None) -> "CurveClass":
        return CurveClass(self.coords, label=label)

    def describe(self, surface: SurfaceModel) -> str:
        """Render as a signed combination of basis names."""
        parts = []
        for idx, c in enumerate(self.coords):
            if c == 0:
                continue
            name = surface.basis_name(idx)
            if c == 1:
                parts.append(f"+{name}")
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c:+d}{name}")
        return "".join(parts) if parts else "0"


def curve(surface: SurfaceModel, coords, label: str | None = None) -> CurveClass:
    cc = CurveClass(tuple(coords), label=label)
    if len(cc.coords) != surface.rank:
        raise ValueError(
            f"class has {len(cc.coords)} coordinates, surface rank is {surface.rank}"
        )
    return cc


def pairing(x, y, surface: SurfaceModel) -> int:
    """Algebraic intersection number <x, y>.

    Antisymmetric; <a_i, b_i> = +1; boundary-parallel directions pair
    trivially with everything.
    """
    xc = x.coords if isinstance(x, CurveClass) else tuple(x)
    yc = y.coords if isinstance(y, CurveClass) else tuple(y)
    if len(xc) != surface.rank or len(yc) != surface.rank:
        raise ValueError("coordinate length does not match surface rank")
    total = 0
    for k in range(surface.genus):
        total += xc[2 * k] * yc[2 * k + 1] - xc[2 * k + 1] * yc[2 * k]
    return total


@dataclass(frozen=True)
class QuadraticFormZ2:
    """Quadratic refinement of the mod-2 intersection form.

    Determined by its values on the basis; evaluation elsewhere uses
    q(x + y) = q(x) + q(y) + <x, y> (mod 2). A twist along c preserves q
    exactly when q(c) = 1.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(v & 1 for v in self.values))


def q_eval(q: QuadraticFormZ2, x, surface: SurfaceModel) -> int:
    """Evaluate q on a class, mod 2.

    Expanding over the basis, q(sum x_i e_i) = sum x_i q(e_i)
    + sum_{i<j} x_i x_j <e_i, e_j>; only the (a_k, b_k) pairs contribute
    to the cross term.
    """
    xc = x.coords if isinstance(x, CurveClass) else tuple(x)
    if len(xc) != surface.rank or len(q.values) != surface.rank:
        raise ValueError("length mismatch in q_eval")
    total = 0
    for i, xi in enumerate(xc):
        total += (xi & 1) * q.values[i]
    for k in range(surface.genus):
        total += (xc[2 * k] & 1) * (xc[2 * k + 1] & 1)
    return total & 1


def arf(q: QuadraticFormZ2, surface: SurfaceModel) -> int:
    """Arf invariant, computed on the closed part of the surface.

    arf(q) = sum_i q(a_i) q(b_i) mod 2 over the genus handles; values on
    the boundary-parallel directions do not enter.
    """
    if len(q.values) != surface.rank:
        raise ValueError("form length does not match surface rank")
    total = 0
    for k in range(surface.genus):
        total += q.values[2 * k] * q.values[2 * k + 1]
    return total & 1
