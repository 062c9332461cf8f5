"""Exact integer matrix utilities: Smith form, kernels, quotients.

Everything here is pure Python over arbitrary-precision ints; matrices
are lists of row lists. Sizes stay small (rank <= 18 in practice), so
no numeric library is warranted and exactness is non-negotiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def matvec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(ai[j] * v[j] for j in range(len(v))) for ai in a]


def transpose(a: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*a)] if a else []


def det(a: list[list[int]]) -> int:
    # Bareiss fraction-free elimination; exact for integer input.
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(
    mat: list[list[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms: returns (D, U, V), U*mat*V = D.

    U and V are unimodular (built from elementary operations only). D is
    diagonal with non-negative entries and d_i | d_{i+1}.
    """
    a = [row[:] for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = identity(nrows)
    v = identity(ncols)

    def row_add(dst: int, src: int, c: int) -> None:
        for j in range(ncols):
            a[dst][j] += c * a[src][j]
        for j in range(nrows):
            u[dst][j] += c * u[src][j]

    def col_add(dst: int, src: int, c: int) -> None:
        for i in range(nrows):
            a[i][dst] += c * a[i][src]
        for i in range(ncols):
            v[i][dst] += c * v[i][src]

    def row_swap(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def col_swap(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def row_negate(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(nrows, ncols):
        # pivot: smallest nonzero magnitude in the remaining block
        piv = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best = x
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear column t then row t; remainders can resurface, loop
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t]:
                        row_swap(i, t)
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j]:
                        col_swap(j, t)
                        dirty = True
            if dirty:
                continue
            # divisibility: pivot must divide every later entry
            fixup = None
            d = a[t][t]
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % d:
                        fixup = i
                        break
                if fixup is not None:
                    break
            if fixup is None:
                break
            row_add(t, fixup, 1)
        if a[t][t] < 0:
            row_negate(t)
        t += 1

    d = [[0] * ncols for _ in range(nrows)]
    for i in range(min(nrows, ncols)):
        d[i][i] = a[i][i]
    return d, u, v


def kernel_basis(mat: list[list[int]]) -> list[list[int]]:
    """Primitive integer vectors spanning the rational kernel of mat.

    Gaussian elimination over Fractions: entry growth stays bounded by
    minor sizes, which Smith-form elimination does not guarantee (dense
    18x36 inputs from cocycle evaluation blow it up). Each vector has
    mat @ x = 0 exactly and gcd 1; together they span ker over Q.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    if ncols == 0:
        return []
    if nrows == 0:
        return identity(ncols)
    a = [[Fraction(x) for x in row] for row in mat]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    basis = []
    for fc in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pr, pc in enumerate(pivots):
            v[pc] = -a[pr][fc]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        basis.append(ints)
    return basis


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """Finitely generated abelian group, Z^free + sum Z/t_i.

    Torsion coefficients are in divisibility order, t_i | t_{i+1}.
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n


def abelian_quotient(rank: int, relations) -> AbelianGroupInvariants:
    """Invariants of Z^rank modulo the span of the relation vectors."""
    rels = [list(getattr(r, "coords", r)) for r in relations]
    for r in rels:
        if len(r) != rank:
            raise ValueError("relation length does not match rank")
    if not rels:
        return AbelianGroupInvariants(rank, ())
    # columns of the presentation matrix are the relations
    mat = [[rels[j][i] for j in range(len(rels))] for i in range(rank)]
    d, _u, _v = smith_normal_form(mat)
    diag = [d[i][i] for i in range(min(rank, len(rels)))]
    nonzero = [x for x in diag if x != 0]
    torsion = tuple(x for x in nonzero if x > 1)
    return AbelianGroupInvariants(rank - len(nonzero), torsion)


def symmetric_signature(g: list[list[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric matrix.

    Exact Lagrange congruence diagonalization over Fractions. Input may
    be int or Fraction entries; symmetry is assumed.
    """
    n = len(g)
    a = [[Fraction(g[i][j]) for j in range(n)] for i in range(n)]
    pos = neg = 0
    for t in range(n):
        if a[t][t] == 0:
            k = next((i for i in range(t + 1, n) if a[i][i] != 0), None)
            if k is not None:
                a[t], a[k] = a[k], a[t]
                for row in a:
                    row[t], row[k] = row[k], row[t]
            else:
                k = next((j for j in range(t + 1, n) if a[t][j] != 0), None)
                if k is None:
                    continue
                # no nonzero diagonal left; fold row k in to create one
                for j in range(n):
                    a[t][j] += a[k][j]
                for i in range(n):
                    a[i][t] += a[i][k]
        d = a[t][t]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            f = a[i][t] / d
            if f:
                for j in range(n):
                    a[i][j] -= f * a[t][j]
                for j in range(n):
                    a[j][i] -= f * a[j][t]
    return pos, neg, n - pos - neg


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else 0
