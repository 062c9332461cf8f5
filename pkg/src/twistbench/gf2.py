"""GF(2) linear algebra on bitmask-encoded vectors.

Vectors are Python ints, bit i = coordinate i. Systems are lists of
(mask, rhs_bit) pairs. Solutions come back as (particular, kernel
basis); particular is None when inconsistent.
"""

from __future__ import annotations

ENUMERATION_CAP = 1 << 20


def to_mask(bits) -> int:
    m = 0
    for i, b in enumerate(bits):
        if b & 1:
            m |= 1 << i
    return m


def to_bits(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(n))


def solve_affine(
    equations: list[tuple[int, int]], nvars: int
) -> tuple[int | None, list[int]]:
    """Solve the affine system; returns (particular, kernel_basis).

    Kernel basis vectors have exactly one free variable set, so the
    solution set is particular XOR any subset sum of the basis.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for mask, b in equations:
        b &= 1
        for pos, (pm, pb) in pivots.items():
            if (mask >> pos) & 1:
                mask ^= pm
                b ^= pb
        if mask == 0:
            if b:
                return None, []
            continue
        pos = (mask & -mask).bit_length() - 1
        for p2 in list(pivots):
            m2, b2 = pivots[p2]
            if (m2 >> pos) & 1:
                pivots[p2] = (m2 ^ mask, b2 ^ b)
        pivots[pos] = (mask, b)
    particular = 0
    for pos, (_m, b) in pivots.items():
        if b:
            particular |= 1 << pos
    basis = []
    for f in range(nvars):
        if f in pivots:
            continue
        vec = 1 << f
        for pos, (m, _b) in pivots.items():
            if (m >> f) & 1:
                vec |= 1 << pos
        basis.append(vec)
    return particular, basis


def rank(masks) -> int:
    pivots: list[int] = []
    r = 0
    for m in masks:
        for p in pivots:
            m = min(m, m ^ p)
        if m:
            pivots.append(m)
            pivots.sort(reverse=True)
            r += 1
    return r


def span_members(basis: list[int], cap: int = ENUMERATION_CAP):
    """Yield all subset XORs of the basis; raises past the cap."""
    if 1 << len(basis) > cap:
        raise ValueError(
            f"enumeration of 2^{len(basis)} elements exceeds cap {cap}"
        )
    for bits in range(1 << len(basis)):
        v = 0
        k = bits
        idx = 0
        while k:
            if k & 1:
                v ^= basis[idx]
            k >>= 1
            idx += 1
        yield v
