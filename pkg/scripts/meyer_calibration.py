#!/usr/bin/env python3
"""Calibration words for the Meyer signature sum.

Five closed-surface words with well-known total-space signatures, all
built from the bundled relation templates:

    capped 2-chain (torus, 12 twists)         -8
    capped 4-chain (genus 2, 40 twists)       -24
    hyperelliptic relator (genus 9, 76)       -40
    doubled hyperelliptic (genus 1, 24)       -16
    doubled hyperelliptic (genus 3, 56)       -32

The doubled words are the elliptic-surface monodromies E(2) and E(4).
Exits nonzero if any computed value drifts from the table.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from twistbench import (
    Factorization,
    builtin_relation,
    cap_boundary,
    homological_triviality,
    signature_meyer,
)


@dataclass(frozen=True)
class Calibration:
    label: str
    word: Factorization
    sigma: int


def capped(name: str, *params: int) -> Factorization:
    t = builtin_relation(name, *params)
    f = t.as_factorization()
    return cap_boundary(f, list(range(1, t.surface.boundary + 1)))


def doubled(template) -> Factorization:
    f = template.as_factorization()
    return Factorization(f.surface, f.terms + f.terms)


def build_table() -> list[Calibration]:
    return [
        Calibration("capped 2-chain", capped("chain_2"), -8),
        Calibration("capped 4-chain", capped("chain_4"), -24),
        Calibration(
            "hyperelliptic g=9",
            builtin_relation("hyperelliptic", 9).as_factorization(),
            -40,
        ),
        Calibration(
            "doubled hyperelliptic g=1",
            doubled(builtin_relation("hyperelliptic", 1)),
            -16,
        ),
        Calibration(
            "doubled hyperelliptic g=3",
            doubled(builtin_relation("hyperelliptic", 3)),
            -32,
        ),
    ]


def main() -> int:
    failures = 0
    for cal in build_table():
        t0 = time.time()
        assert homological_triviality(cal.word)
        got = signature_meyer(cal.word)
        dt = time.time() - t0
        ok = got == cal.sigma
        failures += not ok
        print(
            f"{cal.label:28s} {len(cal.word.terms):3d} twists  "
            f"sigma {got:4d}  want {cal.sigma:4d}  "
            f"[{'ok' if ok else 'MISMATCH'}] ({dt:.2f}s)"
        )
    if failures:
        print(f"{failures} calibration value(s) off", file=sys.stderr)
        return 1
    print("all calibration signatures reproduce")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
