#!/usr/bin/env python3
"""Genus parity sweeps for the form-solvability conditions.

Four families, each swept over a genus or index range:

  odd-chain pencils       solvable exactly for even g
  even-chain pencils      never spin (the boundary class is zero)
  hyperelliptic relators  solvable exactly for odd g
  squared mod-2 relators  solvable exactly for even n; the handle-wise
                          witness has Arf 0 exactly when n = 0 mod 4

"Solvable" means some quadratic form evaluates to one on every twist
class (plus the boundary pin for pencils). Exits nonzero if any parity
breaks.
"""

from __future__ import annotations

import sys

from twistbench import (
    QuadraticFormZ2,
    arf,
    builtin_relation,
    pencil_spin_check,
    solve_forms,
)

MAX_CHAIN_G = 8
MAX_HYPER_G = 9
MAX_YUN_N = 10
MAX_YUN_M = 2


def yun_handle_witness(m: int, n: int) -> QuadraticFormZ2:
    """The handle-wise form: 1 on every alpha and on both primed basis
    directions, 1 on odd-indexed chain betas, 0 on even-indexed ones."""
    t = builtin_relation("yun", m, n)
    s = t.surface
    values = [0] * s.rank
    for i in range(1, n):
        values[s.alpha_index(i)] = 1
        values[s.beta_index(i)] = i % 2
    for j in range(n, 2 * m + n):
        values[s.alpha_index(j)] = 1
        values[s.beta_index(j)] = 1
    return QuadraticFormZ2(tuple(values))


def sweep(label, rows) -> int:
    bad = 0
    print(label)
    for name, ok, detail in rows:
        bad += not ok
        print(f"  {name:22s} {'ok' if ok else 'PARITY BREAK'}  {detail}")
    return bad


def main() -> int:
    bad = 0

    rows = []
    for g in range(1, MAX_CHAIN_G + 1):
        f = builtin_relation("odd_chain", g).as_factorization()
        verdict = pencil_spin_check(f)
        want = "spin" if g % 2 == 0 else "not_spin"
        rows.append((f"odd_chain g={g}", verdict.status == want, verdict.status))
    bad += sweep("odd-chain pencils (spin iff g even):", rows)

    rows = []
    for g in range(1, MAX_CHAIN_G + 1):
        f = builtin_relation("even_chain", g).as_factorization()
        verdict = pencil_spin_check(f)
        rows.append(
            (f"even_chain g={g}", verdict.status == "not_spin", verdict.status)
        )
    bad += sweep("even-chain pencils (never spin):", rows)

    rows = []
    for g in range(1, MAX_HYPER_G + 1):
        f = builtin_relation("hyperelliptic", g).as_factorization()
        sols = solve_forms(f.classes(), f.surface)
        want = g % 2 == 1
        rows.append(
            (
                f"hyperelliptic g={g}",
                bool(sols.count) == want,
                f"{sols.count} solution(s)",
            )
        )
    bad += sweep("hyperelliptic relators (solvable iff g odd):", rows)

    rows = []
    for m in range(1, MAX_YUN_M + 1):
        for n in range(2, MAX_YUN_N + 1):
            f = builtin_relation("yun", m, n).as_factorization()
            sols = solve_forms(f.classes(), f.surface)
            ok = bool(sols.count) == (n % 2 == 0)
            detail = f"{sols.count} solution(s)"
            if sols.count and n % 2 == 0:
                q = yun_handle_witness(m, n)
                inside = q in sols
                a = arf(q, f.surface)
                ok = ok and inside and (a == 0) == (n % 4 == 0)
                detail += f", witness arf {a}"
            rows.append((f"yun m={m} n={n}", ok, detail))
    bad += sweep(
        "squared mod-2 relators (solvable iff n even, witness arf by n mod 4):",
        rows,
    )

    if bad:
        print(f"{bad} sweep row(s) failed", file=sys.stderr)
        return 1
    print("all parity sweeps hold")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
