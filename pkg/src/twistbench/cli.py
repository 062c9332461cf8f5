"""Command-line surface.

Subcommands:

    twistbench verify <file>          homological triviality check
    twistbench invariants <file>      full invariant report
    twistbench spin <file> [--pencil | --doubled | --dual-parity even|odd]
    twistbench divisibility <file>    fiber-dual divisibility from pushes
    twistbench run <script> [--json]  execute a construction script

Exit codes: 0 success, 1 verification failure (non-trivial word, spin
refuted or undecided, script step failed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fixtures import fixture_from_dict
from .invariants import compute_report, fiber_divisibility
from .jsonio import SchemaError, factorization_from_dict
from .script import ScriptError, parse_script, run_script
from .spin import fibration_spin_check, pencil_spin_check
from .surface import CurveClass
from .twists import Factorization, homological_triviality

__all__ = ["main"]


def _load(path: str) -> Factorization:
    """Read a factorization file; fixture files (with a name and
    expected block) are accepted too and unwrap to their word."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SystemExit(f"twistbench: {exc}") from exc
    except json.JSONDecodeError as exc:
        print(f"twistbench: {path}: not valid JSON: {exc}", file=sys.stderr)
        raise SystemExit(2) from exc
    try:
        if isinstance(doc, dict) and ("name" in doc or "expected" in doc):
            return fixture_from_dict(doc).factorization
        return factorization_from_dict(doc)
    except SchemaError as exc:
        print(f"twistbench: {path}: {exc}", file=sys.stderr)
        raise SystemExit(2) from exc


def _render_h1(h1) -> str:
    parts = []
    if h1.free_rank:
        parts.append(f"Z^{h1.free_rank}" if h1.free_rank > 1 else "Z")
    parts.extend(f"Z/{t}" for t in h1.torsion)
    return " + ".join(parts) if parts else "0"


def _cmd_verify(args) -> int:
    f = _load(args.file)
    ok = homological_triviality(f)
    kind = "pencil word" if f.target else "relator"
    if ok:
        print(f"ok: {kind} of {len(f.terms)} terms acts trivially on homology")
        return 0
    print(f"FAIL: {kind} of {len(f.terms)} terms does not act trivially")
    return 1


def _cmd_invariants(args) -> int:
    f = _load(args.file)
    if not homological_triviality(f):
        print("FAIL: word does not act trivially on homology", file=sys.stderr)
        return 1
    base = "pencil" if f.target else "sphere"
    rep = compute_report(f, base)
    print(f"base: {base}")
    print(f"euler: {rep.euler}")
    if rep.sigma_meyer is not None:
        print(f"sigma_meyer: {rep.sigma_meyer}")
    if rep.sigma_ledger is not None:
        print(f"sigma_ledger: {rep.sigma_ledger}")
    if rep.h1 is not None:
        print(f"h1: {_render_h1(rep.h1)}")
    if rep.divisibility is not None:
        print(
            f"divisibility: d={rep.divisibility.d}"
            + (" (primitive)" if rep.divisibility.primitive else "")
        )
    return 0


def _cmd_spin(args) -> int:
    f = _load(args.file)
    if args.pencil or (f.surface.boundary and not args.doubled and not args.dual_parity):
        verdict = pencil_spin_check(f)
    else:
        verdict = fibration_spin_check(
            f, dual_parity=args.dual_parity, doubled=args.doubled
        )
    print(f"status: {verdict.status}")
    if verdict.reason:
        print(f"reason: {verdict.reason}")
    if verdict.witness is not None:
        print("witness: " + " ".join(str(v) for v in verdict.witness.values))
    return 0 if verdict.status == "spin" else 1


def _cmd_divisibility(args) -> int:
    f = _load(args.file)
    pushes = [t.curve for t in f.terms if t.kind == "point_push"]
    if not pushes:
        print(
            "twistbench: no point-push terms; the file carries no section class",
            file=sys.stderr,
        )
        return 2
    total = [0] * f.surface.rank
    for c in pushes:
        total = [a + b for a, b in zip(total, c.coords)]
    cycles = [t.curve for t in f.terms if t.kind == "dehn"]
    res = fiber_divisibility(cycles, CurveClass(tuple(total)))
    print(f"d: {res.d}")
    print(f"primitive: {'yes' if res.primitive else 'no'}")
    return 0


def _cmd_run(args) -> int:
    try:
        with open(args.script, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExit(f"twistbench: {exc}") from exc
    try:
        script = parse_script(text)
    except ScriptError as exc:
        print(f"twistbench: {args.script}: {exc}", file=sys.stderr)
        return 2
    try:
        report = run_script(script)
    except ScriptError as exc:
        print(f"twistbench: {args.script}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.render_text())
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="twistbench",
        description="Monodromy factorization workbench (homology level).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a factorization acts trivially")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("invariants", help="euler, signatures, H1, divisibility")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("spin", help="spin verdict for a factorization")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--pencil", action="store_true", help="force the pencil test")
    mode.add_argument(
        "--doubled", action="store_true", help="the word is explicitly a double"
    )
    mode.add_argument(
        "--dual-parity", choices=("even", "odd"), help="parity of the dual pairing"
    )
    p.set_defaults(func=_cmd_spin)

    p = sub.add_parser("divisibility", help="fiber-dual divisibility from pushes")
    p.add_argument("file")
    p.set_defaults(func=_cmd_divisibility)

    p = sub.add_parser("run", help="execute a construction script")
    p.add_argument("script")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=_cmd_run)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except ValueError as exc:
        print(f"twistbench: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
