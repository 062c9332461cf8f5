"""Line-oriented construction scripts.

A script replays a word derivation step by step: import fixtures and
relation templates, declare curves, rearrange with Hurwitz moves and
conjugations, splice relations in or out, and emit invariant reports.
One statement per line, `#` starts a comment, blank lines are skipped,
and the amount of whitespace between tokens never matters.

There are no loops, no conditionals and a single static scope: every
name must be declared on an earlier line than its first use, and no
name is declared twice. parse_script enforces scope statically, so a
bad reference is a parse error even if the statement would never run.

Grammar (one statement per line):

    surface g=<int> b=<int> [k=<int>]
    curve NAME = <int> <int> ...
    relation NAME = <builtin> [<int> ...]
    fixture NAME = <fixture-id>
    hurwitz NAME <index> right|left [<count>]
    cyclic NAME <k>
    conjugate NAME by CURVE [CURVE ...]
    cancel NAME
    fiber_sum NAME = A B [by CURVE ...]
    substitute NAME <start> <stop> RELATION lhs|rhs [via [-]CURVE ...]
    cap NAME <j> [<j> ...]
    emit <kind> NAME [<arg>]

`surface` sets the ambient surface for every later `curve` and
`fixture` line. Curves are declared by raw coordinates in the ambient
basis. `hurwitz NAME i right n` performs n elementary moves walking
the term at position i+1 leftward (indices i, i-1, ...); `left`
walks the term at i rightward (indices i, i+1, ...). A substitute
image list gives the embedded classes of the template surface's basis
vectors in order; a leading `-` negates the declared curve's class,
which matters because embeddings see raw vectors, not sign-normalized
ones. Emit kinds: invariants, triviality, euler, ledger, spin,
divisibility, count, solveforms.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace

from .fixtures import paper_fixture
from .invariants import (
    compute_report,
    euler_char,
    fiber_divisibility,
    signature_meyer,
)
from .ledger import ledger_signature
from .relations import RelationTemplate, builtin_relation, identity_embedding, make_embedding
from .spin import fibration_spin_check, pencil_spin_check, solve_forms, spin_via_arf
from .surface import CurveClass, SurfaceModel
from .twists import (
    Factorization,
    TwistTerm,
    cancel_pairs,
    cap_boundary,
    conjugate_global,
    cyclic_permute,
    fiber_sum,
    homological_triviality,
    hurwitz_move,
    substitute,
)

__all__ = [
    "Script",
    "ScriptError",
    "ScriptReport",
    "Statement",
    "parse_script",
    "pretty_print",
    "run_script",
]


class ScriptError(Exception):
    """Parse or execution failure with a source position.

    line and col are 1-based. index is the statement's position in the
    parsed list and is None for errors raised during parsing.
    """

    def __init__(
        self,
        message: str,
        line: int | None = None,
        col: int | None = None,
        index: int | None = None,
    ) -> None:
        self.message = message
        self.line = line
        self.col = col
        self.index = index
        where = ""
        if index is not None:
            where = f"statement {index}"
        if line is not None:
            pos = f"line {line}" + (f", col {col}" if col is not None else "")
            where = f"{where} ({pos})" if where else pos
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class Statement:
    """One parsed statement. args is a kind-specific tuple.

    Source position is carried for diagnostics but excluded from
    equality so that pretty-printing and reparsing round-trips.
    """

    kind: str
    args: tuple
    line: int = field(compare=False, default=0)
    col: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]

    def __len__(self) -> int:
        return len(self.statements)


@dataclass(frozen=True)
class ReportEntry:
    """Result of one emit statement."""

    index: int
    kind: str
    subject: str
    payload: dict

    def to_json_dict(self) -> dict:
        out = {"statement": self.index, "emit": self.kind, "subject": self.subject}
        out.update(self.payload)
        return out

    def render(self) -> str:
        bits = " ".join(f"{k}={json.dumps(v)}" for k, v in self.payload.items())
        return f"[{self.index}] {self.kind} {self.subject}: {bits}"


@dataclass(frozen=True)
class ScriptReport:
    entries: tuple[ReportEntry, ...] = ()

    def to_json_dict(self) -> dict:
        return {"entries": [e.to_json_dict() for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        return "".join(e.render() + "\n" for e in self.entries)


# kv atoms like g=9 stay single tokens; a bare = separates bindings
_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*=[+-]?\d+|=|[^\s=]+")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_INT_RE = re.compile(r"[+-]?\d+$")

_KEYWORDS = frozenset(
    "surface curve relation fixture hurwitz cyclic conjugate cancel "
    "fiber_sum substitute cap emit by via lhs rhs right left".split()
)
_EMIT_KINDS = frozenset(
    "invariants triviality euler ledger spin divisibility count solveforms".split()
)
_EULER_BASES = frozenset(("sphere", "torus", "pencil"))
_SPIN_MODES = frozenset(("pencil", "doubled", "even", "odd", "arf"))


class _Cursor:
    """Token stream for one line, tracking columns for diagnostics."""

    def __init__(self, tokens: list[tuple[str, int]], line: int) -> None:
        self.tokens = tokens
        self.line = line
        self.pos = 0

    def _fail(self, message: str) -> ScriptError:
        col = self.tokens[self.pos][1] if self.pos < len(self.tokens) else (
            self.tokens[-1][1] + len(self.tokens[-1][0])
        )
        return ScriptError(message, line=self.line, col=col)

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, what: str) -> tuple[str, int]:
        if self.pos >= len(self.tokens):
            raise self._fail(f"expected {what}, found end of line")
        tok, col = self.tokens[self.pos]
        self.pos += 1
        return tok, col

    def name(self, what: str = "name") -> tuple[str, int]:
        tok, col = self.take(what)
        if not _NAME_RE.match(tok):
            raise ScriptError(f"expected {what}, found {tok!r}", self.line, col)
        return tok, col

    def integer(self, what: str = "integer") -> int:
        tok, col = self.take(what)
        if not _INT_RE.match(tok):
            raise ScriptError(f"expected {what}, found {tok!r}", self.line, col)
        return int(tok)

    def literal(self, *options: str) -> str:
        what = " or ".join(f"'{o}'" for o in options)
        tok, col = self.take(what)
        if tok not in options:
            raise ScriptError(f"expected {what}, found {tok!r}", self.line, col)
        return tok

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def finish(self) -> None:
        if not self.at_end():
            tok, col = self.tokens[self.pos]
            raise ScriptError(f"unexpected token {tok!r}", self.line, col)


class _Scope:
    """Static name table: name -> category."""

    def __init__(self) -> None:
        self.names: dict[str, str] = {}
        self.have_surface = False

    def declare(self, name: str, category: str, line: int, col: int) -> None:
        if name in _KEYWORDS:
            raise ScriptError(f"{name!r} is a reserved word", line, col)
        if name in self.names:
            raise ScriptError(
                f"name {name!r} already declared as a {self.names[name]}", line, col
            )
        self.names[name] = category

    def use(self, name: str, category: str, line: int, col: int) -> str:
        got = self.names.get(name)
        if got is None:
            raise ScriptError(f"undeclared name {name!r}", line, col)
        if got != category:
            raise ScriptError(
                f"name {name!r} is a {got}, not a {category}", line, col
            )
        return name


def _parse_kv(cur: _Cursor, scope_line: int) -> tuple[int, int, int]:
    """g=.. b=.. [k=..] with g and b mandatory."""
    seen: dict[str, int] = {}
    while not cur.at_end():
        tok, col = cur.take("g=/b=/k= setting")
        m = re.match(r"([A-Za-z_][A-Za-z0-9_]*)=([+-]?\d+)$", tok)
        if not m or m.group(1) not in ("g", "b", "k"):
            raise ScriptError(
                f"expected g=<int>, b=<int> or k=<int>, found {tok!r}",
                scope_line,
                col,
            )
        key = m.group(1)
        if key in seen:
            raise ScriptError(f"duplicate setting {key!r}", scope_line, col)
        seen[key] = int(m.group(2))
    if "g" not in seen or "b" not in seen:
        raise cur._fail("surface needs both g= and b=")
    return seen["g"], seen["b"], seen.get("k", 0)


def parse_script(text: str) -> Script:
    """Parse script text, enforcing syntax and static scope.

    The first problem aborts the parse with a ScriptError carrying the
    offending line and column.
    """
    statements: list[Statement] = []
    scope = _Scope()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.group(0), m.start() + 1) for m in _TOKEN_RE.finditer(body)]
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno)
        head, head_col = cur.take("statement keyword")
        st = _parse_statement(head, head_col, cur, scope)
        statements.append(st)
    return Script(tuple(statements))


def _parse_statement(
    head: str, head_col: int, cur: _Cursor, scope: _Scope
) -> Statement:
    line = cur.line
    if head == "surface":
        g, b, k = _parse_kv(cur, line)
        scope.have_surface = True
        return Statement("declare_surface", (g, b, k), line, head_col)

    if head == "curve":
        name, ncol = cur.name("curve name")
        cur.literal("=")
        coords = [cur.integer("coordinate")]
        while not cur.at_end():
            coords.append(cur.integer("coordinate"))
        if not scope.have_surface:
            raise ScriptError("curve declared before any surface", line, ncol)
        scope.declare(name, "curve", line, ncol)
        return Statement("declare_curve", (name, tuple(coords)), line, head_col)

    if head == "relation":
        name, ncol = cur.name("relation name")
        cur.literal("=")
        builtin, _ = cur.name("builtin relation name")
        params = []
        while not cur.at_end():
            params.append(cur.integer("relation parameter"))
        scope.declare(name, "relation", line, ncol)
        return Statement(
            "import_relation", (name, builtin, tuple(params)), line, head_col
        )

    if head == "fixture":
        name, ncol = cur.name("fixture binding name")
        cur.literal("=")
        fid, _ = cur.name("fixture id")
        cur.finish()
        if not scope.have_surface:
            raise ScriptError("fixture imported before any surface", line, ncol)
        scope.declare(name, "factorization", line, ncol)
        return Statement("import_fixture", (name, fid), line, head_col)

    if head == "hurwitz":
        name, ncol = cur.name("factorization name")
        scope.use(name, "factorization", line, ncol)
        index = cur.integer("position")
        direction = cur.literal("right", "left")
        count = 1 if cur.at_end() else cur.integer("move count")
        cur.finish()
        if count < 1:
            raise ScriptError("move count must be positive", line, ncol)
        return Statement("hurwitz", (name, index, direction, count), line, head_col)

    if head == "cyclic":
        name, ncol = cur.name("factorization name")
        scope.use(name, "factorization", line, ncol)
        k = cur.integer("rotation amount")
        cur.finish()
        return Statement("cyclic", (name, k), line, head_col)

    if head == "conjugate":
        name, ncol = cur.name("factorization name")
        scope.use(name, "factorization", line, ncol)
        cur.literal("by")
        word = []
        while not cur.at_end():
            cname, ccol = cur.name("curve name")
            word.append(scope.use(cname, "curve", line, ccol))
        if not word:
            raise cur._fail("conjugating word needs at least one curve")
        return Statement("conjugate", (name, tuple(word)), line, head_col)

    if head == "cancel":
        name, ncol = cur.name("factorization name")
        scope.use(name, "factorization", line, ncol)
        cur.finish()
        return Statement("cancel", (name,), line, head_col)

    if head == "fiber_sum":
        new, ncol = cur.name("result name")
        cur.literal("=")
        a, acol = cur.name("first summand")
        scope.use(a, "factorization", line, acol)
        b, bcol = cur.name("second summand")
        scope.use(b, "factorization", line, bcol)
        glue: list[str] = []
        if not cur.at_end():
            cur.literal("by")
            while not cur.at_end():
                cname, ccol = cur.name("curve name")
                glue.append(scope.use(cname, "curve", line, ccol))
            if not glue:
                raise cur._fail("glue word needs at least one curve")
        scope.declare(new, "factorization", line, ncol)
        return Statement("fiber_sum", (new, a, b, tuple(glue)), line, head_col)

    if head == "substitute":
        name, ncol = cur.name("factorization name")
        scope.use(name, "factorization", line, ncol)
        start = cur.integer("segment start")
        stop = cur.integer("segment stop")
        rel, rcol = cur.name("relation name")
        scope.use(rel, "relation", line, rcol)
        side = cur.literal("lhs", "rhs")
        images: list[tuple[int, str]] = []
        if not cur.at_end():
            cur.literal("via")
            while not cur.at_end():
                tok, tcol = cur.take("curve name")
                sign = 1
                if tok.startswith("-"):
                    sign, tok = -1, tok[1:]
                if not _NAME_RE.match(tok):
                    raise ScriptError(
                        f"expected curve name, found {tok!r}", line, tcol
                    )
                images.append((sign, scope.use(tok, "curve", line, tcol)))
            if not images:
                raise cur._fail("image list needs at least one curve")
        return Statement(
            "substitute",
            (name, start, stop, rel, side, tuple(images)),
            line,
            head_col,
        )

    if head == "cap":
        name, ncol = cur.name("factorization name")
        scope.use(name, "factorization", line, ncol)
        comps = [cur.integer("boundary component")]
        while not cur.at_end():
            comps.append(cur.integer("boundary component"))
        return Statement("cap", (name, tuple(comps)), line, head_col)

    if head == "emit":
        kind, kcol = cur.name("report kind")
        if kind not in _EMIT_KINDS:
            raise ScriptError(
                f"unknown report kind {kind!r}; expected one of "
                + ", ".join(sorted(_EMIT_KINDS)),
                line,
                kcol,
            )
        name, ncol = cur.name("factorization name")
        scope.use(name, "factorization", line, ncol)
        extra: tuple = ()
        if kind == "euler" and not cur.at_end():
            base = cur.literal(*sorted(_EULER_BASES))
            extra = (base,)
        elif kind == "invariants" and not cur.at_end():
            base = cur.literal(*sorted(_EULER_BASES))
            extra = (base,)
        elif kind == "spin" and not cur.at_end():
            mode = cur.literal(*sorted(_SPIN_MODES))
            extra = (mode,)
        elif kind == "divisibility" and not cur.at_end():
            cname, ccol = cur.name("curve name")
            extra = (scope.use(cname, "curve", line, ccol),)
        cur.finish()
        return Statement("emit", (kind, name, extra), line, head_col)

    raise ScriptError(f"unknown statement {head!r}", line, head_col)


def _render(st: Statement) -> str:
    k, a = st.kind, st.args
    if k == "declare_surface":
        g, b, marked = a
        out = f"surface g={g} b={b}"
        return out + (f" k={marked}" if marked else "")
    if k == "declare_curve":
        return f"curve {a[0]} = " + " ".join(str(c) for c in a[1])
    if k == "import_relation":
        out = f"relation {a[0]} = {a[1]}"
        return out + ("".join(f" {p}" for p in a[2]))
    if k == "import_fixture":
        return f"fixture {a[0]} = {a[1]}"
    if k == "hurwitz":
        out = f"hurwitz {a[0]} {a[1]} {a[2]}"
        return out + (f" {a[3]}" if a[3] != 1 else "")
    if k == "cyclic":
        return f"cyclic {a[0]} {a[1]}"
    if k == "conjugate":
        return f"conjugate {a[0]} by " + " ".join(a[1])
    if k == "cancel":
        return f"cancel {a[0]}"
    if k == "fiber_sum":
        out = f"fiber_sum {a[0]} = {a[1]} {a[2]}"
        return out + (" by " + " ".join(a[3]) if a[3] else "")
    if k == "substitute":
        out = f"substitute {a[0]} {a[1]} {a[2]} {a[3]} {a[4]}"
        if a[5]:
            imgs = " ".join(("-" if s < 0 else "") + n for s, n in a[5])
            out += f" via {imgs}"
        return out
    if k == "cap":
        return f"cap {a[0]} " + " ".join(str(j) for j in a[1])
    if k == "emit":
        out = f"emit {a[0]} {a[1]}"
        return out + ("".join(f" {x}" for x in a[2]))
    raise ValueError(f"unknown statement kind {k!r}")


def pretty_print(script: Script | tuple[Statement, ...]) -> str:
    """Canonical text form; parse_script(pretty_print(s)) returns s."""
    statements = script.statements if isinstance(script, Script) else tuple(script)
    return "".join(_render(st) + "\n" for st in statements)


class _Env:
    def __init__(self) -> None:
        self.surface: SurfaceModel | None = None
        self.curves: dict[str, CurveClass] = {}
        self.relations: dict[str, RelationTemplate] = {}
        self.facs: dict[str, Factorization] = {}

    def word(self, names: tuple[str, ...], target: Factorization) -> tuple:
        terms = []
        for n in names:
            c = self.curves[n]
            if len(c.coords) != target.surface.rank:
                raise ValueError(
                    f"curve {n!r} has {len(c.coords)} coordinates, word "
                    f"surface rank is {target.surface.rank}"
                )
            terms.append(TwistTerm("dehn", c))
        return tuple(terms)


def _check_trivial(f: Factorization) -> None:
    if not homological_triviality(f):
        raise ValueError("word no longer acts trivially on homology")


def _auto_base(f: Factorization) -> str:
    return "pencil" if f.target else "sphere"


def _push_alpha(f: Factorization) -> CurveClass:
    total = [0] * f.surface.rank
    found = False
    for t in f.terms:
        if t.kind == "point_push":
            found = True
            total = [x + y for x, y in zip(total, t.curve.coords)]
    if not found:
        raise ValueError(
            "no point-push terms to infer the section class from; "
            "name a curve explicitly"
        )
    return CurveClass(tuple(total))


def _spin_payload(verdict) -> dict:
    out = {"status": verdict.status, "reason": verdict.reason}
    if verdict.witness is not None:
        out["witness"] = list(verdict.witness.values)
    return out


def _run_emit(kind: str, f: Factorization, extra: tuple, env: _Env) -> dict:
    if kind == "invariants":
        base = extra[0] if extra else _auto_base(f)
        rep = compute_report(f, base)
        return {"base": base, **rep.to_json_dict()}
    if kind == "triviality":
        return {"trivial": homological_triviality(f)}
    if kind == "euler":
        base = extra[0] if extra else _auto_base(f)
        return {"base": base, "euler": euler_char(f, base)}
    if kind == "ledger":
        entries = [
            {"kind": e.kind, "count": e.count}
            | ({"name": e.name} if e.name is not None else {})
            | ({"value": e.value} if e.value is not None else {})
            for e in f.ledger
        ]
        return {"entries": entries, "sigma": ledger_signature(f.ledger)}
    if kind == "count":
        return {"terms": len(f.terms), "dehn": f.dehn_count}
    if kind == "solveforms":
        cycles = [t.curve for t in f.terms if t.kind == "dehn"]
        sols = solve_forms(cycles, f.surface)
        return {"count": sols.count}
    if kind == "divisibility":
        alpha = env.curves[extra[0]] if extra else _push_alpha(f)
        cycles = [t.curve for t in f.terms if t.kind == "dehn"]
        res = fiber_divisibility(cycles, alpha)
        return {"alpha": list(alpha.coords), "d": res.d, "primitive": res.primitive}
    if kind == "spin":
        mode = extra[0] if extra else ("pencil" if f.surface.boundary else "plain")
        if mode == "pencil":
            return {"mode": mode, **_spin_payload(pencil_spin_check(f))}
        if mode == "doubled":
            return {"mode": mode, **_spin_payload(fibration_spin_check(f, doubled=True))}
        if mode in ("even", "odd"):
            return {"mode": mode, **_spin_payload(fibration_spin_check(f, dual_parity=mode))}
        if mode == "arf":
            sigma = signature_meyer(f)
            cycles = [t.curve for t in f.terms if t.kind == "dehn"]
            div = fiber_divisibility(cycles, _push_alpha(f))
            verdict = spin_via_arf(f, sigma, div)
            return {"mode": mode, "sigma": sigma, "d": div.d, **_spin_payload(verdict)}
        return {"mode": mode, **_spin_payload(fibration_spin_check(f))}
    raise ValueError(f"unknown report kind {kind!r}")


def run_script(script: Script) -> ScriptReport:
    """Execute a parsed script and collect its emitted reports.

    Execution is deterministic. Imported and transformed words are
    re-checked for homological triviality after every step; any module
    error surfaces as a ScriptError tagged with the statement index.
    """
    env = _Env()
    entries: list[ReportEntry] = []
    for idx, st in enumerate(script.statements):
        try:
            _run_statement(st, idx, env, entries)
        except ScriptError:
            raise
        except Exception as exc:
            raise ScriptError(str(exc), st.line, st.col, index=idx) from exc
    return ScriptReport(tuple(entries))


def _run_statement(
    st: Statement, idx: int, env: _Env, entries: list[ReportEntry]
) -> None:
    k, a = st.kind, st.args
    if k == "declare_surface":
        env.surface = SurfaceModel(a[0], a[1], a[2])
    elif k == "declare_curve":
        name, coords = a
        if len(coords) != env.surface.rank:
            raise ValueError(
                f"curve has {len(coords)} coordinates, surface rank is "
                f"{env.surface.rank}"
            )
        env.curves[name] = CurveClass(coords, label=name)
    elif k == "import_relation":
        env.relations[a[0]] = builtin_relation(a[1], *a[2])
    elif k == "import_fixture":
        fx = paper_fixture(a[1])
        f = fx.factorization
        if env.surface is not None and f.surface != env.surface:
            raise ValueError(
                f"fixture surface {f.surface} does not match the declared "
                f"surface {env.surface}"
            )
        _check_trivial(f)
        env.facs[a[0]] = f
    elif k == "hurwitz":
        name, index, direction, count = a
        f = env.facs[name]
        step = -1 if direction == "right" else 1
        for n in range(count):
            f = hurwitz_move(f, index + n * step, direction)
        _check_trivial(f)
        env.facs[name] = f
    elif k == "cyclic":
        f = cyclic_permute(env.facs[a[0]], a[1])
        _check_trivial(f)
        env.facs[a[0]] = f
    elif k == "conjugate":
        f = env.facs[a[0]]
        f = conjugate_global(f, env.word(a[1], f))
        _check_trivial(f)
        env.facs[a[0]] = f
    elif k == "cancel":
        f = cancel_pairs(env.facs[a[0]])
        _check_trivial(f)
        env.facs[a[0]] = f
    elif k == "fiber_sum":
        new, first, second, glue = a
        f1, f2 = env.facs[first], env.facs[second]
        f = fiber_sum(f1, f2, env.word(glue, f2) if glue else None)
        _check_trivial(f)
        env.facs[new] = f
    elif k == "substitute":
        name, start, stop, rel, side, images = a
        f = env.facs[name]
        template = env.relations[rel]
        if images:
            raw = []
            for sign, cname in images:
                c = env.curves[cname]
                raw.append(tuple(sign * x for x in c.coords))
            emb = make_embedding(template.surface, f.surface, raw)
        else:
            if template.surface != f.surface:
                raise ValueError(
                    "template lives on a different surface; give images "
                    "with 'via'"
                )
            emb = identity_embedding(f.surface)
        f = substitute(f, start, stop, template, emb, side=side)
        _check_trivial(f)
        env.facs[name] = f
    elif k == "cap":
        f = cap_boundary(env.facs[a[0]], a[1])
        _check_trivial(f)
        env.facs[a[0]] = f
    elif k == "emit":
        kind, name, extra = a
        payload = _run_emit(kind, env.facs[name], extra, env)
        entries.append(ReportEntry(idx, kind, name, payload))
    else:
        raise ValueError(f"unknown statement kind {k!r}")
