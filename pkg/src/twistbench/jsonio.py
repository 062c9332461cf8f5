"""Canonical JSON codec for factorization files.

One document per factorization: surface, terms, optional target and
ledger, optional coefficients marker for words stored over Z2. Field
order is fixed and the encoder always emits UTF-8 with a trailing
newline, so round-tripping a canonical file is byte-stable and golden
files diff cleanly.

The wire kind for a point push is "push"; everything else matches the
internal kind names.
"""

from __future__ import annotations

import json

from .ledger import LedgerEntry
from .surface import CurveClass, SurfaceModel
from .twists import Factorization, TwistTerm

_KIND_TO_WIRE = {"dehn": "dehn", "point_push": "push", "boundary": "boundary"}
_WIRE_TO_KIND = {v: k for k, v in _KIND_TO_WIRE.items()}


class SchemaError(ValueError):
    """Document violates the factorization schema; message carries the
    JSON path of the offending node."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _term_dict(term: TwistTerm) -> dict:
    out = {
        "kind": _KIND_TO_WIRE[term.kind],
        "class": list(term.curve.coords),
        "sign": term.sign,
    }
    if term.curve.label is not None:
        out["label"] = term.curve.label
    return out


def _ledger_dict(entry: LedgerEntry) -> dict:
    out = {"kind": entry.kind, "count": entry.count}
    if entry.name is not None:
        out["name"] = entry.name
    if entry.value is not None:
        out["value"] = entry.value
    return out


def factorization_to_dict(f: Factorization) -> dict:
    doc: dict = {
        "surface": {
            "g": f.surface.genus,
            "b": f.surface.boundary,
            "k": f.surface.marked,
        }
    }
    if f.coefficients != "Z":
        doc["coefficients"] = f.coefficients
    doc["terms"] = [_term_dict(t) for t in f.terms]
    if f.target:
        doc["target"] = list(f.target)
    if f.ledger:
        doc["ledger"] = [_ledger_dict(e) for e in f.ledger]
    return doc


def encode_factorization(f: Factorization) -> str:
    return json.dumps(factorization_to_dict(f), indent=2, ensure_ascii=False) + "\n"


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(path, message)


def _parse_surface(node, path: str) -> SurfaceModel:
    _expect(isinstance(node, dict), path, "expected an object")
    for key in node:
        _expect(key in ("g", "b", "k"), f"{path}.{key}", "unknown surface field")
    _expect("g" in node, path, "missing field 'g'")
    g = node["g"]
    b = node.get("b", 0)
    k = node.get("k", 0)
    for name, val in (("g", g), ("b", b), ("k", k)):
        _expect(
            isinstance(val, int) and not isinstance(val, bool) and val >= 0,
            f"{path}.{name}",
            "expected a non-negative integer",
        )
    return SurfaceModel(genus=g, boundary=b, marked=k)


def _parse_class(node, rank: int, path: str) -> tuple[int, ...]:
    _expect(isinstance(node, list), path, "expected an array")
    _expect(
        len(node) == rank,
        path,
        f"expected array of {rank} integers, got length {len(node)}",
    )
    for i, v in enumerate(node):
        _expect(
            isinstance(v, int) and not isinstance(v, bool),
            f"{path}[{i}]",
            "expected an integer",
        )
    return tuple(node)


def _parse_term(node, surface: SurfaceModel, path: str) -> TwistTerm:
    _expect(isinstance(node, dict), path, "expected an object")
    for key in node:
        _expect(
            key in ("kind", "class", "sign", "label"),
            f"{path}.{key}",
            "unknown term field",
        )
    _expect("kind" in node, path, "missing field 'kind'")
    _expect(
        node["kind"] in _WIRE_TO_KIND,
        f"{path}.kind",
        f"expected one of {sorted(_WIRE_TO_KIND)}",
    )
    _expect("class" in node, path, "missing field 'class'")
    coords = _parse_class(node["class"], surface.rank, f"{path}.class")
    sign = node.get("sign", 1)
    _expect(sign in (1, -1), f"{path}.sign", "expected 1 or -1")
    label = node.get("label")
    if label is not None:
        _expect(isinstance(label, str), f"{path}.label", "expected a string")
    return TwistTerm(
        _WIRE_TO_KIND[node["kind"]], CurveClass(coords, label=label), sign=sign
    )


def _parse_ledger(node, path: str) -> tuple[LedgerEntry, ...]:
    _expect(isinstance(node, list), path, "expected an array")
    entries = []
    for i, item in enumerate(node):
        ipath = f"{path}[{i}]"
        _expect(isinstance(item, dict), ipath, "expected an object")
        for key in item:
            _expect(
                key in ("kind", "count", "name", "value"),
                f"{ipath}.{key}",
                "unknown ledger field",
            )
        _expect("kind" in item, ipath, "missing field 'kind'")
        _expect(isinstance(item["kind"], str), f"{ipath}.kind", "expected a string")
        count = item.get("count", 1)
        _expect(
            isinstance(count, int) and not isinstance(count, bool),
            f"{ipath}.count",
            "expected an integer",
        )
        entries.append(
            LedgerEntry(
                item["kind"],
                count=count,
                name=item.get("name"),
                value=item.get("value"),
            )
        )
    return tuple(entries)


def factorization_from_dict(doc, path: str = "$") -> Factorization:
    _expect(isinstance(doc, dict), path, "expected an object")
    for key in doc:
        _expect(
            key in ("surface", "coefficients", "terms", "target", "ledger"),
            f"{path}.{key}",
            "unknown field",
        )
    _expect("surface" in doc, path, "missing field 'surface'")
    surface = _parse_surface(doc["surface"], f"{path}.surface")
    coefficients = doc.get("coefficients", "Z")
    _expect(
        coefficients in ("Z", "Z2"),
        f"{path}.coefficients",
        'expected "Z" or "Z2"',
    )
    _expect("terms" in doc, path, "missing field 'terms'")
    _expect(isinstance(doc["terms"], list), f"{path}.terms", "expected an array")
    terms = tuple(
        _parse_term(t, surface, f"{path}.terms[{i}]")
        for i, t in enumerate(doc["terms"])
    )
    target: tuple[int, ...] = ()
    if "target" in doc:
        node = doc["target"]
        _expect(isinstance(node, list), f"{path}.target", "expected an array")
        _expect(
            len(node) == surface.boundary,
            f"{path}.target",
            f"expected {surface.boundary} entries, got {len(node)}",
        )
        for i, v in enumerate(node):
            _expect(
                isinstance(v, int) and not isinstance(v, bool),
                f"{path}.target[{i}]",
                "expected an integer",
            )
        target = tuple(node)
    ledger: tuple[LedgerEntry, ...] = ()
    if "ledger" in doc:
        ledger = _parse_ledger(doc["ledger"], f"{path}.ledger")
    return Factorization(
        surface=surface,
        terms=terms,
        target=target,
        ledger=ledger,
        coefficients=coefficients,
    )


def decode_factorization(text: str) -> Factorization:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc
    return factorization_from_dict(doc)


def read_factorization(path) -> Factorization:
    with open(path, encoding="utf-8") as fh:
        return decode_factorization(fh.read())


def write_factorization(f: Factorization, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(encode_factorization(f))
