"""Bundled factorization fixtures with frozen expected invariants.

The class tables live in data/*.json, not in source: a 48-row integer
table is transcription-error-prone, so the files are versioned and
pinned by sha256. Loading a builtin fixture re-hashes the file and
refuses to proceed on mismatch. Setting TWISTBENCH_FIXTURES points the
loader at another directory and skips the pin (for locally generated
or experimental fixture sets).
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path

from .jsonio import (
    SchemaError,
    _expect,
    encode_factorization,
    factorization_from_dict,
    factorization_to_dict,
)
from .ledger import LedgerEntry
from .twists import Factorization

FIXTURE_NAMES = (
    "genus2_pencil",
    "genus3_pencil",
    "genus9_signature_zero",
    "genus9_with_pushes",
)

# sha256 of the canonical file bytes, frozen when the tables were
# generated and cross-checked. Regenerating the data files requires
# updating these in the same change.
CHECKSUMS = {
    "genus2_pencil": "72256d5c76fcadfb21fdffd1bd007054dc150d5432b3d6d5e3e488b385f468c3",
    "genus3_pencil": "60839dd43bdb8ba6b6cab33766991af5b29499af6007265b8917f890cedd8787",
    "genus9_signature_zero": "3cb10c43e51952d6a3f624835f28530f235713b4547960218a0f44fc926ca987",
    "genus9_with_pushes": "dceee0d67beb65706bfaa63fcaf5f5050256233e6fbf00b81cbd54fdea9a12b7",
}

_EXPECTED_KEYS = (
    "euler",
    "sigma_meyer",
    "sigma_ledger",
    "h1",
    "h1_capped",
    "divisibility",
    "solve_count",
    "spin",
)


class FixtureIntegrityError(ValueError):
    """Bundled fixture file does not hash to its pinned checksum."""


@dataclass(frozen=True)
class Fixture:
    name: str
    factorization: Factorization
    ledger: tuple[LedgerEntry, ...]
    expected: dict

    def __post_init__(self) -> None:
        object.__setattr__(self, "ledger", tuple(self.ledger))
        object.__setattr__(self, "expected", dict(self.expected))


def _check_expected(node, path: str) -> dict:
    _expect(isinstance(node, dict), path, "expected an object")
    for key in node:
        _expect(key in _EXPECTED_KEYS, f"{path}.{key}", "unknown expected field")
    for key in ("h1", "h1_capped"):
        if key in node:
            sub = node[key]
            _expect(isinstance(sub, dict), f"{path}.{key}", "expected an object")
            for k2 in sub:
                _expect(
                    k2 in ("free", "torsion"),
                    f"{path}.{key}.{k2}",
                    "unknown group field",
                )
    return dict(node)


def fixture_to_dict(fx: Fixture) -> dict:
    doc: dict = {"name": fx.name}
    doc.update(factorization_to_dict(fx.factorization))
    if fx.expected:
        doc["expected"] = fx.expected
    return doc


def encode_fixture(fx: Fixture) -> str:
    return json.dumps(fixture_to_dict(fx), indent=2, ensure_ascii=False) + "\n"


def fixture_from_dict(doc, path: str = "$") -> Fixture:
    _expect(isinstance(doc, dict), path, "expected an object")
    _expect("name" in doc, path, "missing field 'name'")
    _expect(isinstance(doc["name"], str), f"{path}.name", "expected a string")
    body = {k: v for k, v in doc.items() if k not in ("name", "expected")}
    f = factorization_from_dict(body, path)
    expected = {}
    if "expected" in doc:
        expected = _check_expected(doc["expected"], f"{path}.expected")
    return Fixture(
        name=doc["name"], factorization=f, ledger=f.ledger, expected=expected
    )


def decode_fixture(text: str) -> Fixture:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc
    return fixture_from_dict(doc)


def fixture_dir() -> Path:
    override = os.environ.get("TWISTBENCH_FIXTURES")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def paper_fixture(name: str) -> Fixture:
    """Load a bundled fixture by name, verifying its checksum.

    Names: genus2_pencil, genus3_pencil, genus9_signature_zero,
    genus9_with_pushes.
    """
    if name not in FIXTURE_NAMES:
        raise ValueError(
            f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}"
        )
    overridden = "TWISTBENCH_FIXTURES" in os.environ
    path = fixture_dir() / f"{name}.json"
    data = path.read_bytes()
    if not overridden:
        digest = hashlib.sha256(data).hexdigest()
        if digest != CHECKSUMS[name]:
            raise FixtureIntegrityError(
                f"{path} hashes to {digest}, expected {CHECKSUMS[name]}"
            )
    fx = decode_fixture(data.decode("utf-8"))
    if fx.name != name:
        raise SchemaError("$.name", f"file says {fx.name!r}, loaded as {name!r}")
    return fx


__all__ = [
    "CHECKSUMS",
    "FIXTURE_NAMES",
    "Fixture",
    "FixtureIntegrityError",
    "decode_fixture",
    "encode_fixture",
    "encode_factorization",
    "fixture_dir",
    "fixture_from_dict",
    "fixture_to_dict",
    "paper_fixture",
]
