"""Relation-substitution ledger.

Each substitution event of a known relation carries a fixed signature
contribution; words built by splicing relations accumulate entries, and
the ledger signature is the weighted sum. Constants follow the standard
values for the lantern and chain relations.
"""

from __future__ import annotations

from dataclasses import dataclass

SIGNATURE_VALUES = {
    "lantern": 1,
    "chain_2": -7,
    "chain_3": -6,
    "chain_4": -23,
    "chain_5": -16,
    "chain_5_inverse": 16,
}


@dataclass(frozen=True)
class LedgerEntry:
    """count occurrences of one relation kind.

    kind is one of SIGNATURE_VALUES' keys or "custom"; custom entries
    carry their own name and per-occurrence value.
    """

    kind: str
    count: int = 1
    name: str | None = None
    value: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "custom":
            if self.name is None or self.value is None:
                raise ValueError("custom ledger entries need name and value")
        elif self.kind not in SIGNATURE_VALUES:
            raise ValueError(f"unknown ledger kind {self.kind!r}")
        if self.count < 0:
            raise ValueError("ledger count must be non-negative")

    @property
    def each(self) -> int:
        if self.kind == "custom":
            return int(self.value)  # type: ignore[arg-type]
        return SIGNATURE_VALUES[self.kind]

    @property
    def total(self) -> int:
        return self.each * self.count


def merge_ledgers(*ledgers) -> tuple[LedgerEntry, ...]:
    """Combine entries, summing counts of identical kinds."""
    acc: dict[tuple, int] = {}
    order: list[tuple] = []
    for ledger in ledgers:
        for e in ledger:
            key = (e.kind, e.name, e.value)
            if key not in acc:
                acc[key] = 0
                order.append(key)
            acc[key] += e.count
    return tuple(
        LedgerEntry(kind=k, count=acc[(k, n, v)], name=n, value=v)
        for (k, n, v) in order
        if acc[(k, n, v)]
    )


def ledger_signature(entries) -> int:
    return sum(e.total for e in entries)


def inverse_entry(kind: str, count: int = 1) -> LedgerEntry:
    """Ledger entry for removing (rather than splicing in) a relation."""
    if kind == "chain_5":
        return LedgerEntry("chain_5_inverse", count)
    if kind == "chain_5_inverse":
        return LedgerEntry("chain_5", count)
    if kind in SIGNATURE_VALUES:
        return LedgerEntry(
            "custom", count, name=f"{kind}_inverse", value=-SIGNATURE_VALUES[kind]
        )
    raise ValueError(f"no inverse for ledger kind {kind!r}")
