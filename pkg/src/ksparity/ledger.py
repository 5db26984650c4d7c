"""Append-only JSON-lines ledger of parity proofs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from .incidence import RaySystem
from .parity import ParityProof, make_proof


class LedgerError(ValueError):
    pass


@dataclass(frozen=True)
class LedgerRecord:
    system: str
    basis_ids: tuple[int, ...]
    brief: str
    expanded: str
    critical: bool
    orbit: Optional[int] = None

    @classmethod
    def of(cls, proof: ParityProof, critical: bool, orbit: Optional[int] = None) -> "LedgerRecord":
        prof = proof.profile
        return cls(proof.system_label, tuple(proof.basis_ids), prof.brief, prof.symbol, bool(critical), orbit)

    def to_json(self) -> dict:
        out = {
            "system": self.system,
            "basisIds": list(self.basis_ids),
            "brief": self.brief,
            "expanded": self.expanded,
            "critical": self.critical,
        }
        if self.orbit is not None:
            out["orbit"] = self.orbit
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, d: dict) -> "LedgerRecord":
        try:
            ids = tuple(int(x) for x in d["basisIds"])
            return cls(str(d["system"]), ids, str(d["brief"]), str(d["expanded"]), bool(d["critical"]), d.get("orbit"))
        except (KeyError, TypeError, ValueError) as exc:
            raise LedgerError(f"malformed ledger record: {exc}") from None

    @classmethod
    def loads(cls, line: str) -> "LedgerRecord":
        try:
            return cls.from_json(json.loads(line))
        except json.JSONDecodeError as exc:
            raise LedgerError(f"malformed ledger line: {exc}") from None

    def proof(self, system: RaySystem) -> ParityProof:
        if system.label != self.system:
            raise LedgerError(f"record is for {self.system}, not {system.label}")
        return make_proof(system, self.basis_ids)


PathLike = Union[str, Path]


def append(path: PathLike, records: Iterable[LedgerRecord]) -> int:
    n = 0
    with open(path, "a", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.dumps() + "\n")
            n += 1
    return n


def write(path: PathLike, records: Iterable[LedgerRecord]) -> int:
    Path(path).write_text("", encoding="utf-8")
    return append(path, records)


def read(path: PathLike) -> Iterator[LedgerRecord]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield LedgerRecord.loads(line)
