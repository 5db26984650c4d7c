"""Targeted search for critical parity proofs with given expanded symbols.

Kernels of the 48-72 and 60-105 systems are far too large to enumerate, so
codewords are sampled: the kernel generators are put in systematic form on a
random information set, and XORs of a few rows give low-weight codewords.
Pinning most hybrids of one pure basis favours rays of multiplicity 6.
Every hit is mapped to 60-105 basis ids.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .incidence import RaySystem, full_system
from .parity import (
    ParityProof,
    ProofProfile,
    critical_flags,
    kernel_basis,
    make_proof,
    pack,
)

# sample of expanded symbols per proof size, by number of bases
TARGETS: dict[int, tuple[str, ...]] = {
    19: ("35_2 1_6", "33_2 1_4 1_6", "31_2 2_4 1_6", "29_2 3_4 1_6"),
    21: ("39_2 1_6", "37_2 1_4 1_6", "35_2 2_4 1_6", "33_2 3_4 1_6", "31_2 4_4 1_6", "29_2 5_4 1_6"),
    23: ("43_2 1_6", "41_2 1_4 1_6", "39_2 2_4 1_6", "37_2 3_4 1_6", "35_2 4_4 1_6", "29_2 7_4 1_6"),
    29: ("36_2 11_4", "37_2 9_4 1_6", "38_2 7_4 2_6", "39_2 5_4 3_6", "40_2 3_4 4_6"),
    31: ("42_2 10_4", "43_2 8_4 1_6", "44_2 6_4 2_6", "45_2 4_4 3_6", "46_2 2_4 4_6"),
}


def target_symbols() -> list[str]:
    return [f"{left}-{b}_4" for b, lefts in TARGETS.items() for left in lefts]


def _kernel_matrix(system: RaySystem) -> np.ndarray:
    vecs = kernel_basis(system).vectors
    n = system.n_bases
    return np.array([[(v >> j) & 1 for j in range(n)] for v in vecs], dtype=np.uint8)


def systematic_form(gens: np.ndarray, columns: Sequence[int]) -> tuple[np.ndarray, list[int]]:
    """Row-reduce ``gens`` over GF(2), taking pivots in the given column order.

    Returns the reduced rows and the pivot column of each.
    """
    m = gens.copy()
    r = 0
    pivots = []
    for c in columns:
        if r == len(m):
            break
        rows = np.nonzero(m[r:, c])[0]
        if not len(rows):
            continue
        p = r + rows[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        hit = np.nonzero(m[:, c])[0]
        hit = hit[hit != r]
        m[hit] ^= m[r]
        pivots.append(int(c))
        r += 1
    return m[:r], pivots


@dataclass
class Hit:
    symbol: str
    system_label: str
    local_ids: tuple[int, ...]
    proof: ParityProof  # over 60-105 ids


@dataclass
class SearchReport:
    seed: int
    found: dict[str, Hit] = field(default_factory=dict)
    samples: int = 0
    candidates: int = 0
    seconds: float = 0.0

    def missing(self, symbols: Iterable[str]) -> list[str]:
        return [s for s in symbols if s not in self.found]


def _key(p: ProofProfile) -> tuple[int, ...]:
    d = {m: n for n, m in p.expanded}
    return (p.n_bases, d.get(2, 0), d.get(4, 0), d.get(6, 0), d.get(8, 0))


class _Sampler:
    def __init__(self, system: RaySystem, rng: np.random.Generator):
        self.system = system
        self.rng = rng
        self.gens = _kernel_matrix(system)
        self.inc = np.zeros((system.n_bases, system.n_rays), dtype=np.int32)
        for j, b in enumerate(system.bases):
            self.inc[j, [r - 1 for r in b.ray_ids]] = 1
        self.rows = self.gens
        self.pivots: list[int] = []
        self.fixed: dict[int, int] = {}
        # hybrids of each pure basis, 0-based column indices
        self.mates = {}
        for j, b in enumerate(system.bases):
            if b.kind == "pure":
                rs = set(b.ray_ids)
                self.mates[j] = [i for i, h in enumerate(system.bases) if h.kind == "hybrid" and len(rs & set(h.ray_ids)) == 2]

    def reshuffle(self, fixed: Optional[dict[int, int]] = None) -> None:
        """New information set; columns in ``fixed`` get pinned values."""
        self.fixed = fixed or {}
        first = list(self.fixed)
        rest = [c for c in self.rng.permutation(self.system.n_bases) if c not in self.fixed]
        self.rows, self.pivots = systematic_form(self.gens, first + rest)

    def random_pins(self) -> dict[int, int]:
        """Pin most hybrids of one pure basis in, which favours multiplicity 6."""
        pure = [j for j in self.mates if len(self.mates[j]) == 12]
        if not pure:
            return {}
        p = int(self.rng.choice(pure))
        hyb = self.mates[p]
        take = self.rng.choice(hyb, size=int(self.rng.integers(9, 13)), replace=False)
        pins = {int(c): 1 for c in take}
        pins[p] = int(self.rng.integers(0, 2))
        return pins

    def draw(self, n: int, max_rows: int) -> np.ndarray:
        base = np.zeros(self.system.n_bases, dtype=np.uint8)
        free = []
        for i, c in enumerate(self.pivots):
            if c in self.fixed:
                if self.fixed[c]:
                    base ^= self.rows[i]
            else:
                free.append(i)
        sizes = self.rng.integers(0 if self.fixed else 1, max_rows + 1, size=n)
        # random subset of the free rows per sample, of the drawn size
        ranks = self.rng.random((n, len(free))).argsort(axis=1).argsort(axis=1)
        coef = (ranks < sizes[:, None]).astype(np.int32)
        words = ((coef @ self.rows[free].astype(np.int32)) & 1).astype(np.uint8) ^ base
        if self.fixed:
            cols = np.array(list(self.fixed))
            vals = np.array(list(self.fixed.values()), dtype=np.uint8)
            words = words[(words[:, cols] == vals).all(axis=1)]
        return words


def search_profiles(
    symbols: Optional[Iterable[str]] = None,
    systems: Optional[Sequence[RaySystem]] = None,
    seed: int = 0,
    budget: float = 600.0,
    batch: int = 2048,
    max_rows: int = 6,
) -> SearchReport:
    """Sample kernels of ``systems`` until every symbol has a critical witness.

    Stops when all symbols are found or ``budget`` seconds have passed.
    """
    from .subsystems import resolve

    wanted = set(symbols or target_symbols())
    full = full_system()
    if systems is None:
        systems = [resolve("48-72:1,1"), full]
    rng = np.random.default_rng(seed)
    samplers = [_Sampler(s, rng) for s in systems]
    keys = {_key(ProofProfile.parse(s)): s for s in wanted}
    sizes = sorted({k[0] for k in keys})
    report = SearchReport(seed)
    t0 = time.perf_counter()
    rounds = 0
    while wanted - set(report.found) and time.perf_counter() - t0 < budget:
        sampler = samplers[rounds % len(samplers)]
        pinned = rounds % 4 >= 2
        rounds += 1
        sampler.reshuffle(sampler.random_pins() if pinned else None)
        words = sampler.draw(batch, max_rows)
        report.samples += len(words)
        weight = words.sum(axis=1)
        keep = np.isin(weight, list(sizes))
        words = np.unique(words[keep], axis=0)
        if not len(words):
            continue
        counts = words.astype(np.int32) @ sampler.inc
        hist = np.stack([words.sum(axis=1)] + [(counts == m).sum(axis=1) for m in (2, 4, 6, 8)], axis=1)
        todo = []
        for row, h in zip(words, hist.tolist()):
            sym = keys.get(tuple(h))
            if sym is not None and sym not in report.found:
                todo.append((sym, row))
        if not todo:
            continue
        report.candidates += len(todo)
        flags = critical_flags(sampler.system, pack(np.array([r for _, r in todo])))
        for (sym, row), ok in zip(todo, flags):
            if ok and sym not in report.found:
                local = tuple(int(j) + 1 for j in np.nonzero(row)[0])
                parent = sorted(sampler.system.parent_basis_ids[j - 1] for j in local)
                report.found[sym] = Hit(sym, sampler.system.label, local, make_proof(full, parent))
    report.seconds = time.perf_counter() - t0
    return report
