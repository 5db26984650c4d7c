"""Two-qubit Pauli observables, commuting triads and their eigenbases."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .rays import Ray, canonicalize, is_unbiased

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
IDENTITY = np.eye(4, dtype=complex)

# Row order of the triad table; each entry names the first two members.
TRIAD_TABLE = (
    ("Z1", "Z2"), ("X1", "X2"), ("Y1", "Y2"),
    ("Z1", "X2"), ("X1", "Y2"), ("Y1", "Z2"),
    ("Z1", "Y2"), ("X1", "Z2"), ("Y1", "X2"),
    ("Z1X2", "X1Z2"), ("X1Y2", "Y1X2"), ("Y1Z2", "Z1Y2"),
    ("Z1Z2", "X1X2"), ("Z1X2", "X1Y2"), ("Z1Y2", "X1Z2"),
)

SIGNATURES = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass(frozen=True)
class PauliObservable:
    factor1: str
    factor2: str
    sign: int = 1

    def __post_init__(self):
        if self.factor1 not in _SINGLE or self.factor2 not in _SINGLE:
            raise ValueError("Pauli factors must be one of I, X, Y, Z")
        if self.factor1 == "I" and self.factor2 == "I":
            raise ValueError("I x I is not a nontrivial observable")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def unsigned(self) -> "PauliObservable":
        return PauliObservable(self.factor1, self.factor2)

    def matrix(self) -> np.ndarray:
        return self.sign * np.kron(_SINGLE[self.factor1], _SINGLE[self.factor2])

    @property
    def name(self) -> str:
        parts = []
        if self.factor1 != "I":
            parts.append(self.factor1 + "1")
        if self.factor2 != "I":
            parts.append(self.factor2 + "2")
        return ("-" if self.sign < 0 else "") + "".join(parts)

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, name: str) -> "PauliObservable":
        sign = 1
        if name.startswith("-"):
            sign, name = -1, name[1:]
        f = {"1": "I", "2": "I"}
        for i in range(0, len(name), 2):
            f[name[i + 1]] = name[i]
        return cls(f["1"], f["2"], sign)


def commutes(a: PauliObservable, b: PauliObservable) -> bool:
    ma, mb = a.matrix(), b.matrix()
    return np.array_equal(ma @ mb, mb @ ma)


def _as_signed_pauli(m: np.ndarray) -> PauliObservable:
    for f1, f2 in product("IXYZ", repeat=2):
        if f1 == f2 == "I":
            continue
        base = np.kron(_SINGLE[f1], _SINGLE[f2])
        for sign in (1, -1):
            if np.array_equal(m, sign * base):
                return PauliObservable(f1, f2, sign)
    raise ValueError("matrix is not a signed nontrivial Pauli operator")


@dataclass(frozen=True)
class Triad:
    members: tuple[PauliObservable, PauliObservable, PauliObservable]

    @classmethod
    def from_pair(cls, a: PauliObservable, b: PauliObservable) -> "Triad":
        """Complete ``a, b`` with the signed product that makes ``a b c = +I``."""
        return cls((a, b, _as_signed_pauli(a.matrix() @ b.matrix())))

    def signed_product(self) -> np.ndarray:
        a, b, c = (m.matrix() for m in self.members)
        return a @ b @ c

    def observables(self) -> frozenset[PauliObservable]:
        return frozenset(m.unsigned for m in self.members)

    @property
    def name(self) -> str:
        return ", ".join(m.name for m in self.members)

    def __str__(self) -> str:
        return "{" + self.name + "}"


@dataclass(frozen=True)
class EigenSignature:
    s1: int
    s2: int

    @property
    def s3(self) -> int:
        return self.s1 * self.s2

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in (self.s1, self.s2))


@lru_cache(maxsize=None)
def enumerate_observables() -> tuple[PauliObservable, ...]:
    """The 15 unsigned observables, in order of first appearance in the triad table."""
    seen: list[PauliObservable] = []
    for t in enumerate_triads():
        for m in t.members:
            if m.unsigned not in seen:
                seen.append(m.unsigned)
    return tuple(seen)


def _commuting_triples() -> set[frozenset[PauliObservable]]:
    obs = [
        PauliObservable(f1, f2)
        for f1, f2 in product("IXYZ", repeat=2)
        if not f1 == f2 == "I"
    ]
    found = set()
    for trio in combinations(obs, 3):
        if all(commutes(a, b) for a, b in combinations(trio, 2)):
            prod = trio[0].matrix() @ trio[1].matrix() @ trio[2].matrix()
            if np.array_equal(prod, IDENTITY) or np.array_equal(prod, -IDENTITY):
                found.add(frozenset(trio))
    return found


@lru_cache(maxsize=None)
def enumerate_triads() -> tuple[Triad, ...]:
    """All 15 commuting triads, ordered and signed as in the triad table."""
    triads = tuple(
        Triad.from_pair(PauliObservable.parse(a), PauliObservable.parse(b))
        for a, b in TRIAD_TABLE
    )
    # the table ordering must cover exactly the triples found by brute force
    if {t.observables() for t in triads} != _commuting_triples():
        raise AssertionError("triad table disagrees with commuting-triple search")
    return triads


def triad_eigenbasis(t: Triad) -> list[tuple[Ray, EigenSignature]]:
    """Simultaneous eigenvectors, one per sign pattern of the first two members."""
    a, b = t.members[0].matrix(), t.members[1].matrix()
    out = []
    for s1, s2 in SIGNATURES:
        proj = (IDENTITY + s1 * a) @ (IDENTITY + s2 * b)
        col = next(j for j in range(4) if np.any(proj[:, j]))
        out.append((canonicalize(complex(z) for z in proj[:, col]), EigenSignature(s1, s2)))
    return out


@lru_cache(maxsize=None)
def mub_partitions() -> tuple[tuple[int, ...], ...]:
    """The 6 partitions of the observables into 5 triads, as 0-based triad indices.

    Rows are sorted lexicographically, which reproduces the usual table order.
    """
    triads = enumerate_triads()
    obs = [t.observables() for t in triads]
    rows = []

    def extend(chosen, covered):
        if len(chosen) == 5:
            rows.append(tuple(chosen))
            return
        start = chosen[-1] + 1 if chosen else 0
        for i in range(start, len(triads)):
            if not (obs[i] & covered):
                extend(chosen + [i], covered | obs[i])

    extend([], frozenset())
    return tuple(sorted(rows))


def bases_unbiased(u: list[Ray], v: list[Ray]) -> bool:
    return all(is_unbiased(r, s) for r in u for s in v)
