"""Ray systems: rays, their orthogonal bases and the ray/basis incidence.

Ray ids and basis ids are 1-based throughout, matching the printed tables.
Subsystems renumber their rays 1..n in parent order and keep the map back to
the parent ids in ``parent_ray_ids`` / ``parent_basis_ids``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .pauli import enumerate_triads, triad_eigenbasis
from .rays import Ray, _ip


class RaySystemError(ValueError):
    """Corrupt or inconsistent ray-system input."""


@dataclass(frozen=True)
class Basis:
    ray_ids: tuple[int, int, int, int]
    kind: str  # "pure" or "hybrid"
    # triad numbers (1..15) of the pure bases involved: one for pure, two for hybrid
    parents: tuple[int, ...]

    def __iter__(self):
        return iter(self.ray_ids)


@lru_cache(maxsize=None)
def _triad_ray_sets() -> tuple[frozenset[tuple[complex, ...]], ...]:
    return tuple(
        frozenset(r.components for r, _ in triad_eigenbasis(t)) for t in enumerate_triads()
    )


@lru_cache(maxsize=None)
def _triad_of_ray() -> dict[tuple[complex, ...], int]:
    return {c: k + 1 for k, s in enumerate(_triad_ray_sets()) for c in s}


def classify_basis(rays: Sequence[Ray]) -> tuple[str, tuple[int, ...]]:
    comps = [r.components for r in rays]
    owner = _triad_of_ray()
    try:
        triads = [owner[c] for c in comps]
    except KeyError:
        raise RaySystemError("basis contains a ray outside every triad eigenbasis") from None
    counts = Counter(triads)
    if len(counts) == 1:
        return "pure", (triads[0],)
    if sorted(counts.values()) == [2, 2]:
        return "hybrid", tuple(sorted(counts))
    raise RaySystemError(f"basis {comps} is neither pure nor a 2+2 hybrid")


@dataclass(frozen=True)
class IncidenceMatrixGF2:
    """Ray-by-basis 0/1 matrix, bit-packed.

    ``rows[r]`` has bit ``b`` set iff ray ``r+1`` lies in basis ``b+1``;
    ``columns[b]`` is the transposed view.
    """

    n_rays: int
    n_bases: int
    rows: tuple[int, ...]
    columns: tuple[int, ...]

    def parity(self, basis_mask: int) -> int:
        """Per-ray parity vector (bit r = ray r+1) of a set of bases."""
        out = 0
        b = 0
        while basis_mask:
            if basis_mask & 1:
                out ^= self.columns[b]
            basis_mask >>= 1
            b += 1
        return out


@dataclass(frozen=True, eq=False)
class RaySystem:
    label: str
    rays: tuple[Ray, ...]
    bases: tuple[Basis, ...]
    parent_ray_ids: tuple[int, ...] = ()
    parent_basis_ids: tuple[int, ...] = ()
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        n = len(self.rays)
        for b in self.bases:
            if any(not 1 <= r <= n for r in b.ray_ids):
                raise RaySystemError(f"basis {b.ray_ids} references a ray outside the system")
        if not self.parent_ray_ids:
            object.__setattr__(self, "parent_ray_ids", tuple(range(1, n + 1)))
        if not self.parent_basis_ids:
            object.__setattr__(self, "parent_basis_ids", tuple(range(1, len(self.bases) + 1)))

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @property
    def n_bases(self) -> int:
        return len(self.bases)

    def ray(self, ray_id: int) -> Ray:
        return self.rays[ray_id - 1]

    def basis(self, basis_id: int) -> Basis:
        return self.bases[basis_id - 1]

    @cached_property
    def basis_index(self) -> dict[tuple[int, ...], int]:
        return {b.ray_ids: j + 1 for j, b in enumerate(self.bases)}

    def basis_id(self, ray_ids: Iterable[int]) -> int:
        key = tuple(sorted(ray_ids))
        try:
            return self.basis_index[key]
        except KeyError:
            raise KeyError(f"{key} is not a basis of {self.label}") from None

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Basis ids containing each ray (index ray_id - 1)."""
        inc: list[list[int]] = [[] for _ in self.rays]
        for j, b in enumerate(self.bases, 1):
            for r in b.ray_ids:
                inc[r - 1].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def matrix(self) -> IncidenceMatrixGF2:
        rows = [0] * self.n_rays
        cols = []
        for j, b in enumerate(self.bases):
            c = 0
            for r in b.ray_ids:
                rows[r - 1] |= 1 << j
                c |= 1 << (r - 1)
            cols.append(c)
        return IncidenceMatrixGF2(self.n_rays, self.n_bases, tuple(rows), tuple(cols))

    @cached_property
    def orthogonality(self) -> tuple[int, ...]:
        """Bitmask of orthogonal partners per ray (bit k = ray k+1)."""
        comps = [r.components for r in self.rays]
        adj = [0] * len(comps)
        for a, b in combinations(range(len(comps)), 2):
            if _ip(comps[a], comps[b]) == 0:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        return tuple(adj)

    def kind_counts(self) -> Counter:
        return Counter(b.kind for b in self.bases)

    def ray_degrees(self) -> Counter:
        """Histogram ``{bases per ray: number of rays}``."""
        return Counter(len(x) for x in self.incidence)

    def expanded_symbol(self) -> str:
        degs = sorted(self.ray_degrees().items(), key=lambda kv: -kv[0])
        left = "".join(f"{n}_{d}" for d, n in degs)
        return f"{left}-{self.n_bases}_4"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "rays": [r.text() for r in self.rays],
            "bases": [
                {"ids": list(b.ray_ids), "kind": b.kind, "parents": list(b.parents)}
                for b in self.bases
            ],
            "parent_ray_ids": list(self.parent_ray_ids),
            "parent_basis_ids": list(self.parent_basis_ids),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def _order_bases(bases: list[Basis]) -> list[Basis]:
    return sorted(bases, key=lambda b: (b.kind != "pure", b.parents if b.kind == "pure" else (), b.ray_ids))


def build_bases(rays: Sequence[Ray], label: str = "") -> RaySystem:
    """Find every 4-set of mutually orthogonal rays.

    Pure bases come first in triad order, hybrids follow in lexicographic
    order of their ray ids.
    """
    comps = [r.components for r in rays]
    if len(set(comps)) != len(comps):
        raise RaySystemError("duplicate rays")
    n = len(comps)
    adj = [0] * n
    for a, b in combinations(range(n), 2):
        if _ip(comps[a], comps[b]) == 0:
            adj[a] |= 1 << b
            adj[b] |= 1 << a

    cliques = []
    for a in range(n):
        na = adj[a] >> (a + 1) << (a + 1)
        for b in _bits(na):
            nb = na & adj[b] >> (b + 1) << (b + 1)
            for c in _bits(nb):
                nc = nb & adj[c] >> (c + 1) << (c + 1)
                for d in _bits(nc):
                    if nc & adj[d] >> (d + 1) << (d + 1):
                        raise RaySystemError("five mutually orthogonal rays in dimension 4")
                    cliques.append((a + 1, b + 1, c + 1, d + 1))

    bases = []
    for ids in cliques:
        kind, parents = classify_basis([rays[i - 1] for i in ids])
        bases.append(Basis(ids, kind, parents))
    out = RaySystem(label, tuple(rays), tuple(_order_bases(bases)))
    out.__dict__["orthogonality"] = tuple(adj)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Positions of set bits, ascending."""
    return list(_bits(mask))


def restrict(
    parent: RaySystem,
    ray_ids: Iterable[int],
    label: str,
    pure: bool = True,
    hybrid: bool = True,
) -> RaySystem:
    """Subsystem on ``ray_ids`` (parent numbering) keeping the bases inside it.

    Local ray numbering follows parent order, so local basis order matches
    the parent's ordering rule as well.
    """
    keep = sorted(set(ray_ids))
    local = {p: i + 1 for i, p in enumerate(keep)}
    chosen = []
    for j, b in enumerate(parent.bases, 1):
        if b.kind == "pure" and not pure or b.kind == "hybrid" and not hybrid:
            continue
        if all(r in local for r in b.ray_ids):
            chosen.append((Basis(tuple(local[r] for r in b.ray_ids), b.kind, b.parents), j))
    chosen.sort(key=lambda x: (x[0].kind != "pure", x[0].parents if x[0].kind == "pure" else (), x[0].ray_ids))
    top = [parent.parent_ray_ids[p - 1] for p in keep]
    top_b = [parent.parent_basis_ids[j - 1] for _, j in chosen]
    return RaySystem(
        label,
        tuple(parent.rays[p - 1] for p in keep),
        tuple(b for b, _ in chosen),
        tuple(top),
        tuple(top_b),
    )


def drop_bases(system: RaySystem, basis_ids: Iterable[int], label: Optional[str] = None) -> RaySystem:
    """Same rays, with the given bases removed (basis ids renumbered)."""
    drop = set(basis_ids)
    kept = [(j, b) for j, b in enumerate(system.bases, 1) if j not in drop]
    return RaySystem(
        label or f"{system.label}-minus{len(drop)}",
        system.rays,
        tuple(b for _, b in kept),
        system.parent_ray_ids,
        tuple(system.parent_basis_ids[j - 1] for j, _ in kept),
    )


def degree_profile(system: RaySystem, ray_id: int) -> tuple[int, Counter]:
    """Orthogonal-neighbour count and ``{co-occurrence multiplicity: neighbours}``."""
    if not 1 <= ray_id <= system.n_rays:
        raise KeyError(f"unknown ray id {ray_id}")
    neigh = bits(system.orthogonality[ray_id - 1])
    co = Counter()
    for j in system.incidence[ray_id - 1]:
        for r in system.basis(j).ray_ids:
            if r != ray_id:
                co[r] += 1
    hist = Counter(co[k + 1] for k in neigh if co[k + 1])
    return len(neigh), hist


def is_saturated(system: RaySystem) -> bool:
    covered = [0] * system.n_rays
    for b in system.bases:
        m = 0
        for r in b.ray_ids:
            m |= 1 << (r - 1)
        for r in b.ray_ids:
            covered[r - 1] |= m
    return all(adj & ~covered[i] == 0 for i, adj in enumerate(system.orthogonality))


@dataclass(frozen=True)
class Mating:
    pure_a: int
    pure_b: int
    shared: str
    hybrids: tuple[int, int]


def hybrid_mating_rule(system: RaySystem) -> list[Mating]:
    """Pairs of pure bases whose triads share one observable, with their hybrids."""
    triads = enumerate_triads()
    pure = {b.parents[0]: j for j, b in enumerate(system.bases, 1) if b.kind == "pure"}
    by_parents: dict[tuple[int, ...], list[int]] = {}
    for j, b in enumerate(system.bases, 1):
        if b.kind == "hybrid":
            by_parents.setdefault(b.parents, []).append(j)
    out = []
    for ta, tb in combinations(sorted(pure), 2):
        shared = triads[ta - 1].observables() & triads[tb - 1].observables()
        if len(shared) != 1:
            continue
        hyb = tuple(sorted(by_parents.get((ta, tb), ())))
        out.append(Mating(pure[ta], pure[tb], next(iter(shared)).name, hyb))
    return out


def table_text(system: RaySystem, per_row: int = 5) -> str:
    """Row-major listing: pure bases first, then hybrids, ``per_row`` bases a line."""

    def block(bs):
        lines = []
        for k in range(0, len(bs), per_row):
            chunk = bs[k : k + per_row]
            lines.append(" | ".join(" ".join(f"{r:2d}" for r in b.ray_ids) for b in chunk))
        return lines

    pure = [b for b in system.bases if b.kind == "pure"]
    hyb = [b for b in system.bases if b.kind == "hybrid"]
    out = block(pure)
    if pure and hyb:
        out.append("-" * len(out[0]))
    out += block(hyb)
    return "\n".join(out) + "\n"


@lru_cache(maxsize=None)
def sixty_rays() -> tuple[Ray, ...]:
    """Eigenvectors of the 15 triads, numbered 1..60 in triad-table order."""
    return tuple(
        Ray(r.components, id=4 * k + s + 1)
        for k, t in enumerate(enumerate_triads())
        for s, (r, _) in enumerate(triad_eigenbasis(t))
    )


@lru_cache(maxsize=None)
def full_system() -> RaySystem:
    """The 60-ray, 105-basis system."""
    return build_bases(sixty_rays(), "60-105")
