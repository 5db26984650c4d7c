"""Named subsystems of the 60-105 system.

Addressing (also used by the CLI)::

    60-105                  the full system
    40-40:<row>             MUB row 1..6 removed
    36-36:<cov>,<k>         covering 1..6, k-th 3-subset (1..10) of its dodecagons
    36-45:<cov>,<k>         same rays, pure bases kept as well
    48-60:<cov>,<k>         k-th 4-subset (1..5), hybrid bases only
    48-72:<cov>,<k>         same rays, hybrid and pure bases
    peres:<k>               k-th real-type 24-24 system (1..10), k = 1 is the real one
    dodecagon:<d>           the 12_3-9_4 system of dodecagon d (1..15)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING, Optional

from .incidence import RaySystem, bits, full_system, restrict
from .pauli import enumerate_observables, enumerate_triads, mub_partitions

if TYPE_CHECKING:
    from .symmetry import SymmetryGroup


class SubsystemError(ValueError):
    pass


def triad_ray_ids(triad: int) -> tuple[int, ...]:
    """Ray ids (1..60) of the eigenbasis of triad ``triad`` (1..15)."""
    return tuple(range(4 * triad - 3, 4 * triad + 1))


def drop_mub_row(full: RaySystem, row: int) -> RaySystem:
    """Remove the 20 rays of one maximal MUB set; 40 rays and 40 bases remain."""
    rows = mub_partitions()
    if not 1 <= row <= len(rows):
        raise SubsystemError(f"MUB row must be 1..{len(rows)}, got {row}")
    gone = {r for t in rows[row - 1] for r in triad_ray_ids(t + 1)}
    keep = [p for p in full.parent_ray_ids if p not in gone]
    return restrict(full, keep, f"40-40:{row}")


@dataclass(frozen=True)
class Dodecagon:
    index: int
    observable: str
    triads: tuple[int, int, int]
    # vertex order: pure-basis pairs interleaved so that, per triad,
    # positions (1,3) hold the "odd" pair and (2,4) the "even" pair
    ray_ids: tuple[int, ...]

    @property
    def ray_set(self) -> frozenset[int]:
        return frozenset(self.ray_ids)

    def pure_bases(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(self.ray_ids[4 * k : 4 * k + 4])) for k in range(3)]


def _vertex_order(full: RaySystem, triads: tuple[int, int, int]) -> tuple[int, ...]:
    bases = {b.ray_ids for b in full.bases}
    a_rays = triad_ray_ids(triads[0])
    lead = a_rays[0]
    b_pairs = _pairs(triad_ray_ids(triads[1]))
    partner = next(
        r for r in a_rays[1:]
        if any(tuple(sorted((lead, r) + p)) in bases for p in b_pairs)
    )
    odd = {triads[0]: (lead, partner)}
    for t in triads[1:]:
        rs = triad_ray_ids(t)
        even = next(p for p in _pairs(rs) if tuple(sorted(odd[triads[0]] + p)) in bases)
        odd[t] = tuple(sorted(set(rs) - set(even)))
    order = []
    for t in triads:
        o = odd[t]
        e = tuple(sorted(set(triad_ray_ids(t)) - set(o)))
        order += [o[0], e[0], o[1], e[1]]
    return tuple(order)


def _pairs(rs):
    return list(combinations(rs, 2))


@lru_cache(maxsize=None)
def _dodecagons() -> tuple[Dodecagon, ...]:
    full = full_system()
    triads = enumerate_triads()
    pure = {b.parents[0] for b in full.bases if b.kind == "pure"}
    mates = {b.parents for b in full.bases if b.kind == "hybrid"}
    found = []
    for trio in combinations(sorted(pure), 3):
        if not all(p in mates for p in combinations(trio, 2)):
            continue
        rays = [r for t in trio for r in triad_ray_ids(t)]
        mask = sum(1 << (r - 1) for r in rays)
        if all(bin(full.orthogonality[r - 1] & mask).count("1") == 7 for r in rays):
            found.append(trio)
    obs_order = {o: k for k, o in enumerate(enumerate_observables())}
    out = []
    for trio in found:
        shared = frozenset.intersection(*(triads[t - 1].observables() for t in trio))
        (obs,) = shared
        out.append((obs_order[obs], obs.name, trio))
    out.sort()
    return tuple(
        Dodecagon(k + 1, name, trio, _vertex_order(full, trio))
        for k, (_, name, trio) in enumerate(out)
    )


def find_dodecagons(full: Optional[RaySystem] = None) -> tuple[Dodecagon, ...]:
    """The 12-ray sets in which every ray is orthogonal to exactly 7 others.

    Seeds are triples of pure bases that pairwise mate; every such set
    contains three pure bases, so the seeded search is complete.
    """
    if full is not None and full.label != "60-105":
        raise SubsystemError("dodecagons are defined on the 60-105 system")
    return _dodecagons()


@lru_cache(maxsize=None)
def find_coverings() -> tuple[tuple[int, ...], ...]:
    """Sets of five disjoint dodecagons covering all 60 rays (lexicographic order)."""
    dods = _dodecagons()
    sets = [d.ray_set for d in dods]
    out = []

    def extend(chosen, used):
        if len(chosen) == 5:
            if len(used) == 60:
                out.append(tuple(chosen))
            return
        start = chosen[-1] if chosen else 0
        for k in range(start, len(dods)):
            if not sets[k] & used:
                extend(chosen + [k + 1], used | sets[k])

    extend([], frozenset())
    return tuple(sorted(out))


def _check_in_covering(covering: int, dods: tuple[int, ...]) -> tuple[int, ...]:
    covs = find_coverings()
    if not 1 <= covering <= len(covs):
        raise SubsystemError(f"covering must be 1..{len(covs)}")
    if not set(dods) <= set(covs[covering - 1]):
        raise SubsystemError(f"dodecagons {dods} are not all in covering {covering}")
    return covs[covering - 1]


def _union(dods) -> list[int]:
    all_d = _dodecagons()
    return sorted(r for d in dods for r in all_d[d - 1].ray_ids)


def build_36_36(full: RaySystem, covering: int, three: tuple[int, int, int]) -> RaySystem:
    _check_in_covering(covering, three)
    if len(set(three)) != 3:
        raise SubsystemError("need three distinct dodecagons")
    return restrict(full, _union(three), f"36-36:{covering},{_subset_index(covering, three)}", pure=False)


def build_36_45(full: RaySystem, covering: int, three: tuple[int, int, int]) -> RaySystem:
    _check_in_covering(covering, three)
    if len(set(three)) != 3:
        raise SubsystemError("need three distinct dodecagons")
    return restrict(full, _union(three), f"36-45:{covering},{_subset_index(covering, three)}")


def build_48_systems(full: RaySystem, covering: int, four: tuple[int, ...]) -> tuple[RaySystem, RaySystem]:
    _check_in_covering(covering, four)
    if len(set(four)) != 4:
        raise SubsystemError("need four distinct dodecagons")
    rays = _union(four)
    k = _subset_index(covering, four)
    return (
        restrict(full, rays, f"48-60:{covering},{k}", pure=False),
        restrict(full, rays, f"48-72:{covering},{k}"),
    )


def _subset_index(covering: int, dods) -> int:
    row = find_coverings()[covering - 1]
    subsets = list(combinations(row, len(dods)))
    return subsets.index(tuple(sorted(dods))) + 1


def covering_subset(covering: int, size: int, k: int) -> tuple[int, ...]:
    row = find_coverings()[covering - 1]
    subsets = list(combinations(row, size))
    if not 1 <= k <= len(subsets):
        raise SubsystemError(f"subset index must be 1..{len(subsets)}")
    return subsets[k - 1]


def dodecagon_system(full: RaySystem, d: int) -> RaySystem:
    dods = _dodecagons()
    if not 1 <= d <= len(dods):
        raise SubsystemError("dodecagon index must be 1..15")
    return restrict(full, dods[d - 1].ray_ids, f"dodecagon:{d}")


def real_subsystem(full: RaySystem) -> RaySystem:
    """Rays with real components and every basis among them."""
    return restrict(full, [p for p, r in zip(full.parent_ray_ids, full.rays) if r.is_real], "peres:1")


def find_peres_subsystems(full: RaySystem, group: "SymmetryGroup") -> list[RaySystem]:
    """Distinct images of the real 24-ray system under the symmetry group."""
    real = real_subsystem(full)
    orbit = group.orbit_of_rays(real.parent_ray_ids)
    first = tuple(sorted(real.parent_ray_ids))
    sets = [first] + sorted(s for s in orbit.members if s != first)
    return [restrict(full, s, f"peres:{k}") for k, s in enumerate(sets, 1)]


def resolve(name: str, group: Optional["SymmetryGroup"] = None) -> RaySystem:
    """Build a subsystem from its address (see module docstring)."""
    full = full_system()
    kind, _, arg = name.partition(":")
    try:
        nums = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise SubsystemError(f"bad subsystem address {name!r}") from None
    if kind == "60-105" and not nums:
        return full
    if kind == "40-40" and len(nums) == 1:
        return drop_mub_row(full, nums[0])
    if kind in ("36-36", "36-45") and len(nums) == 2:
        three = covering_subset(nums[0], 3, nums[1])
        build = build_36_36 if kind == "36-36" else build_36_45
        return build(full, nums[0], three)
    if kind in ("48-60", "48-72") and len(nums) == 2:
        four = covering_subset(nums[0], 4, nums[1])
        s60, s72 = build_48_systems(full, nums[0], four)
        return s60 if kind == "48-60" else s72
    if kind == "peres" and len(nums) == 1:
        if nums[0] == 1:
            return real_subsystem(full)
        if group is None:
            from .symmetry import build_group

            group = build_group(full)
        systems = find_peres_subsystems(full, group)
        if not 1 <= nums[0] <= len(systems):
            raise SubsystemError(f"peres index must be 1..{len(systems)}")
        return systems[nums[0] - 1]
    if kind == "dodecagon" and len(nums) == 1:
        return dodecagon_system(full, nums[0])
    raise SubsystemError(f"unknown subsystem address {name!r}")
