"""Desarguesian 10_3 configurations in a 40-40 system and the 30-15 proofs they give."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Literal, Optional, Sequence

from .incidence import RaySystem
from .parity import ParityProof, is_basis_critical, is_parity_proof, make_proof
from .rays import is_dependent_triple, is_unbiased

Kind = Literal["line", "triangle"]


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Line:
    rays: tuple[int, int, int]


@dataclass(frozen=True)
class Triangle:
    rays: tuple[int, int, int]


@dataclass(frozen=True)
class TenThreeConfig:
    kind: Kind
    points: tuple[int, ...]
    blocks: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        pts = set(self.points)
        if len(pts) != 10 or len(self.blocks) != 10:
            raise ConfigError("a 10_3 configuration has 10 points and 10 blocks")
        deg = Counter(r for b in self.blocks for r in b)
        if any(r not in pts for r in deg) or any(deg[p] != 3 for p in pts):
            raise ConfigError("every point must lie on exactly 3 blocks")

    def to_json(self) -> dict:
        return {"kind": self.kind, "points": list(self.points), "blocks": [list(b) for b in self.blocks]}

    def levi_graph(self) -> dict[str, list[str]]:
        """Point/block incidence as an adjacency listing (``p4`` and ``b1`` style keys)."""
        adj: dict[str, list[str]] = {f"p{p}": [] for p in self.points}
        for k, b in enumerate(self.blocks, 1):
            adj[f"b{k}"] = [f"p{p}" for p in b]
            for p in b:
                adj[f"p{p}"].append(f"b{k}")
        return adj


def _check_40(system: RaySystem) -> None:
    if system.n_rays != 40 or system.n_bases != 40:
        raise ConfigError(f"expected a 40-40 system, got {system.label}")


def find_lines(system: RaySystem) -> list[Line]:
    """All linearly dependent ray triples."""
    rays = system.rays
    return [
        Line((a + 1, b + 1, c + 1))
        for a, b, c in combinations(range(system.n_rays), 3)
        if is_dependent_triple(rays[a], rays[b], rays[c])
    ]


def find_triangles(system: RaySystem) -> list[Triangle]:
    """Pairwise unbiased, linearly independent ray triples."""
    rays = system.rays
    n = system.n_rays
    unb = [[j > i and is_unbiased(rays[i], rays[j]) for j in range(n)] for i in range(n)]
    out = []
    for a, b, c in combinations(range(n), 3):
        if unb[a][b] and unb[a][c] and unb[b][c]:
            if not is_dependent_triple(rays[a], rays[b], rays[c]):
                out.append(Triangle((a + 1, b + 1, c + 1)))
    return out


def _third_points(blocks: Sequence[tuple[int, int, int]]) -> dict[tuple[int, int], list[int]]:
    out: dict[tuple[int, int], list[int]] = {}
    for b in blocks:
        for x, y in combinations(b, 2):
            (z,) = set(b) - {x, y}
            out.setdefault((x, y), []).append(z)
            out.setdefault((y, x), []).append(z)
    return out


def desargues_subconfigs(
    blocks: Sequence[tuple[int, int, int]],
    apart: Optional[Callable[[int, int], bool]] = None,
) -> list[tuple[tuple[int, int, int], ...]]:
    """All Desargues configurations formed by the given blocks.

    Two triangles a, b perspective from a centre o: blocks (o, a_k, b_k), and
    for each pair of sides a third point shared by blocks (a_j, a_k, .) and
    (b_j, b_k, .); the three such points must lie on one block. Every point of
    a Desargues configuration is such a centre, so this finds all of them.

    With ``apart``, keep only configurations in which two points satisfy
    ``apart`` exactly when no block joins them.
    """
    block_set = {tuple(sorted(b)) for b in blocks}
    third = _third_points(blocks)
    through: dict[int, list[tuple[int, int]]] = {}
    for b in block_set:
        for o in b:
            through.setdefault(o, []).append(tuple(x for x in b if x != o))
    found: set[frozenset] = set()
    for o, spokes in through.items():
        for trio in _spoke_triples(spokes, apart):
            for flips in ((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)):
                a = [s[f] for s, f in zip(trio, flips)]
                b = [s[1 - f] for s, f in zip(trio, flips)]
                if apart and not all(apart(a[j], b[k]) for j in range(3) for k in range(3) if j != k):
                    continue
                for axis in _axis_points(a, b, third):
                    if len(set(axis)) != 3 or tuple(sorted(axis)) not in block_set:
                        continue
                    cfg = [tuple(sorted((o, a[k], b[k]))) for k in range(3)]
                    for (j, k), z in zip(((0, 1), (0, 2), (1, 2)), axis):
                        cfg.append(tuple(sorted((a[j], a[k], z))))
                        cfg.append(tuple(sorted((b[j], b[k], z))))
                    cfg.append(tuple(sorted(axis)))
                    if len({x for c in cfg for x in c}) != 10 or len(set(cfg)) != 10:
                        continue
                    if apart and not _separated_exactly(cfg, apart):
                        continue
                    found.add(frozenset(cfg))
    return sorted(tuple(sorted(f)) for f in found)


def _spoke_triples(spokes, apart):
    """Triples of blocks through one centre with six distinct other points.

    With ``apart``, two spokes must admit an orientation in which their
    crossed endpoints are apart, which prunes most triples early.
    """
    def compatible(s, t):
        if set(s) & set(t):
            return False
        if apart is None:
            return True
        return (apart(s[0], t[1]) and apart(s[1], t[0])) or (apart(s[0], t[0]) and apart(s[1], t[1]))

    n = len(spokes)
    ok = [[j > i and compatible(spokes[i], spokes[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not ok[i][j]:
                continue
            for k in range(j + 1, n):
                if ok[i][k] and ok[j][k]:
                    yield spokes[i], spokes[j], spokes[k]


def _separated_exactly(cfg, apart) -> bool:
    joined = {frozenset(p) for b in cfg for p in combinations(b, 2)}
    pts = sorted({x for b in cfg for x in b})
    return all(apart(x, y) == (frozenset((x, y)) not in joined) for x, y in combinations(pts, 2))


def _axis_points(a, b, third):
    options = []
    for j, k in ((0, 1), (0, 2), (1, 2)):
        zs = set(third.get((a[j], a[k]), ())) & set(third.get((b[j], b[k]), ()))
        if not zs:
            return []
        options.append(sorted(zs))
    return [(x, y, z) for x in options[0] for y in options[1] for z in options[2]]


_MODEL_POINTS = tuple(combinations(range(5), 2))
_MODEL_BLOCKS = frozenset(
    frozenset(_MODEL_POINTS.index(p) for p in combinations(t, 2)) for t in combinations(range(5), 3)
)


def is_desargues(config: "TenThreeConfig") -> bool:
    """Isomorphism test against pairs and triples of a 5-set."""
    pts = list(config.points)
    blocks = [frozenset(pts.index(x) for x in b) for b in config.blocks]
    blocks_of = [[b for b in blocks if p in b] for p in range(10)]
    image = [-1] * 10
    used = [False] * 10

    def ok_so_far(p: int) -> bool:
        for b in blocks_of[p]:
            mapped = [image[q] for q in b if image[q] >= 0]
            if not any(set(mapped) <= m for m in _MODEL_BLOCKS):
                return False
        return True

    def extend(p: int) -> bool:
        if p == 10:
            return {frozenset(image[q] for q in b) for b in blocks} == _MODEL_BLOCKS
        for y in range(10):
            if not used[y]:
                image[p], used[y] = y, True
                if ok_so_far(p) and extend(p + 1):
                    return True
                image[p], used[y] = -1, False
        return False

    return extend(0)


def find_configs(system: RaySystem, kind: Kind) -> list[TenThreeConfig]:
    """Desargues configurations whose unjoined point pairs are exactly the orthogonal ones."""
    _check_40(system)
    orth = system.orthogonality
    if kind == "line":
        blocks = [x.rays for x in find_lines(system)]
    elif kind == "triangle":
        blocks = [x.rays for x in find_triangles(system)]
    else:
        raise ConfigError(f"unknown configuration kind {kind!r}")
    out = []
    for bl in desargues_subconfigs(blocks, lambda x, y: bool(orth[x - 1] >> (y - 1) & 1)):
        pts = tuple(sorted({p for b in bl for p in b}))
        out.append(TenThreeConfig(kind, pts, bl))
    return out


def construct_30_15(system: RaySystem, config: TenThreeConfig) -> ParityProof:
    """Drop every basis meeting a configuration point; 15 bases should remain."""
    _check_40(system)
    pts = set(config.points)
    keep = [j for j, b in enumerate(system.bases, 1) if not pts & set(b.ray_ids)]
    if len(keep) != 15:
        raise ConfigError(f"{len(keep)} bases survive instead of 15")
    if not is_parity_proof(system, keep):
        raise ConfigError("surviving bases do not form a parity proof")
    return make_proof(system, keep)


def all_constructed(system: RaySystem) -> dict[Kind, list[ParityProof]]:
    return {k: [construct_30_15(system, c) for c in find_configs(system, k)] for k in ("line", "triangle")}


def check_construction(system: RaySystem, proof: ParityProof) -> bool:
    return proof.profile.symbol == "30_2-15_4" and is_basis_critical(system, proof)
