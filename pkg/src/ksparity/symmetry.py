"""The 11,520-element unitary symmetry group of the 60-105 system.

Each element sends the reference basis 1 2 3 4 onto a pure basis ``x y z w``
(any of the 15, in any of the 24 orders) as

    U = |x><1| + a |y><2| + b |z><3| + c |w><4|

with ``a, b, c`` in {+-1, +-i} and an even number of imaginary phases. The
group is stored as permutations of ray ids and basis ids; matrices are only
built during construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Optional, Sequence

import numpy as np

from .incidence import RaySystem
from .rays import Ray
from .scalars import ONE, ZERO, ExactScalar

PHASES = (1, -1, 1j, -1j)
ARRANGEMENTS = tuple(permutations(range(4)))


def _allowed_phase_triples(even_i: bool = True):
    for a, b, c in product(PHASES, repeat=3):
        n_imag = sum(1 for p in (a, b, c) if complex(p).imag)
        if (n_imag % 2 == 0) == even_i:
            yield (a, b, c)


PHASE_TRIPLES = tuple(_allowed_phase_triples())


class SymmetryError(RuntimeError):
    pass


@dataclass(frozen=True)
class UnitarySpec:
    target_basis: int  # pure basis id 1..15
    arrangement: tuple[int, int, int, int]  # arrangement[k]: which target ray receives |k+1>
    phases: tuple[complex, complex, complex]

    def __post_init__(self):
        if sorted(self.arrangement) != [0, 1, 2, 3]:
            raise ValueError("arrangement must be a permutation of 0..3")
        if any(p not in PHASES for p in self.phases):
            raise ValueError("phases must be +-1 or +-i")

    @property
    def even_phases(self) -> bool:
        return sum(1 for p in self.phases if complex(p).imag) % 2 == 0

    def to_json(self) -> dict:
        tok = {1: "1", -1: "-1", 1j: "i", -1j: "-i"}
        return {
            "target_basis": self.target_basis,
            "arrangement": list(self.arrangement),
            "phases": [tok[complex(p)] for p in self.phases],
        }


def _target_columns(full: RaySystem, spec: UnitarySpec) -> list[Ray]:
    b = full.basis(spec.target_basis)
    if b.kind != "pure":
        raise ValueError("target basis must be pure")
    targets = [full.ray(r) for r in b.ray_ids]
    return [targets[spec.arrangement[k]] for k in range(4)]


def _inv_sqrt_norm(n2: int) -> ExactScalar:
    # 1/sqrt(n2) for n2 in {1, 2, 4}
    return {1: ONE, 2: ExactScalar(br=Fraction(1, 2)), 4: ExactScalar(Fraction(1, 2))}[n2]


def exact_unitary(full: RaySystem, spec: UnitarySpec) -> list[list[ExactScalar]]:
    """The normalized unitary as a 4x4 matrix over Q(i, sqrt2)."""
    cols = _target_columns(full, spec)
    ph = (1,) + tuple(spec.phases)
    mat = [[ZERO] * 4 for _ in range(4)]
    for k, ray in enumerate(cols):
        scale = _inv_sqrt_norm(ray.norm2) * ExactScalar.of(complex(ph[k]))
        for i in range(4):
            mat[i][k] = ExactScalar.of(ray.components[i]) * scale
    return mat


def is_unitary(mat: Sequence[Sequence[ExactScalar]]) -> bool:
    for i in range(4):
        for j in range(4):
            s = ZERO
            for k in range(4):
                s = s + mat[k][i].conjugate() * mat[k][j]
            if s != (ONE if i == j else ZERO):
                return False
    return True


def _integer_matrix(full: RaySystem, spec: UnitarySpec) -> np.ndarray:
    # all target rays share one norm, so U is this matrix times a scalar and
    # acts identically on rays
    cols = _target_columns(full, spec)
    ph = (1,) + tuple(spec.phases)
    return np.array([[cols[k].components[i] * ph[k] for k in range(4)] for i in range(4)], dtype=complex)


_CODE = {0: 0, 1: 1, -1: 2, 1j: 3, -1j: 4}


def _ray_codes(full: RaySystem) -> np.ndarray:
    table = np.full(5 ** 4, -1, dtype=np.int64)
    for idx, r in enumerate(full.rays):
        key = sum(_CODE[c] * 5 ** k for k, c in enumerate(r.components))
        table[key] = idx
    return table


def _image_ids(mats: np.ndarray, full: RaySystem) -> np.ndarray:
    """Ray-index images ``(G, n)`` of all rays under each matrix; -1 if escaped."""
    rays = np.array([r.components for r in full.rays], dtype=complex)  # (n, 4)
    img = np.einsum("gij,nj->gni", mats, rays)  # exact: small Gaussian integers
    nz = img != 0
    lead_idx = np.argmax(nz, axis=2)
    lead = np.take_along_axis(img, lead_idx[..., None], axis=2)
    n2 = (lead * lead.conj()).real
    scaled = img * lead.conj()
    re = np.rint(scaled.real / n2)
    im = np.rint(scaled.imag / n2)
    exact = (re * n2 == scaled.real) & (im * n2 == scaled.imag)
    unit = (np.abs(re) + np.abs(im) <= 1)
    code = np.where(re == 1, 1, np.where(re == -1, 2, np.where(im == 1, 3, np.where(im == -1, 4, 0))))
    key = (code * (5 ** np.arange(4))).sum(axis=2)
    ids = _ray_codes(full)[key]
    ok = exact.all(axis=2) & unit.all(axis=2)
    return np.where(ok, ids, -1)


def spec_images(full: RaySystem, spec: UnitarySpec) -> list[Optional[int]]:
    """Ray id of each ray's image under ``spec`` (None if it leaves the system)."""
    ids = _image_ids(_integer_matrix(full, spec)[None], full)[0]
    return [int(i) + 1 if i >= 0 else None for i in ids]


@dataclass(frozen=True)
class SymmetryElement:
    ray_permutation: tuple[int, ...]  # 1-based: image of ray r is ray_permutation[r-1]
    basis_permutation: tuple[int, ...]
    spec: Optional[UnitarySpec] = None
    conjugate: bool = False  # complex conjugation applied before the unitary


@dataclass(frozen=True)
class Orbit:
    members: tuple[tuple[int, ...], ...]
    stabilizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class GroupReport:
    order: int
    distinct: bool
    has_identity: bool
    inverses: bool
    closed: bool
    preserves_bases: bool
    preserves_kinds: bool
    generators: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(
            (self.distinct, self.has_identity, self.inverses, self.closed, self.preserves_bases, self.preserves_kinds)
        )


class SymmetryGroup:
    """Ray and basis permutations (0-based arrays) with their originating specs."""

    def __init__(
        self,
        full: RaySystem,
        ray_perms: np.ndarray,
        basis_perms: np.ndarray,
        specs: list[UnitarySpec],
        antiunitary: bool = False,
    ):
        self.full = full
        self.ray_perms = ray_perms
        self.basis_perms = basis_perms
        self.specs = specs
        self.antiunitary = antiunitary
        self._index = {row.tobytes(): i for i, row in enumerate(ray_perms)}

    def __len__(self) -> int:
        return len(self.ray_perms)

    def __getitem__(self, i: int) -> SymmetryElement:
        return SymmetryElement(
            tuple(int(x) + 1 for x in self.ray_perms[i]),
            tuple(int(x) + 1 for x in self.basis_perms[i]),
            self.specs[i % len(self.specs)] if self.specs else None,
            i >= len(self.specs),
        )

    def index_of(self, ray_perm: np.ndarray) -> Optional[int]:
        return self._index.get(np.asarray(ray_perm, dtype=self.ray_perms.dtype).tobytes())

    @property
    def identity_index(self) -> Optional[int]:
        return self.index_of(np.arange(self.full.n_rays))

    def compose(self, i: int, j: int) -> np.ndarray:
        """Ray permutation of ``g_i after g_j``."""
        return self.ray_perms[i][self.ray_perms[j]]

    def _orbit(self, perms: np.ndarray, ids: Iterable[int]) -> Orbit:
        idx = np.array(sorted(set(ids)), dtype=np.int64) - 1
        if len(idx) and (idx.min() < 0 or idx.max() >= perms.shape[1]):
            raise KeyError("object references ids outside the system")
        images = np.sort(perms[:, idx], axis=1)
        uniq = np.unique(images, axis=0)
        stab = int((images == idx[None, :]).all(axis=1).sum())
        members = tuple(tuple(int(x) + 1 for x in row) for row in uniq)
        return Orbit(members, stab)

    def orbit_of_rays(self, ray_ids: Iterable[int]) -> Orbit:
        return self._orbit(self.ray_perms, ray_ids)

    def orbit_of_bases(self, basis_ids: Iterable[int]) -> Orbit:
        return self._orbit(self.basis_perms, basis_ids)

    def canonical_bases(self, basis_ids: Iterable[int]) -> tuple[int, ...]:
        """Lexicographically least image; equal exactly for objects in one orbit."""
        return self.orbit_of_bases(basis_ids).members[0]

    def orbit(self, obj) -> Orbit:
        """Orbit of a proof (basis ids over the full system) or a subsystem (ray set)."""
        from .parity import ParityProof

        if isinstance(obj, ParityProof):
            if obj.system_label != self.full.label:
                raise KeyError("map the proof to 60-105 basis ids first")
            return self.orbit_of_bases(obj.basis_ids)
        if isinstance(obj, RaySystem):
            return self.orbit_of_rays(obj.parent_ray_ids)
        raise TypeError(f"cannot take the orbit of {type(obj).__name__}")


def build_group(full: RaySystem, antiunitary: bool = False) -> SymmetryGroup:
    """The unitary group; with ``antiunitary`` also every unitary after conjugation."""
    group = _build_group(full)
    return _with_conjugation(group) if antiunitary else group


def conjugation_permutation(full: RaySystem) -> np.ndarray:
    """0-based ray permutation induced by complex conjugation of components."""
    from .rays import canonicalize

    idx = {r.components: i for i, r in enumerate(full.rays)}
    out = [idx[canonicalize(tuple(c.conjugate() for c in r.components)).components] for r in full.rays]
    return np.array(out, dtype=np.int16)


@lru_cache(maxsize=4)
def _with_conjugation(group: SymmetryGroup) -> SymmetryGroup:
    conj = conjugation_permutation(group.full)
    anti = group.ray_perms[:, conj]  # r -> g(conj(r))
    ray_perms = np.concatenate([group.ray_perms, anti])
    basis_perms = induced_basis_permutations(group.full, ray_perms)
    return SymmetryGroup(group.full, ray_perms, basis_perms, group.specs, antiunitary=True)


@lru_cache(maxsize=4)
def _build_group(full: RaySystem) -> SymmetryGroup:
    pure = [j for j, b in enumerate(full.bases, 1) if b.kind == "pure"]
    ref = full.basis(1)
    if [full.ray(r).components for r in ref.ray_ids] != [tuple(complex(int(i == k)) for i in range(4)) for k in range(4)]:
        raise SymmetryError("basis 1 must be the computational basis")

    # exact unitarity once per (target basis, phases); arrangement only permutes columns
    for j in pure:
        for ph in PHASE_TRIPLES:
            if not is_unitary(exact_unitary(full, UnitarySpec(j, (0, 1, 2, 3), ph))):
                raise SymmetryError(f"spec on basis {j} with phases {ph} is not unitary")

    specs = [UnitarySpec(j, arr, ph) for j in pure for arr in ARRANGEMENTS for ph in PHASE_TRIPLES]
    mats = np.stack([_integer_matrix(full, s) for s in specs])
    ray_perms = _image_ids(mats, full)
    bad = np.argwhere(ray_perms < 0)
    if len(bad):
        g, r = bad[0]
        raise SymmetryError(f"spec {specs[g]} sends ray {r + 1} outside the system")
    ray_perms = ray_perms.astype(np.int16)
    basis_perms = induced_basis_permutations(full, ray_perms)
    return SymmetryGroup(full, ray_perms, basis_perms, specs)


def induced_basis_permutations(full: RaySystem, ray_perms: np.ndarray) -> np.ndarray:
    n = full.n_rays
    b_rays = np.array([[r - 1 for r in b.ray_ids] for b in full.bases], dtype=np.int64)
    keys = _basis_keys(np.sort(b_rays, axis=1), n)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    img = np.sort(ray_perms.astype(np.int64)[:, b_rays], axis=2)  # (G, B, 4)
    ik = _basis_keys(img, n)
    pos = np.searchsorted(sorted_keys, ik)
    pos = np.clip(pos, 0, len(keys) - 1)
    if not (sorted_keys[pos] == ik).all():
        raise SymmetryError("a symmetry element does not preserve the basis set")
    return order[pos].astype(np.int16)


def _basis_keys(arr: np.ndarray, n: int) -> np.ndarray:
    return ((arr[..., 0] * n + arr[..., 1]) * n + arr[..., 2]) * n + arr[..., 3]


def verify_group_axioms(group: SymmetryGroup, generators: Sequence[int] = ()) -> GroupReport:
    """Check identity, inverses and closure on the permutation representation.

    Closure: the subgroup generated by a few elements is computed by breadth
    first search; it equals the whole set exactly when the set is a group.
    """
    perms = group.ray_perms
    n = perms.shape[1]
    distinct = len(group._index) == len(perms)
    ident = group.identity_index is not None
    inv_ok = True
    for row in perms:
        inv = np.empty_like(row)
        inv[row] = np.arange(n, dtype=row.dtype)
        if group.index_of(inv) is None:
            inv_ok = False
            break

    gens = list(generators) or _pick_generators(group)
    seen = {perms[group.identity_index].tobytes()} if ident else set()
    frontier = [perms[group.identity_index]] if ident else []
    closed = True
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = perms[g][p]
                key = q.tobytes()
                if key in seen:
                    continue
                if key not in group._index:
                    closed = False
                    break
                seen.add(key)
                nxt.append(q)
        frontier = nxt
    closed = closed and len(seen) == len(perms)

    kinds = np.array([b.kind == "pure" for b in group.full.bases])
    kinds_ok = bool((kinds[group.basis_perms] == kinds[None, :]).all())
    return GroupReport(len(perms), distinct, ident, inv_ok, closed, True, kinds_ok, gens)


def _pick_generators(group: SymmetryGroup, seed: int = 0) -> list[int]:
    rng = np.random.default_rng(seed)
    return sorted(int(x) for x in rng.choice(len(group), size=4, replace=False))


def apply_to_rays(group: SymmetryGroup, i: int, ray_ids: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(int(group.ray_perms[i][r - 1]) + 1 for r in ray_ids))


def apply_to_bases(group: SymmetryGroup, i: int, basis_ids: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(int(group.basis_perms[i][j - 1]) + 1 for j in basis_ids))


def hypergraph_automorphism_count(full: RaySystem) -> int:
    """Order of the group of ray permutations preserving the basis set.

    Informational. Bases are exactly the 4-cliques of the orthogonality graph
    in a saturated system, so this is the graph's automorphism group order,
    found as a product of orbit sizes along a stabilizer chain. Antiunitary
    maps (and any others) are counted too.
    """
    n = full.n_rays
    adj = list(full.orthogonality)
    order = _bfs_order(full)
    every = (1 << n) - 1

    def extends(image: list[int], k: int, used: int) -> bool:
        if k == n:
            return True
        x = order[k]
        cand = every & ~used
        for u in order[:k]:
            cand &= adj[image[u]] if adj[x] >> u & 1 else ~adj[image[u]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[x] = low.bit_length() - 1
            if extends(image, k + 1, used | low):
                return True
        return False

    total = 1
    fixed_used = 0
    for k, x in enumerate(order):
        orbit = 0
        for y in range(n):
            if fixed_used >> y & 1:
                continue
            image = [-1] * n
            for u in order[:k]:
                image[u] = u
            image[x] = y
            ok = all(
                (adj[x] >> u & 1) == (adj[y] >> u & 1) for u in order[:k]
            ) and extends(image, k + 1, fixed_used | 1 << y)
            orbit += ok
        total *= orbit
        fixed_used |= 1 << x
    return total


def _bfs_order(full: RaySystem) -> list[int]:
    """0-based rays, each new one orthogonal to an earlier one where possible."""
    n = full.n_rays
    adj = full.orthogonality
    seen = [0]
    for r in seen:
        for s in range(n):
            if adj[r] >> s & 1 and s not in seen:
                seen.append(s)
    return seen + [r for r in range(n) if r not in seen]
