"""Parity proofs: GF(2) kernel enumeration, colorability and criticality.

A set of bases is a parity proof when it has odd size and every ray occurs in
an even number of its bases. Writing a basis subset as an indicator vector,
the even-multiplicity condition is membership in the kernel of the incidence
map, so the parity proofs of a system are exactly the odd-weight vectors of
that kernel.

Basis subsets are handled as int bitmasks (bit ``j`` = basis ``j+1``) and as
sorted tuples of 1-based basis ids at the API surface.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import gf2, kernels
from .incidence import RaySystem

DEFAULT_CAP = 26


class CapExceeded(RuntimeError):
    def __init__(self, dimension: int, cap: int):
        super().__init__(
            f"kernel dimension {dimension} exceeds the enumeration cap {cap}; "
            "search a subsystem instead"
        )
        self.dimension = dimension
        self.cap = cap


class NotAParityProof(ValueError):
    pass


def mask_of(basis_ids: Iterable[int]) -> int:
    m = 0
    for j in basis_ids:
        m |= 1 << (j - 1)
    return m


def ids_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _words(mask: int) -> tuple[int, int]:
    return mask & ((1 << 64) - 1), mask >> 64


def _masks_to_words(masks: Sequence[int]) -> np.ndarray:
    return np.array([_words(m) for m in masks], dtype=np.uint64).reshape(-1, 2)


def _words_to_mask(row) -> int:
    return int(row[0]) | (int(row[1]) << 64)


@lru_cache(maxsize=64)
def basis_ray_array(system: RaySystem) -> np.ndarray:
    """``(n_bases, 4)`` int32 array of 0-based ray indices."""
    return np.array([[r - 1 for r in b.ray_ids] for b in system.bases], dtype=np.int32).reshape(-1, 4)


@dataclass(frozen=True)
class ProofProfile:
    n_rays: int
    n_bases: int
    # (number of rays, multiplicity), highest multiplicity last in the printed form
    expanded: tuple[tuple[int, int], ...]

    @property
    def brief(self) -> str:
        return f"{self.n_rays}-{self.n_bases}"

    @property
    def symbol(self) -> str:
        left = " ".join(f"{n}_{m}" for n, m in self.expanded)
        return f"{left}-{self.n_bases}_4"

    def __str__(self) -> str:
        return self.symbol

    @classmethod
    def parse(cls, text: str) -> "ProofProfile":
        """Inverse of :attr:`symbol`, e.g. ``"30_2 10_4-25_4"``."""
        left, right = text.rsplit("-", 1)
        nb = int(right.split("_")[0])
        exp = tuple(
            (int(n), int(m)) for n, m in (tok.split("_") for tok in left.split())
        )
        return cls(sum(n for n, _ in exp), nb, tuple(sorted(exp, key=lambda x: x[1])))


def profile_of_counts(counts: Iterable[int], n_bases: int) -> ProofProfile:
    hist = Counter(c for c in counts if c)
    exp = tuple((hist[m], m) for m in sorted(hist))
    return ProofProfile(sum(hist.values()), n_bases, exp)


@dataclass(frozen=True)
class ParityProof:
    system_label: str
    basis_ids: tuple[int, ...]
    multiplicities: tuple[tuple[int, int], ...]  # (ray id, count), count > 0

    @property
    def n_bases(self) -> int:
        return len(self.basis_ids)

    @property
    def mask(self) -> int:
        return mask_of(self.basis_ids)

    @property
    def profile(self) -> ProofProfile:
        return profile_of_counts((c for _, c in self.multiplicities), self.n_bases)

    def rays_with_multiplicity(self, m: int) -> tuple[int, ...]:
        return tuple(r for r, c in self.multiplicities if c == m)


def multiplicities(system: RaySystem, basis_ids: Iterable[int]) -> dict[int, int]:
    cnt: Counter = Counter()
    for j in basis_ids:
        cnt.update(system.basis(j).ray_ids)
    return dict(sorted(cnt.items()))


def _check_ids(system: RaySystem, basis_ids: Iterable[int]) -> tuple[int, ...]:
    ids = tuple(sorted(set(basis_ids)))
    for j in ids:
        if not 1 <= j <= system.n_bases:
            raise KeyError(f"basis id {j} out of range for {system.label}")
    return ids


def is_parity_proof(system: RaySystem, basis_ids: Iterable[int]) -> bool:
    ids = _check_ids(system, basis_ids)
    return len(ids) % 2 == 1 and all(c % 2 == 0 for c in multiplicities(system, ids).values())


def make_proof(system: RaySystem, basis_ids: Iterable[int]) -> ParityProof:
    ids = _check_ids(system, basis_ids)
    mult = multiplicities(system, ids)
    if len(ids) % 2 == 0 or any(c % 2 for c in mult.values()):
        raise NotAParityProof(f"{ids} is not a parity proof in {system.label}")
    return ParityProof(system.label, ids, tuple(mult.items()))


def profile(system: RaySystem, proof) -> ProofProfile:
    ids = proof.basis_ids if isinstance(proof, ParityProof) else _check_ids(system, proof)
    return profile_of_counts(multiplicities(system, ids).values(), len(ids))


# kernel ---------------------------------------------------------------------


@dataclass(frozen=True)
class KernelBasis:
    n_bases: int
    vectors: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def kernel_basis(system_or_matrix) -> KernelBasis:
    m = system_or_matrix.matrix if isinstance(system_or_matrix, RaySystem) else system_or_matrix
    return KernelBasis(m.n_bases, tuple(gf2.nullspace(m.columns)))


def odd_kernel_masks(system: RaySystem, kernel: Optional[KernelBasis] = None, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Every odd-weight kernel vector as a ``(N, 2)`` uint64 word array (unordered)."""
    kernel = kernel or kernel_basis(system)
    if kernel.dimension > cap:
        raise CapExceeded(kernel.dimension, cap)
    if system.n_bases > kernels.MAX_BASES:
        raise ValueError("too many bases for the bitset kernels")
    return kernels.odd_span(_masks_to_words(kernel.vectors))


def _graded_order(words: np.ndarray) -> list[tuple[int, ...]]:
    ids = [ids_of(_words_to_mask(w)) for w in words]
    ids.sort(key=lambda t: (len(t), t))
    return ids


def enumerate_parity_proofs(
    system: RaySystem, kernel: Optional[KernelBasis] = None, cap: int = DEFAULT_CAP
) -> Iterator[ParityProof]:
    """All parity proofs, ordered by size then lexicographically by basis ids."""
    words = odd_kernel_masks(system, kernel, cap)
    for ids in _graded_order(words):
        yield ParityProof(system.label, ids, tuple(multiplicities(system, ids).items()))


# colorability -----------------------------------------------------------------


def find_coloring(system: RaySystem, basis_ids: Iterable[int]) -> Optional[dict[int, int]]:
    """A 0/1 ray assignment with exactly one 1 in each listed basis, or None.

    Only rays of the listed bases appear in the returned mapping.
    """
    ids = _check_ids(system, basis_ids)
    if not ids:
        return {}
    chosen = kernels.find_coloring(basis_ray_array(system), system.n_rays, _words(mask_of(ids)))
    if chosen is None:
        return None
    ones = {r + 1 for r in chosen}
    rays = sorted({r for j in ids for r in system.basis(j).ray_ids})
    return {r: int(r in ones) for r in rays}


def is_colorable(system: RaySystem, basis_ids: Iterable[int]) -> bool:
    return find_coloring(system, basis_ids) is not None


def is_basis_critical(system: RaySystem, proof) -> bool:
    """Every single-basis deletion is colorable."""
    ids = proof.basis_ids if isinstance(proof, ParityProof) else _check_ids(system, proof)
    return bool(critical_flags(system, [mask_of(ids)])[0])


def critical_flags(system: RaySystem, masks) -> np.ndarray:
    """Vectorised criticality over many basis-subset masks (ints or word rows)."""
    if isinstance(masks, np.ndarray):
        words = masks
    else:
        words = _masks_to_words(list(masks))
    br = basis_ray_array(system)
    words = np.ascontiguousarray(words, dtype=np.uint64).reshape(-1, 2)
    n_workers = kernels.threads() if kernels.BACKEND == "cython" else 1
    if n_workers == 1 or len(words) < 1024:
        return kernels.critical_flags(br, system.n_rays, words).astype(bool)
    # the compiled kernel releases the GIL, so threads run in parallel
    chunks = np.array_split(words, n_workers)
    with ThreadPoolExecutor(n_workers) as pool:
        parts = pool.map(lambda w: kernels.critical_flags(br, system.n_rays, w), chunks)
        return np.concatenate(list(parts)).astype(bool)


def complement(system: RaySystem, proof: ParityProof) -> ParityProof:
    """Basis complement; a parity proof whenever the system has an even basis count.

    Criticality is not inherited and has to be rechecked.
    """
    if system.n_bases % 2:
        raise ValueError(f"{system.label} has an odd number of bases")
    full = set(range(1, system.n_bases + 1))
    return make_proof(system, full - set(proof.basis_ids))


def reduce_to_critical(system: RaySystem, basis_ids: Iterable[int]) -> tuple[int, ...]:
    """Greedily shed bases while the set stays uncolorable.

    One pass suffices: a set that became colorable stays colorable under
    further deletions.
    """
    ids = list(_check_ids(system, basis_ids))
    if is_colorable(system, ids):
        raise ValueError("input basis set is colorable")
    for j in list(ids):
        trial = [x for x in ids if x != j]
        if not is_colorable(system, trial):
            ids = trial
    return tuple(ids)


# censuses -------------------------------------------------------------------


@dataclass
class Census:
    system_label: str
    total: int
    by_symbol: Counter
    critical_by_symbol: Counter
    words: np.ndarray
    critical: np.ndarray

    def brief_counts(self, critical_only: bool = True) -> Counter:
        src = self.critical_by_symbol if critical_only else self.by_symbol
        out: Counter = Counter()
        for sym, n in src.items():
            out[ProofProfile.parse(sym).brief] += n
        return out


def census(system: RaySystem, cap: int = DEFAULT_CAP) -> Census:
    words = odd_kernel_masks(system, cap=cap)
    crit = critical_flags(system, words)
    br = basis_ray_array(system)
    by_symbol: Counter = Counter()
    crit_by: Counter = Counter()
    syms = symbols_for_words(words, br, system.n_rays)
    for s, c in zip(syms, crit):
        by_symbol[s] += 1
        if c:
            crit_by[s] += 1
    return Census(system.label, len(words), by_symbol, crit_by, words, crit)


def symbols_for_words(words: np.ndarray, basis_rays: np.ndarray, n_rays: int) -> list[str]:
    """Expanded symbols of many basis-subset words at once."""
    counts, weights = multiplicity_matrix(words, basis_rays, n_rays)
    out = []
    for row, b in zip(counts, weights):
        out.append(profile_of_counts(row.tolist(), int(b)).symbol)
    return out


def multiplicity_matrix(words: np.ndarray, basis_rays: np.ndarray, n_rays: int):
    """Per-ray multiplicities ``(N, n_rays)`` and subset sizes ``(N,)``."""
    nb = len(basis_rays)
    ind = unpack(words, nb)
    inc = np.zeros((nb, n_rays), dtype=np.int32)
    for j, row in enumerate(basis_rays):
        inc[j, row] = 1
    counts = ind.astype(np.int32) @ inc
    return counts, ind.sum(axis=1)


def unpack(words: np.ndarray, n_bases: int) -> np.ndarray:
    """``(N, 2)`` uint64 words to an ``(N, n_bases)`` 0/1 uint8 matrix."""
    words = np.ascontiguousarray(words, dtype=np.uint64).reshape(-1, 2)
    as_bytes = words.view(np.uint8).reshape(len(words), 16)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
    return bits[:, :n_bases]


def pack(bits: np.ndarray) -> np.ndarray:
    """Inverse of :func:`unpack`."""
    n = bits.shape[0]
    full = np.zeros((n, 128), dtype=np.uint8)
    full[:, : bits.shape[1]] = bits
    return np.packbits(full, axis=1, bitorder="little").view(np.uint64).reshape(n, 2)


def census_36_36(system: RaySystem) -> dict[str, int]:
    """Critical parity proofs per brief symbol."""
    return dict(sorted(census(system).brief_counts().items(), key=_brief_key))


def _brief_key(item):
    r, b = item[0].split("-")
    return int(b), int(r)


def classify_isomers(proofs: Iterable[ParityProof]) -> dict[str, dict[str, list[ParityProof]]]:
    """Group by brief symbol, then by expanded symbol."""
    out: dict[str, dict[str, list[ParityProof]]] = defaultdict(lambda: defaultdict(list))
    for p in proofs:
        prof = p.profile
        out[prof.brief][prof.symbol].append(p)
    return {k: dict(v) for k, v in out.items()}


def isomer_groups(proofs: Iterable[ParityProof]) -> dict[str, list[str]]:
    """Brief symbols that carry more than one expanded symbol."""
    return {
        b: sorted(d) for b, d in classify_isomers(proofs).items() if len(d) > 1
    }
