"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module. Bitsets over
bases are passed around as ``uint64`` arrays of shape ``(n, 2)`` (low word,
high word), so at most 128 bases are supported.
"""

from __future__ import annotations

import numpy as np

MAX_BASES = 128
MAX_RAYS = 64

_M64 = (1 << 64) - 1


def to_int(words) -> int:
    return int(words[0]) | (int(words[1]) << 64)


def to_words(mask: int) -> tuple[int, int]:
    return mask & _M64, mask >> 64


def _ray_masks(basis_rays, n_rays):
    masks = [0] * n_rays
    for b, row in enumerate(basis_rays):
        for r in row:
            masks[r] |= 1 << b
    return masks


def _solve(basis_rays, masks, sel, chosen):
    """Depth-first exact-one-per-basis search restricted to ``sel``."""
    rmask = [m & sel for m in masks]

    def dfs(cov):
        rem = sel & ~cov
        if not rem:
            return True
        best = None
        best_cnt = 5
        while rem:
            low = rem & -rem
            b = low.bit_length() - 1
            rem ^= low
            cnt = 0
            for r in basis_rays[b]:
                if not rmask[r] & cov:
                    cnt += 1
            if cnt < best_cnt:
                best, best_cnt = b, cnt
                if cnt <= 1:
                    break
        if best_cnt == 0:
            return False
        for r in basis_rays[best]:
            m = rmask[r]
            if not m & cov:
                chosen.append(r)
                if dfs(cov | m):
                    return True
                chosen.pop()
        return False

    return dfs(0)


def find_coloring(basis_rays, n_rays: int, sel_words):
    """Rays valued 1 in an exact-one-per-basis assignment, or None."""
    basis_rays = [tuple(int(x) for x in row) for row in np.asarray(basis_rays)]
    masks = _ray_masks(basis_rays, n_rays)
    chosen: list[int] = []
    if _solve(basis_rays, masks, to_int(sel_words), chosen):
        return sorted(chosen)
    return None


def critical_flags(basis_rays, n_rays: int, proofs) -> np.ndarray:
    """1 where every one-basis deletion of the proof is colorable."""
    basis_rays = [tuple(int(x) for x in row) for row in np.asarray(basis_rays)]
    masks = _ray_masks(basis_rays, n_rays)
    proofs = np.asarray(proofs, dtype=np.uint64)
    out = np.zeros(len(proofs), dtype=np.uint8)
    for i, words in enumerate(proofs):
        sel = to_int(words)
        ok = True
        rest = sel
        while rest:
            low = rest & -rest
            rest ^= low
            if not _solve(basis_rays, masks, sel ^ low, []):
                ok = False
                break
        out[i] = ok
    return out


def odd_span(gens) -> np.ndarray:
    """All odd-weight vectors of the GF(2) span of ``gens``, in Gray-code order."""
    gens = [to_int(g) for g in np.asarray(gens, dtype=np.uint64).reshape(-1, 2)]
    k = len(gens)
    if not any(bin(g).count("1") & 1 for g in gens):
        return np.zeros((0, 2), dtype=np.uint64)
    out = np.empty((1 << (k - 1), 2), dtype=np.uint64) if k else np.zeros((0, 2), np.uint64)
    v = 0
    n = 0
    for i in range(1, 1 << k):
        v ^= gens[(i & -i).bit_length() - 1]
        if bin(v).count("1") & 1:
            out[n, 0] = v & _M64
            out[n, 1] = v >> 64
            n += 1
    return out[:n]


def weight_histogram(gens) -> np.ndarray:
    """Counts of span vectors by Hamming weight (index = weight)."""
    gens = [to_int(g) for g in np.asarray(gens, dtype=np.uint64).reshape(-1, 2)]
    hist = np.zeros(MAX_BASES + 1, dtype=np.int64)
    hist[0] = 1
    v = 0
    for i in range(1, 1 << len(gens)):
        v ^= gens[(i & -i).bit_length() - 1]
        hist[bin(v).count("1")] += 1
    return hist
