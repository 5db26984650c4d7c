"""GF(2) linear algebra on int bitsets."""

from __future__ import annotations

from typing import Sequence


def rank(vectors: Sequence[int]) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for v in vectors:
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                r += 1
                break
    return r


def nullspace(columns: Sequence[int]) -> list[int]:
    """Basis of ``{x : XOR of columns[j] over set bits j of x == 0}``.

    Each returned vector is a bitmask over column indices.
    """
    pivots: dict[int, tuple[int, int]] = {}  # leading bit -> (value, combination)
    null = []
    for j, col in enumerate(columns):
        v, tag = col, 1 << j
        while v:
            h = v.bit_length() - 1
            if h not in pivots:
                pivots[h] = (v, tag)
                break
            pv, pt = pivots[h]
            v ^= pv
            tag ^= pt
        if not v:
            null.append(tag)
    return null


def reduce_rows(rows: Sequence[int]) -> list[int]:
    """Reduced row echelon form (pivot = highest bit), zero rows dropped."""
    out: list[int] = []
    for v in rows:
        for p in out:
            if v & (1 << (p.bit_length() - 1)):
                v ^= p
        if v:
            h = 1 << (v.bit_length() - 1)
            out = [p ^ v if p & h else p for p in out]
            out.append(v)
    return sorted(out, reverse=True)


def in_span(v: int, rows: Sequence[int]) -> bool:
    return rank(list(rows) + [v]) == rank(rows)
