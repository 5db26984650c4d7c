from itertools import combinations

import numpy as np

from ksparity.pauli import (
    IDENTITY,
    PauliObservable,
    bases_unbiased,
    commutes,
    enumerate_observables,
    enumerate_triads,
    mub_partitions,
    triad_eigenbasis,
)
from ksparity.rays import parse_ray

import reference_data as ref


def _member(name: str) -> PauliObservable:
    sign = -1 if name.startswith("-") else 1
    p = PauliObservable.parse(name.lstrip("-"))
    return PauliObservable(p.factor1, p.factor2, sign)


def test_fifteen_observables_and_triads():
    assert len(enumerate_observables()) == 15
    triads = enumerate_triads()
    assert len(triads) == 15
    for t in triads:
        assert np.array_equal(t.signed_product(), IDENTITY)
        assert all(commutes(a, b) for a, b in combinations(t.members, 2))
    # each observable lies in three triads
    for o in enumerate_observables():
        assert sum(o in t.observables() for t in triads) == 3


def test_triads_match_reference_rows():
    for t, names in zip(enumerate_triads(), ref.TRIADS):
        assert t.members == tuple(_member(n) for n in names)


def test_eigenbases_match_reference_rays():
    for k, t in enumerate(enumerate_triads()):
        got = [r for r, _ in triad_eigenbasis(t)]
        want = [parse_ray(s) for s in ref.RAYS_60[4 * k : 4 * k + 4]]
        assert got == want
        for r, sig in triad_eigenbasis(t):
            v = np.array(r.components)
            for m, s in zip(t.members, (sig.s1, sig.s2, sig.s3)):
                assert np.allclose(m.matrix() @ v, s * v)


def test_mub_rows():
    rows = mub_partitions()
    assert tuple(tuple(t + 1 for t in row) for row in rows) == ref.MUB_ROWS
    for a, b in combinations(rows, 2):
        assert len(set(a) & set(b)) == 1
    triads = enumerate_triads()
    for row in rows:
        bases = [[r for r, _ in triad_eigenbasis(triads[t])] for t in row]
        assert all(bases_unbiased(u, v) for u, v in combinations(bases, 2))


def test_parse_rejects_identity():
    import pytest

    with pytest.raises(ValueError):
        PauliObservable("I", "I")
