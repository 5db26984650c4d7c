"""The compiled kernels and the pure-Python fallback must agree."""

import numpy as np
import pytest

from ksparity import _pykernels, kernels
from ksparity.parity import basis_ray_array, kernel_basis, _masks_to_words

cy = pytest.importorskip("ksparity._ckernels")


def _sorted(words):
    return sorted(map(tuple, np.asarray(words).tolist()))


def test_odd_span_agrees(sys40):
    gens = _masks_to_words(kernel_basis(sys40).vectors)
    a, b = cy.odd_span(gens), _pykernels.odd_span(gens)
    assert len(a) == 1 << 15
    assert _sorted(a) == _sorted(b)


def test_weight_histogram_agrees(sys36):
    gens = _masks_to_words(kernel_basis(sys36).vectors)
    assert np.array_equal(cy.weight_histogram(gens), _pykernels.weight_histogram(gens))


def test_criticality_and_coloring_agree(sys40):
    br = basis_ray_array(sys40)
    words = cy.odd_span(_masks_to_words(kernel_basis(sys40).vectors))[:300]
    assert np.array_equal(
        cy.critical_flags(br, sys40.n_rays, words).astype(bool),
        _pykernels.critical_flags(br, sys40.n_rays, words).astype(bool),
    )
    rng = np.random.default_rng(1)
    for _ in range(50):
        sel = int(rng.integers(1, 1 << 40))
        w = (sel & ((1 << 64) - 1), 0)
        a = cy.find_coloring(br, sys40.n_rays, w)
        b = _pykernels.find_coloring(br, sys40.n_rays, w)
        assert (a is None) == (b is None)


def test_threads_env(monkeypatch):
    monkeypatch.setenv("KS_THREADS", "3")
    assert kernels.threads() == 3
    monkeypatch.setenv("KS_THREADS", "many")
    with pytest.raises(ValueError):
        kernels.threads()
    monkeypatch.delenv("KS_THREADS")
    assert kernels.threads() >= 1
