import numpy as np
from hypothesis import given, settings, strategies as st

from ksparity.parity import ProofProfile, is_basis_critical, is_parity_proof
from ksparity.profiles import TARGETS, search_profiles, systematic_form, target_symbols

import oracles
import reference_data as ref


def test_targets_match_reference_lists():
    assert TARGETS == ref.PROFILE_LISTS
    syms = target_symbols()
    assert len(syms) == 26
    for s in syms:
        p = ProofProfile.parse(s)
        assert sum(n * m for n, m in p.expanded) == 4 * p.n_bases


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_systematic_form(seed):
    rng = np.random.default_rng(seed)
    gens = rng.integers(0, 2, size=(6, 12)).astype(np.uint8)
    cols = rng.permutation(12)
    rows, piv = systematic_form(gens, cols)
    r = oracles.rank_gf2(gens)
    assert len(rows) == len(piv) == r
    # same row space
    assert oracles.rank_gf2(np.vstack([gens, rows])) == r
    # identity on the pivot columns
    assert np.array_equal(rows[:, piv], np.eye(r, dtype=np.uint8))


def test_reference_witness_for_four_sixes(full):
    ids = [full.basis_id(q) for q in ref.PROOF_47_29]
    assert is_parity_proof(full, ids)
    assert is_basis_critical(full, ids)
    bases = list(ref.PROOF_47_29)
    assert oracles.multiplicity_symbol(bases) == "40_2 3_4 4_6-29_4"


def test_short_search_finds_easy_symbols(full):
    want = ["35_2 1_6-19_4", "36_2 11_4-29_4"]
    rep = search_profiles(want, seed=1, budget=120)
    assert not rep.missing(want)
    for sym, hit in rep.found.items():
        bases = [full.basis(j).ray_ids for j in hit.proof.basis_ids]
        assert oracles.multiplicity_symbol(bases) == sym
        assert oracles.critical(bases)
