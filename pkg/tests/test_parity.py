import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ksparity.incidence import drop_bases
from ksparity.parity import (
    CapExceeded,
    NotAParityProof,
    ProofProfile,
    complement,
    enumerate_parity_proofs,
    find_coloring,
    ids_of,
    is_basis_critical,
    is_colorable,
    is_parity_proof,
    isomer_groups,
    kernel_basis,
    make_proof,
    mask_of,
    pack,
    reduce_to_critical,
    unpack,
)
from ksparity.subsystems import dodecagon_system, resolve

import oracles
import reference_data as ref
from conftest import ids_for


def _incidence(system):
    m = np.zeros((system.n_rays, system.n_bases), dtype=np.uint8)
    for j, b in enumerate(system.bases):
        m[[r - 1 for r in b.ray_ids], j] = 1
    return m


@pytest.mark.parametrize(
    "name, dim",
    [("40-40:6", 16), ("40-40:1", 16), ("peres:1", 10), ("36-36:1,1", 14), ("48-72:1,1", 41), ("60-105", 65)],
)
def test_kernel_dimension(name, dim):
    s = resolve(name)
    assert kernel_basis(s).dimension == dim
    assert s.n_bases - oracles.rank_gf2(_incidence(s)) == dim


@given(st.lists(st.integers(1, 120), max_size=20))
def test_mask_roundtrip(ids):
    assert ids_of(mask_of(ids)) == tuple(sorted(set(ids)))


def test_pack_unpack_roundtrip():
    rng = np.random.default_rng(0)
    bits = rng.integers(0, 2, size=(50, 105)).astype(np.uint8)
    assert np.array_equal(unpack(pack(bits), 105), bits)


@pytest.mark.parametrize("text", ["30_2-15_4", "30_2 10_4-25_4", "40_2 3_4 4_6-29_4", "35_2 1_6-19_4"])
def test_symbol_roundtrip(text):
    p = ProofProfile.parse(text)
    assert p.symbol == text
    # sum of multiplicities equals 4 per basis
    assert sum(n * m for n, m in p.expanded) == 4 * p.n_bases


def test_make_proof_rejects_even_and_unbalanced(sys40):
    with pytest.raises(NotAParityProof):
        make_proof(sys40, [1, 2])
    with pytest.raises(NotAParityProof):
        make_proof(sys40, [1])
    with pytest.raises(KeyError):
        make_proof(sys40, [0, 41])


def _subsystems_small():
    sys40 = resolve("40-40:6")
    sys36 = resolve("36-36:1,1")
    out = []
    for d in (1, 5, 9, 13):
        out.append(dodecagon_system(resolve("60-105"), d))
    keep = ids_for(sys40, ref.PROOF_32_17) + [3, 4, 9]
    out.append(drop_bases(sys40, set(range(1, 41)) - set(keep), "40-40:6/20"))
    keep = ids_for(sys40, ref.PROOF_30_15)
    out.append(drop_bases(sys40, set(range(1, 41)) - set(keep), "40-40:6/15"))
    keep = ids_for(sys36, ref.PROOF_26_15) + [2, 4, 6, 8, 10]
    out.append(drop_bases(sys36, set(range(1, 37)) - set(keep), "36-36:1,1/20"))
    return out


@pytest.mark.parametrize("system", _subsystems_small(), ids=lambda s: s.label)
def test_kernel_enumeration_matches_brute_force(system):
    assert system.n_bases <= 20
    kernel = {frozenset(p.basis_ids) for p in enumerate_parity_proofs(system)}
    brute = oracles.parity_subsets([b.ray_ids for b in system.bases])
    assert kernel == brute


def test_enumeration_order_and_profiles(sys40):
    proofs = list(enumerate_parity_proofs(sys40))
    assert len(proofs) == 1 << 15
    sizes = [p.n_bases for p in proofs]
    assert sizes == sorted(sizes)
    for p in proofs[:50] + proofs[-50:]:
        bases = [sys40.basis(j).ray_ids for j in p.basis_ids]
        assert p.profile.symbol == oracles.multiplicity_symbol(bases)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=1, max_size=14, unique=True))
def test_colorability_matches_oracle(ids):
    s = resolve("40-40:6")
    bases = [s.basis(j).ray_ids for j in ids]
    col = find_coloring(s, ids)
    assert (col is not None) == oracles.colorable(bases)
    if col is not None:
        assert all(sum(col[r] for r in b) == 1 for b in bases)


@pytest.mark.parametrize(
    "quads", [ref.PROOF_30_15, ref.PROOF_32_17, ref.PROOF_34_19], ids=["30-15", "32-17", "34-19"]
)
def test_criticality_matches_oracle(sys40, quads):
    ids = ids_for(sys40, quads)
    assert is_basis_critical(sys40, ids) == oracles.critical(list(quads)) is True
    assert not is_colorable(sys40, ids)


def test_non_critical_and_reduction(sys40):
    # the whole system is uncolorable but far from critical
    all_ids = list(range(1, 41))
    assert not is_colorable(sys40, all_ids)
    core = reduce_to_critical(sys40, all_ids)
    bases = [sys40.basis(j).ray_ids for j in core]
    assert oracles.critical(bases)
    with pytest.raises(ValueError):
        reduce_to_critical(sys40, [1, 2])


def test_complement(sys40):
    p = make_proof(sys40, ids_for(sys40, ref.PROOF_30_15))
    c = complement(sys40, p)
    assert c.profile.symbol == "30_2 10_4-25_4"
    assert set(p.basis_ids).isdisjoint(c.basis_ids)
    odd = resolve("36-45:1,1")
    assert odd.n_bases == 45
    with pytest.raises(ValueError):
        complement(odd, p)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        list(enumerate_parity_proofs(resolve("60-105")))


def test_isomers_in_full_system(full):
    a = make_proof(full, [full.basis_id(q) for q in ref.PROOF_47_29])
    assert a.profile.brief == "47-29"
    groups = isomer_groups([a])
    assert groups == {}
