"""Witness constructions and the randomized certificate search."""

import random
from fractions import Fraction

import pytest

from lielap.algebra_core import is_positive_definite, preset, tensor_hash
from lielap.errors import DomainError, WitnessSearchExhausted
from lielap.irreps import label
from lielap.operator import build_DV, eigen_decompose_numeric
from lielap.polycert import char_poly_exact, multiplicity_profile
from lielap.witness import (
    certificate_battery,
    epsilon_separation,
    pairs_mixed_witness,
    pairs_pipeline,
    sample_definite_tensor,
    su2_even_b_witness,
    witness_report_json,
    witness_search,
)


# -- epsilon separation ----------------------------------------------------------


def test_separation_simple_example():
    assert epsilon_separation([1, 2], [10, 20]) == Fraction(1, 20)


def test_separation_no_constraint():
    assert epsilon_separation([0], [1, 2]) == 1


def test_separation_double_mode():
    eps = epsilon_separation([0, 5], [3, 3, 7, 7], mode="double")
    shifted = [a + eps * c for a in (0, 5) for c in (3, 3, 7, 7)]
    assert all(shifted.count(x) == 2 for x in shifted)


def test_separation_validates_inputs():
    with pytest.raises(DomainError):
        epsilon_separation([1, 1], [2, 3])
    with pytest.raises(DomainError):
        epsilon_separation([1], [2, 2], mode="simple")
    with pytest.raises(DomainError):
        epsilon_separation([1], [2, 2, 2], mode="double")
    with pytest.raises(DomainError):
        epsilon_separation([1], [2], mode="triple")


def test_separation_preserves_patterns():
    eps = epsilon_separation([0, 1, 7], [2, 5, 11])
    shifted = [a + eps * c for a in (0, 1, 7) for c in (2, 5, 11)]
    assert len(set(shifted)) == 9


# -- even-spin splitting -----------------------------------------------------------


def test_even_witness_m2():
    w = su2_even_b_witness(2)
    assert w.epsilon == Fraction(1, 2)
    assert w.certificate.verdict
    assert w.even_block_offdiag == (2,)
    assert w.odd_block_offdiag == ()
    op = build_DV(preset("su2"), label((2,)), w.tensor)
    ns = eigen_decompose_numeric(op)
    assert [round(c[0], 6) for c in ns.clusters] == [2.0, 4.0, 6.0]


@pytest.mark.parametrize("m", [4, 6, 8])
def test_even_witness_subdiagonals(m):
    w = su2_even_b_witness(m)
    assert w.even_block_offdiag == tuple(
        (m - l) * (m - l - 1) for l in range(0, m - 1, 2)
    )
    assert w.odd_block_offdiag == tuple(
        (m - l) * (m - l - 1) for l in range(1, m - 1, 2)
    )
    assert w.blocks_disjoint_at_zero
    assert w.certificate.verdict


def test_even_witness_domain():
    with pytest.raises(DomainError):
        su2_even_b_witness(3)
    with pytest.raises(DomainError):
        su2_even_b_witness(0)


def test_even_witness_exhaustion_carries_best():
    with pytest.raises(WitnessSearchExhausted) as exc:
        su2_even_b_witness(4, eps_grid=[Fraction(0)])
    assert exc.value.best is not None


# -- mixed SU(2) x torus -------------------------------------------------------------


def test_mixed_witness_spectrum():
    u2 = preset("u2")
    w = pairs_mixed_witness(u2, label((3,), (2,)), [1])
    assert w.pairing == 2
    assert w.spectrum == (-6, -2, 2, 6)
    assert w.matches_expected and w.certificate.verdict


def test_mixed_witness_multi_torus():
    from lielap.algebra_core import build_group_spec

    spec = build_group_spec(1, 2)
    w = pairs_mixed_witness(spec, label((1,), (1, -1)), [Fraction(1, 2), 0])
    assert w.pairing == Fraction(1, 2)
    assert w.spectrum == (Fraction(-1, 2), Fraction(1, 2))


def test_mixed_witness_rejects_trivial_pairing():
    u2 = preset("u2")
    with pytest.raises(DomainError):
        pairs_mixed_witness(u2, label((1,), (1,)), [0])
    with pytest.raises(DomainError):
        pairs_mixed_witness(preset("su2xsu2"), label((1, 1)), [1])


# -- odd-odd pairs pipeline -----------------------------------------------------------


def test_pipeline_default_epsilon():
    r = pairs_pipeline(1, 3)
    assert r.epsilon == Fraction(1, 6)
    assert r.ok


def test_pipeline_small_pair_details():
    r = pairs_pipeline(1, 1)
    assert r.involution_ok and r.anticommutes_ok and r.commutes_ok
    assert r.h_charpoly_matches and r.h_all_double and r.branch_dims_ok
    assert all(c.verdict for c in r.h_simple_on_branches)
    assert r.b_branches_disjoint.verdict
    assert r.alpha is not None and r.combined_simple.verdict
    # the found tensor really has simple spectrum
    spec = preset("su2xsu2")
    s = r.combined_simple
    assert s.kind == "b"


def test_pipeline_h_spectrum_values():
    r = pairs_pipeline(1, 1, eps=Fraction(1, 2))
    spec = preset("su2xsu2")
    from lielap.algebra_core import square_of_vector

    s_h = square_of_vector([1, 0, 0, Fraction(1, 2), 0, 0])
    p = char_poly_exact(build_DV(spec, label((1, 1)), s_h))
    prof = multiplicity_profile(p.poly)
    assert prof.is_all_double
    ns = eigen_decompose_numeric(build_DV(spec, label((1, 1)), s_h))
    assert [round(c[0], 6) for c in ns.clusters] == [0.25, 2.25]
    assert r.ok


def test_pipeline_domain_checks():
    with pytest.raises(DomainError):
        pairs_pipeline(2, 1)
    with pytest.raises(DomainError):
        pairs_pipeline(1, 3, eps=Fraction(1, 2))  # needs eps < 1/3
    with pytest.raises(DomainError):
        pairs_pipeline(1, 1, alpha_grid=[Fraction(2)])


# -- randomized search ----------------------------------------------------------------


def test_sample_definite_tensor_is_definite():
    rng = random.Random(5)
    for n in (1, 3, 6):
        assert is_positive_definite(sample_definite_tensor(n, rng))


def test_sample_deterministic_under_seed():
    a = sample_definite_tensor(4, random.Random(9))
    b = sample_definite_tensor(4, random.Random(9))
    assert tensor_hash(a) == tensor_hash(b)


def test_witness_search_su2():
    r = witness_search(preset("su2"), 4, trials=4, seed=1)
    assert r.success
    kinds = sorted({c.kind for c in r.certificates})
    assert kinds == ["a", "b", "c"]
    # 5 labels: one b/c each, 10 separation pairs
    assert len(r.certificates) == 15


def test_witness_search_deterministic():
    a = witness_search(preset("so3"), 4, trials=2, seed=3)
    b = witness_search(preset("so3"), 4, trials=2, seed=3)
    assert witness_report_json(a) == witness_report_json(b)


def test_witness_search_exhaustion():
    # zero trials can never succeed; the exception still carries None best
    with pytest.raises(WitnessSearchExhausted):
        witness_search(preset("su2"), 2, trials=0, seed=0)


def test_certificate_battery_round_metric_fails():
    from lielap.algebra_core import identity_tensor
    from lielap.irreps import labels_up_to_level
    from lielap.polycert import char_poly_of

    spec = preset("su2")
    labels = labels_up_to_level(spec, 3)
    tensor = identity_tensor(3)
    polys = [char_poly_of(spec, lab, tensor) for lab in labels]
    certs = certificate_battery(labels, polys)
    assert not all(c.verdict for c in certs)
    # separation between distinct Casimirs still holds
    assert all(c.verdict for c in certs if c.kind == "a")
