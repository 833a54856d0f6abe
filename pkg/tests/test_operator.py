"""Operator construction, hermitian numerics, product structure."""

from fractions import Fraction

import pytest

from lielap.algebra_core import (
    identity_tensor,
    metric_to_tensor,
    MetricSpec,
    preset,
    square_of_vector,
    symmetric_product,
)
from lielap.errors import DomainError
from lielap.irreps import label
from lielap.operator import (
    build_DV,
    casimir_tensor,
    cluster_values,
    eigen_decompose_numeric,
    kronecker_spectrum_check,
)


@pytest.mark.parametrize("m", [0, 1, 2, 5, 9])
def test_casimir_scalar(m):
    spec = preset("su2")
    op = build_DV(spec, label((m,)), casimir_tensor(spec))
    assert op.matrix.is_scalar(Fraction(m * (m + 2)))


def test_square_of_h_diagonal():
    spec = preset("su2")
    op = build_DV(spec, label((4,)), symmetric_product(3, 0, 0, 1))
    for l in range(5):
        assert op.matrix[l, l].real_fraction() == (4 - 2 * l) ** 2


def test_operator_linear_in_tensor():
    spec = preset("su2")
    lab = label((3,))
    a = symmetric_product(3, 0, 0, 1)
    b = symmetric_product(3, 1, 2, Fraction(1, 2))
    da = build_DV(spec, lab, a).matrix
    db = build_DV(spec, lab, b).matrix
    dsum = build_DV(spec, lab, a + b.scale(2)).matrix
    assert dsum == da + db + db


def test_tensor_size_mismatch():
    with pytest.raises(DomainError):
        build_DV(preset("su2"), label((1,)), identity_tensor(4))


def test_torus_operator_is_quadratic_form():
    spec = preset("t2")
    S = metric_to_tensor(MetricSpec([[2, 1], [1, 1]]))
    for w in [(1, 0), (0, 1), (2, -3)]:
        op = build_DV(spec, label((), w), S)
        expect = sum(S[i, j] * w[i] * w[j] for i in range(2) for j in range(2))
        assert op.matrix[0, 0].real_fraction() == expect


def test_numeric_spectrum_casimir():
    spec = preset("su2")
    ns = eigen_decompose_numeric(build_DV(spec, label((3,)), casimir_tensor(spec)))
    assert ns.clusters == ((15.0, 4),)


def test_numeric_spectrum_clusters_squares():
    spec = preset("su2")
    op = build_DV(spec, label((5,)), symmetric_product(3, 0, 0, 1))
    ns = eigen_decompose_numeric(op)
    assert [c[1] for c in ns.clusters] == [2, 2, 2]
    assert [round(c[0]) for c in ns.clusters] == [1, 9, 25]


def test_numeric_requires_hermitian_weights():
    # a generic definite tensor stays hermitian under the weight conjugation
    spec = preset("su2xsu2")
    op = build_DV(
        spec, label((2, 1)), identity_tensor(6).scale(Fraction(1, 3))
    )
    ns = eigen_decompose_numeric(op)
    assert len(ns.eigenvalues) == 6


def test_cluster_values_gap_logic():
    clusters = cluster_values([1.0, 1.0 + 1e-12, 5.0], 1e-8)
    assert [c[1] for c in clusters] == [2, 1]
    assert cluster_values([], 1e-8) == ()


def test_kronecker_structure_su2xsu2():
    spec = preset("su2xsu2")
    s1 = square_of_vector([1, 0, Fraction(1, 2)])
    s2 = identity_tensor(3)
    assert kronecker_spectrum_check(spec, label((2, 1)), s1, s2, Fraction(1, 5))


def test_kronecker_structure_mixed_torus():
    spec = preset("u2")
    assert kronecker_spectrum_check(
        spec, label((1,), (2,)), identity_tensor(3), identity_tensor(1), Fraction(1, 2)
    )


def test_kronecker_requires_two_blocks():
    with pytest.raises(DomainError):
        kronecker_spectrum_check(
            preset("su2"), label((1,)), identity_tensor(3), identity_tensor(3), 1
        )
