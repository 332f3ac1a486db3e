import pytest

from gkm_hess.exactpoly import NotDivisible, is_homogeneous
from gkm_hess.fixtures import REFERENCE_BASES, reference_basis, element
from gkm_hess.flowup import (
    ONE_PLUS_Q, QPolynomial, diagonal_degree, flow_up_basis, flow_up_element, graded_dimension,
    poincare_series, prescribed_diagonal, span_dimension, verify_graded_modular,
)
from gkm_hess.gkm import (
    GkmElement, HessenbergFunction, all_hessenberg, hessenberg_conditions, in_subring, phi,
)
from gkm_hess.schubert import double_schubert_table
from gkm_hess.symgroup import Permutation, all_permutations, bruhat_leq, identity, longest


def H(text):
    return HessenbergFunction.parse(text)


def test_prescribed_diagonal_examples():
    assert prescribed_diagonal(H("3,3,3"), longest(3)) == element(3, {"w0": "t21*t31*t32"})[longest(3)]
    assert prescribed_diagonal(H("2,2,3"), Permutation((2, 1, 3))) == element(3, {"s1": "t21"})[Permutation((2, 1, 3))]
    for h in all_hessenberg(3):
        assert prescribed_diagonal(h, identity(3)).constant_value() == 1


@pytest.mark.parametrize("h, degrees", [
    ("1,2,3", [0, 0, 0, 0, 0, 0]),
    ("3,3,3", [0, 1, 1, 2, 2, 3]),
    ("2,3,3", [0, 1, 1, 1, 1, 2]),
])
def test_basis_degrees(h, degrees):
    basis = flow_up_basis(H(h))
    assert [basis.degrees[w] for w in basis.order()] == degrees


def test_trivial_conditions_give_vertex_indicators():
    basis = flow_up_basis(H("1,2,3"))
    for w, f in basis:
        assert f == element(3, {str(w): "1"})


@pytest.mark.parametrize("h, series", [
    ("3,3,3", (1, 2, 2, 1)),
    ("1,2,3", (6,)),
    ("2,3,3", (1, 4, 1)),
    ("2,2,3", (3, 3)),
])
def test_poincare_examples(h, series):
    assert poincare_series(H(h)).coefficients == series


@pytest.mark.parametrize("key", sorted(REFERENCE_BASES))
def test_constructed_bases_match_the_displayed_ones(key):
    assert dict(flow_up_basis(H(key))) == reference_basis(key)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bases_are_flow_up(n):
    for h in all_hessenberg(n):
        c = hessenberg_conditions(h)
        basis = flow_up_basis(h)
        assert len(basis) == len(all_permutations(n))
        for w, f in basis:
            assert in_subring(f, c)
            assert all(not p or bruhat_leq(w, v) for v, p in f.items())
            assert f[w] == prescribed_diagonal(c, w)
            d = diagonal_degree(c, w)
            assert all(not p or is_homogeneous(p, d) for _, p in f.items())


def test_one_rank_five_basis():
    h = H("2,3,4,5,5")
    c = hessenberg_conditions(h)
    basis = flow_up_basis(h)
    for w, f in basis:
        assert in_subring(f, c)
        assert f[w] == prescribed_diagonal(c, w)


@pytest.mark.parametrize("n", [2, 3])
def test_full_flag_basis_is_double_schubert(n):
    basis = flow_up_basis(HessenbergFunction((n,) * n))
    table = double_schubert_table(n)
    for w, f in basis:
        assert f == phi(table[w])


@pytest.mark.parametrize("n, max_degree", [(3, 4), (4, 2)])
def test_graded_spanning(n, max_degree):
    for h in all_hessenberg(n):
        basis = flow_up_basis(h)
        for d in range(max_degree + 1):
            assert span_dimension(basis, d) == graded_dimension(h, d), (h, d)


def test_single_element_construction():
    f = flow_up_element(H("2,3,3"), Permutation((2, 3, 1)))
    assert f == element(3, {"s1s2": "t31", "w0": "t21"})


def test_q_polynomial_arithmetic():
    a = QPolynomial((1, 2, 2, 1))
    assert a.divide_exact(ONE_PLUS_Q) == QPolynomial((1, 1, 1))
    assert (QPolynomial((1, 1, 1)) * ONE_PLUS_Q) == a
    assert QPolynomial((3, 3)).divide_exact(ONE_PLUS_Q) == QPolynomial((3,))
    assert QPolynomial((1, 1, 1)) + QPolynomial((3,)).shift(1) == QPolynomial((1, 4, 1))
    assert str(QPolynomial((1, 4, 1))) == "1 + 4*q + q^2"
    with pytest.raises(NotDivisible):
        QPolynomial((1, 4, 1)).divide_exact(ONE_PLUS_Q)
    assert QPolynomial.from_degrees([0, 1, 1, 2]) == QPolynomial((1, 2, 1))
    assert a(1) == 6


def test_graded_modular_example():
    rep = verify_graded_modular(H("2,2,3"), H("2,3,3"), H("3,3,3"), 1)
    assert rep.passed, rep.to_text()
    assert any("1 + q + q^2" in c.detail for c in rep.checks)


def test_graded_modular_rejects_stable_input():
    rep = verify_graded_modular(H("2,2,3"), H("3,3,3"), H("3,3,3"), 1)
    assert not rep.passed
    assert rep.checks[0].id == "valid-triple"


def test_zero_element_has_no_degree():
    assert GkmElement.zero(3).degree() == float("-inf")
