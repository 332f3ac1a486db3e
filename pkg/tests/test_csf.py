import pytest

from gkm_hess.csf import (
    brute_force_csf, csf_poincare_consistency, csf_truncated, csf_vars, modular_triples,
    non_hessenberg_almost_stable, squarefree_coefficient, verify_modular_relation,
)
from gkm_hess.exactpoly import parse
from gkm_hess.flowup import QPolynomial
from gkm_hess.gkm import HessenbergFunction, all_hessenberg
from gkm_hess.symgroup import Transposition


def H(text):
    return HessenbergFunction.parse(text)


def test_csf_examples():
    V2, V3 = csf_vars(2), csf_vars(3)
    assert csf_truncated(H("1,2,3"), 2) == parse("(x1 + x2)^3", V2)
    assert csf_truncated(H("2,2"), 2) == parse("(1 + q)*x1*x2", V2)
    triangle = csf_truncated(H("3,3,3"), 3)
    assert triangle == parse("(1 + 2*q + 2*q^2 + q^3)*x1*x2*x3", V3)


@pytest.mark.parametrize("n, m", [(2, 3), (3, 2), (3, 3), (4, 2), (4, 4), (5, 5)])
def test_matches_brute_force(n, m):
    for h in all_hessenberg(n):
        assert csf_truncated(h, m) == brute_force_csf(h, m), h


def test_modular_triple_examples():
    assert modular_triples(2) == []
    triples = {(str(t.h_minus), str(t.h), str(t.h_plus), t.i) for t in modular_triples(3)}
    assert triples == {("[2,2,3]", "[2,3,3]", "[3,3,3]", 1), ("[1,3,3]", "[2,3,3]", "[3,3,3]", 2)}
    assert modular_triples(3)[0].tau in (Transposition(2, 3), Transposition(1, 2))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_almost_stable_pairs_are_all_hessenberg_shaped(n):
    assert non_hessenberg_almost_stable(n) == []


@pytest.mark.parametrize("n", [3, 4])
def test_modular_relation(n):
    for t in modular_triples(n):
        rep = verify_modular_relation(t)
        assert rep.passed, rep.to_text()


def test_modular_relation_needs_enough_colors():
    with pytest.raises(ValueError):
        verify_modular_relation(modular_triples(3)[0], m=2)


def test_modular_relation_detects_a_wrong_triple():
    t = modular_triples(3)[0]
    wrong = type(t)(t.h_plus, t.h, t.h_minus, t.i, t.tau)
    assert not verify_modular_relation(wrong).passed


def test_squarefree_coefficient():
    f = csf_truncated(H("2,3,3"), 3)
    assert squarefree_coefficient(f, 3) == QPolynomial((1, 4, 1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_poincare_consistency(n):
    assert csf_poincare_consistency(HessenbergFunction((n,) * n)).passed
