import pytest

from gkm_hess.exactpoly import parse
from gkm_hess.gkm import rvars
from gkm_hess.schubert import (
    check_recursions, double_schubert_flow_up_check, double_schubert_table,
    poly_divided_difference, schubert_table, set_t_to_zero,
)
from gkm_hess.symgroup import Permutation, all_permutations, longest

R3 = rvars(3)


def P(text):
    return parse(text, R3)


def test_polynomial_divided_difference_examples():
    assert poly_divided_difference(1, P("x1")) == P("1")
    assert poly_divided_difference(1, P("x1*x2")).is_zero()
    assert poly_divided_difference(2, P("x1^2*x2")) == P("x1^2")
    assert poly_divided_difference(1, P("t1*x1 + t2")) == P("t1")


def test_schubert_examples():
    table = schubert_table(3)
    assert table[longest(3)] == P("x1^2*x2")
    assert table[Permutation((3, 1, 2))] == P("x1^2")
    assert table[Permutation((1, 3, 2))] == P("x1 + x2")
    assert table[Permutation((1, 2, 3))] == P("1")


def test_double_schubert_examples():
    table = double_schubert_table(3)
    assert table[Permutation((2, 1, 3))] == P("x1 - t1")
    assert table[longest(3)] == P("(x1 - t1)*(x1 - t2)*(x2 - t1)")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_recursions(n):
    rep = check_recursions(n)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_double_schubert_flow_up(n):
    rep = double_schubert_flow_up_check(n)
    assert rep.passed, rep.to_text()


def test_table_sizes_and_path_checks():
    table = schubert_table(4)
    assert len(table.polys) == 24
    assert table.path_checks > 0
    assert set(table.to_dict()) == {str(w) for w in all_permutations(4)}


def test_set_t_to_zero():
    assert set_t_to_zero(P("(x1 - t1)*(x2 - t3) + t2")) == P("x1*x2")
