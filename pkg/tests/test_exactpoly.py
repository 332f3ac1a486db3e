from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gkm_hess.exactpoly import (
    MINUS_INFINITY, NotDivisible, Polynomial, VarSet, VarSetMismatch, divisible,
    divisible_by_difference, exact_divide, homogeneous_component, is_homogeneous,
    monomials_of_degree, parse, permute_t_vars, permute_x_vars, to_text, total_degree,
)
from gkm_hess.linalg import EchelonSystem, Inconsistent
from gkm_hess.symgroup import Permutation, adjacent, all_permutations, longest

T3 = VarSet(3)
R3 = VarSet(3, 3)


def P(text, V=T3):
    return parse(text, V)


# -- examples ----------------------------------------------------------------------

@pytest.mark.parametrize("a, b, expected", [
    ("t1", "-t1", "0"),
    ("t1*t2", "t1*t2", "2*t1*t2"),
    ("t1^2 - t2", "t2", "t1^2"),
])
def test_addition_examples(a, b, expected):
    assert P(a) + P(b) == P(expected)


def test_multiplication_examples():
    f = P("t1^2 - 3*t2*t3 + 1/2")
    assert P("t1 - t2") * P("t1 + t2") == P("t1^2 - t2^2")
    assert f * 1 == f
    assert (f * 0).is_zero()


def test_exact_divide_examples():
    assert exact_divide(P("t1^2 - t2^2"), P("t1 - t2")) == P("t1 + t2")
    with pytest.raises(NotDivisible):
        exact_divide(P("t1 - t2"), P("t1 - t3"))
    assert exact_divide(T3.zero(), P("t1 - t2")).is_zero()


def test_divide_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        exact_divide(P("t1"), T3.zero())


def test_permutations_of_variables():
    s1 = adjacent(1, 3)
    assert permute_t_vars(P("t1"), s1) == P("t2")
    for w in all_permutations(3):
        assert permute_t_vars(P("t1*t2*t3"), w) == P("t1*t2*t3")
    assert permute_t_vars(P("t1^2"), longest(3)) == P("t3^2")
    assert permute_x_vars(P("x1", R3), s1) == P("x2", R3)
    assert permute_x_vars(P("x3", R3), s1) == P("x3", R3)
    assert permute_x_vars(P("x1*x2", R3), s1) == P("x1*x2", R3)


def test_degrees():
    assert homogeneous_component(P("t1^2 + t2"), 1) == P("t2")
    assert homogeneous_component(T3.zero(), 3).is_zero()
    assert total_degree(P("t1*t2 - t3^2")) == 2
    assert total_degree(T3.zero()) == MINUS_INFINITY
    assert is_homogeneous(P("t1*t2 - t3^2"), 2)
    assert not is_homogeneous(P("t1 + 1"))


def test_coefficients_are_exact_rationals():
    f = P("1/3*t1") * 3
    assert f == P("t1")
    assert (P("t1") / 2).terms[(1, 0, 0)] == Fraction(1, 2)
    assert isinstance(f.terms[(1, 0, 0)], int)


def test_varset_mismatch():
    with pytest.raises(VarSetMismatch):
        P("t1") + P("t1", R3)


def test_parse_errors():
    for bad in ("t1 +", "t4", "2**t1", "(t1", "y1"):
        with pytest.raises(ValueError):
            P(bad)


def test_text_is_canonical():
    assert to_text(P("t3 + 2*t1^2*t2 - 1/2*t3 - t3")) == "2*t1^2*t2 - 1/2*t3"


def test_divisible_by_difference_matches_division():
    f = P("t1^3 - t2^3 + t3*(t1 - t2)")
    # variable positions are 0-based: t1 is position 0
    assert divisible_by_difference(f, 0, 1)
    assert not divisible_by_difference(f, 0, 2)


# -- properties ----------------------------------------------------------------------

@st.composite
def polys(draw, V=T3, max_degree=3, max_terms=4):
    terms = draw(st.lists(
        st.tuples(st.sampled_from([e for d in range(max_degree + 1) for e in monomials_of_degree(V.size, d)]),
                  st.fractions(min_value=-5, max_value=5, max_denominator=3)),
        max_size=max_terms))
    return Polynomial.from_terms(V, terms)


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@given(polys())
def test_parse_print_round_trip(f):
    assert parse(to_text(f), T3) == f


@given(polys(), polys(max_degree=2))
def test_division_recovers_factor(f, g):
    if g.is_zero():
        return
    assert exact_divide(f * g, g) == f


def _divides_by_linear_algebra(f: Polynomial, g: Polynomial) -> bool:
    """Independent oracle: solve q * g = f for q of degree deg f - deg g."""
    V = f.varset
    if f.is_zero():
        return True
    d = total_degree(f) - total_degree(g)
    if d < 0:
        return False
    unknowns = [e for k in range(d + 1) for e in monomials_of_degree(V.size, k)]
    # one equation per monomial of the product
    equations: dict = {}
    for j, e in enumerate(unknowns):
        for m, c in (V.monomial(e) * g).terms.items():
            equations.setdefault(m, {})[j] = c
    for m in f.terms:
        equations.setdefault(m, {})
    system = EchelonSystem()
    try:
        for m, row in equations.items():
            system.add(row, f.terms.get(m, 0))
    except Inconsistent:
        return False
    return True


@settings(max_examples=60)
@given(polys(max_degree=3, max_terms=3), st.sampled_from(["t1 - t2", "t2 - t3", "t1 + t3", "t1^2 - t2"]))
def test_not_divisible_agrees_with_linear_solve(f, divisor):
    g = P(divisor)
    assert divisible(f, g) == _divides_by_linear_algebra(f, g)
    assert divisible(f * g, g)


@given(polys(V=R3, max_degree=2), st.sampled_from(list(all_permutations(3))),
       st.sampled_from(list(all_permutations(3))))
def test_variable_permutations_compose(f, v, w):
    assert permute_t_vars(permute_t_vars(f, w), v) == permute_t_vars(f, v * w)
    # x-variables carry the right action
    assert permute_x_vars(permute_x_vars(f, w), v) == permute_x_vars(f, w * v)


@given(polys())
def test_homogeneous_components_sum_to_whole(f):
    top = 0 if f.is_zero() else total_degree(f)
    assert sum((homogeneous_component(f, d) for d in range(top + 1)), T3.zero()) == f


def test_permutation_argument_type():
    assert permute_t_vars(P("t1"), Permutation((2, 1, 3))) == P("t2")
