import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gkm_hess.exactpoly import parse
from gkm_hess.fixtures import ARBITRARY_ELEMENT, DOT_S1, PHI_IMAGES, STAR_S1, element
from gkm_hess.gkm import (
    ConditionSet, GkmElement, HessenbergFunction, NotInDomain, PreconditionError,
    all_hessenberg, almost_stable_decompose, almost_stable_factor, almost_stable_parts,
    coset_decomposition, coset_indicator, divided_difference, dot, hessenberg_conditions,
    in_subring, is_almost_stable, is_stable, phi, rvars, stable_decompose, star, tvars,
)
from gkm_hess.sampling import random_element
from gkm_hess.symgroup import Permutation, Transposition, adjacent, all_permutations, identity

R3 = rvars(3)


def H(text):
    return HessenbergFunction.parse(text)


def C(text):
    return hessenberg_conditions(H(text))


# -- phi and the actions -------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(PHI_IMAGES))
def test_phi_images(name):
    assert phi(R3.var(name)) == element(3, PHI_IMAGES[name])


def test_phi_kills_symmetric_differences():
    e2x = parse("x1*x2 + x1*x3 + x2*x3", R3)
    e2t = parse("t1*t2 + t1*t3 + t2*t3", R3)
    assert phi(e2x - e2t).is_zero()


def test_actions_on_the_worked_element():
    f = element(3, ARBITRARY_ELEMENT)
    s1 = adjacent(1, 3)
    assert star(f, s1) == element(3, STAR_S1)
    assert dot(s1, f) == element(3, DOT_S1)
    assert star(f, identity(3)) == f
    assert dot(identity(3), f) == f


perms3 = st.sampled_from(list(all_permutations(3)))


@st.composite
def elements3(draw):
    V = tvars(3)
    values = []
    for _ in range(6):
        a, b, c = draw(st.integers(-3, 3)), draw(st.integers(-3, 3)), draw(st.integers(-2, 2))
        values.append(a * V.t(1) + b * V.t(2) * V.t(3) + c)
    return GkmElement(3, values)


@given(elements3(), perms3, perms3)
def test_action_laws(f, v, w):
    assert dot(v, dot(w, f)) == dot(v * w, f)
    assert star(star(f, v), w) == star(f, v * w)
    assert dot(v, star(f, w)) == star(dot(v, f), w)


@given(elements3(), elements3(), perms3)
def test_actions_are_ring_maps(f, g, w):
    assert dot(w, f * g) == dot(w, f) * dot(w, g)
    assert star(f * g, w) == star(f, w) * star(g, w)


@given(perms3, st.sampled_from(["x1", "x2 - t3", "x1*x2^2 + t1"]))
def test_star_permutes_x_and_dot_permutes_t(w, text):
    from gkm_hess.exactpoly import permute_t_vars, permute_x_vars
    p = parse(text, R3)
    assert star(phi(p), w) == phi(permute_x_vars(p, w))
    q = parse(text.replace("x", "t"), R3)
    assert dot(w, phi(q)) == phi(permute_t_vars(q, w))


# -- conditions and divided differences ----------------------------------------------

def test_hessenberg_conditions_examples():
    assert list(C("1,2,3")) == []
    assert set(C("2,3,3")) == {Transposition(1, 2), Transposition(2, 3)}
    assert set(C("3,3,3")) == {Transposition(1, 2), Transposition(2, 3), Transposition(1, 3)}


@pytest.mark.parametrize("bad", ["2,1,3", "1,1,3", "4,4,4", "", "a,b"])
def test_invalid_hessenberg_functions(bad):
    with pytest.raises(ValueError):
        H(bad)


def test_all_hessenberg_counts_are_catalan():
    assert [len(all_hessenberg(n)) for n in range(1, 6)] == [1, 2, 5, 14, 42]


def test_empty_conditions_accept_everything():
    assert in_subring(element(3, ARBITRARY_ELEMENT), ConditionSet.of(3))


def test_divided_difference_examples():
    n = 2
    f = element(n, {"[2,1]": "t21"})
    assert divided_difference(1, f) == GkmElement.constant(n, 1)
    assert divided_difference(1, GkmElement.constant(n, 1)).is_zero()
    R = rvars(4)
    for i in range(1, 4):
        for k in range(1, 5):
            expected = 1 if k == i else -1 if k == i + 1 else 0
            assert divided_difference(i, phi(R.x(k))) == GkmElement.constant(4, expected)


def test_divided_difference_outside_domain():
    f = element(3, {"s1": "1"})
    with pytest.raises(NotInDomain):
        divided_difference(1, f)


# -- stability -----------------------------------------------------------------------

def test_stability_examples():
    assert is_stable(C("3,3,3"), 1)
    assert is_stable(C("2,2,3"), 1)
    assert not is_stable(C("2,3,3"), 1)
    assert is_almost_stable(C("2,3,3"), 1) == Transposition(2, 3)
    assert is_almost_stable(C("2,3,3"), 2) == Transposition(1, 2)
    assert is_almost_stable(C("3,3,3"), 1) is None


def test_almost_stable_parts_examples():
    tau, cm, cp = almost_stable_parts(C("2,3,3"), 1)
    assert tau == Transposition(2, 3)
    assert cm.hessenberg() == H("2,2,3")
    assert cp.hessenberg() == H("3,3,3")


@pytest.mark.parametrize("n", [3, 4])
def test_stable_and_almost_stable_are_exclusive(n):
    for h in all_hessenberg(n):
        for i in range(1, n):
            c = hessenberg_conditions(h)
            assert not (is_stable(c, i) and is_almost_stable(c, i) is not None)


# -- decompositions -------------------------------------------------------------------

def test_stable_decompose_examples():
    c = C("3,3,3")
    s1 = adjacent(1, 3)
    g, h = stable_decompose(phi(R3.x(1)), 1, c)
    assert g == phi(R3.x(1) + R3.x(2)) / 2
    assert h == GkmElement.constant(3, Fraction(1, 2))
    sym = phi(R3.x(1) * R3.x(2) + R3.t(3))
    assert stable_decompose(sym, 1, c) == (sym, GkmElement.zero(3))
    u = phi(R3.x(3) + R3.x(1) * R3.x(2) + 1)
    assert star(u, s1) == u
    g, h = stable_decompose(phi(R3.x(1) - R3.x(2)) * u, 1, c)
    assert g.is_zero() and h == u


def test_decompose_preconditions():
    with pytest.raises(PreconditionError):
        stable_decompose(GkmElement.constant(3, 1), 1, C("2,3,3"))
    with pytest.raises(PreconditionError):
        almost_stable_decompose(GkmElement.constant(3, 1), 1, C("3,3,3"))
    with pytest.raises(PreconditionError):
        stable_decompose(element(3, {"s1": "1"}), 1, C("3,3,3"))


@pytest.mark.parametrize("i", [1, 2])
def test_almost_stable_decompose_of_one(i):
    p, m = almost_stable_decompose(GkmElement.constant(3, 1), i, C("2,3,3"))
    assert p == GkmElement.constant(3, 1)
    assert m.is_zero()


@pytest.mark.parametrize("i", [1, 2])
def test_almost_stable_pure_components(i):
    import random
    c = C("2,3,3")
    s = adjacent(i, 3)
    _, cm, cp = almost_stable_parts(c, i)
    rng = random.Random(i)
    for _ in range(10):
        u = random_element(rng, cm)
        u = u + star(u, s)  # now in H_{C-} and star-fixed
        assert almost_stable_decompose(almost_stable_factor(c, i) * u, i, c) == (GkmElement.zero(3), u)
        v = random_element(rng, cp)
        v = v + star(v, s)
        assert almost_stable_decompose(v, i, c) == (v, GkmElement.zero(3))


def test_coset_indicator_examples():
    assert coset_indicator(ConditionSet.of(3)) == element(3, {"id": "1"})
    assert coset_indicator(ConditionSet.of(3, [(1, 2)])) == element(3, {"id": "1", "s1": "1"})


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_coset_decomposition_sums_back(seed):
    import random
    c = ConditionSet.of(4, [(1, 2), (3, 4)])
    f = random_element(random.Random(seed), c)
    total = GkmElement.zero(4)
    for w, part in coset_decomposition(f, c):
        total = total + dot(w, part)
    assert total == f


# -- serialization --------------------------------------------------------------------

def test_json_round_trip():
    f = element(3, ARBITRARY_ELEMENT) / 3
    assert GkmElement.from_json(f.to_json()) == f
    data = json.loads(f.to_json())
    assert set(data["values"]) == {str(w) for w in all_permutations(3)}


def test_json_requires_every_vertex():
    data = element(3, ARBITRARY_ELEMENT).to_dict()
    del data["values"]["[1,2,3]"]
    with pytest.raises(ValueError):
        GkmElement.from_dict(data)


def test_permutation_keys_parse():
    assert Permutation.parse("[2,3,1]") == Permutation((2, 3, 1))
