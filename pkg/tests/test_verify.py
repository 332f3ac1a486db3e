import random

import pytest

from gkm_hess import verify
from gkm_hess.gkm import ConditionSet, HessenbergFunction, in_subring
from gkm_hess.sampling import random_element, random_r_poly


@pytest.mark.parametrize("suite", [s for s in verify.SUITES if s != "appendix-fixtures"])
def test_small_runs_pass(suite):
    rep = verify.run_suite(suite, ns=(3,), seed=1, samples=5)
    assert rep.passed, rep.to_text()
    assert rep.checks


def test_fixture_suite_reports_the_two_almost_stable_arrows():
    rep = verify.run_suite("appendix-fixtures")
    failed = [c.id for c in rep.failures()]
    assert failed == ["appendix-fixtures/h=[2,3,3]/d1: f_w0 -> f_s1s2",
                      "appendix-fixtures/h=[2,3,3]/d2: f_w0 -> f_s2s1"]
    assert all(c.counterexample for c in rep.failures())


def test_same_seed_same_report():
    a = verify.run_suite("theorem-almost-stable", ns=(3,), seed=7, samples=4)
    b = verify.run_suite("theorem-almost-stable", ns=(3,), seed=7, samples=4)
    assert a.to_json() == b.to_json()


def test_parallel_run_matches_serial(monkeypatch):
    serial = verify.run_suite("stability", ns=(3, 4), seed=3, samples=3)
    monkeypatch.setenv(verify.THREADS_ENV, "2")
    parallel = verify.run_suite("stability", ns=(3, 4), seed=3, samples=3)
    assert serial.to_json() == parallel.to_json()


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nonsense")


def test_random_elements_lie_in_the_subring():
    rng = random.Random(0)
    for text in ("2,3,3", "3,3,3", "1,3,4,4"):
        h = HessenbergFunction.parse(text)
        for _ in range(10):
            assert in_subring(random_element(rng, h), h.conditions())
    c = ConditionSet.of(4, [(2, 3)])
    assert all(in_subring(random_element(rng, c), c) for _ in range(10))


def test_random_generation_is_seeded():
    a = [str(random_r_poly(random.Random(5), 3)) for _ in range(3)]
    b = [str(random_r_poly(random.Random(5), 3)) for _ in range(3)]
    assert a == b


def test_tally_reports_first_failure():
    tally = verify._Tally("x")
    tally.record("a", True)
    tally.record("a", False, "boom", {"k": 1})
    tally.record("a", False, "later")
    (check,) = tally.checks()
    assert not check.passed
    assert "boom" in check.detail and "3 samples" in check.detail
    assert check.counterexample == {"k": 1}


def test_suites_detect_a_broken_identity(monkeypatch):
    """Replace the star action by the identity map: the lemma suite must notice."""
    monkeypatch.setattr(verify, "star", lambda f, w: f)
    rep = verify.run_suite("lemma-compute", ns=(3,), seed=0, samples=5)
    assert not rep.passed
