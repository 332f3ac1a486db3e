"""
Verification suites: seeded property checks of the divided-difference
calculus, the two decompositions, and the fixture and combinatorial
identities.

Every suite is split into cases (typically one per (h, i) pair). A case is
run with its own random generator seeded from (seed, suite, n, case), so
results do not depend on execution order. Cases may run in a process pool
whose size is capped by the GKM_HESS_THREADS environment variable; reports
are always merged in case order.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from .csf import csf_poincare_consistency, modular_triples, non_hessenberg_almost_stable, verify_modular_relation
from .fixtures import (
    ARBITRARY_ELEMENT, DOT_S1, MINIMAL_CASES, PHI_IMAGES, STAR_S1, check_reference_fixtures,
    element, verify_minimal_case,
)
from .flowup import QPolynomial, flow_up_basis, poincare_series, verify_graded_modular
from .gkm import (
    ConditionSet, GkmElement, HessenbergFunction, NotInDomain, PreconditionError, all_hessenberg,
    almost_stable_decompose, almost_stable_factor, almost_stable_parts, divided_difference, dot,
    failed_condition, hessenberg_conditions, in_subring, is_almost_stable, is_stable, phi, rvars,
    stable_decompose, star, tvars,
)
from .report import Check, Report
from .sampling import random_element, random_permutation, random_r_poly, random_t_poly
from .schubert import check_recursions, double_schubert_flow_up_check, poly_divided_difference
from .symgroup import Permutation, adjacent

THREADS_ENV = "GKM_HESS_THREADS"


class _Tally:
    """Aggregates many sample-level outcomes into one check per identifier."""

    def __init__(self, prefix: str):
        self.prefix = prefix
        self.order: list[str] = []
        self.counts: dict[str, int] = {}
        self.failure: dict[str, tuple[str, object]] = {}

    def record(self, name: str, ok: bool, detail: str = "", payload: object = None) -> bool:
        if name not in self.counts:
            self.order.append(name)
            self.counts[name] = 0
        self.counts[name] += 1
        if not ok and name not in self.failure:
            self.failure[name] = (detail, payload)
        return ok

    def checks(self) -> list[Check]:
        out = []
        for name in self.order:
            n = self.counts[name]
            if name in self.failure:
                detail, payload = self.failure[name]
                out.append(Check(f"{self.prefix}/{name}", False,
                                 f"first failure of {n} samples: {detail}", payload))
            else:
                out.append(Check(f"{self.prefix}/{name}", True, f"{n} samples"))
        return out


def _dd(i: int, f: GkmElement) -> GkmElement | None:
    try:
        return divided_difference(i, f)
    except NotInDomain:
        return None


def _payload(**elements: GkmElement) -> dict:
    return {k: v.to_dict() for k, v in elements.items() if isinstance(v, GkmElement)}


def _rng(seed: int, *key) -> random.Random:
    return random.Random(":".join(str(k) for k in (seed,) + key))


def _split(total: int, parts: int) -> int:
    return -(-total // parts)


# -- divided-difference identities on H_si -------------------------------------

def _lemma_case(n: int, i: int, seed: int, samples: int) -> list[Check]:
    rng = _rng(seed, "lemma-compute", n, i)
    C = ConditionSet.of(n, [(i, i + 1)])
    s = adjacent(i, n)
    T = tvars(n)
    tally = _Tally(f"n={n}/i={i}")
    zero = GkmElement.zero(n)
    for _ in range(samples):
        f = random_element(rng, C)
        g = random_element(rng, C)
        w = random_permutation(rng, n)
        df, dg = _dd(i, f), _dd(i, g)
        if not tally.record("defined-on-H_si", df is not None and dg is not None,
                            "divided difference undefined", _payload(f=f, g=g)):
            continue
        fs = star(f, s)
        tally.record("item1-additive", _dd(i, f + g) == df + dg, "", _payload(f=f, g=g))
        tally.record("item2-product-rule", _dd(i, f * g) == df * g + fs * dg, "", _payload(f=f, g=g))
        f0 = f + fs
        tally.record("item3-kernel-factor", _dd(i, f0) == zero and _dd(i, f0 * g) == f0 * dg,
                     "", _payload(f=f, g=g))
        for label, u in (("f", f), ("g", g), ("f+f*s", f0), ("d(f)", df)):
            du = _dd(i, u)
            tally.record("item4-kernel-is-fixed", (du == zero) == (star(u, s) == u),
                         f"on {label}", _payload(u=u))
        tally.record("item5-dot-equivariant", _dd(i, dot(w, f)) == dot(w, df),
                     f"w={w}", _payload(f=f))
        tally.record("item6-star-antisymmetric", _dd(i, fs) == -df, "", _payload(f=f))
        tally.record("item7-image-fixed", star(df, s) == df, "", _payload(f=f))
        k = rng.randint(1, n - 1)
        rest = [a for a in range(1, n + 1) if a not in (i, i + 1)]
        rng.shuffle(rest)
        one_line = rest[:k - 1] + [i, i + 1] + rest[k - 1:]
        u = Permutation(tuple(one_line))
        tally.record("item8-star-intertwines", star(df, u) == _dd(k, star(f, u)),
                     f"w={u}, k={k}", _payload(f=f))
        a = rng.randint(1, n)
        tally.record("item9-t-constant", _dd(i, GkmElement.constant(n, T.t(a))) == zero, f"t{a}")
        p = random_t_poly(rng, n, max_degree=2)
        tally.record("item10-Qt-linear", _dd(i, f * p) == df * p, f"p={p}", _payload(f=f))
    R = rvars(n)
    for k in range(1, n + 1):
        d = _dd(i, phi(R.x(k)))
        expected = 1 if k == i else -1 if k == i + 1 else 0
        item = 11 if k == i else 12 if k == i + 1 else 13
        tally.record(f"item{item}-x{k}", d == GkmElement.constant(n, expected), f"got {d}")
    return tally.checks()


def _lemma_cases(n: int, samples: int):
    return [(n, i, _split(samples, n - 1)) for i in range(1, n)]


# -- braid relations -------------------------------------------------------------

def _braid_relations(n: int, f: GkmElement, tally: _Tally, stable_for: Callable[[int], bool]) -> None:
    zero = GkmElement.zero(n)
    for i in range(1, n):
        if not stable_for(i):
            continue
        d = _dd(i, f)
        tally.record(f"d{i}^2=0", d is not None and _dd(i, d) == zero, "", _payload(f=f))
        if i + 1 < n and stable_for(i + 1):
            lhs = _chain(f, (i, i + 1, i))
            rhs = _chain(f, (i + 1, i, i + 1))
            tally.record(f"d{i}d{i+1}d{i}=d{i+1}d{i}d{i+1}", lhs is not None and lhs == rhs,
                         "", _payload(f=f))
        for k in range(i + 2, n):
            if stable_for(k):
                lhs, rhs = _chain(f, (i, k)), _chain(f, (k, i))
                tally.record(f"d{i}d{k}=d{k}d{i}", lhs is not None and lhs == rhs, "", _payload(f=f))


def _chain(f: GkmElement, indices: Iterable[int]) -> GkmElement | None:
    """Apply divided differences right to left: (a, b, c) means d_a d_b d_c f."""
    for i in reversed(tuple(indices)):
        f = _dd(i, f)
        if f is None:
            return None
    return f


def _braid_case(n: int, key: str, seed: int, samples: int) -> list[Check]:
    rng = _rng(seed, "braid", n, key)
    if key == "phi(R)":
        tally = _Tally(f"n={n}/phi(R)")
        for _ in range(samples):
            p = random_r_poly(rng, n, max_degree=4, max_terms=3)
            f = phi(p)
            _braid_relations(n, f, tally, lambda i: True)
            for i in range(1, n):
                tally.record(f"d{i}-intertwines-phi", _dd(i, f) == phi(poly_divided_difference(i, p)),
                             f"p={p}")
        return tally.checks()
    h = HessenbergFunction.parse(key)
    C = hessenberg_conditions(h)
    tally = _Tally(f"n={n}/h={h}")
    for _ in range(samples):
        _braid_relations(n, random_element(rng, C), tally, lambda i: is_stable(C, i))
    return tally.checks()


def _braid_cases(n: int, samples: int):
    cases = [(n, "phi(R)", samples)]
    for h in all_hessenberg(n):
        C = hessenberg_conditions(h)
        if any(is_stable(C, i) for i in range(1, n)):
            cases.append((n, ",".join(map(str, h.h)), _split(samples, 4)))
    return cases


# -- stability and the stable decomposition ------------------------------------

def _stable_pairs(n: int) -> list[tuple[str, int]]:
    return [(",".join(map(str, h.h)), i) for h in all_hessenberg(n) for i in range(1, n)
            if is_stable(hessenberg_conditions(h), i)]


def _almost_stable_pairs(n: int) -> list[tuple[str, int]]:
    return [(",".join(map(str, h.h)), i) for h in all_hessenberg(n) for i in range(1, n)
            if is_almost_stable(hessenberg_conditions(h), i) is not None]


def _stability_case(n: int, key: tuple[str, int], seed: int, samples: int) -> list[Check]:
    hk, i = key
    h = HessenbergFunction.parse(hk)
    C = hessenberg_conditions(h)
    rng = _rng(seed, "stability", n, hk, i)
    tally = _Tally(f"h={h}/i={i}")
    for _ in range(samples):
        f = random_element(rng, C)
        d = _dd(i, f)
        if not tally.record("defined", d is not None, "", _payload(f=f)):
            continue
        bad = failed_condition(d, C)
        tally.record("d(f)-in-H_C", bad is None, "" if bad is None else f"violates {bad[0]} at {bad[1]}",
                     _payload(f=f, image=d))
    return tally.checks()


def _theorem_stable_case(n: int, key: tuple[str, int], seed: int, samples: int) -> list[Check]:
    hk, i = key
    h = HessenbergFunction.parse(hk)
    C = hessenberg_conditions(h)
    s = adjacent(i, n)
    R = rvars(n)
    factor = phi(R.x(i) - R.x(i + 1))
    zero = GkmElement.zero(n)
    rng = _rng(seed, "theorem-stable", n, hk, i)
    tally = _Tally(f"h={h}/i={i}")
    for _ in range(samples):
        f = random_element(rng, C)
        try:
            g, hh = stable_decompose(f, i, C)
        except (NotInDomain, PreconditionError) as exc:
            tally.record("decompose", False, str(exc), _payload(f=f))
            continue
        tally.record("round-trip", f == g + factor * hh, "", _payload(f=f, g=g, h=hh))
        tally.record("g-fixed", star(g, s) == g, "", _payload(f=f, g=g))
        tally.record("h-fixed", star(hh, s) == hh, "", _payload(f=f, h=hh))
        tally.record("g-in-H_C", in_subring(g, C), "", _payload(f=f, g=g))
        tally.record("h-in-H_C", in_subring(hh, C), "", _payload(f=f, h=hh))
        for label, u in (("f", f), ("g", g), ("h", hh), ("f+f*s", f + star(f, s))):
            du = _dd(i, u)
            tally.record("corollary-kernel-is-fixed", du is not None and (du == zero) == (star(u, s) == u),
                         f"on {label}", _payload(u=u))
    return tally.checks()


# -- almost-stable decomposition --------------------------------------------------

def _theorem_almost_case(n: int, key: tuple[str, int], seed: int, samples: int) -> list[Check]:
    hk, i = key
    h = HessenbergFunction.parse(hk)
    C = hessenberg_conditions(h)
    tau, c_minus, c_plus = almost_stable_parts(C, i)
    s = adjacent(i, n)
    R = rvars(n)
    near = i if i in (tau.i, tau.k) else i + 1
    far = (i + i + 1) - near
    k = tau.other(near)
    branch = "tau-moves-i" if near == i else "tau-moves-i+1"
    factor = almost_stable_factor(C, i)
    into_c = phi(R.x(near) - R.x(k))
    into_plus = phi(R.x(k) - R.x(far))
    zero = GkmElement.zero(n)
    rng = _rng(seed, "theorem-almost-stable", n, hk, i)
    tally = _Tally(f"h={h}/i={i}/tau={tau}/{branch}")
    for _ in range(samples):
        f = random_element(rng, C)
        try:
            p, m = almost_stable_decompose(f, i, C)
        except (NotInDomain, PreconditionError) as exc:
            tally.record("decompose", False, str(exc), _payload(f=f))
            continue
        lm = factor * m
        tally.record("reconstruction", f == p + lm, "", _payload(f=f, p=p, m=m))
        tally.record("p-in-H_C+", in_subring(p, c_plus), "", _payload(f=f, p=p))
        tally.record("p-fixed", star(p, s) == p, "", _payload(f=f, p=p))
        tally.record("m-in-H_C-", in_subring(m, c_minus), "", _payload(f=f, m=m))
        tally.record("m-fixed", star(m, s) == m, "", _payload(f=f, m=m))
        try:
            pp, pm = almost_stable_decompose(p, i, C)
            mp, mm = almost_stable_decompose(lm, i, C)
        except (NotInDomain, PreconditionError) as exc:
            tally.record("idempotents", False, str(exc), _payload(f=f))
            continue
        tally.record("P+P+=P+", pp == p, "", _payload(f=f))
        tally.record("P-P+=0", pm == zero, "", _payload(f=f))
        tally.record("P+P-=0", mp == zero, "", _payload(f=f))
        tally.record("P-P-=P-", mm == m, "", _payload(f=f))
        u = random_element(rng, c_minus)
        tally.record(f"(x{near}-x{k})H_C-<=H_C", in_subring(into_c * u, C), "", _payload(u=u))
        tally.record(f"(x{k}-x{far})H_C<=H_C+", in_subring(into_plus * f, c_plus), "", _payload(f=f))
    return tally.checks()


# -- suites --------------------------------------------------------------------------

def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _call(job):
    fn, args = job
    return fn(*args)


def _run_cases(jobs: list) -> list[list[Check]]:
    threads = min(_threads(), len(jobs))
    if threads <= 1:
        return [_call(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_call, jobs))


def _merge(command: str, pieces: Iterable[Iterable[Check]], start: float) -> Report:
    rep = Report(command)
    for checks in pieces:
        rep.checks.extend(checks)
    rep.duration = time.perf_counter() - start
    return rep


def _reports_to_checks(report: Report, prefix: str = "") -> list[Check]:
    return [Check(prefix + c.id, c.passed, c.detail, c.counterexample) for c in report.checks]


def _job_reference() -> list[Check]:
    return _reports_to_checks(check_reference_fixtures())


def _job_worked_examples() -> list[Check]:
    n = 3
    base = element(n, ARBITRARY_ELEMENT)
    s1 = adjacent(1, n)
    out = [Check("star-s1", star(base, s1) == element(n, STAR_S1)),
           Check("dot-s1", dot(s1, base) == element(n, DOT_S1))]
    R = rvars(n)
    for name, values in PHI_IMAGES.items():
        out.append(Check(f"phi({name})", phi(R.var(name)) == element(n, values)))
    return out


def _job_minimal(case: str) -> list[Check]:
    return _reports_to_checks(verify_minimal_case(case))


def _job_double_schubert(n: int) -> list[Check]:
    checks = _reports_to_checks(check_recursions(n))
    if n <= 4:
        checks += _reports_to_checks(double_schubert_flow_up_check(n))
    return checks


def _job_modular(n: int) -> list[Check]:
    checks = []
    for triple in modular_triples(n):
        checks += _reports_to_checks(verify_modular_relation(triple))
    flagged = non_hessenberg_almost_stable(n)
    checks.append(Check(f"n={n}/triples", True, f"{len(modular_triples(n))} modular triples; "
                        f"{len(flagged)} almost-stable pairs with non-Hessenberg C- or C+"))
    if n <= 4:
        checks += _reports_to_checks(csf_poincare_consistency(HessenbergFunction((n,) * n)))
    return checks


def _job_graded_modular(n: int) -> list[Check]:
    checks = []
    for t in modular_triples(n):
        label = f"({t.h_minus},{t.h},{t.h_plus});i={t.i}/"
        checks += _reports_to_checks(verify_graded_modular(t.h_minus, t.h, t.h_plus, t.i), label)
    for h in all_hessenberg(n):
        basis = flow_up_basis(h)
        from_basis = QPolynomial.from_degrees(basis.degrees.values())
        checks.append(Check(f"n={n}/h={h}/basis-degrees", from_basis == poincare_series(h),
                            f"Poin = {from_basis}"))
    return checks


DEFAULT_NS = {
    "lemma-compute": (3, 4),
    "braid": (3, 4),
    "stability": (3, 4),
    "theorem-stable": (3, 4),
    "theorem-almost-stable": (3, 4),
    "double-schubert": (1, 2, 3, 4),
    "modular": (2, 3, 4, 5),
    "graded-modular": (2, 3, 4),
}

DEFAULT_SAMPLES = {
    "lemma-compute": 200,
    "braid": 100,
    "stability": 50,
    "theorem-stable": 50,
    "theorem-almost-stable": 50,
}


def _jobs(suite: str, ns: Iterable[int], seed: int, samples: int | None) -> list:
    count = DEFAULT_SAMPLES.get(suite) if samples is None else samples
    if suite == "appendix-fixtures":
        return [(_job_reference, ()), (_job_worked_examples, ())]
    if suite == "minimal-cases":
        return [(_job_minimal, (case,)) for case in MINIMAL_CASES]
    if suite == "double-schubert":
        return [(_job_double_schubert, (n,)) for n in ns]
    if suite == "modular":
        return [(_job_modular, (n,)) for n in ns]
    if suite == "graded-modular":
        return [(_job_graded_modular, (n,)) for n in ns]
    jobs = []
    for n in ns:
        if n < 2:
            continue
        if suite == "lemma-compute":
            jobs += [(_lemma_case, (n, i, seed, k)) for n, i, k in _lemma_cases(n, count)]
        elif suite == "braid":
            jobs += [(_braid_case, (n, key, seed, k)) for n, key, k in _braid_cases(n, count)]
        elif suite == "stability":
            jobs += [(_stability_case, (n, key, seed, count)) for key in _stable_pairs(n)]
        elif suite == "theorem-stable":
            jobs += [(_theorem_stable_case, (n, key, seed, count)) for key in _stable_pairs(n)]
        elif suite == "theorem-almost-stable":
            jobs += [(_theorem_almost_case, (n, key, seed, count)) for key in _almost_stable_pairs(n)]
        else:
            raise KeyError(suite)
    return jobs


SUITES = (
    "lemma-compute", "braid", "stability", "theorem-stable", "theorem-almost-stable",
    "minimal-cases", "appendix-fixtures", "double-schubert", "modular", "graded-modular",
)


def run_suite(suite: str, ns: Iterable[int] | None = None, seed: int = 0,
              samples: int | None = None) -> Report:
    """Run one named suite (or "all") and return its merged report."""
    start = time.perf_counter()
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    jobs, prefixes = [], []
    for name in names:
        chosen = tuple(ns) if ns is not None else DEFAULT_NS.get(name, ())
        for job in _jobs(name, chosen, seed, samples):
            jobs.append(job)
            prefixes.append(f"{name}/")
    results = _run_cases(jobs)
    pieces = ([Check(p + c.id, c.passed, c.detail, c.counterexample) for c in checks]
              for p, checks in zip(prefixes, results))
    shown_ns = "default" if ns is None else ",".join(map(str, ns))
    command = f"verify --suite {suite} --n {shown_ns} --seed {seed}"
    if samples is not None:
        command += f" --samples {samples}"
    return _merge(command, pieces, start)

