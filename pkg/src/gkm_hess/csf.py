"""
Chromatic quasisymmetric functions of indifference graphs and modular triples.

For a Hessenberg function h the indifference graph has an edge {i, k} for
every i < k <= h(i). Its chromatic quasisymmetric function, truncated to m
color variables, is the sum over proper colorings c of
q^asc(c) * x_{c(1)} ... x_{c(n)}, where asc counts edges i < k with
c(i) < c(k).

A modular triple (h-, h, h+) comes from an almost-s_i-stable C(h) whose
C- = C \\ {tau} and C+ = C u {s_i tau s_i} are again Hessenberg condition
sets; for those, (1 + q) csf(h) = csf(h+) + q csf(h-).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .exactpoly import Polynomial, VarSet
from .flowup import poincare_series, QPolynomial
from .gkm import (
    ConditionSet, HessenbergFunction, all_hessenberg, hessenberg_conditions,
    is_almost_stable,
)
from .report import Report
from .symgroup import Transposition, conjugate_by_adjacent


@lru_cache(maxsize=None)
def csf_vars(m: int) -> VarSet:
    return VarSet(has_q=True, x_extra=m)


@dataclass(frozen=True)
class IndifferenceGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, h: HessenbergFunction) -> IndifferenceGraph:
        return cls(h.n, frozenset((t.i, t.k) for t in hessenberg_conditions(h)))


@dataclass(frozen=True)
class ModularTriple:
    h_minus: HessenbergFunction
    h: HessenbergFunction
    h_plus: HessenbergFunction
    i: int
    tau: Transposition

    def __str__(self) -> str:
        return f"({self.h_minus}, {self.h}, {self.h_plus}; i={self.i}, tau={self.tau})"


def _colorings_from(edges, n: int, m: int, first: int):
    """Proper colorings with vertex 1 colored `first`, as (ascents, color counts)."""
    adjacency = [[k for (i, k) in edges if i == a] for a in range(1, n + 1)]
    # earlier neighbours of each vertex: edges (i, k) with i < k
    earlier = [[i for (i, k) in edges if k == a] for a in range(1, n + 1)]
    del adjacency
    colors = [0] * (n + 1)
    colors[1] = first

    def rec(a: int, asc: int):
        if a > n:
            yield asc, tuple(colors[1:])
            return
        for c in range(1, m + 1):
            bump = 0
            for i in earlier[a - 1]:
                if colors[i] == c:
                    break
                if colors[i] < c:
                    bump += 1
            else:
                colors[a] = c
                yield from rec(a + 1, asc + bump)
        colors[a] = 0

    if n == 0:
        yield 0, ()
        return
    yield from rec(2, 0)


def csf_truncated(h: HessenbergFunction, m: int) -> Polynomial:
    """csf_q(h) restricted to the color variables x1..xm (exact, by enumeration)."""
    if m < 1:
        raise ValueError("need at least one color")
    n = h.n
    edges = sorted(IndifferenceGraph.of(h).edges)
    V = csf_vars(m)
    acc: dict[tuple[int, ...], int] = {}
    for first in range(1, m + 1):
        for asc, coloring in _colorings_from(edges, n, m, first):
            e = [0] * (m + 1)
            for c in coloring:
                e[c - 1] += 1
            e[m] = asc
            key = tuple(e)
            acc[key] = acc.get(key, 0) + 1
    return Polynomial(V, acc)


def brute_force_csf(h: HessenbergFunction, m: int) -> Polynomial:
    """Reference enumeration over all m^n colorings; used as an independent oracle."""
    n = h.n
    edges = [(t.i, t.k) for t in hessenberg_conditions(h)]
    V = csf_vars(m)
    out = V.zero()
    for kappa in product(range(1, m + 1), repeat=n):
        if any(kappa[i - 1] == kappa[k - 1] for i, k in edges):
            continue
        asc = sum(1 for i, k in edges if kappa[i - 1] < kappa[k - 1])
        term = V.q() ** asc
        for c in kappa:
            term = term * V.x(c)
        out = out + term
    return out


def _triple_for(h: HessenbergFunction, i: int):
    """(tau, C-, C+, h-, h+) for almost-stable (h, i); h+- are None if not Hessenberg."""
    C = hessenberg_conditions(h)
    tau = is_almost_stable(C, i)
    if tau is None:
        return None
    c_minus = C.without(tau)
    c_plus = C.with_(conjugate_by_adjacent(tau, i))
    return tau, c_minus, c_plus, c_minus.hessenberg(), c_plus.hessenberg()


def modular_triples(n: int) -> list[ModularTriple]:
    """All (h, i) with C(h) almost-s_i-stable and C-, C+ both of Hessenberg form."""
    if n > 6:
        raise ValueError("n <= 6 only")
    out = []
    for h in all_hessenberg(n):
        for i in range(1, n):
            found = _triple_for(h, i)
            if found is None:
                continue
            tau, _, _, hm, hp = found
            if hm is not None and hp is not None:
                out.append(ModularTriple(hm, h, hp, i, tau))
    return out


def non_hessenberg_almost_stable(n: int) -> list[tuple[HessenbergFunction, int, ConditionSet, ConditionSet]]:
    """Almost-stable (h, i) whose C- or C+ is not a Hessenberg condition set."""
    out = []
    for h in all_hessenberg(n):
        for i in range(1, n):
            found = _triple_for(h, i)
            if found is not None and (found[3] is None or found[4] is None):
                out.append((h, i, found[1], found[2]))
    return out


def verify_modular_relation(triple: ModularTriple, m: int | None = None) -> Report:
    """(1 + q) csf(h) == csf(h+) + q csf(h-) on m >= n color variables."""
    n = triple.h.n
    m = n if m is None else m
    if m < n:
        raise ValueError("need m >= n colors for a faithful check")
    rep = Report(f"modular {triple} m={m}")
    V = csf_vars(m)
    q = V.q()
    lhs = (1 + q) * csf_truncated(triple.h, m)
    rhs = csf_truncated(triple.h_plus, m) + q * csf_truncated(triple.h_minus, m)
    diff = lhs - rhs
    detail = ""
    if diff:
        e, c = diff.leading_term()
        detail = f"differ at monomial {V.monomial(e)} by {c}"
    rep.add(f"{triple.h_minus},{triple.h},{triple.h_plus};i={triple.i}/m={m}",
            not diff, detail)
    return rep


def squarefree_coefficient(f: Polynomial, n: int) -> QPolynomial:
    """The coefficient of x1...xn in f, as a polynomial in q."""
    V = f.varset
    m = V.x_extra
    target = (1,) * n + (0,) * (m - n)
    coeffs: dict[int, int] = {}
    for e, c in f.terms.items():
        if e[:m] == target:
            coeffs[e[m]] = c
    top = max(coeffs, default=-1)
    return QPolynomial(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def csf_poincare_consistency(h: HessenbergFunction) -> Report:
    """For h = [n..n]: coefficient of x1...xn in csf equals the Poincare series."""
    n = h.n
    if n > 4:
        raise ValueError("desk scale only: n <= 4")
    rep = Report(f"csf-poincare {h}")
    if h.h != (n,) * n:
        rep.add("complete-graph", False, "defined for h = [n, ..., n] only")
        return rep
    coeff = squarefree_coefficient(csf_truncated(h, n), n)
    poin = poincare_series(h)
    rep.add(f"csf-poincare/{h}", coeff == poin, f"csf coefficient {coeff}; Poincare {poin}")
    return rep
