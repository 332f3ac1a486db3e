"""
Flow-up bases of H_C and their Poincare series.

A flow-up basis {f_w} of H_C over Q[t] has f_w(v) = 0 unless w <= v in
Bruhat order, and a prescribed product of linear forms as its diagonal value
f_w(w). We use the diagonal

    f_w(w) = prod over (i <-> k) in C with w(i) > w(k) of (t_{w(i)} - t_{w(k)}),

so every factor reads t_a - t_b with a > b. Each f_w is found by solving the
divisibility conditions as a linear system in the monomial coefficients of
the unknown values f_w(v), v > w, with free variables set to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .exactpoly import NotDivisible, Polynomial, monomials_of_degree
from .gkm import (
    ConditionSet, GkmElement, HessenbergFunction, _right_mult, hessenberg_conditions,
    in_subring, is_almost_stable, is_stable, tvars,
)
from .linalg import EchelonSystem, Inconsistent
from .report import Report
from .symgroup import Permutation, all_permutations, bruhat_leq, conjugate_by_adjacent

ConditionsLike = Union[HessenbergFunction, ConditionSet]


class FlowUpError(RuntimeError):
    """The linear system for a flow-up element has no solution."""


def _conditions(c: ConditionsLike) -> ConditionSet:
    if isinstance(c, HessenbergFunction):
        return hessenberg_conditions(c)
    return c


def diagonal_degree(c: ConditionsLike, w: Permutation) -> int:
    """#{(i <-> k) in C : w(i) > w(k)}."""
    return sum(1 for tau in _conditions(c) if w(tau.i) > w(tau.k))


def prescribed_diagonal(c: ConditionsLike, w: Permutation) -> Polynomial:
    C = _conditions(c)
    V = tvars(C.n)
    out = V.one()
    for tau in C:
        a, b = w(tau.i), w(tau.k)
        if a > b:
            out = out * (V.t(a) - V.t(b))
    return out


def _ordered(n: int) -> list[Permutation]:
    return sorted(all_permutations(n), key=lambda w: (w.length(), w.one_line))


@dataclass(frozen=True)
class FlowUpBasis:
    conditions: ConditionSet
    elements: dict[Permutation, GkmElement]
    degrees: dict[Permutation, int]
    h: HessenbergFunction | None = None

    @property
    def n(self) -> int:
        return self.conditions.n

    def order(self) -> list[Permutation]:
        """Basis indices ordered by (length, lex)."""
        return _ordered(self.n)

    def __iter__(self):
        return ((w, self.elements[w]) for w in self.order())

    def __len__(self) -> int:
        return len(self.elements)

    def to_list(self) -> list[dict]:
        return [{"w": str(w), "degree": self.degrees[w], "element": self.elements[w].to_dict()}
                for w in self.order()]


def _edge_equations(C: ConditionSet, d: int, var_of, known_of):
    """
    Yield (row, rhs) encoding f(v) - f(v tau) == 0 mod (t_{v(i)} - t_{v(k)}),
    i.e. the difference vanishes after substituting t_{v(i)} := t_{v(k)}.

    `var_of(j)` gives {monomial: column} for unknown vertex j (or None), and
    `known_of(j)` gives the fixed polynomial at vertex j (or None).
    """
    n = C.n
    perms = all_permutations(n)
    for tau in C:
        pair = _right_mult(tau.as_permutation(n))
        for j, v in enumerate(perms):
            u = pair[j]
            if u < j:
                continue
            uj, uu = var_of(j), var_of(u)
            kj, ku = known_of(j), known_of(u)
            if uj is None and uu is None and kj is None and ku is None:
                continue
            a, b = v(tau.i) - 1, v(tau.k) - 1
            rows: dict[tuple, dict[int, int]] = {}
            rhs: dict[tuple, object] = {}

            def sub(e):
                if e[a]:
                    e = list(e)
                    e[b] += e[a]
                    e[a] = 0
                    return tuple(e)
                return e

            for unknowns, sign in ((uj, 1), (uu, -1)):
                if unknowns:
                    for e, col in unknowns.items():
                        row = rows.setdefault(sub(e), {})
                        row[col] = row.get(col, 0) + sign
            for known, sign in ((kj, 1), (ku, -1)):
                if known is not None:
                    for e, c in known.terms.items():
                        key = sub(e)
                        rhs[key] = rhs.get(key, 0) - sign * c
            for key in set(rows) | set(rhs):
                yield rows.get(key, {}), rhs.get(key, 0)


def flow_up_element(c: ConditionsLike, w: Permutation) -> GkmElement:
    C = _conditions(c)
    n = C.n
    perms = all_permutations(n)
    d = diagonal_degree(C, w)
    diag = prescribed_diagonal(C, w)
    monos = monomials_of_degree(n, d)
    wj = perms.index(w)
    cols: dict[int, dict[tuple, int]] = {}
    for j, v in enumerate(perms):
        if j != wj and bruhat_leq(w, v):
            base = len(cols) * len(monos)
            cols[j] = {e: base + m for m, e in enumerate(monos)}
    system = EchelonSystem()
    try:
        for row, rhs in _edge_equations(
                C, d, cols.get, lambda j: diag if j == wj else None):
            system.add(row, rhs)
    except Inconsistent:
        raise FlowUpError(f"no flow-up element for w={w} in H_{C}") from None
    sol = system.solve()
    V = tvars(n)
    values = [V.zero()] * len(perms)
    values[wj] = diag
    for j, mono_cols in cols.items():
        values[j] = Polynomial.from_terms(
            V, ((e, sol[col]) for e, col in mono_cols.items() if col in sol))
    f = GkmElement(n, values)
    if not in_subring(f, C):
        raise FlowUpError(f"internal error: solved element for {w} violates {C}")
    return f


@lru_cache(maxsize=None)
def _basis(C: ConditionSet) -> FlowUpBasis:
    elements, degrees = {}, {}
    for w in _ordered(C.n):
        elements[w] = flow_up_element(C, w)
        degrees[w] = diagonal_degree(C, w)
    return FlowUpBasis(C, elements, degrees, C.hessenberg())


def flow_up_basis(c: ConditionsLike) -> FlowUpBasis:
    """Flow-up basis of H_{C(h)} (or of H_C for an explicit condition set)."""
    return _basis(_conditions(c))


# -- q-polynomials -------------------------------------------------------------

@dataclass(frozen=True)
class QPolynomial:
    """A polynomial in q with nonnegative integer coefficients, low degree first."""
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        if any(not isinstance(a, int) or a < 0 for a in coeffs):
            raise ValueError(f"coefficients must be nonnegative integers: {coeffs}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> QPolynomial:
        degrees = list(degrees)
        coeffs = [0] * (max(degrees, default=-1) + 1)
        for d in degrees:
            coeffs[d] += 1
        return cls(tuple(coeffs))

    def __add__(self, other: QPolynomial) -> QPolynomial:
        m = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (m - len(self.coefficients))
        b = other.coefficients + (0,) * (m - len(other.coefficients))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        if not self.coefficients or not other.coefficients:
            return QPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return QPolynomial(tuple(out))

    def shift(self, k: int = 1) -> QPolynomial:
        """Multiply by q^k."""
        return QPolynomial((0,) * k + self.coefficients) if self.coefficients else self

    def divide_exact(self, divisor: QPolynomial) -> QPolynomial:
        """Quotient in N[q]; raises NotDivisible on a remainder or a negative coefficient."""
        if not divisor.coefficients:
            raise ZeroDivisionError("division by zero q-polynomial")
        num = list(self.coefficients)
        den = divisor.coefficients
        if len(num) < len(den):
            if any(num):
                raise NotDivisible(f"{self} is not a multiple of {divisor}")
            return QPolynomial()
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c, r = divmod(num[k + len(den) - 1], den[-1])
            if r or c < 0:
                raise NotDivisible(f"{self} is not a multiple of {divisor} in N[q]")
            quot[k] = c
            for j, b in enumerate(den):
                num[k + j] -= c * b
        if any(num):
            raise NotDivisible(f"{self} is not a multiple of {divisor}")
        return QPolynomial(tuple(quot))

    def __call__(self, q):
        return sum(a * q ** k for k, a in enumerate(self.coefficients))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k, a in enumerate(self.coefficients):
            if not a:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                parts.append(str(a))
            else:
                parts.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(parts)


ONE_PLUS_Q = QPolynomial((1, 1))


def poincare_series(c: ConditionsLike) -> QPolynomial:
    """Sum over w of q^{deg f_w}."""
    C = _conditions(c)
    return QPolynomial.from_degrees(diagonal_degree(C, w) for w in all_permutations(C.n))


def verify_graded_modular(h_minus: HessenbergFunction, h: HessenbergFunction,
                          h_plus: HessenbergFunction, i: int) -> Report:
    """
    Check that (1+q) divides Poin(h-) and Poin(h+) and that
    Poin(h) = Poin(h+)/(1+q) + q Poin(h-)/(1+q).
    """
    rep = Report(f"graded-modular {h_minus} {h} {h_plus} i={i}")
    C = hessenberg_conditions(h)
    tau = is_almost_stable(C, i)
    valid = (tau is not None
             and hessenberg_conditions(h_minus) == C.without(tau)
             and hessenberg_conditions(h_plus) == C.with_(conjugate_by_adjacent(tau, i)))
    if not rep.add("valid-triple", valid,
                   "" if valid else f"C({h}) is not almost-s_{i}-stable with C(h-), C(h+) as C-, C+"):
        return rep
    rep.add("C+-stable", is_stable(hessenberg_conditions(h_plus), i))
    rep.add("C--stable", is_stable(hessenberg_conditions(h_minus), i))
    p, pm, pp = poincare_series(h), poincare_series(h_minus), poincare_series(h_plus)
    quotients = {}
    for name, series in (("plus", pp), ("minus", pm)):
        try:
            quotients[name] = series.divide_exact(ONE_PLUS_Q)
            rep.add(f"divisible-{name}", True, f"({series})/(1+q) = {quotients[name]}")
        except NotDivisible as exc:
            rep.add(f"divisible-{name}", False, str(exc))
    if len(quotients) == 2:
        rhs = quotients["plus"] + quotients["minus"].shift(1)
        rep.add("identity", rhs == p, f"Poin(h) = {p}; Poin(h+)/(1+q) + q Poin(h-)/(1+q) = {rhs}")
    return rep


# -- graded dimension checks -------------------------------------------------

def graded_dimension(c: ConditionsLike, d: int) -> int:
    """dim_Q of the degree-d part of H_C, by linear algebra on vertex values."""
    C = _conditions(c)
    n = C.n
    monos = monomials_of_degree(n, d)
    cols = {j: {e: j * len(monos) + m for m, e in enumerate(monos)}
            for j in range(len(all_permutations(n)))}
    system = EchelonSystem()
    for row, _ in _edge_equations(C, d, cols.get, lambda j: None):
        system.add(row)
    return len(cols) * len(monos) - system.rank


def span_dimension(basis: FlowUpBasis, d: int) -> int:
    """dim_Q of the degree-d slice of the Q[t]-span of the basis."""
    n = basis.n
    monos = monomials_of_degree(n, d)
    col = {e: m for m, e in enumerate(monos)}
    V = tvars(n)
    system = EchelonSystem()
    for w, f in basis:
        k = d - basis.degrees[w]
        if k < 0:
            continue
        for e in monomials_of_degree(n, k):
            g = f * V.monomial(e)
            row = {}
            for j, p in enumerate(g.values):
                for m, c in p.terms.items():
                    row[j * len(monos) + col[m]] = c
            system.add(row)
    return system.rank
