"""
The GKM ring H = Fun(S_n, Q[t1..tn]) and its divisibility-condition subrings.

An element of H assigns a polynomial in the t-variables to every permutation.
Two commuting actions of S_n are available: the dot action (left; moves
vertices and permutes t-variables) and the star action (right; moves vertices
only). The map `phi` sends a polynomial in t and x to the element whose value
at v substitutes x_i -> t_{v(i)}.

For a transposition tau = (i <-> k), an element f satisfies condition tau
when f(v) - f(v*tau) is a multiple of t_{v(i)} - t_{v(k)} at every vertex v.
H_C is the subring of elements satisfying every condition in C; for a
Hessenberg function h, C(h) = {(i <-> k) : i < k <= h(i)}.

>>> f = phi(rvars(3).x(1))
>>> print(f)
{[1,2,3]: t1, [1,3,2]: t1, [2,1,3]: t2, [2,3,1]: t2, [3,1,2]: t3, [3,2,1]: t3}
>>> print(divided_difference(1, f))
{[1,2,3]: 1, [1,3,2]: 1, [2,1,3]: 1, [2,3,1]: 1, [3,1,2]: 1, [3,2,1]: 1}
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .exactpoly import (
    NotDivisible, Polynomial, VarSet, divisible_by_difference, exact_divide,
    parse, permute_t_vars,
)
from .symgroup import (
    Permutation, Transposition, adjacent, all_permutations, conjugate,
    conjugate_by_adjacent, coset_representatives, identity, inverse,
    subgroup_generated,
)

__all__ = [
    "GkmElement", "ConditionSet", "HessenbergFunction", "NotInDomain",
    "PreconditionError", "tvars", "rvars", "phi", "dot", "star",
    "satisfies_condition", "in_subring", "divided_difference",
    "hessenberg_conditions", "is_stable", "is_almost_stable",
    "stable_decompose", "almost_stable_decompose", "almost_stable_factor",
    "coset_indicator", "all_hessenberg",
]


class NotInDomain(ArithmeticError):
    """The element is outside H_{s_i}, so the divided difference does not exist in H."""


class PreconditionError(ValueError):
    pass


@lru_cache(maxsize=None)
def tvars(n: int) -> VarSet:
    """Variables of the value polynomials: t1..tn."""
    return VarSet(t_count=n)


@lru_cache(maxsize=None)
def rvars(n: int) -> VarSet:
    """Variables of the polynomial ring R: t1..tn, x1..xn."""
    return VarSet(t_count=n, x_count=n)


@lru_cache(maxsize=None)
def _index(n: int) -> dict[Permutation, int]:
    return {w: j for j, w in enumerate(all_permutations(n))}


@lru_cache(maxsize=None)
def _right_mult(w: Permutation) -> tuple[int, ...]:
    """j -> index of perms[j] * w."""
    idx = _index(w.n)
    return tuple(idx[v * w] for v in all_permutations(w.n))


@lru_cache(maxsize=None)
def _left_mult(w: Permutation) -> tuple[int, ...]:
    """j -> index of w * perms[j]."""
    idx = _index(w.n)
    return tuple(idx[w * v] for v in all_permutations(w.n))


class GkmElement:
    """
    An element of H, stored as a tuple of t-polynomials aligned with
    `all_permutations(n)` (lex order). Immutable.
    """
    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Sequence[Polynomial]):
        values = tuple(values)
        V = tvars(n)
        if len(values) != len(all_permutations(n)):
            raise ValueError(f"need {len(all_permutations(n))} values, got {len(values)}")
        for p in values:
            if p.varset != V:
                raise ValueError(f"vertex values must be polynomials in t1..t{n} only")
        self.n = n
        self.values = values

    @classmethod
    def zero(cls, n: int) -> GkmElement:
        z = tvars(n).zero()
        return cls(n, [z] * len(all_permutations(n)))

    @classmethod
    def constant(cls, n: int, p) -> GkmElement:
        if not isinstance(p, Polynomial):
            p = tvars(n).constant(p)
        return cls(n, [p] * len(all_permutations(n)))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping) -> GkmElement:
        """Build from {permutation or "[..]": polynomial or text}; missing vertices are 0."""
        V = tvars(n)
        idx = _index(n)
        values = [V.zero()] * len(idx)
        for w, p in mapping.items():
            if isinstance(w, str):
                w = Permutation.parse(w)
            elif not isinstance(w, Permutation):
                w = Permutation(tuple(w))
            if w.n != n:
                raise ValueError(f"{w} is not in S_{n}")
            if isinstance(p, str):
                p = parse(p, V)
            elif not isinstance(p, Polynomial):
                p = V.constant(p)
            values[idx[w]] = p
        return cls(n, values)

    def __getitem__(self, w: Permutation) -> Polynomial:
        return self.values[_index(self.n)[w]]

    def items(self) -> Iterator[tuple[Permutation, Polynomial]]:
        return zip(all_permutations(self.n), self.values)

    def support(self) -> list[Permutation]:
        return [w for w, p in self.items() if p]

    def is_zero(self) -> bool:
        return not any(self.values)

    def _check(self, other: GkmElement) -> None:
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: GkmElement) -> GkmElement:
        if not isinstance(other, GkmElement):
            return NotImplemented
        self._check(other)
        return GkmElement(self.n, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: GkmElement) -> GkmElement:
        if not isinstance(other, GkmElement):
            return NotImplemented
        self._check(other)
        return GkmElement(self.n, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> GkmElement:
        return GkmElement(self.n, [-a for a in self.values])

    def __mul__(self, other) -> GkmElement:
        if isinstance(other, GkmElement):
            self._check(other)
            return GkmElement(self.n, [a * b for a, b in zip(self.values, other.values)])
        if isinstance(other, (Polynomial, int, Fraction)) and not isinstance(other, bool):
            return GkmElement(self.n, [a * other for a in self.values])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c) -> GkmElement:
        return GkmElement(self.n, [a / c for a in self.values])

    def __eq__(self, other) -> bool:
        if not isinstance(other, GkmElement):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.n, self.values))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{w}: {p}" for w, p in self.items()) + "}"

    def __repr__(self) -> str:
        return f"GkmElement({self})"

    def degree(self):
        from .exactpoly import total_degree
        return max(total_degree(p) for p in self.values)

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "values": {str(w): str(p) for w, p in self.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> GkmElement:
        n = int(data["n"])
        values = data["values"]
        keys = {str(Permutation.parse(k)) for k in values}
        expected = {str(w) for w in all_permutations(n)}
        if keys != expected:
            missing = sorted(expected - keys)
            extra = sorted(keys - expected)
            raise ValueError(f"GKM element must list all {len(expected)} vertices"
                             f" (missing {missing}, unexpected {extra})")
        return cls.from_mapping(n, values)

    @classmethod
    def from_json(cls, text: str) -> GkmElement:
        return cls.from_dict(json.loads(text))


# -- phi and the two actions -------------------------------------------------

def phi(p: Polynomial) -> GkmElement:
    """Value at v: substitute x_i -> t_{v(i)}; t-variables pass through."""
    V = p.varset
    n = V.t_count
    if V.x_count not in (0, n) or V.has_q or V.x_extra:
        raise ValueError("phi needs a polynomial in t1..tn, x1..xn")
    target = tvars(n)
    if V.x_count == 0:
        return GkmElement.constant(n, p.remap(target, list(range(n))))
    values = []
    for v in all_permutations(n):
        index_map = list(range(n)) + [v(i) - 1 for i in range(1, n + 1)]
        values.append(p.remap(target, index_map))
    return GkmElement(n, values)


def phi_x(i: int, n: int) -> GkmElement:
    return phi(rvars(n).x(i))


def dot(w: Permutation, f: GkmElement) -> GkmElement:
    """(w . f)(v) = f(w^{-1} v) with t_j replaced by t_{w(j)}."""
    if w.n != f.n:
        raise ValueError(f"size mismatch: S_{w.n} acting on rank {f.n}")
    src = _left_mult(inverse(w))
    return GkmElement(f.n, [permute_t_vars(f.values[src[j]], w) for j in range(len(src))])


def star(f: GkmElement, w: Permutation) -> GkmElement:
    """(f * w)(v) = f(v w^{-1})."""
    if w.n != f.n:
        raise ValueError(f"size mismatch: S_{w.n} acting on rank {f.n}")
    src = _right_mult(inverse(w))
    return GkmElement(f.n, [f.values[src[j]] for j in range(len(src))])


# -- divisibility conditions -------------------------------------------------

def satisfies_condition(f: GkmElement, tau: Transposition) -> bool:
    n = f.n
    pair = _right_mult(tau.as_permutation(n))
    perms = all_permutations(n)
    for j, v in enumerate(perms):
        u = pair[j]
        if u < j:
            continue
        diff = f.values[j] - f.values[u]
        if diff and not divisible_by_difference(diff, v(tau.i) - 1, v(tau.k) - 1):
            return False
    return True


def in_subring(f: GkmElement, C: ConditionSet | Iterable[Transposition]) -> bool:
    return all(satisfies_condition(f, tau) for tau in C)


def failed_condition(f: GkmElement, C) -> tuple[Transposition, Permutation] | None:
    """First (tau, vertex) at which f violates a condition of C, for diagnostics."""
    n = f.n
    for tau in C:
        pair = _right_mult(tau.as_permutation(n))
        for j, v in enumerate(all_permutations(n)):
            diff = f.values[j] - f.values[pair[j]]
            if diff and not divisible_by_difference(diff, v(tau.i) - 1, v(tau.k) - 1):
                return tau, v
    return None


def divided_difference(i: int, f: GkmElement) -> GkmElement:
    """
    (f - f*s_i) / (x_i - x_{i+1}), computed vertexwise.

    Raises `NotInDomain` when some vertex quotient does not exist, i.e. when
    f is not in H_{s_i}.
    """
    n = f.n
    s = adjacent(i, n)
    pair = _right_mult(s)
    V = tvars(n)
    out: list[Polynomial | None] = [None] * len(pair)
    for j, v in enumerate(all_permutations(n)):
        u = pair[j]
        if out[j] is not None:
            continue
        # orient the edge so that v(i) < v(i+1)
        if v(i) > v(i + 1):
            j, u, v = u, j, all_permutations(n)[u]
        diff = f.values[j] - f.values[u]
        if not diff:
            q = V.zero()
        else:
            try:
                q = exact_divide(diff, V.t(v(i)) - V.t(v(i + 1)))
            except NotDivisible:
                raise NotInDomain(f"f is not in H_s{i}: fails at vertex {v}") from None
        out[j] = out[u] = q
    return GkmElement(n, out)


# -- condition sets and Hessenberg functions -------------------------------

@dataclass(frozen=True)
class HessenbergFunction:
    h: tuple[int, ...]

    def __post_init__(self):
        h = tuple(self.h)
        object.__setattr__(self, "h", h)
        n = len(h)
        if n == 0:
            raise ValueError("empty Hessenberg function")
        for i in range(n - 1):
            if h[i] > h[i + 1]:
                raise ValueError(f"not a Hessenberg function: not nondecreasing at {i + 1}")
        for i, hi in enumerate(h, 1):
            if not i <= hi <= n:
                raise ValueError(f"not a Hessenberg function: need {i} <= h({i}) <= {n}, got {hi}")

    @property
    def n(self) -> int:
        return len(self.h)

    def __call__(self, i: int) -> int:
        return self.h[i - 1]

    def conditions(self) -> ConditionSet:
        return hessenberg_conditions(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.h)) + "]"

    @classmethod
    def parse(cls, text: str) -> HessenbergFunction:
        body = text.strip().strip("[]")
        parts = [p for p in re.split(r"[,\s]+", body) if p]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"invalid Hessenberg function {text!r}: {exc}") from None


@lru_cache(maxsize=None)
def all_hessenberg(n: int) -> tuple[HessenbergFunction, ...]:
    """All Hessenberg functions for S_n, in lex order."""
    out = []

    def rec(prefix):
        i = len(prefix) + 1
        if i > n:
            out.append(HessenbergFunction(tuple(prefix)))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for hi in range(lo, n + 1):
            rec(prefix + [hi])

    rec([])
    return tuple(out)


@dataclass(frozen=True)
class ConditionSet:
    n: int
    conditions: frozenset[Transposition]

    def __post_init__(self):
        conds = frozenset(
            t if isinstance(t, Transposition) else Transposition(*t) for t in self.conditions)
        for t in conds:
            if t.k > self.n:
                raise ValueError(f"condition {t} out of range for n={self.n}")
        object.__setattr__(self, "conditions", conds)

    @classmethod
    def of(cls, n: int, pairs: Iterable = ()) -> ConditionSet:
        return cls(n, frozenset(pairs))

    def __iter__(self) -> Iterator[Transposition]:
        return iter(sorted(self.conditions))

    def __len__(self) -> int:
        return len(self.conditions)

    def __contains__(self, tau) -> bool:
        if not isinstance(tau, Transposition):
            tau = Transposition(*tau)
        return tau in self.conditions

    def with_(self, tau: Transposition) -> ConditionSet:
        return ConditionSet(self.n, self.conditions | {tau})

    def without(self, tau: Transposition) -> ConditionSet:
        return ConditionSet(self.n, self.conditions - {tau})

    def conjugate_by_adjacent(self, i: int) -> ConditionSet:
        """s_i C s_i."""
        return ConditionSet(self.n, frozenset(conjugate_by_adjacent(t, i) for t in self.conditions))

    def conjugate(self, w: Permutation) -> ConditionSet:
        """w^{-1} C w."""
        return ConditionSet(self.n, frozenset(conjugate(t, w) for t in self.conditions))

    def hessenberg(self) -> HessenbergFunction | None:
        """The h with C(h) == self, if there is one."""
        h = [i for i in range(1, self.n + 1)]
        for t in self.conditions:
            h[t.i - 1] = max(h[t.i - 1], t.k)
        try:
            hf = HessenbergFunction(tuple(h))
        except ValueError:
            return None
        return hf if hessenberg_conditions(hf) == self else None

    def __str__(self) -> str:
        if not self.conditions:
            return "{}"
        return "{" + ", ".join(str(t) for t in self) + "}"


def hessenberg_conditions(h: HessenbergFunction) -> ConditionSet:
    n = h.n
    return ConditionSet(n, frozenset(
        Transposition(i, k) for i in range(1, n + 1) for k in range(i + 1, h(i) + 1)))


def _s(i: int) -> Transposition:
    return Transposition(i, i + 1)


def is_stable(C: ConditionSet, i: int) -> bool:
    """s_i in C and s_i C s_i == C."""
    _check_index(C.n, i)
    return _s(i) in C and C.conjugate_by_adjacent(i) == C


def is_almost_stable(C: ConditionSet, i: int) -> Transposition | None:
    """
    The unique tau in C with s_i tau s_i not in C, when s_i is in C and there
    is exactly one such tau; otherwise None.
    """
    _check_index(C.n, i)
    if _s(i) not in C:
        return None
    escaping = [t for t in C if conjugate_by_adjacent(t, i) not in C]
    return escaping[0] if len(escaping) == 1 else None


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range 1..{n - 1}")


# -- decompositions --------------------------------------------------------

def stable_decompose(f: GkmElement, i: int, C: ConditionSet,
                     check: bool = True) -> tuple[GkmElement, GkmElement]:
    """
    Split f in H_C (C s_i-stable) as f = g + (x_i - x_{i+1}) h with g, h fixed
    by the star action of s_i. Returns (g, h).
    """
    if not is_stable(C, i):
        raise PreconditionError(f"{C} is not s_{i}-stable")
    if check and not in_subring(f, C):
        raise PreconditionError("element is not in H_C")
    s = adjacent(i, f.n)
    g = (f + star(f, s)) / 2
    h = divided_difference(i, f) / 2
    return g, h


def almost_stable_factor(C: ConditionSet, i: int) -> GkmElement:
    """
    The linear form multiplying the second summand: x_i - x_k when the
    escaping transposition is (i <-> k), and x_k - x_{i+1} when it is
    (i+1 <-> k).
    """
    tau = is_almost_stable(C, i)
    if tau is None:
        raise PreconditionError(f"{C} is not almost-s_{i}-stable")
    R = rvars(C.n)
    if tau.moves(i):
        k = tau.other(i)
        return phi(R.x(i) - R.x(k))
    k = tau.other(i + 1)
    return phi(R.x(k) - R.x(i + 1))


def almost_stable_decompose(f: GkmElement, i: int, C: ConditionSet,
                            check: bool = True) -> tuple[GkmElement, GkmElement]:
    """
    Split f in H_C (C almost-s_i-stable) as f = p + L*m where L is
    `almost_stable_factor(C, i)`, p in H_{C+} and m in H_{C-}, both fixed by
    the star action of s_i. Returns (p, m).

    The (i+1 <-> k) case is reduced to the (i <-> k) case by the involution
    f -> f * s_i, which carries H_C onto H_{s_i C s_i}.
    """
    tau = is_almost_stable(C, i)
    if tau is None:
        raise PreconditionError(f"{C} is not almost-s_{i}-stable")
    if check and not in_subring(f, C):
        raise PreconditionError("element is not in H_C")
    n = f.n
    if tau.moves(i):
        k = tau.other(i)
        R = rvars(n)
        p = divided_difference(i, phi(R.x(k) - R.x(i + 1)) * f)
        m = divided_difference(i, f)
        return p, m
    s = adjacent(i, n)
    p, m = almost_stable_decompose(star(f, s), i, C.conjugate_by_adjacent(i), check=False)
    # both parts are star-s_i fixed, and (x_i - x_k) * s_i = -(x_k - x_{i+1})
    return p, -m


def almost_stable_parts(C: ConditionSet, i: int) -> tuple[Transposition, ConditionSet, ConditionSet]:
    """(tau, C-, C+) for an almost-s_i-stable C."""
    tau = is_almost_stable(C, i)
    if tau is None:
        raise PreconditionError(f"{C} is not almost-s_{i}-stable")
    return tau, C.without(tau), C.with_(conjugate_by_adjacent(tau, i))


def coset_indicator(C: ConditionSet | Iterable[Transposition], n: int | None = None) -> GkmElement:
    """1 on the subgroup generated by C, 0 elsewhere."""
    if isinstance(C, ConditionSet):
        n = C.n
    if n is None:
        raise ValueError("rank needed")
    group = subgroup_generated(C, n)
    V = tvars(n)
    return GkmElement(n, [V.one() if w in group else V.zero() for w in all_permutations(n)])


def coset_decomposition(f: GkmElement, C: ConditionSet) -> list[tuple[Permutation, GkmElement]]:
    """Pairs (w, f_w) with f_w = 1_<C> (w^{-1} . f), so that f = sum of w . f_w."""
    ind = coset_indicator(C)
    return [(w, ind * dot(inverse(w), f)) for w in coset_representatives(C, C.n)]
