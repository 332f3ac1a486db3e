"""
Exact sparse multivariate polynomials over the rationals.

A polynomial lives over a `VarSet`, which fixes the variables and their order:
``t1..tn``, then ``x1..xm``, then ``q``. Terms are stored as a dictionary from
dense exponent tuples to nonzero coefficients. Coefficients are Python ints
whenever they are integral and `fractions.Fraction` otherwise, so the common
integral case stays fast while division by 2 (and friends) stays exact.

>>> V = VarSet(t_count=3)
>>> t1, t2, t3 = V.gens()
>>> print((t1 - t2) * (t1 + t2))
t1^2 - t2^2
>>> print(exact_divide(t1**2 - t2**2, t1 - t2))
t1 + t2
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "VarSet", "Polynomial", "NotDivisible", "VarSetMismatch", "MINUS_INFINITY",
    "add", "mul", "exact_divide", "divisible", "divisible_by_difference",
    "permute_t_vars", "permute_x_vars", "homogeneous_component", "total_degree",
    "parse", "monomials_of_degree",
]

Coefficient = Union[int, Fraction]
Exponent = tuple[int, ...]

# degree of the zero polynomial; compares below every int
MINUS_INFINITY = float("-inf")


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial quotient does not exist."""


class VarSetMismatch(ValueError):
    """Raised when combining polynomials over different variable sets."""


def _norm(c: Coefficient) -> Coefficient:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Coefficient, b: Coefficient) -> Coefficient:
    if type(a) is int and type(b) is int and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _to_coefficient(c) -> Coefficient:
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    raise TypeError(f"not an exact rational coefficient: {c!r}")


@dataclass(frozen=True)
class VarSet:
    """
    The variables a polynomial may use.

    `x_extra` counts additional x-variables used as color variables for
    chromatic quasisymmetric truncations; they are numbered after the
    ordinary x-variables.
    """
    t_count: int = 0
    x_count: int = 0
    has_q: bool = False
    x_extra: int = 0

    def __post_init__(self):
        if min(self.t_count, self.x_count, self.x_extra) < 0:
            raise ValueError("variable counts must be nonnegative")

    @cached_property
    def names(self) -> tuple[str, ...]:
        names = [f"t{i}" for i in range(1, self.t_count + 1)]
        names += [f"x{i}" for i in range(1, self.x_count + self.x_extra + 1)]
        if self.has_q:
            names.append("q")
        return tuple(names)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: j for j, name in enumerate(self.names)}

    @property
    def size(self) -> int:
        return len(self.names)

    def t_index(self, i: int) -> int:
        """Position of t_i (1-based i) in exponent vectors."""
        if not 1 <= i <= self.t_count:
            raise IndexError(f"t{i} not in {self}")
        return i - 1

    def x_index(self, i: int) -> int:
        if not 1 <= i <= self.x_count + self.x_extra:
            raise IndexError(f"x{i} not in {self}")
        return self.t_count + i - 1

    @property
    def q_index(self) -> int:
        if not self.has_q:
            raise IndexError(f"q not in {self}")
        return self.size - 1

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = _to_coefficient(c)
        return Polynomial(self, {(0,) * self.size: c} if c else {})

    def var(self, name: str) -> Polynomial:
        e = [0] * self.size
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): 1})

    def t(self, i: int) -> Polynomial:
        return self.var(f"t{i}")

    def x(self, i: int) -> Polynomial:
        return self.var(f"x{i}")

    def q(self) -> Polynomial:
        return self.var("q")

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(name) for name in self.names)

    def monomial(self, exponent: Sequence[int], coefficient=1) -> Polynomial:
        if len(exponent) != self.size:
            raise ValueError("exponent length does not match the variable set")
        c = _to_coefficient(coefficient)
        return Polynomial(self, {tuple(exponent): c} if c else {})


def _glex_key(e: Exponent):
    return (sum(e), e)


def _neg_glex_key(e: Exponent):
    return (-sum(e), tuple(-a for a in e))


class Polynomial:
    """
    An immutable polynomial with exact rational coefficients.

    Supports ``+``, ``-``, ``*`` (with polynomials over the same `VarSet` or
    with int/Fraction scalars), ``**`` with a nonnegative int, equality and
    hashing. Never mutate `terms`.
    """
    __slots__ = ("varset", "terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[Exponent, Coefficient]):
        self.varset = varset
        # callers inside this module guarantee canonical terms
        self.terms: dict[Exponent, Coefficient] = dict(terms)
        self._hash = None

    @classmethod
    def from_terms(cls, varset: VarSet, terms: Iterable[tuple[Sequence[int], object]]) -> Polynomial:
        out: dict[Exponent, Coefficient] = {}
        for e, c in terms:
            e = tuple(e)
            if len(e) != varset.size or any(a < 0 for a in e):
                raise ValueError(f"bad exponent vector {e} for {varset}")
            out[e] = out.get(e, 0) + _to_coefficient(c)
        return cls(varset, {e: _norm(c) for e, c in out.items() if c})

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[Exponent, Coefficient]]:
        """Terms in canonical (graded-lex descending) order."""
        return sorted(self.terms.items(), key=lambda ec: _glex_key(ec[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Coefficient]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_glex_key)
        return e, self.terms[e]

    def constant_value(self) -> Coefficient | None:
        """The value if this polynomial is constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            if not any(e):
                return c
        return None

    def variables_used(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(name for name, a in zip(self.varset.names, e) if a)
        return used

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.varset != self.varset:
                raise VarSetMismatch(f"{self.varset} vs {other.varset}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.varset.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.varset, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Polynomial(self.varset, {e: _div(c, other) for e, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = self.varset.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = _to_coefficient(c)
        if not c:
            return self.varset.zero()
        return Polynomial(self.varset, {e: _norm(a * c) for e, a in self.terms.items()})

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.varset == other.varset and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self.terms.items())))
        return self._hash

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({to_text(self)!r})"

    # -- substitution ----------------------------------------------------

    def remap(self, target: VarSet, index_map: Sequence[int | None]) -> Polynomial:
        """
        Substitute each variable by another variable of `target` (or by 0).

        `index_map[j]` is the target position of source variable `j`, or None
        to substitute 0. Several sources may map to the same target.
        """
        out: dict[Exponent, Coefficient] = {}
        size = target.size
        for e, c in self.terms.items():
            new = [0] * size
            for j, a in enumerate(e):
                if a:
                    k = index_map[j]
                    if k is None:
                        break
                    new[k] += a
            else:
                key = tuple(new)
                out[key] = out.get(key, 0) + c
        return Polynomial(target, {e: _norm(c) for e, c in out.items() if c})


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.varset != g.varset:
        raise VarSetMismatch(f"{f.varset} vs {g.varset}")
    if not g.terms:
        return f
    if not f.terms:
        return g
    out = dict(f.terms)
    for e, c in g.terms.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = _norm(s)
        else:
            out.pop(e, None)
    return Polynomial(f.varset, out)


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.varset != g.varset:
        raise VarSetMismatch(f"{f.varset} vs {g.varset}")
    if not f.terms or not g.terms:
        return f.varset.zero()
    if len(f.terms) < len(g.terms):
        f, g = g, f
    out: dict[Exponent, Coefficient] = {}
    g_items = list(g.terms.items())
    for e1, c1 in f.terms.items():
        for e2, c2 in g_items:
            key = tuple([a + b for a, b in zip(e1, e2)])
            out[key] = out.get(key, 0) + c1 * c2
    return Polynomial(f.varset, {e: _norm(c) for e, c in out.items() if c})


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Return the unique q with f = g*q, or raise `NotDivisible`.

    Multivariate long division by a single divisor in graded-lex order. Any
    remainder term is fatal: once the leading term of the running remainder
    is not a multiple of the leading term of g, no later step can cancel it.
    """
    if f.varset != g.varset:
        raise VarSetMismatch(f"{f.varset} vs {g.varset}")
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f.terms:
        return f
    lead, lead_c = g.leading_term()
    tail = [(e, c) for e, c in g.terms.items() if e != lead]
    rem = dict(f.terms)
    heap = [(_neg_glex_key(e), e) for e in rem]
    heapq.heapify(heap)
    quotient: dict[Exponent, Coefficient] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = rem.pop(e, 0)
        if not c:
            continue
        shift = tuple([a - b for a, b in zip(e, lead)])
        if min(shift) < 0:
            raise NotDivisible(f"({f}) is not a multiple of ({g})")
        qc = _div(c, lead_c)
        quotient[shift] = qc
        for te, tc in tail:
            m = tuple([a + b for a, b in zip(shift, te)])
            old = rem.get(m)
            new = (old or 0) - qc * tc
            if new:
                rem[m] = _norm(new)
                if old is None:
                    heapq.heappush(heap, (_neg_glex_key(m), m))
            elif old is not None:
                rem[m] = 0
    return Polynomial(f.varset, quotient)


def divisible(f: Polynomial, g: Polynomial) -> bool:
    try:
        exact_divide(f, g)
    except NotDivisible:
        return False
    return True


def divisible_by_difference(f: Polynomial, a: int, b: int) -> bool:
    """
    Whether f is a multiple of (v_a - v_b), for variable positions a != b.

    Equivalent to f vanishing after substituting v_a := v_b; much cheaper than
    long division and used for membership tests.
    """
    if not f.terms:
        return True
    acc: dict[Exponent, Coefficient] = {}
    for e, c in f.terms.items():
        if e[a]:
            e = list(e)
            e[b] += e[a]
            e[a] = 0
            e = tuple(e)
        acc[e] = acc.get(e, 0) + c
    return not any(acc.values())


def permute_t_vars(f: Polynomial, w) -> Polynomial:
    """Substitute t_i -> t_{w(i)}; x and q are untouched."""
    V = f.varset
    one_line = tuple(w)
    if len(one_line) != V.t_count:
        raise ValueError(f"permutation of size {len(one_line)} acting on {V.t_count} t-variables")
    index_map = [one_line[j] - 1 for j in range(V.t_count)] + list(range(V.t_count, V.size))
    return f.remap(V, index_map)


def permute_x_vars(f: Polynomial, w) -> Polynomial:
    """Substitute x_i -> x_{w^{-1}(i)}; t and q are untouched."""
    V = f.varset
    one_line = tuple(w)
    if len(one_line) != V.x_count:
        raise ValueError(f"permutation of size {len(one_line)} acting on {V.x_count} x-variables")
    inv = [0] * len(one_line)
    for j, wj in enumerate(one_line):
        inv[wj - 1] = j
    index_map = list(range(V.size))
    for i in range(V.x_count):
        index_map[V.t_count + i] = V.t_count + inv[i]
    return f.remap(V, index_map)


def total_degree(f: Polynomial):
    """Total degree, or `MINUS_INFINITY` for the zero polynomial."""
    if not f.terms:
        return MINUS_INFINITY
    return max(sum(e) for e in f.terms)


def homogeneous_component(f: Polynomial, d: int) -> Polynomial:
    return Polynomial(f.varset, {e: c for e, c in f.terms.items() if sum(e) == d})


def is_homogeneous(f: Polynomial, d: int | None = None) -> bool:
    degrees = {sum(e) for e in f.terms}
    if d is None:
        return len(degrees) <= 1
    return degrees <= {d}


def monomials_of_degree(size: int, d: int) -> list[Exponent]:
    """All exponent vectors of length `size` and total degree `d`, graded-lex descending."""
    if size == 0:
        return [()] if d == 0 else []

    def rec(k: int, remaining: int) -> Iterator[list[int]]:
        if k == 1:
            yield [remaining]
            return
        for a in range(remaining, -1, -1):
            for rest in rec(k - 1, remaining - a):
                yield [a] + rest

    return [tuple(e) for e in rec(size, d)]


# -- text format -----------------------------------------------------------

def _coef_text(c: Coefficient) -> str:
    if type(c) is Fraction:
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _mono_text(V: VarSet, e: Exponent) -> str:
    parts = []
    for name, a in zip(V.names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def to_text(f: Polynomial) -> str:
    """Canonical text, e.g. ``2*t1^2*t2 - 1/2*t3``."""
    if not f.terms:
        return "0"
    out = []
    for k, (e, c) in enumerate(f.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _mono_text(f.varset, e)
        if not mono:
            body = _coef_text(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_coef_text(a)}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)(?:/(\d+))?|([A-Za-z]\w*)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def parse(text: str, varset: VarSet) -> Polynomial:
    """
    Parse the canonical text format (whitespace-insensitive).

    Also accepts parentheses and integer powers of parenthesized groups, which
    is convenient for fixtures: ``(t2 - t1)*(t3 - t1)``.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        num, den, name, caret, star, plus, minus, lp, rp = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(int(num), int(den)) if den else int(num)))
        elif name is not None:
            if name not in varset.index:
                raise ValueError(f"unknown variable {name!r} for {varset}")
            tokens.append(("var", name))
        else:
            tokens.append(("op", next(t for t in (caret, star, plus, minus, lp, rp) if t)))
    if not tokens:
        raise ValueError("empty polynomial text")
    parser = _Parser(tokens, varset)
    result = parser.expr()
    if parser.pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


class _Parser:
    def __init__(self, tokens, varset):
        self.tokens = tokens
        self.pos = 0
        self.V = varset

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, op):
        if self.peek() == ("op", op):
            self.pos += 1
            return True
        return False

    def expr(self) -> Polynomial:
        sign = -1 if self.take("-") else 1
        if sign == 1:
            self.take("+")
        total = self.term().scale(sign)
        while True:
            if self.take("+"):
                total = total + self.term()
            elif self.take("-"):
                total = total - self.term()
            else:
                return total

    def term(self) -> Polynomial:
        prod = self.factor()
        while self.take("*"):
            prod = prod * self.factor()
        return prod

    def factor(self) -> Polynomial:
        kind, val = self.peek()
        if kind == "num":
            self.pos += 1
            base = self.V.constant(val)
        elif kind == "var":
            self.pos += 1
            base = self.V.var(val)
        elif self.take("("):
            base = self.expr()
            if not self.take(")"):
                raise ValueError("unbalanced parentheses")
        else:
            raise ValueError(f"unexpected token {val!r}")
        if self.take("^"):
            kind, k = self.peek()
            if kind != "num" or not isinstance(k, int):
                raise ValueError("exponent must be a nonnegative integer")
            self.pos += 1
            base = base ** k
        return base
