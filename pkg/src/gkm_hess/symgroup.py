"""
The symmetric group S_n on {1, ..., n}, in one-line notation.

Composition follows function composition, ``(v*w)(i) == v(w(i))``, so
right multiplication by ``s_i`` swaps positions i and i+1 of the one-line
notation, and left multiplication swaps the values i and i+1.

>>> s1, s2 = adjacent(1, 3), adjacent(2, 3)
>>> s1 * s2
Permutation([2,3,1])
>>> longest(3)
Permutation([3,2,1])
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable

__all__ = [
    "Permutation", "Transposition", "identity", "adjacent", "longest",
    "compose", "inverse", "all_permutations", "bruhat_leq",
    "conjugate_by_adjacent", "subgroup_generated", "coset_representatives",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n}; ordering of instances is lex on one-line notation."""
    one_line: tuple[int, ...]

    def __post_init__(self):
        one_line = tuple(self.one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"not a permutation of 1..{len(one_line)}: {one_line}")
        object.__setattr__(self, "one_line", one_line)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __iter__(self):
        return iter(self.one_line)

    def __len__(self) -> int:
        return len(self.one_line)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        return inverse(self)

    def length(self) -> int:
        """Number of inversions."""
        w = self.one_line
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def descents(self) -> list[int]:
        """Right descents: the i with w(i) > w(i+1)."""
        w = self.one_line
        return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]

    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self.one_line, 1))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.one_line)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({self})"

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``[2,1,3]`` (brackets and separators optional for n < 10)."""
        body = text.strip().strip("[]").strip()
        if "," in body:
            parts = [p for p in body.split(",")]
        elif " " in body:
            parts = body.split()
        else:
            parts = list(body)
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition (i <-> k), normalized so that i < k."""
    i: int
    k: int

    def __post_init__(self):
        i, k = self.i, self.k
        if i == k or min(i, k) < 1:
            raise ValueError(f"bad transposition ({i}<->{k})")
        if i > k:
            object.__setattr__(self, "i", k)
            object.__setattr__(self, "k", i)

    def as_permutation(self, n: int) -> Permutation:
        if self.k > n:
            raise ValueError(f"({self.i}<->{self.k}) is not in S_{n}")
        w = list(range(1, n + 1))
        w[self.i - 1], w[self.k - 1] = w[self.k - 1], w[self.i - 1]
        return Permutation(tuple(w))

    def moves(self, a: int) -> bool:
        return a in (self.i, self.k)

    def other(self, a: int) -> int:
        """The index swapped with `a`."""
        if a == self.i:
            return self.k
        if a == self.k:
            return self.i
        raise ValueError(f"{a} is not moved by {self}")

    def __str__(self) -> str:
        return f"({self.i},{self.k})"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def adjacent(i: int, n: int) -> Permutation:
    """s_i = (i <-> i+1) in S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} is not in S_{n}")
    return Transposition(i, i + 1).as_permutation(n)


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def compose(v: Permutation, w: Permutation) -> Permutation:
    if v.n != w.n:
        raise ValueError(f"size mismatch: S_{v.n} and S_{w.n}")
    vl = v.one_line
    return Permutation(tuple(vl[a - 1] for a in w.one_line))


def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n
    for i, a in enumerate(w.one_line, 1):
        out[a - 1] = i
    return Permutation(tuple(out))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """S_n in lexicographic order of one-line notation."""
    return tuple(Permutation(p) for p in permutations(range(1, n + 1)))


def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """
    Whether v <= w in Bruhat order, by the rank-matrix criterion:
    #{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
    """
    if v.n != w.n:
        raise ValueError(f"size mismatch: S_{v.n} and S_{w.n}")
    n = v.n
    cv = [0] * (n + 2)
    cw = [0] * (n + 2)
    for i in range(n):
        # cv[j] counts a <= i with v(a) >= j
        for j in range(1, v.one_line[i] + 1):
            cv[j] += 1
        for j in range(1, w.one_line[i] + 1):
            cw[j] += 1
        if any(cv[j] > cw[j] for j in range(1, n + 1)):
            return False
    return True


def conjugate_by_adjacent(tau: Transposition, i: int) -> Transposition:
    """s_i tau s_i, i.e. tau with the labels i and i+1 exchanged."""
    swap = {i: i + 1, i + 1: i}
    return Transposition(swap.get(tau.i, tau.i), swap.get(tau.k, tau.k))


def conjugate(tau: Transposition, w: Permutation) -> Transposition:
    """w^{-1} tau w, which swaps w^{-1}(i) and w^{-1}(k)."""
    winv = inverse(w)
    return Transposition(winv(tau.i), winv(tau.k))


def subgroup_generated(generators: Iterable[Transposition], n: int) -> frozenset[Permutation]:
    """The subgroup of S_n generated by the given transpositions (closure)."""
    gens = [t.as_permutation(n) for t in generators]
    group = {identity(n)}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(group)


def coset_representatives(generators: Iterable[Transposition], n: int) -> list[Permutation]:
    """Lex-least representative of each left coset w<C>, in lex order."""
    group = subgroup_generated(generators, n)
    seen: set[Permutation] = set()
    reps = []
    for w in all_permutations(n):
        if w in seen:
            continue
        reps.append(w)
        seen.update(w * g for g in group)
    return reps
