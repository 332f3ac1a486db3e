"""
Sparse exact Gaussian elimination over Q.

Rows are dicts {column: coefficient}. Each stored pivot row has all its
entries at columns greater than its pivot, so back substitution in
decreasing pivot order solves the system with every free variable set to 0.
"""

from __future__ import annotations

import heapq
from fractions import Fraction


class Inconsistent(ArithmeticError):
    pass


class EchelonSystem:
    def __init__(self):
        # pivot column -> (row without the pivot entry, rhs); pivot coefficient is 1
        self.pivots: dict[int, tuple[dict[int, Fraction], Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: dict[int, object], rhs=0) -> bool:
        """Add an equation; return True if it increased the rank."""
        row = {c: Fraction(a) for c, a in row.items() if a}
        rhs = Fraction(rhs)
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = row.get(c)
            if not a:
                continue
            piv = self.pivots.get(c)
            if piv is None:
                continue
            prow, prhs = piv
            del row[c]
            for pc, pa in prow.items():
                old = row.get(pc)
                new = (old or 0) - a * pa
                if new:
                    row[pc] = new
                    if old is None:
                        heapq.heappush(heap, pc)
                elif old is not None:
                    del row[pc]
            rhs -= a * prhs
        if not row:
            if rhs:
                raise Inconsistent("inconsistent linear system")
            return False
        p = min(row)
        a = row.pop(p)
        self.pivots[p] = ({c: v / a for c, v in row.items()}, rhs / a)
        return True

    def solve(self) -> dict[int, Fraction]:
        """A solution with all free variables 0; only nonzero entries are returned."""
        x: dict[int, Fraction] = {}
        for p in sorted(self.pivots, reverse=True):
            prow, prhs = self.pivots[p]
            val = prhs - sum((a * x[c] for c, a in prow.items() if c in x), Fraction(0))
            if val:
                x[p] = val
        return x
