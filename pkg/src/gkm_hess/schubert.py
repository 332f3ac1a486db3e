"""
Divided differences on R = Q[t; x] and the (double) Schubert recursions.

Both tables are built by walking down the weak order from w0. Every
permutation is reached along each of its ascending edges; the first arrival
is stored and every later one is compared against it, which checks that the
recursion is independent of the chosen reduced word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .exactpoly import NotDivisible, Polynomial, exact_divide, permute_x_vars
from .gkm import phi, rvars
from .report import Report
from .symgroup import Permutation, adjacent, all_permutations, bruhat_leq, longest


class PathDependence(AssertionError):
    """Two reduced paths of the recursion gave different polynomials."""


def poly_divided_difference(i: int, p: Polynomial) -> Polynomial:
    """(p - p*s_i) / (x_i - x_{i+1}); always exact in R."""
    V = p.varset
    n = V.x_count
    diff = p - permute_x_vars(p, adjacent(i, n))
    try:
        return exact_divide(diff, V.x(i) - V.x(i + 1))
    except NotDivisible:  # pragma: no cover - impossible for polynomials
        raise AssertionError("divided difference on R was not exact") from None


@dataclass(frozen=True)
class SchubertTable:
    n: int
    polys: dict[Permutation, Polynomial]
    double: bool = False
    # number of redundant derivations compared for path independence
    path_checks: int = 0

    def __getitem__(self, w: Permutation) -> Polynomial:
        return self.polys[w]

    def to_dict(self) -> dict[str, str]:
        return {str(w): str(self.polys[w]) for w in all_permutations(self.n)}


def _top_single(n: int) -> Polynomial:
    R = rvars(n)
    out = R.one()
    for i in range(1, n + 1):
        out = out * R.x(i) ** (n - i)
    return out


def _top_double(n: int) -> Polynomial:
    R = rvars(n)
    out = R.one()
    for i in range(1, n + 1):
        for k in range(1, n + 1 - i):
            out = out * (R.x(i) - R.t(k))
    return out


def _table(n: int, top: Polynomial, double: bool) -> SchubertTable:
    w0 = longest(n)
    polys = {w0: top}
    checks = 0
    queue = deque([w0])
    done = set()
    while queue:
        w = queue.popleft()
        if w in done:
            continue
        done.add(w)
        for i in w.descents():
            u = w * adjacent(i, n)
            p = poly_divided_difference(i, polys[w])
            if u in polys:
                checks += 1
                if polys[u] != p:
                    raise PathDependence(f"S_{u} differs along s_{i} from {w}")
            else:
                polys[u] = p
                queue.append(u)
    return SchubertTable(n, polys, double, checks)


def schubert_table(n: int) -> SchubertTable:
    if n < 1:
        raise ValueError("n must be positive")
    return _table(n, _top_single(n), False)


def double_schubert_table(n: int) -> SchubertTable:
    if n < 1:
        raise ValueError("n must be positive")
    return _table(n, _top_double(n), True)


def set_t_to_zero(p: Polynomial) -> Polynomial:
    V = p.varset
    return p.remap(V, [None] * V.t_count + list(range(V.t_count, V.size)))


def _is_product_of_root_factors(p: Polynomial, degree: int) -> bool:
    """Whether p is +-(product of `degree` factors t_a - t_b)."""
    V = p.varset
    factors = [V.t(a) - V.t(b) for a in range(1, V.t_count + 1) for b in range(a + 1, V.t_count + 1)]
    rest = p
    for _ in range(degree):
        for g in factors:
            try:
                rest = exact_divide(rest, g)
                break
            except NotDivisible:
                continue
        else:
            return False
    return rest.constant_value() in (1, -1)


def double_schubert_flow_up_check(n: int) -> Report:
    """phi of each double Schubert polynomial is flow-up with a root-product diagonal."""
    if n > 4:
        raise ValueError("desk scale only: n <= 4")
    rep = Report(f"verify double-schubert n={n}")
    table = double_schubert_table(n)
    for w in all_permutations(n):
        f = phi(table[w])
        outside = [str(v) for v, p in f.items() if p and not bruhat_leq(w, v)]
        rep.add(f"n={n}/S'{w}/support", not outside, f"nonzero at {outside}" if outside else "")
        diag = f[w]
        rep.add(f"n={n}/S'{w}/diagonal", _is_product_of_root_factors(diag, w.length()),
                f"phi(S'_w)(w) = {diag}")
    return rep


def check_recursions(n: int) -> Report:
    """Path independence of both recursions, the t = 0 specialization, and degrees."""
    rep = Report(f"verify schubert n={n}")
    try:
        single = schubert_table(n)
        rep.add(f"n={n}/single/path-independence", True, f"{single.path_checks} redundant paths agree")
        double = double_schubert_table(n)
        rep.add(f"n={n}/double/path-independence", True, f"{double.path_checks} redundant paths agree")
    except PathDependence as exc:
        rep.add(f"n={n}/path-independence", False, str(exc))
        return rep
    for w in all_permutations(n):
        rep.add(f"n={n}/S{w}/t=0", set_t_to_zero(double[w]) == single[w])
        degs = {sum(e) for e in single[w].terms} | {sum(e) for e in double[w].terms}
        rep.add(f"n={n}/S{w}/homogeneous", degs == {w.length()}, f"degrees {sorted(degs)}")
        rep.add(f"n={n}/S{w}/x-only", single[w].variables_used() <= {f"x{i}" for i in range(1, n + 1)})
    return rep
