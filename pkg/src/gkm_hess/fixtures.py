"""
Hand-entered n <= 4 reference data and routines that check it.

Values use the abbreviation ``tab`` for (t_a - t_b), e.g. ``t21*t31`` is
(t2 - t1)(t3 - t1). Vertices are keyed by names (id, s1, s2, s1s2, s2s1, w0)
for n = 3 and by one-line notation otherwise.
"""

from __future__ import annotations

import re

from .exactpoly import Polynomial, parse
from .flowup import diagonal_degree, prescribed_diagonal
from .gkm import (
    ConditionSet, GkmElement, HessenbergFunction, NotInDomain, coset_indicator,
    divided_difference, failed_condition, hessenberg_conditions, in_subring, phi,
    rvars, tvars,
)
from .report import Report
from .symgroup import Permutation, all_permutations, bruhat_leq

S3_NAMES = {
    "id": "[1,2,3]", "s1": "[2,1,3]", "s2": "[1,3,2]",
    "s1s2": "[2,3,1]", "s2s1": "[3,1,2]", "w0": "[3,2,1]",
}

_TIK = re.compile(r"\bt(\d)(\d)\b")


def expand_tik(text: str) -> str:
    """Rewrite ``t21`` as ``(t2 - t1)``."""
    return _TIK.sub(r"(t\1 - t\2)", text)


def _vertex(name: str) -> str:
    return S3_NAMES.get(name, name)


def element(n: int, values: dict[str, str]) -> GkmElement:
    """Build an element from {vertex: abbreviated polynomial}; other vertices are 0."""
    V = tvars(n)
    return GkmElement.from_mapping(n, {_vertex(k): parse(expand_tik(v), V) for k, v in values.items()})


# Flow-up bases for n = 3, keyed by h then by the index w of f_w.
REFERENCE_BASES: dict[str, dict[str, dict[str, str]]] = {
    "1,2,3": {w: {w: "1"} for w in S3_NAMES},
    "2,2,3": {
        "s1s2": {"s1s2": "1", "w0": "1"},
        "w0": {"w0": "t32"},
        "s2s1": {"s2s1": "t31"},
        "s1": {"s1": "t21"},
        "id": {"id": "1", "s1": "1"},
        "s2": {"s2": "1", "s2s1": "1"},
    },
    "1,3,3": {
        "s1s2": {"s1s2": "t31"},
        "w0": {"w0": "t21"},
        "s2s1": {"s2s1": "1", "w0": "1"},
        "s1": {"s1": "1", "s1s2": "1"},
        "id": {"id": "1", "s2": "1"},
        "s2": {"s2": "t32"},
    },
    "2,3,3": {
        "s1s2": {"s1s2": "t31", "w0": "t21"},
        "w0": {"w0": "t21*t32"},
        "s2s1": {"s2s1": "t31", "w0": "t32"},
        "s1": {"s1": "t21", "s1s2": "t23"},
        "id": {w: "1" for w in S3_NAMES},
        "s2": {"s2": "t32", "s2s1": "t12"},
    },
    "3,3,3": {
        "s1s2": {"s1s2": "t21*t31", "w0": "t21*t31"},
        "w0": {"w0": "t21*t31*t32"},
        "s2s1": {"s2s1": "t31*t32", "w0": "t31*t32"},
        "s1": {"s1": "t21", "s1s2": "t21", "s2s1": "t31", "w0": "t31"},
        "id": {w: "1" for w in S3_NAMES},
        "s2": {"s2": "t32", "s1s2": "t31", "s2s1": "t32", "w0": "t31"},
    },
}

# Drawn arrows (h, i, source, target): the i-th divided difference of the
# source basis element is drawn as the target basis element.
REFERENCE_ARROWS: list[tuple[str, int, str, str]] = [
    ("2,2,3", 1, "w0", "s1s2"),
    ("2,2,3", 1, "s2s1", "s2"),
    ("2,2,3", 1, "s1", "id"),
    ("1,3,3", 2, "w0", "s2s1"),
    ("1,3,3", 2, "s1s2", "s1"),
    ("1,3,3", 2, "s2", "id"),
    ("2,3,3", 1, "w0", "s1s2"),
    ("2,3,3", 2, "w0", "s2s1"),
    ("3,3,3", 1, "w0", "s1s2"),
    ("3,3,3", 1, "s2s1", "s2"),
    ("3,3,3", 1, "s1", "id"),
    ("3,3,3", 2, "w0", "s2s1"),
    ("3,3,3", 2, "s1s2", "s1"),
    ("3,3,3", 2, "s2", "id"),
]


def reference_basis(h: str) -> dict[Permutation, GkmElement]:
    return {Permutation.parse(_vertex(w)): element(3, vals)
            for w, vals in REFERENCE_BASES[h].items()}


def check_reference_fixtures() -> Report:
    """Membership, triangularity, diagonals and every drawn arrow, exactly."""
    rep = Report("verify appendix-fixtures")
    for key in REFERENCE_BASES:
        h = HessenbergFunction.parse(key)
        C = hessenberg_conditions(h)
        basis = reference_basis(key)
        rep.add(f"h={h}/complete", sorted(basis) == list(all_permutations(3)))
        for w, f in sorted(basis.items()):
            bad = failed_condition(f, C)
            rep.add(f"h={h}/f{w}/membership", bad is None,
                    "" if bad is None else f"violates {bad[0]} at {bad[1]}",
                    None if bad is None else f.to_dict())
            outside = [str(v) for v, p in f.items() if p and not bruhat_leq(w, v)]
            rep.add(f"h={h}/f{w}/triangular", not outside,
                    f"nonzero at {outside}" if outside else "")
            diag = prescribed_diagonal(C, w)
            rep.add(f"h={h}/f{w}/diagonal", f[w] == diag, f"f(w) = {f[w]}, expected {diag}")
            deg = diagonal_degree(C, w)
            homog = all(not p or {sum(e) for e in p.terms} == {deg} for _, p in f.items())
            rep.add(f"h={h}/f{w}/degree", homog, f"degree {deg}")
    for key, i, src, dst in REFERENCE_ARROWS:
        basis = reference_basis(key)
        source = basis[Permutation.parse(_vertex(src))]
        target = basis[Permutation.parse(_vertex(dst))]
        label = f"h=[{key}]/d{i}: f_{src} -> f_{dst}"
        try:
            image = divided_difference(i, source)
        except NotInDomain as exc:
            rep.add(label, False, str(exc))
            continue
        ok = image == target
        rep.add(label, ok, "" if ok else f"got {image}, drawn {target}",
                None if ok else {"image": image.to_dict(), "drawn": target.to_dict()})
    return rep


# -- minimal s_1-stable cases ------------------------------------------------

# For each case: rank, the conditions, and chains of basis elements. A chain
# lists (polynomial in R times the coset indicator, displayed values); each
# divided difference d1 maps an entry to the next, and the last entry to 0.
MINIMAL_CASES: dict[str, dict] = {
    "C(1,s1)": {
        "n": 2,
        "conditions": [(1, 2)],
        "chains": [
            [("x1 - t1", {"[2,1]": "t21"}),
             ("1", {"[1,2]": "1", "[2,1]": "1"})],
        ],
    },
    "C(1,s3)": {
        "n": 4,
        "conditions": [(1, 2), (3, 4)],
        "chains": [
            [("(x1 - t1)*(x3 - t3)", {"[2,1,4,3]": "t21*t43"}),
             ("x3 - t3", {"[1,2,4,3]": "t43", "[2,1,4,3]": "t43"})],
            [("x1 - t1", {"[2,1,3,4]": "t21", "[2,1,4,3]": "t21"}),
             ("1", {"[1,2,3,4]": "1", "[2,1,3,4]": "1", "[1,2,4,3]": "1", "[2,1,4,3]": "1"})],
        ],
    },
    "C(1,s2)": {
        "n": 3,
        "conditions": [(1, 2), (1, 3), (2, 3)],
        "chains": [
            [("(x2 - t1)*(x1 - t1)*(x1 - t2)", {"w0": "t21*t31*t32"}),
             ("(x2 - t1)*(x1 - t1)", {"s1s2": "t21*t31", "w0": "t21*t31"})],
            [("(x1 - t1)*(x1 - t2)", {"s2s1": "t31*t32", "w0": "t31*t32"}),
             ("t3 - x3", {"s2": "t32", "s1s2": "t31", "s2s1": "t32", "w0": "t31"})],
            [("x1 - t1", {"s1": "t21", "s1s2": "t21", "s2s1": "t31", "w0": "t31"}),
             ("1", {w: "1" for w in S3_NAMES})],
        ],
    },
}


def verify_minimal_case(case: str) -> Report:
    """
    Build each listed basis element as 1_<C> * phi(p), compare with the
    displayed values, and check every d1 arrow of its chain (ending in 0).
    """
    case_data = MINIMAL_CASES[case]
    n = case_data["n"]
    C = ConditionSet.of(n, case_data["conditions"])
    indicator = coset_indicator(C)
    R = rvars(n)
    rep = Report(f"verify minimal-case {case}")
    for chain in case_data["chains"]:
        built = []
        for poly_text, shown in chain:
            f = indicator * phi(parse(poly_text, R))
            drawn = element(n, shown)
            label = f"{case}/1<C>*({poly_text})"
            rep.add(label + "/values", f == drawn, "" if f == drawn else f"built {f}, drawn {drawn}",
                    None if f == drawn else f.to_dict())
            rep.add(label + "/membership", in_subring(f, C))
            built.append((poly_text, f))
        for (text, f), nxt in zip(built, built[1:] + [None]):
            expected = nxt[1] if nxt else GkmElement.zero(n)
            label = f"{case}/d1(1<C>*({text})) = " + (f"1<C>*({nxt[0]})" if nxt else "0")
            try:
                image = divided_difference(1, f)
            except NotInDomain as exc:
                rep.add(label, False, str(exc))
                continue
            ok = image == expected
            rep.add(label, ok, "" if ok else f"got {image}",
                    None if ok else image.to_dict())
            rep.add(label + "/stays-in-H_C", in_subring(image, C))
    return rep


# -- the worked n = 3 examples -------------------------------------------------

ARBITRARY_ELEMENT = {
    "id": "0", "s1": "5*t1", "s2": "1",
    "s1s2": "t2*t3", "s2s1": "t1 + t3", "w0": "t1^2*(t2 - t3)",
}
STAR_S1 = {
    "id": "5*t1", "s1": "0", "s2": "t1 + t3",
    "s1s2": "t1^2*(t2 - t3)", "s2s1": "1", "w0": "t2*t3",
}
DOT_S1 = {
    "id": "5*t2", "s1": "0", "s2": "t1*t3",
    "s1s2": "1", "s2s1": "t2^2*(t1 - t3)", "w0": "t2 + t3",
}
PHI_IMAGES = {
    "t1": {w: "t1" for w in S3_NAMES},
    "t2": {w: "t2" for w in S3_NAMES},
    "t3": {w: "t3" for w in S3_NAMES},
    "x1": {"id": "t1", "s1": "t2", "s2": "t1", "s1s2": "t2", "s2s1": "t3", "w0": "t3"},
    "x2": {"id": "t2", "s1": "t1", "s2": "t3", "s1s2": "t3", "s2s1": "t1", "w0": "t2"},
    "x3": {"id": "t3", "s1": "t3", "s2": "t2", "s1s2": "t1", "s2s1": "t2", "w0": "t1"},
}
