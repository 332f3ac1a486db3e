"""Seeded random polynomials and random elements of H_C for property checks."""

from __future__ import annotations

import random

from .exactpoly import Polynomial, VarSet, monomials_of_degree
from .flowup import ConditionsLike, flow_up_basis
from .gkm import GkmElement, phi, rvars, tvars
from .symgroup import Permutation


def random_poly(rng: random.Random, V: VarSet, max_degree: int, max_terms: int = 3,
                coeff_range: int = 3) -> Polynomial:
    """A sparse polynomial with small nonzero integer coefficients (may be 0 if max_terms=0)."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        e = rng.choice(monomials_of_degree(V.size, d))
        c = rng.choice([k for k in range(-coeff_range, coeff_range + 1) if k])
        terms.append((e, c))
    return Polynomial.from_terms(V, terms)


def random_t_poly(rng: random.Random, n: int, max_degree: int = 1, max_terms: int = 2) -> Polynomial:
    return random_poly(rng, tvars(n), max_degree, max_terms)


def random_r_poly(rng: random.Random, n: int, max_degree: int = 3, max_terms: int = 3) -> Polynomial:
    return random_poly(rng, rvars(n), max_degree, max_terms)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    one_line = list(range(1, n + 1))
    rng.shuffle(one_line)
    return Permutation(tuple(one_line))


def random_element(rng: random.Random, c: ConditionsLike, degree_cap: int = 3,
                   basis_terms: int = 3, phi_factor: bool = True) -> GkmElement:
    """
    A random element of H_C: a Q[t]-combination of a few flow-up basis
    elements with coefficient degree at most `degree_cap` minus the basis
    degree, optionally times phi of a random linear polynomial in R.
    """
    basis = flow_up_basis(c)
    n = basis.n
    order = basis.order()
    out = GkmElement.zero(n)
    for w in rng.sample(order, min(basis_terms, len(order))):
        room = max(0, degree_cap - basis.degrees[w])
        coeff = random_t_poly(rng, n, max_degree=min(room, 1), max_terms=2)
        out = out + basis.elements[w] * coeff
    if phi_factor and rng.random() < 0.5:
        out = out * phi(random_r_poly(rng, n, max_degree=1, max_terms=2))
    return out
