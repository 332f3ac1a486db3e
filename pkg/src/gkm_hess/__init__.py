"""Exact computations in GKM rings of regular semisimple Hessenberg varieties."""

from .exactpoly import NotDivisible, Polynomial, VarSet, exact_divide, parse, to_text
from .symgroup import Permutation, Transposition, adjacent, all_permutations, bruhat_leq, longest
from .gkm import (
    ConditionSet, GkmElement, HessenbergFunction, NotInDomain, PreconditionError,
    all_hessenberg, almost_stable_decompose, almost_stable_parts, coset_indicator,
    divided_difference, dot, hessenberg_conditions, in_subring, is_almost_stable,
    is_stable, phi, star, stable_decompose,
)
from .flowup import FlowUpBasis, QPolynomial, flow_up_basis, poincare_series, verify_graded_modular
from .schubert import double_schubert_table, schubert_table
from .csf import ModularTriple, csf_truncated, modular_triples, verify_modular_relation
from .report import Check, Report

__all__ = [
    "NotDivisible", "Polynomial", "VarSet", "exact_divide", "parse", "to_text",
    "Permutation", "Transposition", "adjacent", "all_permutations", "bruhat_leq", "longest",
    "ConditionSet", "GkmElement", "HessenbergFunction", "NotInDomain", "PreconditionError",
    "all_hessenberg", "almost_stable_decompose", "almost_stable_parts", "coset_indicator",
    "divided_difference", "dot", "hessenberg_conditions", "in_subring", "is_almost_stable",
    "is_stable", "phi", "star", "stable_decompose",
    "FlowUpBasis", "QPolynomial", "flow_up_basis", "poincare_series", "verify_graded_modular",
    "double_schubert_table", "schubert_table",
    "ModularTriple", "csf_truncated", "modular_triples", "verify_modular_relation",
    "Check", "Report",
]
