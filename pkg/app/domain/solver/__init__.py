"""Exact chi_la search, pendant-bound certification and enumeration oracles."""

from ._certify import certify
from ._oracle import ORACLE_EDGE_LIMIT, audit_pendant_lemma, brute_force_chi_la
from ._plan import SearchPlan, build_plan, line_graph_order
from .solver_domain import ChiLaSolver, find_labeling_with_profile, lower_bound, solve_chi_la

__all__ = [
    "ORACLE_EDGE_LIMIT",
    "ChiLaSolver",
    "SearchPlan",
    "audit_pendant_lemma",
    "brute_force_chi_la",
    "build_plan",
    "certify",
    "find_labeling_with_profile",
    "line_graph_order",
    "lower_bound",
    "solve_chi_la",
]
