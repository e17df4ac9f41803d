"""Verification toolkit for sumset inequalities, hypergraph containers,
and admissible-pair statistics."""

from ._core import (
    alpha,
    best_ap_cover,
    best_joint_ap_cover,
    beta,
    binom_lemma,
    build_container,
    build_family,
    canonical_hypergraph,
    check_degree_condition,
    count_report,
    enumerate_pairs,
    pollard,
    run_sweep,
    sample_pairs,
    structure_report,
    subgroup_sizes,
    sumset,
    supersat,
    verify_containers,
)

__all__ = [
    "alpha",
    "best_ap_cover",
    "best_joint_ap_cover",
    "beta",
    "binom_lemma",
    "build_container",
    "build_family",
    "canonical_hypergraph",
    "check_degree_condition",
    "count_report",
    "enumerate_pairs",
    "pollard",
    "run_sweep",
    "sample_pairs",
    "structure_report",
    "subgroup_sizes",
    "sumset",
    "supersat",
    "verify_containers",
]
