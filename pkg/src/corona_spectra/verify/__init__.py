"""Independent oracles and seeded verification sweeps."""
from .oracles import (
    ORACLE_CORONAL_MAX_N,
    oracle_charpoly,
    oracle_coronal,
    random_digraph,
    random_digraph_from,
    random_int_matrix,
    rng_for,
)
from .suites import (
    SUITES,
    Suite,
    SweepConfig,
    VerificationReport,
    all_match,
    family_instances,
    run_suite,
    summarize,
)

__all__ = [
    "ORACLE_CORONAL_MAX_N",
    "SUITES",
    "Suite",
    "SweepConfig",
    "VerificationReport",
    "all_match",
    "family_instances",
    "oracle_charpoly",
    "oracle_coronal",
    "random_digraph",
    "random_digraph_from",
    "random_int_matrix",
    "rng_for",
    "run_suite",
    "summarize",
]
