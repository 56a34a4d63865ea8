"""Randomized two-phase construction of n-queens configurations.

A thin wrapper over the C++ core: random greedy toroidal placement,
absorber-based completion, exact enumeration oracles, and the trajectory
and coupling analyses.
"""

from ._core import (
    absorbers,
    available_set,
    balanced_pair_count,
    balanced_region,
    coupling_experiment,
    default_stop,
    enumerate_classic,
    enumerate_toroidal,
    is_balanced,
    predict,
    run_greedy,
    safe_absorbers,
    solve,
    verify,
    __version__,
)

__all__ = [
    "absorbers",
    "available_set",
    "balanced_pair_count",
    "balanced_region",
    "coupling_experiment",
    "default_stop",
    "enumerate_classic",
    "enumerate_toroidal",
    "is_balanced",
    "predict",
    "run_greedy",
    "safe_absorbers",
    "solve",
    "verify",
    "__version__",
]
