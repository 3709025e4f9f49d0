"""Proximal point iterations in CAT(0) models and their rates of metastability."""

from ._metaprox import (
    BudgetExceeded,
    ConfigError,
    SolverError,
    combine,
    distance,
    find_metastable_n,
    phi,
    project,
    selftest,
    simulate,
    simulate_csv,
)

__all__ = [
    "BudgetExceeded",
    "ConfigError",
    "SolverError",
    "combine",
    "distance",
    "find_metastable_n",
    "phi",
    "project",
    "selftest",
    "simulate",
    "simulate_csv",
]
