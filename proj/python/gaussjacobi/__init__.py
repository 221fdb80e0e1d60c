"""Gauss-Jacobi and Gauss-Gegenbauer quadrature rules."""

from ._core import (
    GaussJacobiError,
    Rule,
    RunStats,
    compare_rules,
    exactness_check,
    gegenbauer_rule,
    golub_welsch,
    jacobi_rule,
    log_moment0,
    moment,
)

__all__ = [
    "GaussJacobiError",
    "Rule",
    "RunStats",
    "compare_rules",
    "exactness_check",
    "gegenbauer_rule",
    "golub_welsch",
    "jacobi_rule",
    "log_moment0",
    "moment",
]
