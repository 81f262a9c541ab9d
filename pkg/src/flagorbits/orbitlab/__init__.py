"""Exact B(F_q)-orbit enumeration on products of classical flag varieties."""

from .engine import (
    DEFAULT_BUDGET, BudgetExceeded, EdgeRecord, FieldRun, FlagPoint, OrbitLabError, OrbitLabResult,
    OrbitRecord, classify_edge, enumerate_b_orbits, fit_count, phi_of, run_orbitlab, span_point,
    work_estimate,
)
from .groups import GroupSpec, MatrixGroup, flag_count

__all__ = [
    "DEFAULT_BUDGET", "BudgetExceeded", "EdgeRecord", "FieldRun", "FlagPoint", "OrbitLabError", "OrbitLabResult",
    "OrbitRecord", "classify_edge", "enumerate_b_orbits", "fit_count", "phi_of", "run_orbitlab", "span_point",
    "work_estimate", "GroupSpec", "MatrixGroup", "flag_count",
]
