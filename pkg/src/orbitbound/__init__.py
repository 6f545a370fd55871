"""Exact Lie-theory engine for bounding orbit-space boundaries of
irreducible representations of compact simple groups."""

from orbitbound.enumeration import (
    CandidateList,
    NotApplicable,
    dimension_bound,
    enumerate_candidates,
)
from orbitbound.involutions import (
    InvolutionReport,
    ScreeningReport,
    involution_representatives,
    screen_representation,
)
from orbitbound.irrep import (
    BudgetExceeded,
    FSType,
    HighestWeight,
    WeightSystem,
    fs_type,
    real_dim,
    weight_system,
    weyl_dim,
)
from orbitbound.report import verify_paper
from orbitbound.rootdata import InvalidTypeError, RootSystem, SimpleType, root_system
from orbitbound.specialchecks import check_lemma_g2, circle_fix_count, scan_eq_la

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CandidateList", "FSType", "HighestWeight", "InvalidTypeError",
    "InvolutionReport", "NotApplicable", "RootSystem", "ScreeningReport", "SimpleType",
    "WeightSystem", "check_lemma_g2", "circle_fix_count", "dimension_bound",
    "enumerate_candidates", "fs_type", "involution_representatives", "real_dim",
    "root_system", "scan_eq_la", "screen_representation", "verify_paper",
    "weight_system", "weyl_dim",
]
