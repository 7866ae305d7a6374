"""Exact coverage-density fingerprints of periodic point sequences on the line."""

from .coverage import (
    CoverageProfile,
    VerificationReport,
    coverage_fraction,
    coverage_profile,
    critical_radii,
    verify_densities,
)
from .density import (
    DensityReport,
    Fingerprint,
    density_area,
    density_function,
    density_report,
    fingerprint,
    fingerprint_diff,
    fingerprints_equal,
    symmetry_report,
    trapezoid_triples,
)
from .errors import (
    DuplicatePointError,
    EmptyMotifError,
    InconsistentCornerError,
    InconsistentFunctionError,
    KOutOfRangeError,
    NegativeKError,
    NegativeRadiusError,
    NonPositivePeriodError,
    NotGenericError,
    PdensError,
    SupportExceedsReflectionError,
)
from .pwl import PiecewiseLinear, TrapezoidTriple, sum_functions, trapezoid
from .reconstruct import (
    ReconstructionResult,
    reconstruct_from_first_density,
    verify_completeness,
)
from .sequence import PeriodicSequence, new_sequence

__version__ = "0.1.0"

__all__ = [
    "CoverageProfile",
    "DensityReport",
    "DuplicatePointError",
    "EmptyMotifError",
    "Fingerprint",
    "InconsistentCornerError",
    "InconsistentFunctionError",
    "KOutOfRangeError",
    "NegativeKError",
    "NegativeRadiusError",
    "NonPositivePeriodError",
    "NotGenericError",
    "PdensError",
    "PeriodicSequence",
    "PiecewiseLinear",
    "ReconstructionResult",
    "SupportExceedsReflectionError",
    "TrapezoidTriple",
    "VerificationReport",
    "coverage_fraction",
    "coverage_profile",
    "critical_radii",
    "density_area",
    "density_function",
    "density_report",
    "fingerprint",
    "fingerprint_diff",
    "fingerprints_equal",
    "new_sequence",
    "reconstruct_from_first_density",
    "sum_functions",
    "symmetry_report",
    "trapezoid",
    "trapezoid_triples",
    "verify_completeness",
    "verify_densities",
]
