"""Sharp Toeplitz determinant bounds for inverse coefficients of
subordination-defined starlike and convex function classes, with
extremal attainment certificates and numerical sharpness verification.
"""

__version__ = "0.1.0"

from .coeffs import (  # noqa: F401
    ClassKind,
    CoeffBundle,
    FunctionalKind,
    PhiSpec,
    coeffs_from_schwarz,
    fekete_szego_value,
    toeplitz,
)
from .schwarz import SchurParams, SchwarzTriple, is_admissible, schur_to_coeffs  # noqa: F401
from .bounds import BoundReport, fekete_szego_bound, omega_region, sigma_mu, theorem_bound  # noqa: F401
from .extremal import ExtremalCoeffs, attainment, extremal_coeffs  # noqa: F401
from .oracle import VerificationReport, Verdict, lemma1_scan, maximize  # noqa: F401
