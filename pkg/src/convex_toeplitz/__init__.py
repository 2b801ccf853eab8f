"""Sharp second-order Toeplitz determinant bounds over Ma-Minda convex classes.

Submodules:

* :mod:`.series`    truncated complex power series
* :mod:`.schwarz`   Schwarz functions via Schur parameters
* :mod:`.psi`       target functions ``Psi`` and their jets
* :mod:`.coeffs`    coefficients of members of C(Psi), Toeplitz determinants
* :mod:`.bounds`    the sharp ``|T_{2,3}|`` bound and a sharpness search
* :mod:`.extremal`  the extremal function attaining it
* :mod:`.highdim`   the ball and polydisk functionals in C^n
"""

from .bounds import region_member, sharp_bound_t23, sharpness_search
from .coeffs import CoefficientVector, coeffs_from_subordination, t23, toeplitz_det
from .extremal import build_extremal, verify_attainment
from .psi import PsiTarget, make_custom, make_halfplane, make_order_alpha, make_strong_beta
from .schwarz import SchurParams, SchwarzJet, jet_from_schur, sample_random
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "CoefficientVector", "PsiTarget", "SchurParams", "SchwarzJet", "TruncatedSeries",
    "build_extremal", "coeffs_from_subordination", "jet_from_schur", "make_custom",
    "make_halfplane", "make_order_alpha", "make_strong_beta", "region_member",
    "sample_random", "sharp_bound_t23", "sharpness_search", "t23", "toeplitz_det",
    "verify_attainment",
]
