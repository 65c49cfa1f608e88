"""Exact Kazhdan-Lusztig and Z-polynomials of uniform matroids.

Coefficients are computed by several independent exact-rational routes that
must agree on the nose, validated against a formula-free lattice oracle, and
certified real-rooted via Sturm chains and Hurwitz determinants.
"""

from .certificate import Certificate
from .klcoeff import kl_coefficient, kl_poly
from .polyring import IntegrityError, Poly, render
from .zcoeff import z_coefficient, z_from_kl, z_poly

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "IntegrityError",
    "Poly",
    "kl_coefficient",
    "kl_poly",
    "render",
    "z_coefficient",
    "z_from_kl",
    "z_poly",
    "__version__",
]
