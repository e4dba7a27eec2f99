"""Exact G2 geometry on seven-dimensional Lie algebras.

Scalars live in Q(sqrt2); forms, connections and curvature are computed in
an orthonormal invariant frame and every identity is checked to exact zero.
"""

from .forms import AltForm, DegreeError, full_contract, hodge, interior, vector, wedge
from .g2core import G2FormData, NotAG2FormError, standard_phi
from .ledger import IdentityLedger
from .liegeom import InvalidAlgebraError, LieAlgebra, ce_differential, codifferential, opposite
from .scalar import Scalar
from .torsion import G2Structure, NotIntegrableError, characteristic_connection, identity_battery

__all__ = [
    "AltForm",
    "DegreeError",
    "G2FormData",
    "G2Structure",
    "IdentityLedger",
    "InvalidAlgebraError",
    "LieAlgebra",
    "NotAG2FormError",
    "NotIntegrableError",
    "Scalar",
    "ce_differential",
    "characteristic_connection",
    "codifferential",
    "full_contract",
    "hodge",
    "identity_battery",
    "interior",
    "opposite",
    "standard_phi",
    "vector",
    "wedge",
]
