"""Generalized steady Ricci solitons, the parallel Lee-type field and bi-G2 pairs.

Everything here lives on invariant structures, where functions are
constant.  A potential function ``f`` is passed as its gradient ``df``, an
invariant 1-form that must be closed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import AltForm, interior, vector
from .ledger import IdentityLedger, ResidualReport
from .liegeom import ce_differential, lie_derivative, opposite
from .scalar import Scalar
from .tensor import delta, einsum
from .torsion import G2Structure, characteristic_geometry, characteristic_torsion

__all__ = [
    "ClosedTorsionRequired",
    "SolitonData",
    "BiG2Pair",
    "ParallelFieldReport",
    "BiG2Report",
    "soliton_from_lee",
    "check_gradient_soliton",
    "parallel_field_check",
    "schrodinger_potential",
    "bi_g2_check",
]


class ClosedTorsionRequired(ValueError):
    def __init__(self, dT: AltForm):
        super().__init__(f"torsion is not closed: dT = {dT}")
        self.dT = dT


@dataclass(frozen=True)
class SolitonData:
    X: AltForm
    B: AltForm
    f_gradient: AltForm


def _closed_torsion(s: G2Structure):
    g = characteristic_geometry(s)
    if not g.curvature.dT.is_zero():
        raise ClosedTorsionRequired(g.curvature.dT)
    return g


def _gradient(s: G2Structure, f_gradient) -> AltForm:
    if f_gradient is None:
        return AltForm.zero(1)
    df = f_gradient if isinstance(f_gradient, AltForm) else vector(f_gradient)
    if df.degree != 1:
        raise ValueError(f"a gradient is a 1-form, got degree {df.degree}")
    if not ce_differential(s.algebra, df).is_zero():
        raise ValueError(f"{df} is not closed, so it is not the differential of an invariant function")
    return df


def soliton_from_lee(s: G2Structure) -> tuple[SolitonData, IdentityLedger]:
    """Closed torsion makes ``(g, T)`` a steady soliton with ``X = theta``, ``B = d theta - theta _| T``.

    The metric part is checked as ``Ric^g = T^2/4 - (L_X g)/2``: the
    symmetrised covariant derivative ``(nabla_i X_j + nabla_j X_i)/2`` is half
    of the Lie derivative of ``g``.
    """
    g = _closed_torsion(s)
    T = s.torsion
    X = s.theta
    B = ce_differential(s.algebra, X) - interior(X, T)
    T2 = einsum("iab,jab->ij", g.T, g.T)
    LXg = lie_derivative(s.algebra, X, delta())
    led = IdentityLedger()
    led.check("soliton_metric_equation", g.Ricg - T2 / 4 + LXg / 2, "Ric^g = T^2/4 - L_X g / 2")
    led.check("soliton_codifferential_equation", g.curvature.deltaT - B, "delta T = B")
    led.check("soliton_closure", ce_differential(s.algebra, B + interior(X, T)), "d(B + X _| T) = 0")
    return SolitonData(X, B, AltForm.zero(1)), led


def check_gradient_soliton(s: G2Structure, f_gradient=None) -> IdentityLedger:
    """Residuals of ``Ric = -nabla df``, ``delta T = -df _| T`` and ``dT = 0``."""
    g = _closed_torsion(s)
    df = _gradient(s, f_gradient)
    hess = g.connection.derivative(df.to_tensor())
    led = IdentityLedger()
    led.check("gradient_ricci", g.Ric + hess, "Ric_ij = -nabla_i nabla_j f")
    led.check(
        "gradient_codifferential",
        g.deltaT + einsum("s,sij->ij", df.to_tensor(), g.T),
        "delta T_ij = -df_s T_sij",
    )
    led.check("gradient_closed_torsion", g.dT, "dT = 0")
    return led


@dataclass(frozen=True)
class ParallelFieldReport(ResidualReport):
    """Checks on ``V = theta - df``.

    ``corollary`` covers the case ``V = 0`` on a strictly integrable
    structure: ``"torsion_vanishes"`` when ``T = 0``, ``"not_applicable"``
    when ``T`` survives (the global argument needs compactness), and
    ``None`` when the hypotheses fail.
    """

    V: AltForm = AltForm.zero(1)
    corollary: str | None = None

    def _derive(self, f):
        consequences = f["dtheta_eq_V_T"] and f["lie_V_metric"] and f["lie_V_phi"]
        return {"parallel_implies_consequences": not f["nabla_V"] or consequences}


def parallel_field_check(s: G2Structure, f_gradient=None) -> ParallelFieldReport:
    g = _closed_torsion(s)
    df = _gradient(s, f_gradient)
    V = s.theta - df
    T = characteristic_torsion(s)
    residuals = {
        "nabla_V": g.connection.derivative(V.to_tensor()).norm2(),
        "dtheta_eq_V_T": (ce_differential(s.algebra, s.theta) - interior(V, T)).to_tensor().norm2(),
        "lie_V_metric": lie_derivative(s.algebra, V, delta()).norm2(),
        "lie_V_phi": lie_derivative(s.algebra, V, s.phi).to_tensor().norm2(),
    }
    corollary = None
    if V.is_zero() and s.lam == 0:
        corollary = "torsion_vanishes" if T.is_zero() else "not_applicable"
    return ParallelFieldReport(residuals, V, corollary)


def schrodinger_potential(s: G2Structure) -> tuple[Scalar, Scalar]:
    """``(Scal^g - |T|^2/12, Scal + |T|^2/6)``; the two agree on every integrable input."""
    g = characteristic_geometry(s)
    nT2 = g.norm_T
    return g.curvature.Scal_g - nT2 / 12, g.curvature.Scal + nT2 / 6


@dataclass(frozen=True)
class BiG2Pair:
    """Two structures sharing the frame: ``s2`` lives on the opposite algebra."""

    s1: G2Structure
    s2: G2Structure

    @classmethod
    def from_opposite(cls, s: G2Structure) -> "BiG2Pair":
        twin = G2Structure(opposite(s.algebra), s.forms, f"{s.label()}_opposite")
        return cls(s, twin)


@dataclass(frozen=True)
class BiG2Report(ResidualReport):
    T: AltForm = AltForm.zero(3)
    T_tilde: AltForm = AltForm.zero(3)

    def _derive(self, f):
        return {"bi_g2": f["opposite_torsion"] and f["closed_torsion"] and f["closed_torsion_tilde"]}


def bi_g2_check(pair: BiG2Pair) -> BiG2Report:
    """Same metric (structural: both frames orthonormal), ``T~ = -T`` and closed torsion."""
    T = characteristic_torsion(pair.s1)
    Tt = characteristic_torsion(pair.s2)
    residuals = {
        "opposite_torsion": (T + Tt).to_tensor().norm2(),
        "closed_torsion": ce_differential(pair.s1.algebra, T).to_tensor().norm2(),
        "closed_torsion_tilde": ce_differential(pair.s2.algebra, Tt).to_tensor().norm2(),
    }
    return BiG2Report(residuals, T, Tt)
