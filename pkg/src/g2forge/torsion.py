"""Characteristic connection of an integrable G2 structure on a Lie algebra.

All tensors are left-invariant and written in the orthonormal frame
``e1..e7``.  Connection coefficients are ``Gamma[i, j, k] = g(nabla_{e_i} e_j, e_k)``;
the covariant derivative of an invariant tensor therefore only involves
``Gamma`` and curvature is ``R(X,Y)Z = [nabla_X, nabla_Y]Z - nabla_[X,Y] Z``
with ``R_ijkl = g(R(e_i, e_j) e_k, e_l)``.  The Ricci tensor is
``Ric_ij = R_aija`` and every norm is the full index contraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .forms import AltForm, basis_vector, full_contract, hodge, interior, wedge
from .g2core import G2FormData, project3, standard_phi
from .ledger import IdentityLedger, ResidualReport, residual_norm2, vanishes
from .liegeom import LieAlgebra, ce_differential, codifferential
from .scalar import Scalar
from .tensor import DIM, QTensor, act_on_slots, delta, einsum

__all__ = [
    "G2Structure",
    "NotIntegrableError",
    "InternalConsistencyError",
    "Connection",
    "Curvature",
    "ClassReport",
    "SymmetryReport",
    "ClosedTorsionReport",
    "Geometry",
    "lee_form",
    "type_constant",
    "classify",
    "characteristic_torsion",
    "levi_civita",
    "torsion_connection",
    "characteristic_connection",
    "curvature",
    "characteristic_geometry",
    "identity_battery",
    "skew_torsion_identities",
    "symmetry_checks",
    "closed_torsion_checks",
    "sigma_form",
]


class NotIntegrableError(ValueError):
    """``d psi = theta ^ psi`` fails, so no characteristic connection exists."""

    def __init__(self, residual: AltForm):
        super().__init__(f"structure is not integrable: d*phi - theta^*phi = {residual}")
        self.residual = residual


class InternalConsistencyError(RuntimeError):
    """A computed object violates a property that holds for every valid input."""


def _lee(dphi: AltForm, phi: AltForm) -> AltForm:
    return hodge(wedge(hodge(dphi), phi)) * Fraction(-1, 3)


@dataclass(frozen=True, eq=False)
class G2Structure:
    """A left-invariant G2 structure: a Lie algebra plus a G2 form in an orthonormal frame.

    ``dphi``, ``dpsi``, the Lee form ``theta``, the type constant ``lam`` and,
    when the structure is integrable, the characteristic torsion ``torsion``
    are computed once at construction.
    """

    algebra: LieAlgebra
    forms: G2FormData = field(default_factory=standard_phi)
    name: str = ""
    dphi: AltForm = field(init=False, repr=False)
    dpsi: AltForm = field(init=False, repr=False)
    theta: AltForm = field(init=False, repr=False)
    lam: Scalar = field(init=False, repr=False)
    integrability_residual: AltForm = field(init=False, repr=False)
    torsion: AltForm | None = field(init=False, repr=False)

    def __post_init__(self):
        phi, psi = self.forms.phi, self.forms.psi
        dphi = ce_differential(self.algebra, phi)
        dpsi = ce_differential(self.algebra, psi)
        theta = _lee(dphi, phi)
        # lam = (1/6)(dphi, psi) with the form inner product = full contraction / 4!
        lam = full_contract(dphi, psi) / 144
        residual = dpsi - wedge(theta, psi)
        torsion = None
        if residual.is_zero():
            torsion = -hodge(dphi) + hodge(wedge(theta, phi)) + phi * lam
        for name, value in (
            ("dphi", dphi),
            ("dpsi", dpsi),
            ("theta", theta),
            ("lam", lam),
            ("integrability_residual", residual),
            ("torsion", torsion),
        ):
            object.__setattr__(self, name, value)

    @property
    def phi(self) -> AltForm:
        return self.forms.phi

    @property
    def psi(self) -> AltForm:
        return self.forms.psi

    @property
    def integrable(self) -> bool:
        return self.torsion is not None

    def label(self) -> str:
        return self.name or "unnamed"


def lee_form(s: G2Structure) -> AltForm:
    """``theta = -(1/3) *(*dphi ^ phi)``."""
    return s.theta


def type_constant(s: G2Structure) -> Scalar:
    """``lambda = (1/6)(dphi, psi)``; the pairing ``(dphi, *phi)`` itself is ``6 * lambda``."""
    return s.lam


# -- classification ---------------------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    """Exact residuals of the defining conditions of the intrinsic-torsion classes.

    Classes are membership conditions, so a parallel structure belongs to
    every class.  Invariant structures always have constant type.
    """

    residuals: dict[str, Scalar]
    lam: Scalar
    theta: AltForm

    _CONDITIONS = {
        "parallel": ("dphi", "dpsi"),
        "nearly_parallel": ("dphi_minus_c_psi", "dpsi"),
        "locally_conformally_parallel": ("integrability", "dphi_minus_three_quarter_theta_phi"),
        "cocalibrated": ("dpsi",),
        "balanced": ("theta",),
        "integrable": ("integrability",),
        "strictly_integrable": ("integrability", "dphi_psi_pairing"),
        "pure_w27": ("dphi_wedge_phi", "dpsi"),
        "constant_type": (),
    }

    def flags(self, tol: float | None = None) -> dict[str, bool]:
        return {
            name: all(vanishes(self.residuals[k], tol) for k in keys)
            for name, keys in self._CONDITIONS.items()
        }

    def classes(self, tol: float | None = None) -> list[str]:
        return [k for k, v in self.flags(tol).items() if v]


def classify(s: G2Structure) -> ClassReport:
    dphi, dpsi, theta, phi, psi = s.dphi, s.dpsi, s.theta, s.phi, s.psi
    c = full_contract(dphi, psi) / 168
    residuals = {
        "dphi": residual_norm2(dphi),
        "dpsi": residual_norm2(dpsi),
        "dphi_minus_c_psi": residual_norm2(dphi - psi * c),
        "dphi_minus_three_quarter_theta_phi": residual_norm2(dphi - wedge(theta, phi) * Fraction(3, 4)),
        "theta": residual_norm2(theta),
        "integrability": residual_norm2(s.integrability_residual),
        "dphi_psi_pairing": residual_norm2(full_contract(dphi, psi)),
        "dphi_wedge_phi": residual_norm2(wedge(dphi, phi)),
    }
    return ClassReport(residuals, s.lam, theta)


def characteristic_torsion(s: G2Structure) -> AltForm:
    """``T = -*dphi + *(theta ^ phi) + lambda phi`` for integrable structures."""
    if s.torsion is None:
        raise NotIntegrableError(s.integrability_residual)
    return s.torsion


# -- connections --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Connection:
    algebra: LieAlgebra
    gamma: QTensor

    def derivative(self, A: QTensor) -> QTensor:
        """``(nabla A)[i, j1..jr] = (nabla_{e_i} A)(e_j1, ..., e_jr)`` for invariant ``A``."""
        return -act_on_slots(self.gamma, A)

    def torsion_tensor(self) -> QTensor:
        """``g(nabla_X Y - nabla_Y X - [X, Y], Z)`` in components."""
        return self.gamma - self.gamma.transpose(1, 0, 2) - self.algebra.c

    def metric_defect(self) -> QTensor:
        """Components of ``nabla g``; zero iff the connection is metric."""
        return self.derivative(delta())

    def is_metric(self) -> bool:
        return self.metric_defect().is_zero()


def _levi_civita_gamma(c: QTensor) -> QTensor:
    # Koszul: 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)
    return (c - c.transpose(2, 0, 1) + c.transpose(1, 2, 0)) / 2


def levi_civita(s) -> Connection:
    """Levi-Civita connection of the identity metric; ``s`` is a structure or an algebra."""
    algebra = s if isinstance(s, LieAlgebra) else s.algebra
    return Connection(algebra, _levi_civita_gamma(algebra.c))


def torsion_connection(algebra: LieAlgebra, T: AltForm) -> Connection:
    """The metric connection ``nabla^g + T/2`` with totally skew torsion ``T``."""
    return Connection(algebra, _levi_civita_gamma(algebra.c) + T.to_tensor() / 2)


def characteristic_connection(s: G2Structure) -> Connection:
    """The unique metric connection with skew torsion preserving ``phi``.

    Raises :class:`InternalConsistencyError` if the result fails to preserve
    ``g``, ``phi`` or ``psi`` or has the wrong torsion.
    """
    T = characteristic_torsion(s)
    conn = torsion_connection(s.algebra, T)
    checks = {
        "nabla g": conn.metric_defect(),
        "nabla phi": conn.derivative(s.forms.phi_t),
        "nabla psi": conn.derivative(s.forms.psi_t),
        "torsion": conn.torsion_tensor() - T.to_tensor(),
    }
    bad = [k for k, v in checks.items() if not v.is_zero()]
    if bad:
        raise InternalConsistencyError(f"characteristic connection of {s.label()} fails: {', '.join(bad)}")
    return conn


def _riemann(gamma: QTensor, c: QTensor) -> QTensor:
    return einsum("jkm,iml->ijkl", gamma, gamma) - einsum("ikm,jml->ijkl", gamma, gamma) - einsum("ijm,mkl->ijkl", c, gamma)


def sigma_form(T: AltForm) -> AltForm:
    """``sigma^T = (1/2) sum_j (e_j _| T) ^ (e_j _| T)``."""
    total = AltForm.zero(4)
    for j in range(1, DIM + 1):
        x = interior(basis_vector(j), T)
        total = total + wedge(x, x)
    return total / 2


@dataclass(frozen=True, eq=False)
class Curvature:
    R: QTensor
    Ric: QTensor
    Scal: Scalar
    Scal_g: Scalar
    sigmaT: AltForm
    dT: AltForm
    deltaT: AltForm

    def is_flat(self) -> bool:
        return self.R.is_zero()


def curvature(conn: Connection) -> Curvature:
    """Curvature of a metric connection with skew torsion, plus its torsion invariants."""
    alg = conn.algebra
    T = AltForm.from_tensor(conn.torsion_tensor())
    R = _riemann(conn.gamma, alg.c)
    Ric = einsum("aija->ij", R)
    Rg = _riemann(_levi_civita_gamma(alg.c), alg.c)
    return Curvature(
        R=R,
        Ric=Ric,
        Scal=einsum("ii->", Ric),
        Scal_g=einsum("aiia->", Rg),
        sigmaT=sigma_form(T),
        dT=ce_differential(alg, T),
        deltaT=codifferential(alg, T),
    )


# -- the full geometry of the characteristic connection -----------------------


@dataclass(frozen=True, eq=False)
class Geometry:
    """Every dense tensor the identity checks need, computed once."""

    structure: G2Structure
    connection: Connection
    levi_civita: Connection
    curvature: Curvature
    phi: QTensor
    psi: QTensor
    T: QTensor
    theta: QTensor
    lam: Scalar
    R: QTensor
    Rg: QTensor
    Ric: QTensor
    Ricg: QTensor
    nablaT: QTensor
    nablagT: QTensor
    sigma: QTensor
    dT: QTensor
    deltaT: QTensor
    nabla_theta: QTensor
    dtheta: QTensor
    delta_theta: Scalar
    delta_psi: AltForm
    norm_T: Scalar
    norm_theta: Scalar


@lru_cache(maxsize=32)
def characteristic_geometry(s: G2Structure) -> Geometry:
    conn = characteristic_connection(s)
    lc = levi_civita(s)
    curv = curvature(conn)
    alg = s.algebra
    T = s.torsion.to_tensor()
    theta = s.theta.to_tensor()
    Rg = _riemann(lc.gamma, alg.c)
    return Geometry(
        structure=s,
        connection=conn,
        levi_civita=lc,
        curvature=curv,
        phi=s.forms.phi_t,
        psi=s.forms.psi_t,
        T=T,
        theta=theta,
        lam=s.lam,
        R=curv.R,
        Rg=Rg,
        Ric=curv.Ric,
        Ricg=einsum("aija->ij", Rg),
        nablaT=conn.derivative(T),
        nablagT=lc.derivative(T),
        sigma=curv.sigmaT.to_tensor(),
        dT=curv.dT.to_tensor(),
        deltaT=curv.deltaT.to_tensor(),
        nabla_theta=conn.derivative(theta),
        dtheta=ce_differential(alg, s.theta).to_tensor(),
        delta_theta=codifferential(alg, s.theta).coeffs.get((), Scalar(0)),
        delta_psi=codifferential(alg, s.psi),
        norm_T=full_contract(s.torsion, s.torsion),
        norm_theta=full_contract(s.theta, s.theta),
    )


def _perm(t: QTensor, spec: str) -> QTensor:
    """Index relabelling, e.g. ``_perm(A, 'yzxv->xyzv')``."""
    return einsum(spec, t)


def _cyclic_first_three(R: QTensor) -> QTensor:
    return R + _perm(R, "yzxv->xyzv") + _perm(R, "zxyv->xyzv")


def skew_torsion_identities(conn: Connection) -> IdentityLedger:
    """Identities valid for any invariant metric connection with totally skew torsion."""
    alg = conn.algebra
    T = conn.torsion_tensor()
    Tf = AltForm.from_tensor(T)
    lc = levi_civita(alg)
    R = _riemann(conn.gamma, alg.c)
    Ric = einsum("aija->ij", R)
    Rg = _riemann(lc.gamma, alg.c)
    Ricg = einsum("aija->ij", Rg)
    nT = conn.derivative(T)
    sig = sigma_form(Tf).to_tensor()
    dT = ce_differential(alg, Tf).to_tensor()
    dTT = codifferential(alg, Tf).to_tensor()
    nT2 = full_contract(Tf, Tf)
    led = IdentityLedger()

    led.check(
        "curvature_antisymmetry",
        [R + _perm(R, "jikl->ijkl"), R + _perm(R, "ijlk->ijkl")],
        "R(X,Y,Z,V) = -R(Y,X,Z,V) = -R(X,Y,V,Z)",
    )
    led.check(
        "exterior_derivative_of_torsion",
        dT - (nT + _perm(nT, "yzxv->xyzv") + _perm(nT, "zxyv->xyzv") + sig * 2 - _perm(nT, "vxyz->xyzv")),
        "dT = cyclic_XYZ (nabla_X T)(Y,Z,V) + 2 sigma^T - (nabla_V T)(X,Y,Z)",
    )
    led.check(
        "levi_civita_derivative_of_torsion",
        lc.derivative(T) - nT - sig / 2,
        "nabla^g T = nabla T + sigma^T / 2",
    )
    cyc = _cyclic_first_three(R)
    led.check(
        "first_bianchi",
        cyc - (dT - sig + _perm(nT, "vxyz->xyzv")),
        "cyclic_XYZ R(X,Y,Z,V) = dT - sigma^T + (nabla_V T)(X,Y,Z)",
    )
    last = _perm(R, "vxyz->xyzv") + _perm(R, "vyzx->xyzv") + _perm(R, "vzxy->xyzv")
    led.check(
        "first_bianchi_mixed",
        cyc - last - (dT * Fraction(3, 2) - sig),
        "cyclic R(X,Y,Z,V) - cyclic R(V,X,Y,Z) = 3/2 dT - sigma^T",
    )
    led.check(
        "first_bianchi_last_slot",
        last - (dT * Fraction(-1, 2) + _perm(nT, "vxyz->xyzv")),
        "cyclic_XYZ R(V,X,Y,Z) = -1/2 dT(X,Y,Z,V) + (nabla_V T)(X,Y,Z)",
    )
    led.check(
        "ricci_comparison",
        Ricg - (Ric + dTT / 2 + einsum("xia,yia->xy", T, T) / 4),
        "Ric^g = Ric + delta T / 2 + T_xia T_yia / 4",
    )
    led.check(
        "scalar_comparison",
        einsum("ii->", Ricg) - (einsum("ii->", Ric) + nT2 / 4),
        "Scal^g = Scal + |T|^2 / 4",
    )
    led.check("ricci_skew_part", Ric - Ric.transpose(1, 0) + dTT, "Ric(X,Y) - Ric(Y,X) = -delta T(X,Y)")
    led.check(
        "second_bianchi",
        einsum("iji->j", conn.derivative(Ric)) * -2
        + einsum("ab,abj->j", dTT, T)
        + einsum("abc,jabc->j", T, dT) / 6,
        "-2 nabla_i Ric_ji + delta T_ab T_abj + T_abc dT_jabc / 6 = 0",
    )
    led.check(
        "divergence_of_codifferential",
        einsum("iij->j", conn.derivative(dTT)) - einsum("ia,iaj->j", dTT, T) / 2,
        "nabla_i delta T_ij = delta T_ia T_iaj / 2",
    )
    return led


def identity_battery(s: G2Structure) -> IdentityLedger:
    """Evaluate every curvature and torsion identity for the characteristic connection.

    Each entry's residual is exactly zero for a correct implementation on any
    integrable input.  Functions on invariant structures are constant, so
    their differentials are dropped from the identities.
    """
    g = characteristic_geometry(s)
    led = IdentityLedger()
    phi, psi, T, th, lam = g.phi, g.psi, g.T, g.theta, g.lam
    R, Ric, nT, sig, dT, dTT = g.R, g.Ric, g.nablaT, g.sigma, g.dT, g.deltaT
    nth, nT2, nth2 = g.nabla_theta, g.norm_T, g.norm_theta
    pairing = lam * 6
    conn = g.connection

    led.check(
        "characteristic_preserves_g2",
        [conn.metric_defect(), conn.derivative(phi), conn.derivative(psi)],
        "nabla g = nabla phi = nabla psi = 0",
    )
    led.check("characteristic_torsion_matches", conn.torsion_tensor() - T, "torsion of nabla equals T")
    led.extend(skew_torsion_identities(conn))
    led.check("curvature_in_g2_phi", einsum("ijab,abk->ijk", R, phi), "R_ijab phi_abk = 0")
    led.check("curvature_in_g2_psi", einsum("ijab,abkl->ijkl", R, psi) + R * 2, "R_ijab psi_abkl = -2 R_ijkl")
    led.check("ricci_from_curvature_psi", Ric * 2 - einsum("iabc,jabc->ij", R, psi), "2 Ric_ij = R_iabc psi_jabc")
    led.check(
        "ricci_from_dT",
        Ric - (einsum("iabc,jabc->ij", dT, psi) / 12 - nth),
        "Ric_ij = dT_iabc psi_jabc / 12 - nabla_i theta_j",
    )
    dth = g.delta_theta
    dpsi = g.delta_psi
    ndpsi2 = full_contract(dpsi, dpsi)
    scal, scal_g = g.curvature.Scal, g.curvature.Scal_g
    led.check(
        "scalar_from_torsion",
        [
            scal - (dth * 3 + nth2 * 2 - nT2 / 3 + pairing * pairing / 18),
            scal - (dth * 3 + nth2 * 6 - ndpsi2 / 3 + pairing * pairing / 3),
        ],
        "Scal = 3 delta theta + 2|theta|^2 - |T|^2/3 + (dphi,psi)^2/18",
    )
    led.check(
        "riemannian_scalar_from_torsion",
        scal_g - (dth * 3 + nth2 * 2 - nT2 / 12 + pairing * pairing / 18),
        "Scal^g = 3 delta theta + 2|theta|^2 - |T|^2/12 + (dphi,psi)^2/18",
    )
    led.check(
        "riemannian_scalar_from_coderivative",
        scal_g - (dth * 3 + nth2 * 3 - ndpsi2 / 12 + pairing * pairing / 8),
        "Scal^g = 3 delta theta + 3|theta|^2 - |delta psi|^2/12 + (dphi,psi)^2/8",
    )
    led.check(
        "dT_phi_trace",
        einsum("iabc,abc->i", dT, phi) + einsum("iabc,abc->i", nT, phi) * 2,
        "dT_iabc phi_abc + 2 nabla_i T_abc phi_abc = 0",
    )
    dTpsi = einsum("jabc,jabc->", dT, psi)
    sigpsi = einsum("jabc,jabc->", sig, psi)
    led.check(
        "dT_psi_trace",
        [
            dTpsi - (einsum("jabc,jabc->", nT, psi) * 4 + sigpsi * 2),
            dTpsi - (einsum("jj->", nth) * -24 - nT2 * 4 + nth2 * 24 + lam * lam * 24),
            dTpsi - (dth * 24 - ndpsi2 * 4 + nth2 * 72 + pairing * pairing * 4),
        ],
        "dT_jabc psi_jabc = 24 delta theta - 4|delta psi|^2 + 72|theta|^2 + 4 (dphi,psi)^2",
    )
    led.check(
        "sigma_psi_trace",
        [
            sigpsi - einsum("jas,bcs,jabc->", T, T, psi) * 3,
            sigpsi - (nT2 * -2 + nth2 * 12 + lam * lam * 12),
        ],
        "sigma_jabc psi_jabc = -2|T|^2 + 12|theta|^2 + 12 lambda^2",
    )
    dnabla_theta = nth - nth.transpose(1, 0)
    led.check(
        "codifferential_of_torsion",
        -dTT + dnabla_theta,
        "-delta T = -d^nabla theta + d lambda _| phi  (d lambda = 0)",
    )
    led.check(
        "lee_differential_split",
        g.dtheta - (dnabla_theta + einsum("s,sij->ij", th, T)),
        "d theta = d^nabla theta + theta _| T",
    )
    theta_psi = interior(s.theta, s.psi)
    dpsi27 = dpsi + theta_psi * Fraction(3, 4) - s.phi * (lam * Fraction(6, 7))
    parts = project3(dpsi27, s.forms)
    led.check(
        "coderivative_psi_27_component",
        [parts[0], parts[1], dpsi27 - project3(dpsi, s.forms)[2]],
        "(delta psi)_27 = delta psi + 3/4 theta _| psi - 6/7 lambda phi",
    )
    comps = (-dpsi27, theta_psi * Fraction(-1, 4), s.phi * (lam / 7))
    led.check(
        "torsion_orthogonal_split",
        [s.torsion - comps[0] - comps[1] - comps[2]]
        + [full_contract(comps[a], comps[b]) for a, b in ((0, 1), (0, 2), (1, 2))],
        "T = -(delta psi)_27 - theta _| psi / 4 + lambda phi / 7, pairwise orthogonal",
    )
    led.check(
        "torsion_norm_split",
        [
            nT2 - (full_contract(dpsi27, dpsi27) + nth2 * Fraction(3, 2) + pairing * pairing / 42),
            nT2 - (ndpsi2 - nth2 * 12 - pairing * pairing * Fraction(5, 6)),
        ],
        "|T|^2 = |(delta psi)_27|^2 + 3/2 |theta|^2 + (dphi,psi)^2/42 = |delta psi|^2 - 12|theta|^2 - 5/6 (dphi,psi)^2",
    )
    led.check(
        "torsion_alternative_form",
        s.torsion - (-dpsi - theta_psi + s.phi * lam),
        "T = -delta psi - theta _| psi + lambda phi",
    )
    led.check(
        "torsion_self_consistency",
        T
        - (
            einsum("jsk,jslm->klm", T, psi) * Fraction(-1, 2)
            + einsum("jsl,jskm->klm", T, psi) / 2
            - einsum("jsm,jskl->klm", T, psi) / 2
            - einsum("s,sklm->klm", th, psi)
            + phi * lam
        ),
        "T_klm = -T_jsk psi_jslm/2 + T_jsl psi_jskm/2 - T_jsm psi_jskl/2 - theta_s psi_sklm + lambda phi_klm",
    )
    dpsi_t = dpsi.to_tensor()
    led.check(
        "lee_form_from_torsion",
        [
            th - einsum("jkl,jkli->i", T, psi) / 6,
            th - einsum("jkl,jks,lis->i", T, phi, phi) / 6,
            th - einsum("jkl,jkli->i", dpsi_t, psi) / 18,
        ],
        "theta_i = T_jkl psi_jkli / 6 = delta psi_jkl psi_jkli / 18",
    )
    led.check(
        "type_constant_from_torsion",
        [lam - einsum("klm,klm->", T, phi) / 6, lam - einsum("klm,klm->", dpsi_t, phi) / 36],
        "lambda = T_klm phi_klm / 6 = delta psi_klm phi_klm / 36",
    )
    return led


# -- curvature symmetries ----------------------------------------------------


@dataclass(frozen=True)
class SymmetryReport(ResidualReport):
    def _derive(self, f):
        chain = f["dT_eq_minus_2_nablaT"] and f["dT_eq_two_thirds_sigma"] and f["ricci_flat"]
        return {
            "equivalences_hold": f["pairs_symmetry"] == f["nablaT_is_4form"] == f["dT_eq_4_nablagT"],
            "bianchi_implications_hold": not f["riemannian_first_bianchi"] or chain,
        }


def symmetry_checks(s: G2Structure) -> SymmetryReport:
    g = characteristic_geometry(s)
    R, nT, dT, sig = g.R, g.nablaT, g.dT, g.sigma
    residuals = {
        "pairs_symmetry": (R - _perm(R, "klij->ijkl")).norm2(),
        "riemannian_first_bianchi": _cyclic_first_three(R).norm2(),
        "nablaT_is_4form": (nT + _perm(nT, "yxzv->xyzv")).norm2(),
        "dT_eq_4_nablagT": (dT - g.nablagT * 4).norm2(),
        "dT_eq_minus_2_nablaT": (dT + nT * 2).norm2(),
        "dT_eq_two_thirds_sigma": (dT - sig * Fraction(2, 3)).norm2(),
        "ricci_flat": g.Ric.norm2(),
    }
    return SymmetryReport(residuals)


@dataclass(frozen=True)
class ClosedTorsionReport(ResidualReport):
    """Homogeneous content of the closed-torsion characterisation.

    ``dT = 0`` iff ``Ric = -nabla theta``; with closed torsion and ``Ric = 0``,
    also ``nabla theta = 0``, ``delta theta = 0`` and ``Scal = 0``.
    """

    def _derive(self, f):
        consequences = f["nabla_theta"] and f["delta_theta"] and f["scal"]
        return {
            "closed_iff_ricci_is_minus_nabla_theta": f["dT"] == f["ricci_plus_nabla_theta"],
            "ricci_flat_consequences_hold": not (f["dT"] and f["ricci"]) or consequences,
        }


def closed_torsion_checks(s: G2Structure) -> ClosedTorsionReport:
    g = characteristic_geometry(s)
    return ClosedTorsionReport(
        {
            "dT": g.dT.norm2(),
            "ricci_plus_nabla_theta": (g.Ric + g.nabla_theta).norm2(),
            "ricci": g.Ric.norm2(),
            "nabla_theta": g.nabla_theta.norm2(),
            "delta_theta": g.delta_theta * g.delta_theta,
            "scal": g.curvature.Scal * g.curvature.Scal,
        }
    )
