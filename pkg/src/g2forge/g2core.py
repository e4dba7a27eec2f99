"""The standard G2 form, its contraction identities and representation-theoretic splittings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .forms import AltForm, DegreeError, basis_vector, full_contract, hodge, interior, multi_indices, vector, wedge
from .ledger import IdentityLedger
from .linalg import rank
from .scalar import Scalar
from .tensor import DIM, QTensor, delta, einsum

__all__ = [
    "G2FormData",
    "NotAG2FormError",
    "SymTraceless",
    "RankReport",
    "STANDARD_PHI_TERMS",
    "standard_phi",
    "induced_metric",
    "identity_suite",
    "project2",
    "project3",
    "gamma_map",
    "gamma_inv",
    "ProjectionError",
    "four_form_injectivity",
    "projector_matrices",
]

STANDARD_PHI_TERMS = (
    ((1, 2, 7), 1),
    ((1, 3, 5), 1),
    ((1, 4, 6), -1),
    ((2, 3, 6), -1),
    ((2, 4, 5), -1),
    ((3, 4, 7), 1),
    ((5, 6, 7), 1),
)


class NotAG2FormError(ValueError):
    """The 3-form does not define a G2 structure compatible with the identity metric and orientation."""

    def __init__(self, message: str, metric: QTensor | None = None):
        super().__init__(message)
        self.metric = metric


def induced_metric(phi: AltForm) -> QTensor:
    """``g_ij = (1/6) phi_ikl phi_jkl``."""
    p = phi.to_tensor()
    return einsum("ikl,jkl->ij", p, p) / 6


@dataclass(frozen=True)
class G2FormData:
    """A G2 3-form in an orthonormal, positively oriented frame, together with ``psi = *phi``.

    Construction fails unless the induced metric is exactly the identity and
    ``phi_ijk phi_abk = d_ia d_jb - d_ib d_ja + psi_ijab`` holds, which pins
    the orientation.
    """

    phi: AltForm
    psi: AltForm = field(init=False)
    phi_t: QTensor = field(init=False, repr=False, compare=False)
    psi_t: QTensor = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.phi.degree != 3:
            raise DegreeError(f"a G2 form has degree 3, got {self.phi.degree}")
        g = induced_metric(self.phi)
        if g != delta():
            raise NotAG2FormError("induced metric is not the identity", metric=g)
        psi = hodge(self.phi)
        p, s = self.phi.to_tensor(), psi.to_tensor()
        if einsum("ijk,abk->ijab", p, p) - _dd() != s:
            raise NotAG2FormError("3-form is not positive for the orientation e1^...^e7", metric=g)
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "phi_t", p)
        object.__setattr__(self, "psi_t", s)


def _dd() -> QTensor:
    d = delta()
    return einsum("ia,jb->ijab", d, d) - einsum("ib,ja->ijab", d, d)


_STANDARD: G2FormData | None = None


def standard_phi() -> G2FormData:
    global _STANDARD
    if _STANDARD is None:
        _STANDARD = G2FormData(AltForm.from_terms(3, STANDARD_PHI_TERMS))
    return _STANDARD


def _resolve(data: G2FormData | None) -> G2FormData:
    return standard_phi() if data is None else data


def identity_suite(data: G2FormData | AltForm | None = None) -> IdentityLedger:
    """Evaluate the quadratic phi/psi contraction identities as exact residuals.

    A bare 3-form is accepted unvalidated (with ``psi = *phi``), so that
    candidates failing the G2 conditions can be diagnosed.
    """
    if isinstance(data, AltForm):
        p, s = data.to_tensor(), hodge(data).to_tensor()
    else:
        data = _resolve(data)
        p, s = data.phi_t, data.psi_t
    d = delta()
    led = IdentityLedger()
    led.check("phi_phi_two_free", einsum("ijk,ajk->ia", p, p) - d * 6, "phi_ijk phi_ajk = 6 d_ia")
    led.check("phi_phi_full", einsum("ijk,ijk->", p, p) - 42, "phi_ijk phi_ijk = 42")
    led.check(
        "phi_phi_four_free",
        einsum("ijk,abk->ijab", p, p) - _dd() - s,
        "phi_ijk phi_abk = d_ia d_jb - d_ib d_ja + psi_ijab",
    )
    led.check("phi_psi_three_free", einsum("ijk,abjk->iab", p, s) - p * 4, "phi_ijk psi_abjk = 4 phi_iab")
    rhs = (
        einsum("ia,jbc->ijabc", d, p)
        + einsum("ib,ajc->ijabc", d, p)
        + einsum("ic,abj->ijabc", d, p)
        - einsum("aj,ibc->ijabc", d, p)
        - einsum("bj,aic->ijabc", d, p)
        - einsum("cj,abi->ijabc", d, p)
    )
    led.check("phi_psi_five_free", einsum("ijk,kabc->ijabc", p, s) - rhs, "phi_ijk psi_kabc = six-term delta*phi sum")
    led.check("psi_psi_two_free", einsum("ijkl,ajkl->ia", s, s) - d * 24, "psi_ijkl psi_ajkl = 24 d_ia")
    led.check("psi_psi_full", einsum("ijkl,ijkl->", s, s) - 168, "psi_ijkl psi_ijkl = 168")
    led.check(
        "psi_psi_four_free",
        einsum("ijkl,abkl->ijab", s, s) - _dd() * 4 - s * 2,
        "psi_ijkl psi_abkl = 4 d_ia d_jb - 4 d_ib d_ja + 2 psi_ijab",
    )
    led.check("psi_psi_six_free", einsum("ijkl,abcl->ijkabc", s, s) - _psi_psi_six(p, s, d), "psi_ijkl psi_abcl expansion")
    return led


def _psi_psi_six(p: QTensor, s: QTensor, d: QTensor) -> QTensor:
    out = (
        einsum("ia,jb,kc->ijkabc", d, d, d)
        + einsum("ib,jc,ka->ijkabc", d, d, d)
        + einsum("ic,ja,kb->ijkabc", d, d, d)
        - einsum("ia,jc,kb->ijkabc", d, d, d)
        - einsum("ib,ja,kc->ijkabc", d, d, d)
        - einsum("ic,jb,ka->ijkabc", d, d, d)
    )
    phiphi = (
        einsum("ajk,ibc->ijkabc", p, p)
        + einsum("bjk,ica->ijkabc", p, p)
        + einsum("cjk,iab->ijkabc", p, p)
        + einsum("iak,jbc->ijkabc", p, p)
        + einsum("ibk,jca->ijkabc", p, p)
        + einsum("ick,jab->ijkabc", p, p)
        + einsum("ija,kbc->ijkabc", p, p)
        + einsum("ijb,kca->ijkabc", p, p)
        + einsum("ijc,kab->ijkabc", p, p)
    )
    dpsi = (
        einsum("ia,jkbc->ijkabc", d, s)
        + einsum("ib,jkca->ijkabc", d, s)
        + einsum("ic,jkab->ijkabc", d, s)
        + einsum("ja,kibc->ijkabc", d, s)
        + einsum("jb,kica->ijkabc", d, s)
        + einsum("jc,kiab->ijkabc", d, s)
        + einsum("ka,ijbc->ijkabc", d, s)
        + einsum("kb,ijca->ijkabc", d, s)
        + einsum("kc,ijab->ijkabc", d, s)
    )
    return out + (dpsi - phiphi) / 3


# -- splittings of 2- and 3-forms -----------------------------------------


def project2(beta: AltForm, data: G2FormData | None = None) -> tuple[AltForm, AltForm]:
    """Split a 2-form into its 7- and 14-dimensional G2 components.

    ``L(b) = *(b ^ phi)`` has eigenvalue 2 on the 7-part and -1 on the
    14-part, so the projectors are ``(L + 1)/3`` and ``(2 - L)/3``.
    """
    if beta.degree != 2:
        raise DegreeError(f"project2 expects a 2-form, got degree {beta.degree}")
    data = _resolve(data)
    L = hodge(wedge(beta, data.phi))
    b7 = (L + beta) / 3
    return b7, beta - b7


def lambda3_7_vector(gamma: AltForm, data: G2FormData | None = None) -> AltForm:
    """The 1-form ``a`` with ``gamma_7 = a _| psi``: ``a_i = (1/24) gamma_jkl psi_ijkl``."""
    data = _resolve(data)
    return vector(full_contract(gamma, interior(basis_vector(i), data.psi)) / 24 for i in range(1, DIM + 1))


def project3(gamma: AltForm, data: G2FormData | None = None) -> tuple[AltForm, AltForm, AltForm]:
    """Split a 3-form into its 1-, 7- and 27-dimensional G2 components."""
    if gamma.degree != 3:
        raise DegreeError(f"project3 expects a 3-form, got degree {gamma.degree}")
    data = _resolve(data)
    g1 = data.phi * (full_contract(gamma, data.phi) / 42)
    g7 = interior(lambda3_7_vector(gamma, data), data.psi)
    return g1, g7, gamma - g1 - g7


@dataclass(frozen=True)
class SymTraceless:
    """A symmetric traceless 7x7 matrix."""

    entries: QTensor

    def __post_init__(self):
        e = self.entries
        if not isinstance(e, QTensor):
            e = QTensor.from_scalars(e)
            object.__setattr__(self, "entries", e)
        if e.shape != (DIM, DIM):
            raise ValueError(f"expected a {DIM}x{DIM} matrix, got shape {e.shape}")
        if e.transpose(1, 0) != e:
            raise ValueError("matrix is not symmetric")
        if einsum("ii->", e):
            raise ValueError("matrix is not traceless")

    def __getitem__(self, index) -> Scalar:
        return self.entries[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymTraceless):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None


def gamma_map(h: SymTraceless, data: G2FormData | None = None) -> AltForm:
    """``gamma(h)_ijk = h_ip phi_pjk + h_jp phi_pki + h_kp phi_pij``, an element of the 27-part."""
    if not isinstance(h, SymTraceless):
        h = SymTraceless(h)
    data = _resolve(data)
    p, m = data.phi_t, h.entries
    t = einsum("ip,pjk->ijk", m, p) + einsum("jp,pki->ijk", m, p) + einsum("kp,pij->ijk", m, p)
    return AltForm.from_tensor(t)


class ProjectionError(ValueError):
    """A 3-form passed where a pure 27-component is required has other components."""

    def __init__(self, message: str, parts: tuple[AltForm, AltForm, AltForm]):
        super().__init__(message)
        self.parts = parts


def gamma_inv(B: AltForm, data: G2FormData | None = None) -> SymTraceless:
    """``h_im = (1/4) B_ijk phi_mjk``; rejects input with 1- or 7-components."""
    data = _resolve(data)
    parts = project3(B, data)
    if parts[0] or parts[1]:
        raise ProjectionError(
            f"3-form is not in the 27-dimensional component (1-part: {parts[0]}, 7-part: {parts[1]})", parts
        )
    return SymTraceless(einsum("ijk,mjk->im", B.to_tensor(), data.phi_t) / 4)


@dataclass(frozen=True)
class RankReport:
    rank: int
    domain_dim: int

    @property
    def injective(self) -> bool:
        return self.rank == self.domain_dim


def four_form_injectivity(data: G2FormData | None = None) -> RankReport:
    """Rank of ``A -> (1- and 7-parts of e_p _| A)_p`` on 4-forms.

    Full rank (35) means a 4-form all of whose contractions are pure
    27-forms must vanish.
    """
    data = _resolve(data)
    columns = []
    for I in multi_indices(4):
        A = AltForm(4, {I: 1})
        col: list[Scalar] = []
        for p in range(1, DIM + 1):
            g = interior(basis_vector(p), A)
            col.append(full_contract(g, data.phi) / 42)
            col.extend(lambda3_7_vector(g, data).components())
        columns.append(col)
    rows = [list(r) for r in zip(*columns)]
    return RankReport(rank(rows), len(columns))


def projector_matrices(data: G2FormData | None = None) -> dict[str, QTensor]:
    """Matrices of the G2 projectors in the canonical monomial bases of 2- and 3-forms.

    Column ``j`` holds the image of the ``j``-th basis monomial.
    """
    data = _resolve(data)
    out: dict[str, list[list[Scalar]]] = {"p2_7": [], "p2_14": [], "p3_1": [], "p3_7": [], "p3_27": []}
    for I in multi_indices(2):
        b7, b14 = project2(AltForm(2, {I: 1}), data)
        out["p2_7"].append(b7.components())
        out["p2_14"].append(b14.components())
    for I in multi_indices(3):
        g1, g7, g27 = project3(AltForm(3, {I: 1}), data)
        out["p3_1"].append(g1.components())
        out["p3_7"].append(g7.components())
        out["p3_27"].append(g27.components())
    return {k: QTensor.from_scalars(v).transpose(1, 0) for k, v in out.items()}
