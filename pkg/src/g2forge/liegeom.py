"""Seven-dimensional Lie algebras and calculus on left-invariant tensors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .forms import AltForm, DegreeError, hodge, wedge
from .scalar import Scalar, as_scalar
from .tensor import DIM, QTensor, act_on_slots, delta, einsum

__all__ = [
    "LieAlgebra",
    "InvalidAlgebraError",
    "Violation",
    "validate",
    "ce_differential",
    "codifferential",
    "lie_derivative",
    "opposite",
]


@dataclass(frozen=True)
class Violation:
    kind: str  # "antisymmetry" or "jacobi"
    indices: tuple[int, ...]  # 1-based
    value: Scalar

    def __str__(self) -> str:
        return f"{self.kind} violation at {self.indices}: {self.value}"


class InvalidAlgebraError(ValueError):
    def __init__(self, violations: list[Violation]):
        shown = "; ".join(str(v) for v in violations[:5])
        more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ""
        super().__init__(f"structure constants do not define a Lie algebra: {shown}{more}")
        self.violations = violations


class LieAlgebra:
    """Structure constants ``c[i, j, k] = c^k_ij`` with ``[e_i, e_j] = c^k_ij e_k`` (0-based axes).

    With the identity metric the same array is the lowered tensor
    ``g([e_i, e_j], e_k)``.  By default construction rejects arrays failing
    antisymmetry or the Jacobi identity; pass ``check=False`` to build an
    unchecked instance for :func:`validate`.
    """

    __slots__ = ("c", "_d_basis")

    def __init__(self, c: QTensor, *, check: bool = True):
        if not isinstance(c, QTensor):
            c = QTensor.from_scalars(c)
        if c.shape != (DIM, DIM, DIM):
            raise ValueError(f"structure constants must have shape {(DIM,) * 3}, got {c.shape}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "_d_basis", None)
        if check:
            violations = validate(self)
            if violations:
                raise InvalidAlgebraError(violations)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def abelian(cls) -> "LieAlgebra":
        return cls(QTensor.zeros((DIM, DIM, DIM)))

    @classmethod
    def from_brackets(cls, brackets: Iterable[tuple[int, int, int, object]], *, check: bool = True) -> "LieAlgebra":
        """From entries ``(i, j, k, c)`` meaning ``[e_i, e_j]`` contains ``c e_k`` (1-based).

        Each pair is completed antisymmetrically; listing both ``(i, j)`` and
        ``(j, i)`` adds both contributions.
        """
        vals: dict[tuple[int, int, int], Scalar] = {}
        for i, j, k, value in brackets:
            for idx in (i, j, k):
                if not 1 <= idx <= DIM:
                    raise ValueError(f"bracket index {idx} outside 1..{DIM}")
            v = as_scalar(value)
            vals[(i - 1, j - 1, k - 1)] = vals.get((i - 1, j - 1, k - 1), Scalar(0)) + v
            vals[(j - 1, i - 1, k - 1)] = vals.get((j - 1, i - 1, k - 1), Scalar(0)) - v
        arr = [[[vals.get((a, b, m), 0) for m in range(DIM)] for b in range(DIM)] for a in range(DIM)]
        return cls(QTensor.from_scalars(arr), check=check)

    @classmethod
    def from_differentials(cls, de: Mapping[int, AltForm], *, check: bool = True) -> "LieAlgebra":
        """From structure equations ``de_k`` (missing keys mean ``de_k = 0``).

        On invariant forms ``de_k = -sum_{i<j} c^k_ij e_ij``.
        """
        entries = []
        for k, form in de.items():
            if form.degree != 2:
                raise DegreeError(f"de_{k} must be a 2-form")
            for (i, j), v in form.coeffs.items():
                entries.append((i, j, k, -v))
        return cls.from_brackets(entries, check=check)

    # -- queries ----------------------------------------------------------

    def bracket(self, x: AltForm, y: AltForm) -> AltForm:
        t = einsum("i,j,ijk->k", x.to_tensor(), y.to_tensor(), self.c)
        return AltForm.from_tensor(t, check=False)

    def basis_differential(self, k: int) -> AltForm:
        """``d e_k`` for the 1-based basis 1-form ``e_k``."""
        if self._d_basis is None:
            table = {}
            for m in range(1, DIM + 1):
                table[m] = AltForm(
                    2, {(i, j): -self.c[i - 1, j - 1, m - 1] for i in range(1, DIM + 1) for j in range(i + 1, DIM + 1)}
                )
            object.__setattr__(self, "_d_basis", table)
        return self._d_basis[k]

    def brackets(self) -> list[tuple[int, int, int, Scalar]]:
        """Nonzero ``(i, j, k, c)`` with ``i < j`` (1-based)."""
        return [
            (i + 1, j + 1, k + 1, self.c[i, j, k])
            for i in range(DIM)
            for j in range(i + 1, DIM)
            for k in range(DIM)
            if self.c[i, j, k]
        ]

    def is_unimodular(self) -> bool:
        """``tr ad_X = 0`` for all X."""
        return einsum("ijj->i", self.c).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.c == other.c

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        return f"LieAlgebra({len(self.brackets())} brackets)"


def validate(algebra: LieAlgebra) -> list[Violation]:
    """All antisymmetry and Jacobi violations; empty when the algebra is valid."""
    c = algebra.c
    out: list[Violation] = []
    sym = c + c.transpose(1, 0, 2)
    for (i, j, k), v in sym.entries():
        if i <= j:
            out.append(Violation("antisymmetry", (i + 1, j + 1, k + 1), v if i < j else c[i, i, k]))
    # J[i,j,k,m] = c^s_jk c^m_is + c^s_ki c^m_js + c^s_ij c^m_ks
    jac = einsum("jks,ism->ijkm", c, c) + einsum("kis,jsm->ijkm", c, c) + einsum("ijs,ksm->ijkm", c, c)
    for (i, j, k, m), v in jac.entries():
        if i < j < k:
            out.append(Violation("jacobi", (i + 1, j + 1, k + 1, m + 1), v))
    return out


def ce_differential(algebra: LieAlgebra, alpha: AltForm) -> AltForm:
    """Exterior derivative of a left-invariant form, as a derivation built from ``d e_k``."""
    k = alpha.degree
    if k == DIM:
        raise DegreeError("the derivative of a top-degree form has degree 8")
    out = AltForm.zero(k + 1)
    for I, a in alpha.coeffs.items():
        for s, idx in enumerate(I):
            de = algebra.basis_differential(idx)
            if de.is_zero():
                continue
            head = AltForm(s, {I[:s]: 1})
            tail = AltForm(k - s - 1, {I[s + 1 :]: 1})
            term = wedge(wedge(head, de), tail)
            out = out + (term * a if s % 2 == 0 else term * (-a))
    return out


def codifferential(algebra: LieAlgebra, alpha: AltForm) -> AltForm:
    """``delta alpha = (-1)^k * d * alpha`` on k-forms."""
    k = alpha.degree
    if k == 0:
        raise DegreeError("codifferential of a 0-form")
    out = hodge(ce_differential(algebra, hodge(alpha)))
    return -out if k % 2 else out


def _ad_matrix(algebra: LieAlgebra, V: AltForm) -> QTensor:
    """``M[j, m]`` with ``[V, e_j] = M[j, m] e_m``."""
    return einsum("i,ijm->jm", V.to_tensor(), algebra.c)


def lie_derivative(algebra: LieAlgebra, V, tensor):
    """Lie derivative of a left-invariant tensor along a left-invariant field.

    ``(L_V A)(X, ...) = -A([V, X], ...) - ...`` since invariant components are
    constant.  ``tensor`` may be an :class:`AltForm` or a dense
    :class:`QTensor` (e.g. the metric ``delta()``); the result has the same kind.
    """
    if not isinstance(V, AltForm):
        from .forms import vector

        V = vector(V)
    M = _ad_matrix(algebra, V)
    if isinstance(tensor, AltForm):
        if tensor.degree == 0:
            return AltForm.zero(0)
        return AltForm.from_tensor(-act_on_slots(M, tensor.to_tensor()), check=False)
    return -act_on_slots(M, tensor)


def opposite(algebra: LieAlgebra) -> LieAlgebra:
    """The algebra with negated bracket, modelling right-invariant fields."""
    return LieAlgebra(-algebra.c)


def metric() -> QTensor:
    return delta()
