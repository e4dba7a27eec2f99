"""Dense exact tensors over Q(sqrt 2).

A :class:`QTensor` stores ``(rat + irr * sqrt2) / den`` with ``rat`` and
``irr`` numpy object arrays of Python ints and a positive integer ``den``.
Contractions go through :func:`numpy.einsum` on the integer arrays, which
keeps every index-heavy identity check exact without per-entry Fraction
overhead.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import reduce

import numpy as np

from .scalar import Scalar, as_scalar

__all__ = ["QTensor", "einsum", "act_on_slots", "delta", "levi_civita_symbol", "DIM"]

DIM = 7


def _int_array(values) -> np.ndarray:
    arr = np.asarray(values, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    out[...] = 0
    it = np.nditer(arr, flags=["multi_index", "refs_ok"])
    for v in it:
        out[it.multi_index] = int(v.item())
    return out


def _zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out[...] = 0
    return out


class QTensor:
    __slots__ = ("rat", "irr", "den")

    def __init__(self, rat: np.ndarray, irr: np.ndarray | None = None, den: int = 1, *, normalize: bool = True):
        if rat.dtype != object:
            rat = _int_array(rat)
        if irr is None:
            irr = _zeros(rat.shape)
        elif irr.dtype != object:
            irr = _int_array(irr)
        if irr.shape != rat.shape:
            raise ValueError("rational and sqrt2 parts differ in shape")
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.rat = rat
        self.irr = irr
        self.den = int(den)
        if normalize:
            self._normalize()

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, shape) -> "QTensor":
        if isinstance(shape, int):
            shape = (shape,)
        return cls(_zeros(tuple(shape)), _zeros(tuple(shape)), 1, normalize=False)

    @classmethod
    def from_scalars(cls, values) -> "QTensor":
        """Build from a (nested) array-like of anything :func:`as_scalar` accepts."""
        arr = np.asarray(values, dtype=object)
        scal = np.empty(arr.shape, dtype=object)
        for idx in np.ndindex(arr.shape):
            scal[idx] = as_scalar(arr[idx])
        den = 1
        for s in scal.flat:
            den = math.lcm(den, s.rat.denominator, s.sqrt2.denominator)
        rat = _zeros(arr.shape)
        irr = _zeros(arr.shape)
        for idx in np.ndindex(arr.shape):
            s = scal[idx]
            rat[idx] = s.rat.numerator * (den // s.rat.denominator)
            irr[idx] = s.sqrt2.numerator * (den // s.sqrt2.denominator)
        return cls(rat, irr, den)

    @classmethod
    def scalar(cls, value) -> "QTensor":
        return cls.from_scalars(np.array(as_scalar(value), dtype=object))

    def _normalize(self) -> None:
        g = self.den
        for v in itertools.chain(self.rat.flat, self.irr.flat):
            if g == 1:
                break
            if v:
                g = math.gcd(g, v)
        if g > 1:
            self.rat = self.rat // g
            self.irr = self.irr // g
            self.den //= g

    # -- basic properties -------------------------------------------------

    @property
    def shape(self) -> tuple[int, ...]:
        return self.rat.shape

    @property
    def ndim(self) -> int:
        return self.rat.ndim

    def has_irrational(self) -> bool:
        return any(v != 0 for v in self.irr.flat)

    def is_zero(self) -> bool:
        return not any(v != 0 for v in self.rat.flat) and not self.has_irrational()

    def __getitem__(self, index) -> "Scalar | QTensor":
        r = self.rat[index]
        i = self.irr[index]
        if isinstance(r, np.ndarray):
            return QTensor(r.copy(), i.copy(), self.den)
        return Scalar(Fraction(r, self.den), Fraction(i, self.den))

    def entries(self):
        """Yield ``(index, Scalar)`` for every nonzero entry, in C order."""
        for idx in np.ndindex(self.shape):
            r, i = self.rat[idx], self.irr[idx]
            if r or i:
                yield idx, Scalar(Fraction(r, self.den), Fraction(i, self.den))

    def to_float(self) -> np.ndarray:
        r = self.rat.astype(float)
        i = self.irr.astype(float)
        return (r + np.sqrt(2.0) * i) / self.den

    # -- algebra ----------------------------------------------------------

    def _aligned(self, other: "QTensor"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        den = math.lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        return den, fa, fb

    def __add__(self, other: "QTensor") -> "QTensor":
        if not isinstance(other, QTensor):
            return NotImplemented
        den, fa, fb = self._aligned(other)
        return QTensor(self.rat * fa + other.rat * fb, self.irr * fa + other.irr * fb, den)

    def __sub__(self, other: "QTensor") -> "QTensor":
        if not isinstance(other, QTensor):
            return NotImplemented
        den, fa, fb = self._aligned(other)
        return QTensor(self.rat * fa - other.rat * fb, self.irr * fa - other.irr * fb, den)

    def __neg__(self) -> "QTensor":
        return QTensor(-self.rat, -self.irr, self.den, normalize=False)

    def __mul__(self, value) -> "QTensor":
        if isinstance(value, QTensor):
            return NotImplemented
        s = as_scalar(value)
        a, b = s.rat, s.sqrt2
        den = math.lcm(a.denominator, b.denominator)
        an, bn = a.numerator * (den // a.denominator), b.numerator * (den // b.denominator)
        return QTensor(
            self.rat * an + self.irr * (2 * bn),
            self.rat * bn + self.irr * an,
            self.den * den,
        )

    __rmul__ = __mul__

    def __truediv__(self, value) -> "QTensor":
        return self * as_scalar(value).inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTensor):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    __hash__ = None

    def transpose(self, *axes) -> "QTensor":
        if len(axes) == 1 and isinstance(axes[0], (tuple, list)):
            axes = tuple(axes[0])
        return QTensor(
            np.ascontiguousarray(self.rat.transpose(axes)),
            np.ascontiguousarray(self.irr.transpose(axes)),
            self.den,
            normalize=False,
        )

    def sum(self) -> Scalar:
        return Scalar(Fraction(int(self.rat.sum()), self.den), Fraction(int(self.irr.sum()), self.den))

    def norm2(self) -> Scalar:
        """Sum of squares of all entries (the full index contraction with itself)."""
        r, i = self.rat, self.irr
        d2 = self.den * self.den
        rat = int((r * r).sum()) + 2 * int((i * i).sum())
        irr = 2 * int((r * i).sum())
        return Scalar(Fraction(rat, d2), Fraction(irr, d2))

    def __repr__(self) -> str:
        return f"QTensor(shape={self.shape}, den={self.den}, irrational={self.has_irrational()})"


def einsum(subscripts: str, *operands: QTensor) -> "QTensor | Scalar":
    """Exact :func:`numpy.einsum` over Q(sqrt 2).

    Each operand splits as ``rat + irr*sqrt2``; the product expands into one
    integer einsum per choice of parts, with ``sqrt2**m`` folded back into the
    two components.  Operands without a sqrt2 part contribute one branch only.
    """
    parts = []
    for op in operands:
        choices = [(0, op.rat)]
        if op.has_irrational():
            choices.append((1, op.irr))
        parts.append(choices)
    rat = irr = None
    for combo in itertools.product(*parts):
        m = sum(c[0] for c in combo)
        val = np.einsum(subscripts, *(c[1] for c in combo), dtype=object)
        if not isinstance(val, np.ndarray):
            val = np.array(val, dtype=object)
        weighted = val * (2 ** (m // 2)) if m >= 2 else val
        if m % 2 == 0:
            rat = weighted if rat is None else rat + weighted
        else:
            irr = weighted if irr is None else irr + weighted
    # arithmetic on 0-d object arrays unwraps to plain ints
    if rat is not None:
        rat = np.asarray(rat, dtype=object)
    if irr is not None:
        irr = np.asarray(irr, dtype=object)
    if rat is None:
        rat = _zeros(irr.shape)
    if irr is None:
        irr = _zeros(rat.shape)
    den = reduce(lambda x, y: x * y, (op.den for op in operands), 1)
    if rat.ndim == 0:
        return Scalar(Fraction(int(rat.item()), den), Fraction(int(irr.item()), den))
    return QTensor(rat, irr, den)


def delta() -> QTensor:
    """The 7x7 identity (metric) tensor."""
    return QTensor(_int_array(np.eye(DIM, dtype=int)))


def levi_civita_symbol(n: int = DIM) -> QTensor:
    arr = _zeros((n,) * n)
    for perm in itertools.permutations(range(n)):
        arr[perm] = _perm_sign(perm)
    return QTensor(arr, normalize=False)


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def act_on_slots(M: QTensor, A: QTensor) -> QTensor:
    """Apply a matrix to every slot of ``A`` and sum.

    With ``M`` of shape ``(7, 7)`` the result is
    ``sum_s M[j_s, m] A[j_1 .. m .. j_r]``.  A leading extra axis on ``M``
    (shape ``(7, 7, 7)``, as for connection coefficients) becomes the leading
    axis of the result.
    """
    r = A.ndim
    letters = "abcdefghijkl"[:r]
    lead = "y" if M.ndim == 3 else ""
    if M.ndim not in (2, 3):
        raise ValueError("M must have 2 or 3 axes")
    total = None
    for s in range(r):
        a_sub = letters[:s] + "z" + letters[s + 1 :]
        term = einsum(f"{lead}{letters[s]}z,{a_sub}->{lead}{letters}", M, A)
        total = term if total is None else total + term
    if total is None:
        return QTensor.zeros(M.shape[:1] if lead else ())
    return total
