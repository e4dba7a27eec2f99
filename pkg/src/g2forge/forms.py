"""Alternating forms on an oriented orthonormal 7-dimensional frame.

Forms are stored sparsely: a map from strictly increasing 1-based index
tuples to nonzero :class:`~g2forge.scalar.Scalar` coefficients, so that
``{(1, 2, 7): 1}`` is the monomial ``e1 ^ e2 ^ e7``.  Vectors are identified
with 1-forms through the identity metric.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .scalar import Scalar, as_scalar
from .tensor import DIM, QTensor, _zeros

__all__ = [
    "AltForm",
    "DegreeError",
    "wedge",
    "interior",
    "hodge",
    "full_contract",
    "vector",
    "basis_vector",
    "volume_form",
    "multi_indices",
]


class DegreeError(ValueError):
    """Raised when form degrees are incompatible with an operation."""


@lru_cache(maxsize=None)
def multi_indices(k: int) -> tuple[tuple[int, ...], ...]:
    """All strictly increasing 1-based multi-indices of length ``k`` in canonical order."""
    return tuple(itertools.combinations(range(1, DIM + 1), k))


def _sort_sign(seq) -> tuple[int, tuple[int, ...] | None]:
    """Sign of the permutation sorting ``seq``; ``(0, None)`` on a repeated index."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0, None
    sign = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign, tuple(sorted(s))


@lru_cache(maxsize=None)
def _permutations_with_sign(k: int):
    return tuple((p, _sort_sign(p)[0]) for p in itertools.permutations(range(k)))


class AltForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Iterable[int], object] | None = None):
        if not 0 <= degree <= DIM:
            raise DegreeError(f"degree {degree} outside 0..{DIM}")
        clean: dict[tuple[int, ...], Scalar] = {}
        for key, value in (coeffs or {}).items():
            key = tuple(int(i) for i in key)
            if len(key) != degree:
                raise DegreeError(f"index {key} has length {len(key)}, expected {degree}")
            if any(not 1 <= i <= DIM for i in key):
                raise ValueError(f"index {key} outside 1..{DIM}")
            sign, canon = _sort_sign(key)
            if sign == 0:
                continue
            val = as_scalar(value) * sign
            total = clean.get(canon, Scalar(0)) + val
            if total:
                clean[canon] = total
            else:
                clean.pop(canon, None)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AltForm is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "AltForm":
        return cls(degree)

    @classmethod
    def from_terms(cls, degree: int, terms: Iterable[tuple[Iterable[int], object]]) -> "AltForm":
        """Sum of ``c * e_I`` for ``(I, c)`` in ``terms``; repeated keys add up."""
        out = cls(degree)
        for idx, c in terms:
            out = out + cls(degree, {tuple(idx): c})
        return out

    @classmethod
    def from_tensor(cls, tensor: QTensor, *, check: bool = True) -> "AltForm":
        """Read a form from its fully antisymmetric component tensor."""
        k = tensor.ndim
        form = cls(k, {tuple(i + 1 for i in idx): tensor[idx] for idx in itertools.combinations(range(DIM), k)})
        if check and form.to_tensor() != tensor:
            raise ValueError("tensor is not totally antisymmetric")
        return form

    # -- accessors --------------------------------------------------------

    def __getitem__(self, index) -> Scalar:
        sign, canon = _sort_sign(index)
        if sign == 0:
            return Scalar(0)
        return self.coeffs.get(canon, Scalar(0)) * sign

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def to_tensor(self) -> QTensor:
        """Component tensor ``a[i1..ik] = alpha(e_i1, ..., e_ik)`` (0-based axes)."""
        k = self.degree
        if k == 0:
            return QTensor.scalar(self.coeffs.get((), Scalar(0)))
        dense = QTensor.from_scalars(
            [self.coeffs.get(idx, Scalar(0)) for idx in multi_indices(k)]
        )
        rat = _zeros((DIM,) * k)
        irr = _zeros((DIM,) * k)
        for pos, idx in enumerate(multi_indices(k)):
            r, i = dense.rat[pos], dense.irr[pos]
            if not (r or i):
                continue
            base = tuple(j - 1 for j in idx)
            for perm, sign in _permutations_with_sign(k):
                target = tuple(base[p] for p in perm)
                rat[target] = sign * r
                irr[target] = sign * i
        return QTensor(rat, irr, dense.den, normalize=False)

    def components(self) -> list[Scalar]:
        """Coefficients in canonical multi-index order."""
        return [self.coeffs.get(idx, Scalar(0)) for idx in multi_indices(self.degree)]

    # -- linear structure -------------------------------------------------

    def _check_same(self, other: "AltForm") -> None:
        if not isinstance(other, AltForm):
            raise TypeError(f"expected AltForm, got {type(other).__name__}")
        if other.degree != self.degree:
            raise DegreeError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other: "AltForm") -> "AltForm":
        self._check_same(other)
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            out[key] = out.get(key, Scalar(0)) + val
        return AltForm(self.degree, out)

    def __sub__(self, other: "AltForm") -> "AltForm":
        return self + (-other)

    def __neg__(self) -> "AltForm":
        return AltForm(self.degree, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, value) -> "AltForm":
        if isinstance(value, AltForm):
            return NotImplemented
        s = as_scalar(value)
        return AltForm(self.degree, {k: v * s for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, value) -> "AltForm":
        return self * as_scalar(value).inverse()

    def __xor__(self, other: "AltForm") -> "AltForm":
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AltForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            c = self.coeffs[idx]
            mono = "e" + "".join(str(i) for i in idx) if idx else "1"
            if c == 1:
                parts.append(f"+{mono}")
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                text = str(c)
                if not c.is_rational() and c.rat != 0:
                    text = f"({text})"
                parts.append(f"{'' if text.startswith('-') else '+'}{text}*{mono}")
        return "".join(parts).lstrip("+")

    def __repr__(self) -> str:
        return f"AltForm({self.degree}, {self})"


def vector(components: Iterable[object]) -> AltForm:
    """A vector (equivalently a 1-form) from its seven components."""
    comps = list(components)
    if len(comps) != DIM:
        raise ValueError(f"a vector needs {DIM} components, got {len(comps)}")
    return AltForm(1, {(i + 1,): c for i, c in enumerate(comps)})


def basis_vector(i: int) -> AltForm:
    return AltForm(1, {(i,): 1})


def volume_form() -> AltForm:
    return AltForm(DIM, {tuple(range(1, DIM + 1)): 1})


def wedge(alpha: AltForm, beta: AltForm) -> AltForm:
    k, l = alpha.degree, beta.degree
    if k + l > DIM:
        raise DegreeError(f"wedge of degrees {k} and {l} exceeds {DIM}")
    out: dict[tuple[int, ...], Scalar] = {}
    for I, a in alpha.coeffs.items():
        for J, b in beta.coeffs.items():
            sign, key = _sort_sign(I + J)
            if sign == 0:
                continue
            out[key] = out.get(key, Scalar(0)) + (a * b if sign > 0 else -(a * b))
    return AltForm(k + l, out)


def _as_vector(X) -> AltForm:
    if isinstance(X, AltForm):
        if X.degree != 1:
            raise DegreeError(f"expected a vector (degree 1), got degree {X.degree}")
        return X
    return vector(X)


def interior(X, alpha: AltForm) -> AltForm:
    """Contraction ``X _| alpha`` into the first slot."""
    X = _as_vector(X)
    k = alpha.degree
    if k == 0:
        raise DegreeError("interior product of a 0-form")
    out: dict[tuple[int, ...], Scalar] = {}
    for (i,), x in X.coeffs.items():
        for I, a in alpha.coeffs.items():
            if i not in I:
                continue
            pos = I.index(i)
            key = I[:pos] + I[pos + 1 :]
            term = x * a
            out[key] = out.get(key, Scalar(0)) + (term if pos % 2 == 0 else -term)
    return AltForm(k - 1, out)


@lru_cache(maxsize=None)
def _hodge_table(k: int) -> dict[tuple[int, ...], tuple[int, tuple[int, ...]]]:
    full = set(range(1, DIM + 1))
    table = {}
    for I in multi_indices(k):
        J = tuple(sorted(full - set(I)))
        table[I] = (_sort_sign(I + J)[0], J)
    return table


def hodge(alpha: AltForm) -> AltForm:
    """Hodge star for the identity metric and orientation ``e1 ^ ... ^ e7``."""
    table = _hodge_table(alpha.degree)
    out = {}
    for I, a in alpha.coeffs.items():
        sign, J = table[I]
        out[J] = a if sign > 0 else -a
    return AltForm(DIM - alpha.degree, out)


def full_contract(alpha: AltForm, beta: AltForm) -> Scalar:
    """Sum over all ordered index tuples of ``alpha_I * beta_I``; ``k!`` times the form inner product."""
    if alpha.degree != beta.degree:
        raise DegreeError(f"degree mismatch {alpha.degree} vs {beta.degree}")
    total = Scalar(0)
    small, big = (alpha, beta) if len(alpha.coeffs) <= len(beta.coeffs) else (beta, alpha)
    for I, a in small.coeffs.items():
        b = big.coeffs.get(I)
        if b is not None:
            total = total + a * b
    return total * math.factorial(alpha.degree)
