"""Test-only generators of Lie algebras and integrable structures."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

import numpy as np

from g2forge.forms import multi_indices
from g2forge.g2core import standard_phi
from g2forge.liegeom import LieAlgebra
from g2forge.linalg import nullspace
from g2forge.scalar import Scalar
from g2forge.tensor import QTensor
from g2forge.torsion import G2Structure

SU2_SU2_U1 = [(1, 2, 3, -1), (1, 3, 2, 1), (2, 3, 1, -1), (4, 5, 6, -1), (4, 6, 5, 1), (5, 6, 4, -1)]
R3_SU2_U1 = [(4, 5, 6, -1), (4, 6, 5, 1), (5, 6, 4, -1)]


def almost_abelian(A) -> LieAlgebra:
    """``R^6 x| R`` with ``[e7, e_i] = sum_j A[j][i] e_j``; Jacobi holds for any ``A``."""
    entries = []
    for i in range(6):
        for j in range(6):
            if A[j][i]:
                entries.append((7, i + 1, j + 1, A[j][i]))
    return LieAlgebra.from_brackets(entries)


def _unit(a, b):
    return [[1 if (r, s) == (a, b) else 0 for s in range(6)] for r in range(6)]


@lru_cache(maxsize=None)
def integrable_almost_abelian_basis() -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    """Basis of matrices ``A`` for which the standard form is integrable.

    Integrability is linear in the structure constants, so the admissible
    ``A`` form the kernel of a 21 x 36 rational matrix.
    """
    phi = standard_phi()
    keys = multi_indices(5)
    columns = []
    for a in range(6):
        for b in range(6):
            s = G2Structure(almost_abelian(_unit(a, b)), phi)
            columns.append([s.integrability_residual[k] for k in keys])
    rows = [[columns[c][r] for c in range(36)] for r in range(len(keys))]
    basis = []
    for v in nullspace(rows, 36):
        basis.append(tuple(tuple(v[6 * a + b].rat for b in range(6)) for a in range(6)))
    return tuple(basis)


def random_integrable_almost_abelian(seed: int, spread: int = 3) -> G2Structure:
    rng = random.Random(seed)
    A = [[Fraction(0)] * 6 for _ in range(6)]
    for vec in integrable_almost_abelian_basis():
        coef = rng.randint(-spread, spread)
        for a in range(6):
            for b in range(6):
                A[a][b] += coef * vec[a][b]
    return G2Structure(almost_abelian(A), standard_phi(), f"almost_abelian_{seed}")


def random_unimodular(rng: random.Random, steps: int = 6) -> tuple[np.ndarray, np.ndarray]:
    """Integer matrix with integer inverse, built from elementary row operations."""
    B = np.eye(7, dtype=object)
    Binv = np.eye(7, dtype=object)
    for _ in range(steps):
        i, j = rng.sample(range(7), 2)
        k = rng.choice([-2, -1, 1, 2])
        E = np.eye(7, dtype=object)
        E[i, j] = k
        Einv = np.eye(7, dtype=object)
        Einv[i, j] = -k
        B = B.dot(E)
        Binv = Einv.dot(Binv)
    return B, Binv


def change_basis(algebra: LieAlgebra, B, Binv) -> LieAlgebra:
    """Brackets in the basis ``f_a = sum_i B[i, a] e_i``, declared orthonormal.

    The result is isomorphic to ``algebra`` but carries a different metric,
    which makes it a generic metric Lie algebra for property tests.
    """
    c = algebra.c
    rat = np.einsum("ia,jb,ijk,ck->abc", B, B, c.rat, Binv, dtype=object)
    irr = np.einsum("ia,jb,ijk,ck->abc", B, B, c.irr, Binv, dtype=object)
    return LieAlgebra(QTensor(rat, irr, c.den))


def random_metric_algebra(seed: int) -> LieAlgebra:
    rng = random.Random(seed)
    base = LieAlgebra.from_brackets(rng.choice([SU2_SU2_U1, R3_SU2_U1]))
    return change_basis(base, *random_unimodular(rng))


def random_three_form(seed: int, spread: int = 2):
    from g2forge.forms import AltForm

    rng = random.Random(seed)
    terms = [(I, Fraction(rng.randint(-spread, spread), rng.randint(1, 2))) for I in multi_indices(3) if rng.random() < 0.4]
    return AltForm.from_terms(3, terms)
