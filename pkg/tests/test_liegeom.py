import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from builders import R3_SU2_U1, SU2_SU2_U1, almost_abelian, random_metric_algebra
from g2forge.forms import AltForm, DegreeError, basis_vector, full_contract, hodge, interior, multi_indices, vector
from g2forge.g2core import standard_phi
from g2forge.liegeom import (
    InvalidAlgebraError,
    LieAlgebra,
    ce_differential,
    codifferential,
    lie_derivative,
    opposite,
    validate,
)
from g2forge.scalar import Scalar
from g2forge.tensor import QTensor, delta
from g2forge.torsion import G2Structure, characteristic_torsion
from conftest import forms

SU = LieAlgebra.from_brackets(SU2_SU2_U1)
R3 = LieAlgebra.from_brackets(R3_SU2_U1)
ALGEBRAS = [LieAlgebra.abelian(), SU, R3, almost_abelian([[i - j if i != j else 1 for j in range(6)] for i in range(6)])]


def e(*idx):
    return AltForm(len(idx), {tuple(idx): 1})


def brute_d(alg: LieAlgebra, a: AltForm) -> AltForm:
    """d a(X0..Xk) = sum_{i<j} (-1)^(i+j) a([Xi, Xj], X0, ..., ^i, ^j, ...)."""
    k = a.degree
    out = {}
    for I in multi_indices(k + 1):
        X = [basis_vector(i) for i in I]
        total = Scalar(0)
        for i, j in itertools.combinations(range(k + 1), 2):
            rest = [X[m] for m in range(k + 1) if m not in (i, j)]
            br = alg.bracket(X[i], X[j])
            for (b,), cb in br.coeffs.items():
                total = total + cb * a[(b,) + tuple(next(iter(r.coeffs))[0] for r in rest)] * (-1) ** (i + j)
        out[I] = total
    return AltForm(k + 1, out)


def test_structure_equations():
    assert ce_differential(SU, e(1)) == e(2, 3)
    assert ce_differential(SU, e(2)) == -e(1, 3)
    assert ce_differential(SU, e(3)) == e(1, 2)
    assert ce_differential(SU, e(4)) == e(5, 6)
    assert ce_differential(SU, e(5)) == -e(4, 6)
    assert ce_differential(SU, e(6)) == e(4, 5)
    assert ce_differential(SU, e(7)).is_zero()
    assert ce_differential(SU, e(1, 2, 3)).is_zero()
    for k in (1, 2, 3):
        assert ce_differential(R3, e(k)).is_zero()


def test_from_differentials_matches():
    de = {1: e(2, 3), 2: -e(1, 3), 3: e(1, 2), 4: e(5, 6), 5: -e(4, 6), 6: e(4, 5)}
    assert LieAlgebra.from_differentials(de) == SU


def test_validate_examples():
    # [e1,e2] = e3 and cyclic, with positive constants
    pos = LieAlgebra.from_brackets([(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1), (4, 5, 6, 1), (5, 6, 4, 1), (6, 4, 5, 1)])
    assert validate(pos) == []
    assert validate(LieAlgebra.abelian()) == []
    arr = [[[0] * 7 for _ in range(7)] for _ in range(7)]
    arr[0][1][2] = arr[1][0][2] = 1
    bad = LieAlgebra(QTensor.from_scalars(arr), check=False)
    v = validate(bad)
    assert [(x.kind, x.indices) for x in v] == [("antisymmetry", (1, 2, 3))]
    with pytest.raises(InvalidAlgebraError):
        LieAlgebra(QTensor.from_scalars(arr))


def test_jacobi_violation_reported():
    with pytest.raises(InvalidAlgebraError) as info:
        LieAlgebra.from_brackets([(1, 2, 3, 1), (2, 3, 4, 1), (1, 4, 5, 1)])
    assert any(v.kind == "jacobi" and v.indices[:3] == (1, 2, 3) for v in info.value.violations)


@settings(max_examples=40)
@given(st.sampled_from(ALGEBRAS), st.integers(0, 5).flatmap(forms))
def test_d_matches_brute_force_and_squares_to_zero(alg, a):
    da = ce_differential(alg, a)
    assert da == brute_d(alg, a)
    if a.degree < 6:
        assert ce_differential(alg, da).is_zero()


@settings(max_examples=40)
@given(st.sampled_from(ALGEBRAS), st.integers(1, 7).flatmap(forms))
def test_codifferential_three_step_and_nilpotent(alg, a):
    k = a.degree
    expected = hodge(brute_d(alg, hodge(a))) * (-1) ** k
    assert codifferential(alg, a) == expected
    if k > 1:
        assert codifferential(alg, codifferential(alg, a)).is_zero()


@settings(max_examples=40)
@given(st.sampled_from(ALGEBRAS[:3]), st.integers(0, 5).flatmap(lambda k: st.tuples(forms(k), forms(k + 1))))
def test_adjointness_on_unimodular(alg, pair):
    a, b = pair
    assert alg.is_unimodular()
    k = a.degree
    # form inner products: full contraction / degree!
    lhs = full_contract(ce_differential(alg, a), b) / (k + 1)
    assert lhs == full_contract(a, codifferential(alg, b))


def test_adjointness_fails_on_non_unimodular():
    alg = almost_abelian([[1 if i == j else 0 for j in range(6)] for i in range(6)])
    assert not alg.is_unimodular()
    a, b = AltForm(0, {(): 1}), e(7)
    assert full_contract(ce_differential(alg, a), b) != full_contract(a, codifferential(alg, b))


def test_codifferential_examples():
    assert codifferential(LieAlgebra.abelian(), e(1)).is_zero()
    T = e(1, 2, 3) + e(4, 5, 6)
    assert codifferential(SU, T).is_zero()
    assert codifferential(SU, e(2, 3)) == e(1)
    with pytest.raises(DegreeError):
        codifferential(SU, AltForm(0, {(): 1}))
    with pytest.raises(DegreeError):
        ce_differential(SU, hodge(AltForm(0, {(): 1})))


def _lie_oracle(alg, V, A):
    """-(A([V,X],Y,..) + A(X,[V,Y],..) + ...) on every basis tuple."""
    k = A.degree
    out = {}
    for I in multi_indices(k):
        total = Scalar(0)
        for s in range(k):
            br = alg.bracket(V, basis_vector(I[s]))
            for (b,), cb in br.coeffs.items():
                total = total - cb * A[I[:s] + (b,) + I[s + 1:]]
        out[I] = total
    return AltForm(k, out)


def test_lie_derivative_examples():
    phi = standard_phi().phi
    assert lie_derivative(SU, e(7), delta()).is_zero()
    assert lie_derivative(LieAlgebra.abelian(), vector([1, 2, 3, 4, 5, 6, 7]), delta()).is_zero()
    L = lie_derivative(SU, e(1), phi)
    assert L == _lie_oracle(SU, e(1), phi)
    assert not L.is_zero()


@settings(max_examples=30)
@given(st.integers(0, 5), st.integers(1, 4).flatmap(forms))
def test_lie_derivative_oracle_and_cartan_formula(seed, a):
    alg = random_metric_algebra(seed)
    rng = random.Random(seed)
    V = vector([rng.randint(-2, 2) for _ in range(7)])
    L = lie_derivative(alg, V, a)
    assert L == _lie_oracle(alg, V, a)
    # Cartan: L_V = d i_V + i_V d on invariant forms
    assert L == interior(V, ce_differential(alg, a)) + ce_differential(alg, interior(V, a))


def test_metric_lie_derivative_is_killing_test():
    # the bi-invariant metric on su(2)+su(2)+R: every invariant field is Killing
    for i in range(1, 8):
        assert lie_derivative(SU, e(i), delta()).is_zero()
    gen = random_metric_algebra(3)
    assert any(not lie_derivative(gen, e(i), delta()).is_zero() for i in range(1, 8))


def test_opposite():
    assert opposite(LieAlgebra.abelian()) == LieAlgebra.abelian()
    assert opposite(opposite(SU)) == SU
    op = opposite(SU)
    assert op.c[0, 1, 2] == 1
    T = characteristic_torsion(G2Structure(SU, standard_phi()))
    assert characteristic_torsion(G2Structure(op, standard_phi())) == -T
    assert T == e(1, 2, 3) + e(4, 5, 6)


def test_immutable():
    with pytest.raises(AttributeError):
        SU.c = None
