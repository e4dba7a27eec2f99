import numpy as np
import pytest

from builders import almost_abelian, random_integrable_almost_abelian, random_metric_algebra, random_three_form
from catalog_forms import R3, STRUCTURES, SU, SU_NAMES
from g2forge import torsion as torsion_mod
from g2forge.forms import AltForm, full_contract, wedge
from g2forge.g2core import standard_phi
from g2forge.liegeom import LieAlgebra
from g2forge.scalar import SQRT2, Scalar
from g2forge.tensor import einsum
from g2forge.torsion import (
    G2Structure,
    InternalConsistencyError,
    NotIntegrableError,
    characteristic_connection,
    characteristic_geometry,
    characteristic_torsion,
    classify,
    closed_torsion_checks,
    curvature,
    identity_battery,
    lee_form,
    levi_civita,
    skew_torsion_identities,
    symmetry_checks,
    torsion_connection,
    type_constant,
)


def e(*idx):
    return AltForm(len(idx), {tuple(idx): 1})


T_SU = e(1, 2, 3) + e(4, 5, 6)
NON_INTEGRABLE = G2Structure(almost_abelian([[1 if (i, j) == (0, 0) else 0 for j in range(6)] for i in range(6)]))


def test_lee_form_examples():
    assert lee_form(STRUCTURES["abelian"]).is_zero()
    assert lee_form(STRUCTURES["su2su2u1_standard_phi"]) == e(4) - e(3)
    assert lee_form(STRUCTURES["r3su2u1_standard_phi"]) == -e(3)
    assert lee_form(STRUCTURES["su2su2u1_phi0"]) == e(7)
    assert lee_form(STRUCTURES["su2su2u1_phi_pi4"]).is_zero()
    assert lee_form(STRUCTURES["su2su2u1_phi_3pi4"]) == e(7) * (-SQRT2)


def test_type_constant_examples():
    assert type_constant(STRUCTURES["abelian"]) == 0
    s = STRUCTURES["su2su2u1_standard_phi"]
    assert type_constant(s) == 0 and wedge(s.dphi, s.phi).is_zero()
    s0 = STRUCTURES["su2su2u1_phi0"]
    assert type_constant(s0) == 1
    # (dphi, *phi) with the form inner product is 6 lambda; dphi ^ phi carries the same number
    assert wedge(s0.dphi, s0.phi) == e(1, 2, 3, 4, 5, 6, 7) * (type_constant(s0) * 6)
    assert full_contract(s0.dphi, s0.psi) / 24 == 6
    assert type_constant(STRUCTURES["su2su2u1_phi_pi4"]) == SQRT2


def test_classification_examples():
    assert "parallel" in classify(STRUCTURES["abelian"]).classes()
    c34 = classify(STRUCTURES["su2su2u1_phi_3pi4"]).classes()
    assert "integrable" in c34 and "strictly_integrable" in c34
    c4 = classify(STRUCTURES["su2su2u1_phi_pi4"]).classes()
    assert {"integrable", "balanced", "cocalibrated", "constant_type"} <= set(c4)
    assert "strictly_integrable" not in c4
    c0 = classify(STRUCTURES["su2su2u1_phi0"]).classes()
    assert "balanced" not in c0 and "parallel" not in c0
    cn = classify(NON_INTEGRABLE)
    assert "integrable" not in cn.classes() and cn.residuals["integrability"] != 0


def test_classes_in_float_mode_agree():
    for s in STRUCTURES.values():
        rep = classify(s)
        assert rep.flags() == rep.flags(1e-9)


@pytest.mark.parametrize("name", SU_NAMES)
def test_characteristic_torsion_su(name):
    assert characteristic_torsion(STRUCTURES[name]) == T_SU


def test_characteristic_torsion_other():
    assert characteristic_torsion(STRUCTURES["r3su2u1_standard_phi"]) == e(4, 5, 6)
    assert characteristic_torsion(STRUCTURES["abelian"]).is_zero()
    with pytest.raises(NotIntegrableError) as info:
        characteristic_torsion(NON_INTEGRABLE)
    assert not info.value.residual.is_zero()
    with pytest.raises(NotIntegrableError):
        characteristic_connection(NON_INTEGRABLE)


def test_levi_civita_examples():
    assert levi_civita(LieAlgebra.abelian()).gamma.is_zero()
    pos = LieAlgebra.from_brackets([(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)])
    assert levi_civita(pos).gamma[0, 1, 2] == Scalar(1, 0) / 2
    # bi-invariant metric: nabla_X Y = [X, Y] / 2
    assert levi_civita(SU).gamma == SU.c / 2


@pytest.mark.parametrize("seed", range(4))
def test_levi_civita_metric_and_torsion_free(seed):
    lc = levi_civita(random_metric_algebra(seed))
    assert lc.is_metric()
    assert lc.torsion_tensor().is_zero()


def test_characteristic_connection_examples():
    for name in SU_NAMES + ["abelian"]:
        assert characteristic_connection(STRUCTURES[name]).gamma.is_zero()
    s = STRUCTURES["r3su2u1_standard_phi"]
    # Levi-Civita lives on the su(2) block and T/2 = -[,]/2 there cancels it
    lc = levi_civita(s)
    support = {idx for idx, _ in lc.gamma.entries()}
    assert support and all(min(idx) >= 3 and max(idx) <= 5 for idx in support)
    assert lc.gamma + s.torsion.to_tensor() / 2 == characteristic_connection(s).gamma
    assert characteristic_connection(s).gamma.is_zero()


def test_flat_cartan_curvature():
    for name in SU_NAMES + ["abelian"]:
        c = curvature(characteristic_connection(STRUCTURES[name]))
        assert c.R.is_zero() and c.Ric.is_zero() and c.Scal == 0
        assert c.sigmaT.is_zero() and c.dT.is_zero() and c.deltaT.is_zero()


def test_biinvariant_levi_civita_curvature_oracle():
    # bi-invariant metrics: R(X,Y)Z = -[[X,Y],Z]/4
    c = SU.c.to_float()
    R = -np.einsum("ijm,mkl->ijkl", c, c) / 4
    scal = np.einsum("aiia->", R)
    got = curvature(levi_civita(SU))
    assert np.allclose(got.R.to_float(), R)
    assert got.Scal == Scalar(int(round(scal))) == 3
    assert got.Scal_g == 3


@pytest.mark.parametrize("name", list(STRUCTURES))
def test_battery_on_catalog(name):
    led = identity_battery(STRUCTURES[name])
    assert led.all_passed(), [e.name for e in led.failures()]
    assert len(led) == 32


@pytest.mark.parametrize("seed", range(4))
def test_battery_on_non_flat_almost_abelian(seed):
    s = random_integrable_almost_abelian(seed)
    g = characteristic_geometry(s)
    assert not g.R.is_zero() and not g.dT.is_zero() and not g.Ric.is_zero()
    led = identity_battery(s)
    assert led.all_passed(), [e.name for e in led.failures()]


@pytest.mark.parametrize("seed", range(6))
def test_skew_torsion_identities_generic(seed):
    alg = random_metric_algebra(seed)
    T = random_three_form(seed)
    led = skew_torsion_identities(torsion_connection(alg, T))
    assert led.all_passed(), [e.name for e in led.failures()]


def test_battery_detects_corrupted_curvature(monkeypatch):
    s = random_integrable_almost_abelian(11)
    real = torsion_mod._riemann
    monkeypatch.setattr(torsion_mod, "_riemann", lambda g, c: real(g, c) * 2)
    characteristic_geometry.cache_clear()
    try:
        failures = {e.name for e in identity_battery(s).failures()}
    finally:
        characteristic_geometry.cache_clear()
    assert {"first_bianchi", "ricci_comparison", "ricci_from_dT"} <= failures


def test_tampered_torsion_is_internal_error():
    s = G2Structure(SU, standard_phi())
    object.__setattr__(s, "torsion", s.torsion * 2)
    with pytest.raises(InternalConsistencyError):
        characteristic_connection(s)


def test_symmetry_checks_flat():
    for name in SU_NAMES + ["abelian", "r3su2u1_standard_phi"]:
        f = symmetry_checks(STRUCTURES[name]).flags()
        assert all(f.values()), f


@pytest.mark.parametrize("seed", range(4))
def test_symmetry_equivalences_non_flat(seed):
    f = symmetry_checks(random_integrable_almost_abelian(seed)).flags()
    assert f["equivalences_hold"] and f["bianchi_implications_hold"]
    # non-trivial instance of the biconditional
    assert not f["pairs_symmetry"] and not f["nablaT_is_4form"]


def test_closed_torsion_checks():
    for name, s in STRUCTURES.items():
        f = closed_torsion_checks(s).flags()
        assert f["dT"] and f["ricci_plus_nabla_theta"], name
        assert f["closed_iff_ricci_is_minus_nabla_theta"] and f["ricci_flat_consequences_hold"]
    f = closed_torsion_checks(random_integrable_almost_abelian(0)).flags()
    assert not f["dT"] and not f["ricci_plus_nabla_theta"]
    assert f["closed_iff_ricci_is_minus_nabla_theta"]


def test_structure_is_immutable():
    s = STRUCTURES["abelian"]
    with pytest.raises(Exception):
        s.name = "x"
