import numpy as np
import pytest

from conftest import (
    rand_element,
    rand_null_element,
    rand_rotation4,
    rand_state,
    rand_timelike,
    rand_unit3,
)
from qubitcone.adjoint import psi
from qubitcone.conemap import minkowski, phi, phi_inv
from qubitcone.correspond import (
    ElementFamily,
    apply_element,
    complete_to_measurement,
    element_family,
    element_to_lorentz,
    info_measure,
    lambda_max,
    lorentz_to_element,
    measurement,
    prop2_invariants,
    validate,
)
from qubitcone.errors import (
    LambdaOutOfRange,
    MalformedInput,
    NotPositive,
    NullOrSpacelike,
    TooLarge,
    ZeroElement,
)
from qubitcone.lorentz import (
    NULL,
    TIMELIKE,
    LorentzDecomposition,
    Velocity,
    null_boost_rescaled,
    pure_boost,
    rotation4,
    velocity,
)
from qubitcone.qmat import SIGMA, eigenvalues, is_positive, sqrt_psd

I2 = np.eye(2, dtype=complex)
Z = SIGMA[3]
PROJ0 = (I2 + Z) / 2
PROJ1 = (I2 - Z) / 2


def test_validate_examples():
    assert validate(measurement([I2]))
    assert validate(measurement([PROJ0, PROJ1]))
    assert not validate(measurement([PROJ0]))
    with pytest.raises(MalformedInput):
        measurement([])


def test_apply_element_examples():
    rho = rand_state(np.random.default_rng(0))
    p, post = apply_element(I2, rho)
    assert p == pytest.approx(1)
    assert np.allclose(post, rho)

    p, post = apply_element(PROJ0, I2 / 2)
    assert p == pytest.approx(0.5)
    assert np.allclose(post, (I2 + Z) / 4)

    p, post = apply_element(np.zeros((2, 2)), rho)
    assert p == 0 and np.allclose(post, 0)

    with pytest.raises(NotPositive):
        apply_element(I2, Z)


def test_element_to_lorentz_timelike_example():
    m = np.diag([np.sqrt(3) / 2, 1 / 2]).astype(complex)
    geom = element_to_lorentz(m)
    assert geom.kind == TIMELIKE
    assert np.allclose(geom.velocity.v, [0, 0, -0.5], atol=1e-12)
    assert geom.scale == pytest.approx(np.sqrt(3) / 4, abs=1e-12)
    assert np.allclose(geom.rotation, np.eye(4), atol=1e-10)
    assert np.allclose(geom.e_vec, [1, 0, 0, 0.5], atol=1e-12)
    assert np.allclose(geom.v_vec, [0.5, 0, 0, -0.25], atol=1e-12)


def test_element_to_lorentz_null_example():
    geom = element_to_lorentz(PROJ0)
    assert geom.kind == NULL
    assert np.allclose(geom.velocity.v, [0, 0, -1], atol=1e-12)
    assert geom.scale == pytest.approx(0.5, abs=1e-12)
    assert np.allclose(geom.rotation, np.eye(4), atol=1e-10)
    recon = geom.scale * geom.rotation @ null_boost_rescaled(geom.velocity)
    assert np.max(np.abs(psi(PROJ0) - recon)) < 1e-12


def test_element_to_lorentz_scalar_example():
    for c in (0.3, 1.0):
        geom = element_to_lorentz(c * I2)
        assert geom.kind == TIMELIKE
        assert np.linalg.norm(geom.velocity.v) < 1e-12
        assert geom.scale == pytest.approx(c * c, abs=1e-12)
        assert np.allclose(geom.rotation, np.eye(4), atol=1e-10)
    with pytest.raises(ZeroElement):
        element_to_lorentz(np.zeros((2, 2)))


def test_prop1_reconstruction():
    rng = np.random.default_rng(1)
    for _ in range(150):
        m = rand_element(rng)
        geom = element_to_lorentz(m)
        assert geom.kind == TIMELIKE
        recon = geom.scale * geom.rotation @ pure_boost(geom.velocity)
        assert np.max(np.abs(psi(m) - recon)) < 1e-9
        assert geom.scale == pytest.approx(
            np.sqrt(minkowski(geom.v_vec, geom.v_vec)), abs=1e-10
        )
    for _ in range(150):
        m = rand_null_element(rng)
        geom = element_to_lorentz(m)
        assert geom.kind == NULL
        recon = geom.scale * geom.rotation @ null_boost_rescaled(geom.velocity)
        assert np.max(np.abs(psi(m) - recon)) < 1e-9
        assert geom.scale == pytest.approx(geom.e_vec[0] / 2, abs=1e-10)


def test_lambda_max_examples():
    assert lambda_max(velocity([0, 0, 0])) == pytest.approx(np.sqrt(2))
    assert lambda_max(velocity([0, 0, 1])) == 1
    assert lambda_max(velocity([0.5, 0, 0])) == pytest.approx(np.sqrt(4 / 3))


def test_lorentz_to_element_examples():
    rest = LorentzDecomposition(
        rotation=np.eye(4), velocity=velocity([0, 0, 0]), scale=1.0
    )
    m = lorentz_to_element(rest, 1.0)
    assert np.allclose(m, I2 / np.sqrt(2), atol=1e-12)
    assert np.allclose(m.conj().T @ m, I2 / 2, atol=1e-12)
    assert np.allclose(lorentz_to_element(rest), I2, atol=1e-12)  # default lambda_max

    null_dec = LorentzDecomposition(
        rotation=np.eye(4), velocity=velocity([0, 0, -1]), scale=1.0
    )
    assert np.allclose(lorentz_to_element(null_dec, 1.0), PROJ0, atol=1e-12)


def test_lorentz_to_element_saturates_at_lambda_max():
    rng = np.random.default_rng(2)
    for _ in range(50):
        vel = rand_timelike(rng)
        dec = LorentzDecomposition(rotation=rand_rotation4(rng), velocity=vel, scale=1.0)
        m = lorentz_to_element(dec, lambda_max(vel))
        rest = I2 - m.conj().T @ m
        _, lm = eigenvalues(rest)
        assert abs(lm) < 1e-12
    with pytest.raises(LambdaOutOfRange):
        lorentz_to_element(dec, lambda_max(vel) * 1.01)
    with pytest.raises(LambdaOutOfRange):
        lorentz_to_element(dec, 0.0)


def test_lambda_bound_sharpness():
    rng = np.random.default_rng(3)
    for _ in range(50):
        vel = rand_timelike(rng)
        lmax = lambda_max(vel)
        for lam, expect_ok in [(lmax * (1 - 1e-6), True), (lmax * (1 + 1e-6), False)]:
            coords = np.concatenate([[lam**2], -(lam**2) * vel.v])
            e = phi_inv(coords)
            assert is_positive(I2 - e) is expect_ok


def test_round_trip_element_lorentz_element():
    rng = np.random.default_rng(4)
    for _ in range(100):
        r = rand_rotation4(rng)
        vel = rand_timelike(rng)
        dec = LorentzDecomposition(rotation=r, velocity=vel, scale=1.0)
        lam = rng.uniform(0.1, 1.0) * lambda_max(vel)
        m = lorentz_to_element(dec, lam)
        geom = element_to_lorentz(m)
        assert np.max(np.abs(geom.rotation - r)) < 1e-9
        assert np.max(np.abs(geom.velocity.v - vel.v)) < 1e-9
        g = np.sqrt(1 - vel.v @ vel.v)
        assert geom.scale == pytest.approx(lam**2 / 2 * g, abs=1e-10)
        assert np.max(np.abs(psi(m) - lam**2 / 2 * g * r @ pure_boost(vel))) < 1e-9
    for _ in range(100):
        r = rand_rotation4(rng)
        vel = Velocity(v=rand_unit3(rng), kind=NULL)
        dec = LorentzDecomposition(rotation=r, velocity=vel, scale=1.0)
        lam = rng.uniform(0.1, 1.0)
        m = lorentz_to_element(dec, lam)
        geom = element_to_lorentz(m)
        assert geom.kind == NULL
        assert np.max(np.abs(geom.rotation - r)) < 1e-9
        assert np.max(np.abs(geom.velocity.v - vel.v)) < 1e-9
        assert geom.scale == pytest.approx(lam**2 / 2, abs=1e-10)


def test_element_family():
    dec = LorentzDecomposition(
        rotation=rotation4([0, 0, 1], np.pi / 2),
        velocity=velocity([0, 0, 0.5]),
        scale=1.0,
    )
    fam = element_family(dec)
    assert isinstance(fam, ElementFamily)
    assert fam.kind == TIMELIKE
    assert fam.lambda_max == pytest.approx(np.sqrt(4 / 3))
    expected_u = np.cos(np.pi / 4) * I2 - 1j * np.sin(np.pi / 4) * Z
    assert np.allclose(fam.rotation_u, expected_u, atol=1e-12)


def test_complete_to_measurement():
    meas = complete_to_measurement(I2)
    assert len(meas.elements) == 1

    meas = complete_to_measurement(PROJ0)
    assert len(meas.elements) == 2
    # spectral oracle for the complement of a projector effect
    vals, vecs = np.linalg.eigh(I2 - PROJ0)
    oracle = vecs @ np.diag(np.sqrt(np.clip(vals, 0, None))) @ vecs.conj().T
    assert np.allclose(meas.elements[1], oracle, atol=1e-12)
    assert np.allclose(meas.elements[1], PROJ1, atol=1e-12)
    assert validate(meas)

    meas = complete_to_measurement(0.5 * I2)
    assert np.allclose(meas.elements[1], np.sqrt(0.75) * I2, atol=1e-12)
    assert validate(meas)

    with pytest.raises(TooLarge):
        complete_to_measurement(2 * I2)


def test_complete_random_elements_validate():
    rng = np.random.default_rng(5)
    for _ in range(100):
        m = rand_element(rng)
        assert validate(complete_to_measurement(m))


def test_prop2_examples():
    rho = rand_state(np.random.default_rng(6))
    rep = prop2_invariants(PROJ0, rho)
    assert rep.lhs_norm == pytest.approx(0, abs=1e-12)
    assert rep.rhs_norm == pytest.approx(0, abs=1e-12)

    rep = prop2_invariants(I2, rho)
    mix = minkowski(phi(rho), phi(rho))
    assert rep.lhs_norm == pytest.approx(mix, abs=1e-12)
    assert rep.rhs_norm == pytest.approx(mix, abs=1e-12)
    assert rep.p_direct == pytest.approx(np.trace(rho).real, abs=1e-12)

    m = np.diag([np.sqrt(3) / 2, 1 / 2]).astype(complex)
    rep = prop2_invariants(m, I2 / 2)
    assert rep.lhs_norm == pytest.approx(3 / 16, abs=1e-12)
    assert rep.rhs_norm == pytest.approx(3 / 16, abs=1e-12)
    assert rep.p_from_minkowski == pytest.approx(0.5, abs=1e-12)
    assert rep.p_direct == pytest.approx(0.5, abs=1e-12)


def test_prop2_random_pairs():
    rng = np.random.default_rng(7)
    for _ in range(200):
        m = rand_element(rng) if rng.random() < 0.7 else rand_null_element(rng)
        rho = rand_state(rng, unit_trace=False)
        rep = prop2_invariants(m, rho)
        assert abs(rep.lhs_norm - rep.rhs_norm) < 1e-10
        assert abs(rep.p_from_minkowski - rep.p_direct) < 1e-12
        # mixedness never increases under a valid element
        assert rep.lhs_norm <= minkowski(phi(rho), phi(rho)) + 1e-12


def test_info_measure():
    assert info_measure([1, 0, 0, 0]) == pytest.approx(0)
    assert info_measure([2, 0, 0, 0]) == pytest.approx(2)
    with pytest.raises(NullOrSpacelike):
        info_measure([1, 0, 0, 1])
    with pytest.raises(NullOrSpacelike):
        info_measure([0, 0, 0, 1])


def test_information_conservation():
    m = np.diag([np.sqrt(3) / 2, 1 / 2]).astype(complex)
    rho = I2 / 2
    _, post = apply_element(m, rho)
    lhs = info_measure(phi(post))
    geom = element_to_lorentz(m)
    rhs = info_measure(geom.v_vec) + info_measure(phi(rho))
    assert lhs == pytest.approx(np.log2(3 / 16), abs=1e-12)
    assert lhs == pytest.approx(rhs, abs=1e-12)

    rng = np.random.default_rng(8)
    for _ in range(100):
        m = rand_element(rng)
        rho = rand_state(rng, unit_trace=False)
        if minkowski(phi(rho), phi(rho)) <= 1e-6:
            continue
        _, post = apply_element(m, rho)
        geom = element_to_lorentz(m)
        residual = (
            info_measure(phi(post))
            - info_measure(geom.v_vec)
            - info_measure(phi(rho))
        )
        assert abs(residual) < 1e-9
