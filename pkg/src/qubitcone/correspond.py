"""Both directions of the measurement / Lorentz correspondence.

Forward: a nonzero measurement element M factors through its polar
decomposition into psi(M) = scale * R * L(v), a rescaled restricted
transform (or rescaled null boost when the effect M†M is projective).
Backward: a decomposed transform yields a one-parameter family of
admissible measurement elements M(lambda). The mixedness and probability
identities tying the two pictures together live here as well.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .adjoint import psi_of_unitary
from .conemap import ETA, minkowski, phi, phi_inv
from .errors import (
    InvalidMeasurement,
    LambdaOutOfRange,
    MalformedInput,
    NotDecomposable,
    NotPositive,
    NullOrSpacelike,
    TooLarge,
    ZeroElement,
)
from .lorentz import (
    NULL,
    TIMELIKE,
    TOL_V,
    LorentzDecomposition,
    Velocity,
    rotation_axis_angle,
    su2_from_axis_angle,
)
from .qmat import adjoint, hermitize, is_positive, mat2, polar_decompose, sqrt_psd

COMPLETENESS_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Measurement:
    elements: tuple


def measurement(elements) -> Measurement:
    elems = tuple(mat2(m) for m in elements)
    if not elems:
        raise MalformedInput("a measurement needs at least one element")
    return Measurement(elements=elems)


@dataclass(frozen=True, eq=False)
class EffectGeometry:
    e_vec: np.ndarray
    v_vec: np.ndarray
    velocity: Velocity
    scale: float
    rotation: np.ndarray
    kind: str


@dataclass(frozen=True, eq=False)
class ElementFamily:
    rotation_u: np.ndarray
    velocity: Velocity
    lambda_max: float
    kind: str


@dataclass(frozen=True)
class Prop2Report:
    lhs_norm: float
    rhs_norm: float
    p_from_minkowski: float
    p_direct: float


def completeness_deviation(meas: Measurement) -> float:
    total = sum(adjoint(m) @ m for m in meas.elements)
    return float(np.max(np.abs(total - np.eye(2))))


def validate(meas: Measurement, tol: float = COMPLETENESS_TOL) -> bool:
    """True iff the elements satisfy sum M†M = identity within tol."""
    return completeness_deviation(meas) <= tol


def effect(m) -> np.ndarray:
    """The effect M†M of a measurement element, exactly hermitian."""
    m = mat2(m)
    return hermitize(adjoint(m) @ m)


def apply_element(m, rho, tol: float = 1e-9) -> tuple[float, np.ndarray]:
    """Outcome probability Tr(M†M rho) and unrescaled post state M rho M†."""
    m = mat2(m)
    rho = mat2(rho)
    if not is_positive(rho, tol):
        raise NotPositive("state is not positive")
    p = float(np.real(np.trace(effect(m) @ rho)))
    post = hermitize(m @ rho @ adjoint(m))
    return p, post


def element_to_lorentz(m) -> EffectGeometry:
    """Forward correspondence: psi(M) = scale * rotation * boost(velocity)."""
    m = mat2(m)
    if np.max(np.abs(m)) == 0:
        raise ZeroElement("the zero matrix carries no Lorentz data")
    unitary, _ = polar_decompose(m)
    e = effect(m)
    e_vec = phi(e)
    a = e_vec[0]
    if a <= 0:
        raise ZeroElement("effect has vanishing trace")
    v_vec = 0.5 * (ETA @ e_vec)
    v3 = -e_vec[1:] / a
    speed = float(np.linalg.norm(v3))
    if speed >= 1 - TOL_V:
        vel = Velocity(v=v3 / speed, kind=NULL)
        scale = a / 2
        kind = NULL
    else:
        vel = Velocity(v=v3, kind=TIMELIKE)
        scale = float(np.sqrt(max(minkowski(v_vec, v_vec), 0.0)))
        kind = TIMELIKE
    return EffectGeometry(
        e_vec=e_vec,
        v_vec=v_vec,
        velocity=vel,
        scale=scale,
        rotation=psi_of_unitary(unitary),
        kind=kind,
    )


def lambda_max(vel: Velocity) -> float:
    """Largest admissible element scale: sqrt(2/(1+v)) timelike, 1 null."""
    if vel.kind == NULL:
        return 1.0
    return float(np.sqrt(2.0 / (1.0 + np.linalg.norm(vel.v))))


def _check_rotation_block(rot: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    rot = np.asarray(rot, dtype=float)
    if rot.shape != (4, 4):
        raise MalformedInput("rotation must be a 4x4 matrix")
    r3 = rot[1:, 1:]
    edge = max(
        abs(rot[0, 0] - 1.0),
        float(np.max(np.abs(rot[0, 1:]))),
        float(np.max(np.abs(rot[1:, 0]))),
    )
    if edge > tol or np.max(np.abs(r3.T @ r3 - np.eye(3))) > tol:
        raise NotDecomposable("rotation is not a proper Bloch-block rotation")
    if np.linalg.det(r3) < 0:
        raise NotDecomposable("rotation block is improper")
    return r3


def element_family(decomp: LorentzDecomposition) -> ElementFamily:
    """The lambda-family of elements equivalent (up to scale) to a transform."""
    r3 = _check_rotation_block(decomp.rotation)
    axis, theta = rotation_axis_angle(r3)
    return ElementFamily(
        rotation_u=su2_from_axis_angle(axis, theta),
        velocity=decomp.velocity,
        lambda_max=lambda_max(decomp.velocity),
        kind=decomp.velocity.kind,
    )


def lorentz_to_element(decomp: LorentzDecomposition, lam: float | None = None) -> np.ndarray:
    """Backward correspondence: the measurement element M(lambda) = U sqrt(E(lambda)).

    Default lambda is lambda_max, which maximizes the element's probability
    weight; any admissible lambda yields the same transform up to scale.
    """
    family = element_family(decomp)
    if lam is None:
        lam = family.lambda_max
    lam = float(lam)
    if not (0.0 < lam <= family.lambda_max * (1.0 + 1e-12)):
        raise LambdaOutOfRange(
            f"lambda = {lam} outside (0, {family.lambda_max}]"
        )
    v = family.velocity.v
    if family.kind == NULL:
        coords = np.concatenate([[lam], -lam * v])
    else:
        g = float(np.sqrt(1.0 - v @ v))
        k = 1.0 / np.sqrt(1.0 + g)
        coords = np.concatenate([[k * lam * (1.0 + g)], -k * lam * v])
    return family.rotation_u @ phi_inv(coords)


def complete_to_measurement(m, tol: float = 1e-9) -> Measurement:
    """Pad a single admissible element to a two-outcome measurement.

    The complement sqrt(I - M†M) is dropped when it vanishes.
    """
    m = mat2(m)
    rest = hermitize(np.eye(2) - effect(m))
    if not is_positive(rest, tol):
        raise TooLarge("I - M†M is not positive; element cannot be completed")
    comp = sqrt_psd(rest)
    if np.max(np.abs(comp)) <= 1e-12:
        return measurement([m])
    return measurement([m, comp])


def prop2_invariants(meas_element, rho, tol: float = 1e-9) -> Prop2Report:
    """The mixedness and probability identities for one element and state.

    lhs_norm and rhs_norm are the two sides of
    eta(rho_m, rho_m) = eta(V, V) eta(rho, rho); the two p values are the
    invariant-probability form eta(V, rho) and the direct Tr(E rho).
    """
    m = mat2(meas_element)
    rho = mat2(rho)
    if not is_positive(rho, tol):
        raise NotPositive("state is not positive")
    rho_vec = phi(rho)
    e_vec = phi(effect(m))
    v_vec = 0.5 * (ETA @ e_vec)
    post_vec = phi(hermitize(m @ rho @ adjoint(m)))
    return Prop2Report(
        lhs_norm=minkowski(post_vec, post_vec),
        rhs_norm=minkowski(v_vec, v_vec) * minkowski(rho_vec, rho_vec),
        p_from_minkowski=minkowski(v_vec, rho_vec),
        p_direct=float(np.real(np.trace(effect(m) @ rho))),
    )


def info_measure(v) -> float:
    """log2 of the Minkowski self-product; additive under measurement:
    I(rho_m) = I(V_m) + I(rho) whenever all three are timelike."""
    n2 = minkowski(v, v)
    if n2 <= 0:
        raise NullOrSpacelike("information measure requires a timelike vector")
    return float(np.log2(n2))


def require_valid(meas: Measurement, tol: float = COMPLETENESS_TOL) -> None:
    if not validate(meas, tol):
        raise InvalidMeasurement(
            f"measurement completeness deviation {completeness_deviation(meas)} "
            f"exceeds {tol}"
        )
