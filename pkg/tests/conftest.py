"""Shared random generators for the test suite."""
import numpy as np

from qubitcone import (
    lorentz_to_element,
    pure_boost,
    rotation4,
    velocity,
)
from qubitcone.lorentz import NULL, LorentzDecomposition, Velocity
from qubitcone.qmat import hermitize


def rand_complex(rng, scale=1.0):
    return scale * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))


def rand_herm(rng, scale=1.0):
    return hermitize(rand_complex(rng, scale))


def rand_positive(rng, scale=1.0):
    a = rand_complex(rng)
    return hermitize(scale * a.conj().T @ a)


def rand_unit3(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def rand_timelike(rng, vmax=0.9):
    return velocity(rand_unit3(rng) * rng.uniform(0.0, vmax))


def rand_rotation4(rng):
    return rotation4(rand_unit3(rng), rng.uniform(0, 2 * np.pi))


def rand_restricted(rng, vmax=0.9):
    """Random restricted Lorentz transform, rotation * boost * rotation."""
    return rand_rotation4(rng) @ pure_boost(rand_timelike(rng, vmax)) @ rand_rotation4(rng)


def rand_element(rng, vmax=0.9):
    """Random non-projective measurement element (M†M strictly below I)."""
    decomp = LorentzDecomposition(
        rotation=rand_rotation4(rng), velocity=rand_timelike(rng, vmax), scale=1.0
    )
    lam_frac = rng.uniform(0.1, 1.0)
    from qubitcone import lambda_max

    return lorentz_to_element(decomp, lam_frac * lambda_max(decomp.velocity))


def rand_null_element(rng):
    """Random projective-effect element: effect is a scaled rank-1 projector."""
    vel = Velocity(v=rand_unit3(rng), kind=NULL)
    decomp = LorentzDecomposition(rotation=rand_rotation4(rng), velocity=vel, scale=1.0)
    return lorentz_to_element(decomp, rng.uniform(0.1, 1.0))


def rand_state(rng, unit_trace=True):
    rho = rand_positive(rng)
    if unit_trace:
        rho = rho / np.real(np.trace(rho))
    return rho
