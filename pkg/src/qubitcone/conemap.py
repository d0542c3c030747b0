"""Coordinate isomorphism between hermitian 2x2 matrices and R^4.

phi sends a hermitian matrix to its Pauli coordinates Tr(h sigma_mu);
positive matrices land exactly on the Minkowski future cone, with the
boundary occupied by rank-deficient (generalized pure) matrices. Each
fixed-trace slice of the cone is a Bloch sphere of radius equal to the
trace coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MalformedInput, NonPositiveTrace
from .qmat import SIGMA, hermitize, mat2

ETA = np.diag([1.0, -1.0, -1.0, -1.0])

CONE_TOL = 1e-9


@dataclass(frozen=True)
class ConeMembership:
    in_cone: bool
    on_boundary: bool
    minkowski_norm2: float


def fourvector(v) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (4,):
        raise MalformedInput(f"expected a 4-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise MalformedInput("four-vector components must be finite")
    return arr


def phi(h) -> np.ndarray:
    """Pauli coordinates [Tr(h), Tr(hX), Tr(hY), Tr(hZ)] of a hermitian h."""
    h = mat2(h)
    return np.real(np.einsum("ij,kji->k", h, SIGMA))


def phi_inv(v) -> np.ndarray:
    """Inverse of phi: (1/2) sum_mu v_mu sigma_mu, exactly hermitian."""
    v = fourvector(v)
    return np.array(
        [
            [(v[0] + v[3]) / 2, (v[1] - 1j * v[2]) / 2],
            [(v[1] + 1j * v[2]) / 2, (v[0] - v[3]) / 2],
        ],
        dtype=complex,
    )


def minkowski(u, v) -> float:
    u = fourvector(u)
    v = fourvector(v)
    return float(u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3])


def hs_inner(a, b) -> float:
    """Hilbert-Schmidt inner product Tr(ab) of two hermitian matrices."""
    a = mat2(a)
    b = mat2(b)
    return float(np.real(np.trace(a @ b)))


def cone_membership(v, tol: float = CONE_TOL) -> ConeMembership:
    """Future-cone test for a four-vector.

    Both tests are relative: the Minkowski norm is quadratic in the scale
    of v, so the tolerance window scales with max(1, v0^2).
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    v = fourvector(v)
    n2 = minkowski(v, v)
    window = tol * max(1.0, v[0] * v[0])
    in_cone = n2 >= -window and v[0] >= -tol
    on_boundary = in_cone and abs(n2) <= window
    return ConeMembership(in_cone=in_cone, on_boundary=on_boundary, minkowski_norm2=n2)


def mixedness(v) -> float:
    """Minkowski self-product of a state vector; 0 exactly for pure states.

    Equals 2((Tr rho)^2 - Tr(rho^2)) for rho = phi_inv(v).
    """
    return minkowski(v, v)


def eta_conjugate(h) -> np.ndarray:
    """Index lowering on matrices: h -> Tr(h) I - h.

    Its phi image is the metric applied componentwise (time kept, space
    negated).
    """
    h = mat2(h)
    t = np.real(np.trace(h))
    return hermitize(t * np.eye(2, dtype=complex) - h)


def bloch_section(v) -> tuple[float, np.ndarray]:
    """Radius and Bloch 3-vector of the cone cross-section containing v."""
    v = fourvector(v)
    if v[0] <= 0:
        raise NonPositiveTrace("four-vector has non-positive trace component")
    return float(v[0]), v[1:].copy()
