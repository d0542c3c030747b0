"""2x2 complex matrix kernel.

Everything downstream (cone geometry, Lorentz machinery, the measurement
correspondence) reduces to a handful of primitives on 2x2 matrices:
hermiticity, positivity, closed-form eigenvalues, the positive square root
and the polar decomposition. All functions are pure and operate on plain
numpy arrays of shape (2, 2), dtype complex128.
"""
from __future__ import annotations

import numpy as np

from .errors import MalformedInput, NotPositive

# Default tolerance on the smallest eigenvalue when testing positivity.
# Absorbs rounding from user-supplied matrices without admitting genuinely
# indefinite inputs.
POSITIVITY_TOL = 1e-9

# Relative eigenvalue threshold below which a positive matrix is treated as
# singular by polar_decompose. Forming m† m squares the condition number, so
# an exactly rank-1 input already shows a spurious small eigenvalue of order
# sqrt(machine eps); the threshold sits above that noise floor.
_RANK_TOL = 1e-7

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)

# Pauli basis sigma_mu, mu = 0..3: identity, X, Y, Z.
SIGMA = np.stack([SIGMA0, SIGMA1, SIGMA2, SIGMA3])


def mat2(entries) -> np.ndarray:
    """Validate and normalize a general 2x2 complex matrix."""
    m = np.asarray(entries, dtype=complex)
    if m.shape != (2, 2):
        raise MalformedInput(f"expected a 2x2 matrix, got shape {m.shape}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise MalformedInput("matrix entries must be finite")
    return m


def hermitize(m) -> np.ndarray:
    """Project onto the hermitian part: (m + m†)/2.

    The result satisfies the hermiticity invariants exactly (real diagonal,
    conjugate off-diagonal pair), which downstream code relies on.
    """
    m = mat2(m)
    return (m + m.conj().T) / 2


def herm_deviation(m) -> float:
    """Max-norm distance from m to its hermitian part."""
    m = mat2(m)
    return float(np.max(np.abs(m - m.conj().T))) / 2


def herm2(entries, tol: float = 1e-9) -> np.ndarray:
    """Validate a hermitian 2x2 matrix and enforce exact hermiticity.

    Rejects inputs further than tol (scaled by the matrix magnitude) from
    hermitian; otherwise returns the exactly hermitized matrix.
    """
    m = mat2(entries)
    scale = max(1.0, float(np.max(np.abs(m))))
    if herm_deviation(m) > tol * scale:
        raise MalformedInput("matrix is not hermitian within tolerance")
    return hermitize(m)


def mul(a, b) -> np.ndarray:
    return mat2(a) @ mat2(b)


def adjoint(a) -> np.ndarray:
    return mat2(a).conj().T


def det(m) -> complex:
    m = mat2(m)
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def trace(m) -> complex:
    m = mat2(m)
    return m[0, 0] + m[1, 1]


def _coords(h: np.ndarray) -> tuple[float, float, float, float]:
    """Pauli coordinates Tr(h sigma_mu) of a hermitian matrix."""
    a = (h[0, 0] + h[1, 1]).real
    x = 2 * h[0, 1].real
    y = -2 * h[0, 1].imag
    z = (h[0, 0] - h[1, 1]).real
    return a, x, y, z


def eigenvalues(h) -> tuple[float, float]:
    """Eigenvalues of a hermitian matrix, ordered lam_plus >= lam_minus.

    Closed form: lam_pm = (Tr(h) +- |Bloch part|) / 2.
    """
    h = mat2(h)
    a, x, y, z = _coords(h)
    r = np.sqrt(x * x + y * y + z * z)
    return (a + r) / 2, (a - r) / 2


def is_positive(h, tol: float = POSITIVITY_TOL) -> bool:
    """True iff the smallest eigenvalue is >= -tol."""
    if tol < 0:
        raise ValueError("tol must be non-negative")
    _, lm = eigenvalues(h)
    return bool(lm >= -tol)


def sqrt_psd(e, tol: float = POSITIVITY_TOL) -> np.ndarray:
    """Positive square root of a positive hermitian matrix.

    Uses the coordinate closed form: with [a, x, y, z] the Pauli coordinates
    of e and X = 2 sqrt(a^2 - x^2 - y^2 - z^2), the root has coordinates
    alpha = sqrt(a + X/2) and (x, y, z)/alpha. e = 0 returns 0.
    """
    e = mat2(e)
    if not is_positive(e, tol):
        raise NotPositive("matrix is not positive semidefinite")
    a, x, y, z = _coords(e)
    if a <= 0:
        # positivity forces e = 0 when the trace vanishes
        return np.zeros((2, 2), dtype=complex)
    disc = max(a * a - (x * x + y * y + z * z), 0.0)
    big_x = 2 * np.sqrt(disc)
    alpha = np.sqrt(a + big_x / 2)
    c = np.array([alpha, x / alpha, y / alpha, z / alpha])
    root = np.array(
        [
            [(c[0] + c[3]) / 2, (c[1] - 1j * c[2]) / 2],
            [(c[1] + 1j * c[2]) / 2, (c[0] - c[3]) / 2],
        ],
        dtype=complex,
    )
    return root


def polar_decompose(m) -> tuple[np.ndarray, np.ndarray]:
    """Polar decomposition m = u p with u unitary and p = sqrt(m† m) >= 0.

    Singular m (rank 1): u acts as m p⁺ on the range of p and maps the null
    eigenvector of p to the unit vector orthogonal to the range of m, phase
    fixed so that det(u) = 1. m = 0 returns (identity, 0).
    """
    m = mat2(m)
    if np.max(np.abs(m)) == 0:
        return np.eye(2, dtype=complex), np.zeros((2, 2), dtype=complex)
    p = sqrt_psd(hermitize(adjoint(m) @ m))
    lp, lm = eigenvalues(p)
    if lm > _RANK_TOL * lp:
        u = m @ np.linalg.inv(p)
        return u, p
    # rank-1 branch
    vals, vecs = np.linalg.eigh(p)
    null_vec = vecs[:, 0]
    range_vec = vecs[:, 1]
    lam = vals[1]
    # the small singular value recovered through det(m) avoids the noise
    # floor of the squared product
    small = abs(det(m)) / lam
    p = lam * np.outer(range_vec, range_vec.conj()) + small * np.outer(
        null_vec, null_vec.conj()
    )
    w1 = m @ range_vec
    w1 = w1 / np.linalg.norm(w1)
    w2 = np.array([-np.conj(w1[1]), np.conj(w1[0])])
    u = np.outer(w1, range_vec.conj()) + np.outer(w2, null_vec.conj())
    d = det(u)
    u = np.outer(w1, range_vec.conj()) + (d.conjugate() / abs(d)) * np.outer(
        w2, null_vec.conj()
    )
    return u, p
