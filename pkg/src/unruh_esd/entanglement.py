"""Two-qubit density matrices, the spin-flip map and concurrence.

Concurrence is available by two independent routes: the general Wootters
formula built on the spectrum of ``rho @ spin_flip(rho)``, and the closed
form for X-shaped states (nonzero entries only on the diagonal and the
anti-diagonal).
"""

from __future__ import annotations

import numpy as np

from .errors import NumericalError, PreconditionError
from .qmat import SIGMA2, as_matrix, eigenvalues4

SIGMA_YY = np.kron(SIGMA2, SIGMA2)

DENSITY_TOL = 1e-12
PSD_TOL = 1e-10
#: eigenvalues of rho @ rho_tilde with |imag| or negative part beyond this are errors
SPECTRUM_FAIL = 1e-8
X_PATTERN = np.array(
    [[1, 0, 0, 1],
     [0, 1, 1, 0],
     [0, 1, 1, 0],
     [1, 0, 0, 1]], dtype=bool)


def check_density(rho, tol: float = DENSITY_TOL) -> np.ndarray:
    """Return ``rho`` as a 4x4 array after checking it is a density matrix.

    Hermiticity and unit trace are checked to ``tol``; the smallest
    eigenvalue must be at least ``-PSD_TOL``.
    """
    m = as_matrix(rho, 4)
    if np.max(np.abs(m - m.conj().T)) > tol:
        raise PreconditionError("density matrix is not Hermitian")
    if abs(np.trace(m) - 1) > tol:
        raise PreconditionError(f"density matrix trace is {np.trace(m).real:.15g}, not 1")
    lo = np.linalg.eigvalsh((m + m.conj().T) / 2)[0]
    if lo < -PSD_TOL:
        raise PreconditionError(f"density matrix has negative eigenvalue {lo:.3g}")
    return m


def is_x_state(rho, tol: float = DENSITY_TOL) -> bool:
    m = as_matrix(rho, 4)
    return bool(np.max(np.abs(m[~X_PATTERN]), initial=0.0) <= tol)


def spin_flip(rho) -> np.ndarray:
    """``(sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)``."""
    m = as_matrix(rho, 4)
    return SIGMA_YY @ m.conj() @ SIGMA_YY


def _checked(lam: np.ndarray) -> np.ndarray:
    if np.any(np.abs(lam.imag) > SPECTRUM_FAIL) or np.any(lam.real < -SPECTRUM_FAIL):
        raise NumericalError(f"spectrum of rho*rho_tilde is not real non-negative: {lam}")
    return lam.real


def _root_spectrum(rho: np.ndarray) -> np.ndarray:
    """Square roots of the eigenvalues of ``rho @ spin_flip(rho)``, descending."""
    if np.max(np.abs(rho.imag)) <= 1e-14:
        # For real rho, rho @ rho_tilde = (rho @ S)**2 with S = sigma_y (x) sigma_y real,
        # so |eig(rho @ S)| gives the roots without amplifying noise near zero.
        mu = eigenvalues4(rho.real @ SIGMA_YY.real)
        _checked(mu * mu)
        roots = np.abs(mu)
    else:
        roots = np.sqrt(np.clip(_checked(eigenvalues4(rho @ spin_flip(rho))), 0.0, None))
    return np.sort(roots)[::-1]


def spin_flip_spectrum(rho) -> np.ndarray:
    """Eigenvalues of ``rho @ spin_flip(rho)`` sorted descending, clamped at zero."""
    return _root_spectrum(check_density(rho)) ** 2


def concurrence(rho) -> float:
    """Wootters concurrence ``max(0, s1 - s2 - s3 - s4)``.

    ``s_i`` are the square roots, in decreasing order, of the eigenvalues of
    ``rho @ spin_flip(rho)``.

    Raises
    ------
    PreconditionError
        If ``rho`` is not a valid density matrix.
    NumericalError
        If the spectrum has a significant imaginary or negative part.
    """
    s = _root_spectrum(check_density(rho))
    return float(min(1.0, max(0.0, s[0] - s[1] - s[2] - s[3])))


def concurrence_xstate(rho) -> float:
    """Closed-form concurrence of an X-shaped two-qubit state."""
    m = as_matrix(rho, 4)
    if not is_x_state(m):
        raise PreconditionError("state has entries outside the X pattern")
    d = np.clip(m.diagonal().real, 0.0, None)
    c = max(0.0,
            abs(m[0, 3]) - np.sqrt(d[1] * d[2]),
            abs(m[1, 2]) - np.sqrt(d[0] * d[3]))
    return float(2 * c)
