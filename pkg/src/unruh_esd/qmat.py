"""Small dense complex matrix kernel.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every state and
operator in the package lives in one of three spaces with a fixed basis
ordering:

* one qubit: ``|0>, |1>``
* two qubits (Alice, Rob): index ``2*alice + rob``
* three qubits (Alice, Rindler region I, region II): index
  ``4*alice + 2*region_I + region_II``, region II varying fastest.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, NumericalError

ComplexMatrix = np.ndarray

#: imaginary parts at or below this size are zeroed in reported eigenvalues
IMAG_NOISE = 1e-10

I2 = np.eye(2, dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)


def as_matrix(a, dim: int | None = None) -> ComplexMatrix:
    """Coerce ``a`` to a finite square complex matrix, optionally of size ``dim``."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if dim is not None and m.shape[0] != dim:
        raise DimensionError(f"expected a {dim}x{dim} matrix, got {m.shape[0]}x{m.shape[0]}")
    if not np.all(np.isfinite(m)):
        raise NumericalError("matrix has non-finite entries")
    return m


def identity(dim: int) -> ComplexMatrix:
    return np.eye(dim, dtype=complex)


def kron(a, b) -> ComplexMatrix:
    """Kronecker product; entry ``a[i,j]*b[k,l]`` sits at ``(i*db + k, j*db + l)``."""
    return np.kron(as_matrix(a), as_matrix(b))


def mul(a, b) -> ComplexMatrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def add(a, b) -> ComplexMatrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot add {a.shape} and {b.shape}")
    return a + b


def scale(a, s: complex) -> ComplexMatrix:
    return complex(s) * as_matrix(a)


def dagger(a) -> ComplexMatrix:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_matrix(a)))


def partial_trace_third(rho8) -> ComplexMatrix:
    """Trace out the last qubit of a three-qubit operator.

    Returns the 4x4 matrix ``rho[ab, cd] = sum_e rho8[abe, cde]``.
    """
    m = as_matrix(rho8, 8)
    return np.einsum("iejf,ef->ij", m.reshape(4, 2, 4, 2), np.eye(2))


def eigenvalues4(m) -> np.ndarray:
    """All four eigenvalues of a 4x4 matrix, with multiplicity, unordered.

    Imaginary parts no larger than ``IMAG_NOISE`` are set to zero.

    Raises
    ------
    DimensionError
        If ``m`` is not 4x4.
    NumericalError
        If ``m`` has NaN or infinite entries.
    """
    ev = np.linalg.eigvals(as_matrix(m, 4))
    ev = np.where(np.abs(ev.imag) <= IMAG_NOISE, ev.real + 0j, ev)
    return ev
