"""Dense complex linear algebra primitives shared by every other module.

Vectorization is row-major throughout: vec stacks matrix rows, so
vec(A X B) = (A kron B^T) vec(X).
"""

import numpy as np

__all__ = [
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "identity",
    "kron",
    "vec",
    "unvec",
    "hermiticity_defect",
    "hermitian_eigvals",
    "hermitian_eigensystem",
    "unitary_exp",
    "rk4_step",
]


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    arr.setflags(write=False)
    return arr


PAULI_X = _frozen([[0, 1], [1, 0]])
PAULI_Y = _frozen([[0, -1j], [1j, 0]])
PAULI_Z = _frozen([[1, 0], [0, -1]])


def identity(n: int) -> np.ndarray:
    """Complex identity matrix of size n."""
    return np.eye(n, dtype=complex)


def _as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"expected a matrix, got array of rank {arr.ndim}")
    return arr


def _as_square(m) -> np.ndarray:
    arr = _as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def kron(a, b) -> np.ndarray:
    """Kronecker product with the left factor on the coarse index."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def vec(m) -> np.ndarray:
    """Row-major vectorization of a square matrix.

    Entry (i, j) of an n x n matrix lands at flat position i*n + j.
    """
    return _as_square(m).reshape(-1)


def unvec(v, n: int) -> np.ndarray:
    """Inverse of vec: rebuild an n x n matrix from a length n*n vector."""
    arr = np.asarray(v, dtype=complex)
    if arr.ndim != 1 or arr.size != n * n:
        raise ValueError(f"expected a vector of length {n * n}, got shape {arr.shape}")
    return arr.reshape(n, n)


def hermiticity_defect(m) -> float:
    """Max absolute entry of m - m^dagger."""
    arr = _as_square(m)
    return float(np.max(np.abs(arr - arr.conj().T))) if arr.size else 0.0


def hermitian_eigensystem(m, tol: float = 1e-10):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Args:
        m: square matrix, Hermitian within tol entrywise.
        tol: hermiticity gate; violation raises ValueError.

    Returns:
        (eigvals, eigvecs) with eigvecs[:, k] the vector for eigvals[k].
    """
    arr = _as_square(m)
    defect = hermiticity_defect(arr)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: defect {defect:.3e} exceeds {tol:.3e}")
    # average with the adjoint so the solver sees an exactly Hermitian input
    vals, vecs = np.linalg.eigh((arr + arr.conj().T) / 2.0)
    return vals, vecs


def hermitian_eigvals(m, tol: float = 1e-10) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix."""
    vals, _ = hermitian_eigensystem(m, tol)
    return vals


def unitary_exp(h, t: float) -> np.ndarray:
    """exp(-i*h*t) through the spectral decomposition of Hermitian h."""
    vals, vecs = hermitian_eigensystem(h, 1e-12)
    phases = np.exp(-1j * vals * float(t))
    return (vecs * phases) @ vecs.conj().T


def rk4_step(f, y, t: float, dt: float):
    """One classical fourth-order Runge-Kutta step for dy/dt = f(t, y).

    Works for scalars and arrays alike; dt must be positive.
    """
    half = dt / 2.0
    k1 = f(t, y)
    k2 = f(t + half, y + half * k1)
    k3 = f(t + half, y + half * k2)
    k4 = f(t + dt, y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
