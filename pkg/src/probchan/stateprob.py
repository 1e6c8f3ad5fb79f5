"""Probability parametrizations of qubit and ququart density matrices.

A qubit state is pinned by three spin-projection probabilities (z, x, y
measurement outcomes +1/2):

    rho = [[ p1,                (p2 - 1/2) - i(p3 - 1/2) ],
           [ (p2 - 1/2) + i(p3 - 1/2),            1 - p1 ]]

A ququart (two-qubit) state takes fifteen probabilities: p1..p3 fix the
diagonal through rho_11 = p1 + p2 + p3 - 2, rho_kk = 1 - p_{k-1}, and the
six independent off-diagonal entries come in (real, imaginary) pairs

    rho_rc = (p_re - 1/2) - i(p_im - 1/2),   r < c,

with the pairing given by OFFDIAG_PROB_PAIRS. The same fifteen numbers
regroup into one four-outcome distribution plus twelve dichotomic ones,
which is the physical reading of the parametrization.
"""

from dataclasses import dataclass

import numpy as np

from .matcore import PAULI_X, PAULI_Y, PAULI_Z, hermitian_eigvals, hermiticity_defect, identity

__all__ = [
    "OFFDIAG_PROB_PAIRS",
    "DistributionSet",
    "qubit_density_from_probs",
    "qubit_probs_from_density",
    "qubit_bloch_check",
    "tomogram",
    "ququart_density_from_probs",
    "ququart_probs_from_density",
    "distribution_set",
]

# (row, col, real-prob index, imaginary-prob index), everything 0-based.
# Row/col address the upper triangle of the 4 x 4 matrix; the probability
# indices address the 15-vector.
OFFDIAG_PROB_PAIRS = (
    (0, 1, 3, 4),
    (0, 2, 5, 6),
    (0, 3, 7, 8),
    (1, 2, 9, 10),
    (1, 3, 11, 12),
    (2, 3, 13, 14),
)


def _as_probs(p, n: int) -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.shape != (n,):
        raise ValueError(f"expected {n} probabilities, got shape {arr.shape}")
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("probabilities must lie in [0, 1]")
    return arr


def _require_density(rho, dim: int, tol: float) -> np.ndarray:
    arr = np.asarray(rho, dtype=complex)
    if arr.shape != (dim, dim):
        raise ValueError(f"expected a {dim} x {dim} matrix, got shape {arr.shape}")
    defect = hermiticity_defect(arr)
    if defect > tol:
        raise ValueError(f"density matrix not Hermitian: defect {defect:.3e}")
    trace_err = abs(arr.trace() - 1.0)
    if trace_err > tol:
        raise ValueError(f"density matrix trace deviates from 1 by {trace_err:.3e}")
    return arr


def qubit_density_from_probs(probs) -> np.ndarray:
    """Build the 2 x 2 density matrix from (p1, p2, p3).

    Components must lie in [0, 1]; no positivity check is made here, use
    qubit_bloch_check for that.
    """
    p1, p2, p3 = _as_probs(probs, 3)
    off = (p2 - 0.5) - 1j * (p3 - 0.5)
    return np.array([[p1, off], [np.conj(off), 1.0 - p1]], dtype=complex)


def qubit_probs_from_density(rho, tol: float = 1e-10) -> np.ndarray:
    """Read (p1, p2, p3) back off a Hermitian trace-1 matrix.

    Exact left inverse of qubit_density_from_probs.
    """
    arr = _require_density(rho, 2, tol)
    return np.array([arr[0, 0].real, 0.5 + arr[1, 0].real, 0.5 + arr[1, 0].imag])


def qubit_bloch_check(probs) -> tuple[bool, float]:
    """Test the Bloch-ball restriction on a qubit probability triple.

    Returns (valid, margin) where margin = sum((p_i - 1/2)^2); the triple
    describes a positive semidefinite state iff margin <= 1/4, checked with
    a 1e-12 slack.
    """
    arr = np.asarray(probs, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected 3 probabilities, got shape {arr.shape}")
    margin = float(np.sum((arr - 0.5) ** 2))
    return margin <= 0.25 + 1e-12, margin


def tomogram(rho, direction, tol: float = 1e-10) -> float:
    """Probability of the +1/2 spin outcome along a unit direction.

    Args:
        rho: valid qubit density matrix (Hermitian, trace 1, positive
            semidefinite, all within tol).
        direction: real 3-vector of unit Euclidean norm (within 1e-12).
    """
    arr = _require_density(rho, 2, tol)
    min_eig = hermitian_eigvals(arr, tol)[0]
    if min_eig < -tol:
        raise ValueError(f"density matrix not positive semidefinite: min eigenvalue {min_eig:.3e}")
    n = np.asarray(direction, dtype=float)
    if n.shape != (3,):
        raise ValueError(f"expected a 3-component direction, got shape {n.shape}")
    norm = float(np.linalg.norm(n))
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"direction must be a unit vector, norm is {norm!r}")
    projector = 0.5 * (identity(2) + n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z)
    return float(np.trace(arr @ projector).real)


def ququart_density_from_probs(probs) -> np.ndarray:
    """Build the 4 x 4 density matrix from the 15-component probability vector."""
    p = _as_probs(probs, 15)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = p[0] + p[1] + p[2] - 2.0
    rho[1, 1] = 1.0 - p[0]
    rho[2, 2] = 1.0 - p[1]
    rho[3, 3] = 1.0 - p[2]
    for row, col, re_i, im_i in OFFDIAG_PROB_PAIRS:
        entry = (p[re_i] - 0.5) - 1j * (p[im_i] - 0.5)
        rho[row, col] = entry
        rho[col, row] = np.conj(entry)
    return rho


def ququart_probs_from_density(rho, tol: float = 1e-10) -> np.ndarray:
    """Read the 15 probabilities back off a Hermitian trace-1 matrix.

    Exact left inverse of ququart_density_from_probs.
    """
    arr = _require_density(rho, 4, tol)
    p = np.empty(15)
    p[0] = 1.0 - arr[1, 1].real
    p[1] = 1.0 - arr[2, 2].real
    p[2] = 1.0 - arr[3, 3].real
    for row, col, re_i, im_i in OFFDIAG_PROB_PAIRS:
        p[re_i] = 0.5 + arr[row, col].real
        p[im_i] = 0.5 - arr[row, col].imag
    return p


@dataclass(frozen=True)
class DistributionSet:
    """One four-outcome distribution plus twelve dichotomic (p, 1-p) rows."""

    main: np.ndarray
    dichotomics: np.ndarray


def distribution_set(probs) -> DistributionSet:
    """Regroup a ququart probability vector into its measurement distributions.

    main = (p1+p2+p3-2, 1-p1, 1-p2, 1-p3) is the four-outcome distribution
    of the diagonal; each remaining component p spawns the dichotomic pair
    (p, 1-p). Raises when p1+p2+p3 < 2, since the first outcome would go
    negative.
    """
    p = _as_probs(probs, 15)
    head = p[0] + p[1] + p[2] - 2.0
    if head < -1e-12:
        raise ValueError(f"p1 + p2 + p3 = {p[0] + p[1] + p[2]!r} is below 2, first outcome would be negative")
    main = np.array([max(head, 0.0), 1.0 - p[0], 1.0 - p[1], 1.0 - p[2]])
    dichotomics = np.column_stack([p[3:], 1.0 - p[3:]])
    return DistributionSet(main=main, dichotomics=dichotomics)
