"""Qubit channel representations: Kraus sets, Choi matrices, superoperators.

Conventions, fixed once and used everywhere:

* vec is row-major (matcore.vec), so the Choi matrix of a Kraus set is
  D = sum_k vec(A_k) vec(A_k)^dagger, carrying row index (k, i) and column
  index (l, j) for the map element D_{ki,lj}.
* The superoperator L is the action matrix, vec(F[rho]) = L vec(rho).
  Choi <-> superoperator is the index reshuffle (k,i,l,j) -> (k,l,i,j),
  which is its own inverse.
* Trace preservation reads sum_i D_{ii0,ij0} = delta_{i0 j0} on the Choi
  matrix, i.e. tracing out the first tensor slot gives the identity.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .matcore import hermiticity_defect, hermitian_eigensystem, hermitian_eigvals, unvec, vec

__all__ = [
    "CptpReport",
    "apply_kraus",
    "kraus_tp_defect",
    "choi_from_kraus",
    "superop_from_choi",
    "choi_from_superop",
    "apply_channel_via_choi",
    "kraus_from_choi",
    "verify_cptp",
]


def _as_square(m, name: str) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {arr.shape}")
    return arr


def _split_dim(n: int, name: str) -> int:
    d = isqrt(n)
    if d * d != n:
        raise ValueError(f"{name} size {n} is not a perfect square")
    return d


def _as_kraus_set(kraus_ops) -> list[np.ndarray]:
    ops = [_as_square(a, "Kraus operator") for a in kraus_ops]
    if not ops:
        raise ValueError("Kraus set is empty")
    dim = ops[0].shape[0]
    if any(a.shape != (dim, dim) for a in ops):
        raise ValueError("Kraus operators have mismatched shapes")
    return ops


def apply_kraus(kraus_ops, rho) -> np.ndarray:
    """Channel action sum_k A_k rho A_k^dagger."""
    ops = _as_kraus_set(kraus_ops)
    state = _as_square(rho, "state")
    if state.shape != ops[0].shape:
        raise ValueError(f"state shape {state.shape} does not match Kraus shape {ops[0].shape}")
    out = np.zeros_like(state)
    for a in ops:
        out += a @ state @ a.conj().T
    return out


def kraus_tp_defect(kraus_ops) -> float:
    """Max absolute entry of sum_k A_k^dagger A_k - I."""
    ops = _as_kraus_set(kraus_ops)
    acc = np.zeros_like(ops[0])
    for a in ops:
        acc += a.conj().T @ a
    return float(np.max(np.abs(acc - np.eye(ops[0].shape[0]))))


def choi_from_kraus(kraus_ops) -> np.ndarray:
    """Choi matrix sum_k vec(A_k) vec(A_k)^dagger (Hermitian and PSD by construction)."""
    ops = _as_kraus_set(kraus_ops)
    vecs = [vec(a) for a in ops]
    choi = np.zeros((vecs[0].size, vecs[0].size), dtype=complex)
    for v in vecs:
        choi += np.outer(v, v.conj())
    return choi


def _reshuffle(m) -> np.ndarray:
    arr = _as_square(m, "matrix")
    d = _split_dim(arr.shape[0], "matrix")
    return arr.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)


def superop_from_choi(choi) -> np.ndarray:
    """Action matrix L with vec(F[rho]) = L vec(rho), from the Choi matrix."""
    return _reshuffle(choi)


def choi_from_superop(superop) -> np.ndarray:
    """Inverse of superop_from_choi; the reshuffle is an involution."""
    return _reshuffle(superop)


def apply_channel_via_choi(choi, rho) -> np.ndarray:
    """Channel action F[rho]_ki = sum_{l,j} D_{ki,lj} rho_{ij} straight off the Choi matrix."""
    state = _as_square(rho, "state")
    arr = _as_square(choi, "Choi matrix")
    d = state.shape[0]
    if arr.shape != (d * d, d * d):
        raise ValueError(f"Choi shape {arr.shape} does not match state dimension {d}")
    return np.einsum("kilj,ij->kl", arr.reshape(d, d, d, d), state)


def kraus_from_choi(choi, tol: float = 1e-9) -> list[np.ndarray]:
    """Extract a minimal Kraus set from a Hermitian PSD Choi matrix.

    Eigenvalues at or below tol are dropped, so the returned rank equals the
    numerical rank of the input. Operators come in descending eigenvalue
    order, each eigenvector's largest-magnitude component rotated to the
    positive real axis so the output is deterministic.

    Raises ValueError when the input is not Hermitian within tol or has an
    eigenvalue below -tol.
    """
    arr = _as_square(choi, "Choi matrix")
    d = _split_dim(arr.shape[0], "Choi matrix")
    vals, vecs = hermitian_eigensystem(arr, tol)
    if vals[0] < -tol:
        raise ValueError(f"Choi matrix is not positive semidefinite: min eigenvalue {vals[0]:.3e}")
    ops = []
    for k in range(vals.size - 1, -1, -1):
        if vals[k] <= tol:
            break
        v = vecs[:, k]
        pivot = v[np.argmax(np.abs(v))]
        v = v * (np.conj(pivot) / abs(pivot))
        ops.append(np.sqrt(vals[k]) * unvec(v, d))
    return ops


@dataclass(frozen=True)
class CptpReport:
    """Diagnostics from verify_cptp, all defects are max absolute entries."""

    hermiticity_defect: float
    trace_value: float
    tp_defect: float
    min_eigenvalue: float
    verdict: str


def verify_cptp(choi, tol: float = 1e-9) -> CptpReport:
    """Classify a candidate Choi matrix as CPTP / CP-not-TP / TP-not-CP / neither.

    CP requires hermiticity defect <= tol and min eigenvalue >= -tol; TP
    requires the first-slot partial trace to match the identity within tol.
    """
    arr = _as_square(choi, "Choi matrix")
    d = _split_dim(arr.shape[0], "Choi matrix")
    herm = hermiticity_defect(arr)
    trace_value = float(arr.trace().real)
    tp_matrix = np.einsum("aiaj->ij", arr.reshape(d, d, d, d))
    tp_defect = float(np.max(np.abs(tp_matrix - np.eye(d))))
    min_eig = float(hermitian_eigvals((arr + arr.conj().T) / 2.0, np.inf)[0])
    cp_ok = herm <= tol and min_eig >= -tol
    tp_ok = tp_defect <= tol
    if cp_ok and tp_ok:
        verdict = "CPTP"
    elif cp_ok:
        verdict = "CP-not-TP"
    elif tp_ok:
        verdict = "TP-not-CP"
    else:
        verdict = "neither"
    return CptpReport(
        hermiticity_defect=herm,
        trace_value=trace_value,
        tp_defect=tp_defect,
        min_eigenvalue=min_eig,
        verdict=verdict,
    )
