"""Kinetic equation for channel probabilities under unitary dynamics.

For a Hamiltonian h (units with hbar = 1) the dynamical matrix of the
evolution channel obeys i d vec(D)/dt = Q vec(D) with the commutator
generator

    Q = (h kron I2) kron I4  -  I4 kron (h kron I2)^T,

row-major vec throughout. Pushing through the affine maps of probchannel
turns this into a closed linear equation on the probability vector,

    i dP/dt = G P + g,    G = A Q B,   g = A Q c,

which is integrated here with fixed-step classical RK4. The exact solution
D(t) = vec(U) vec(U)^dagger with U = exp(-i h t) serves as an oracle for
error measurement.
"""

from dataclasses import dataclass

import numpy as np

from .matcore import hermiticity_defect, identity, kron, rk4_step, unitary_exp, vec
from .probchannel import N_PROBS, build_constants, check_channel_prob_constraints, probs_from_choi

__all__ = [
    "KineticGenerator",
    "Trajectory",
    "validate_hamiltonian",
    "build_q",
    "build_generator",
    "evolve_probs",
    "oracle_probs",
    "compare_to_oracle",
]

_HERMITICITY_TOL = 1e-12
_STEP_IMAG_TOL = 1e-9


def validate_hamiltonian(h) -> np.ndarray:
    """Coerce to a 2 x 2 complex array, Hermitian within 1e-12."""
    arr = np.asarray(h, dtype=complex)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2 x 2 Hamiltonian, got shape {arr.shape}")
    defect = hermiticity_defect(arr)
    if defect > _HERMITICITY_TOL:
        raise ValueError(f"Hamiltonian not Hermitian: defect {defect:.3e}")
    return arr


def build_q(h) -> np.ndarray:
    """16 x 16 matrix Q with Q vec(M) = vec([h kron I2, M]) for any 4 x 4 M."""
    lifted = kron(validate_hamiltonian(h), identity(2))
    eye4 = identity(4)
    return kron(lifted, eye4) - kron(eye4, lifted.T)


@dataclass(frozen=True)
class KineticGenerator:
    """Generator data: full vec-space Q plus the reduced affine pair (G, g).

    The probability vector obeys i dP/dt = G P + g while vec(D) obeys
    i d vec(D)/dt = Q vec(D).
    """

    Q: np.ndarray
    G: np.ndarray
    g: np.ndarray


def build_generator(h) -> KineticGenerator:
    """Assemble Q, G = A Q B and g = A Q c for a Hamiltonian."""
    q = build_q(h)
    k = build_constants()
    reduced = k.prob_matrix @ q @ k.choi_matrix
    source = k.prob_matrix @ (q @ k.choi_offset)
    return KineticGenerator(Q=q, G=reduced, g=source)


@dataclass
class Trajectory:
    """Sampled solution of the kinetic equation.

    times has shape (n,), strictly increasing from 0; probs has shape
    (n, 15) with row i the probability vector at times[i].
    """

    times: np.ndarray
    probs: np.ndarray
    dt: float
    hamiltonian_label: str = ""

    @property
    def samples(self) -> list[tuple[float, np.ndarray]]:
        """The trajectory as ordered (t, probability-vector) pairs."""
        return [(float(t), row) for t, row in zip(self.times, self.probs)]


def evolve_probs(h, p0, t_max: float, dt: float = 1e-3, *, label: str = "") -> Trajectory:
    """Integrate the kinetic equation from p0 over [0, t_max].

    Samples at every RK4 step; a shorter final step lands exactly on t_max
    when dt does not divide it. The state is propagated in complex
    arithmetic and collapsed to its real part each step after checking the
    imaginary residue stays at or below 1e-9 (a blow-up means the generator
    and initial data are inconsistent).

    Args:
        h: 2 x 2 Hermitian matrix.
        p0: 15-vector satisfying the channel constraints within 1e-9.
        t_max: horizon, positive.
        dt: step, 0 < dt <= t_max.
        label: stored on the trajectory for reporting.
    """
    arr_h = validate_hamiltonian(h)
    p = np.asarray(p0, dtype=float)
    if p.shape != (N_PROBS,):
        raise ValueError(f"expected {N_PROBS} initial probabilities, got shape {p.shape}")
    ok, residuals = check_channel_prob_constraints(p)
    if not ok:
        raise ValueError(f"initial probabilities violate channel constraints, residuals {residuals}")
    if not (t_max > 0.0):
        raise ValueError("t_max must be positive")
    if not (0.0 < dt <= t_max):
        raise ValueError("dt must satisfy 0 < dt <= t_max")

    gen = build_generator(arr_h)
    g_mat = gen.G
    g_vec = gen.g

    def deriv(_t, y):
        return -1j * (g_mat @ y + g_vec)

    ratio = t_max / dt
    n_whole = int(np.floor(ratio * (1.0 + 4.0 * np.finfo(float).eps)))
    remainder = t_max - n_whole * dt

    times = [0.0]
    samples = [p.copy()]
    y = p
    for k in range(n_whole):
        stepped = rk4_step(deriv, y, k * dt, dt)
        y = _collapse_real(stepped)
        times.append((k + 1) * dt)
        samples.append(y)
    if remainder > 1e-9 * dt:
        stepped = rk4_step(deriv, y, n_whole * dt, remainder)
        y = _collapse_real(stepped)
        times.append(t_max)
        samples.append(y)
    times[-1] = t_max

    return Trajectory(times=np.array(times), probs=np.vstack(samples), dt=dt, hamiltonian_label=label)


def _collapse_real(y: np.ndarray) -> np.ndarray:
    residue = float(np.max(np.abs(y.imag)))
    if residue > _STEP_IMAG_TOL:
        raise ValueError(f"imaginary residue {residue:.3e} after a step; generator is inconsistent")
    return y.real.copy()


def oracle_probs(h, t: float) -> np.ndarray:
    """Exact probability vector at time t from the closed-form unitary."""
    u = unitary_exp(validate_hamiltonian(h), t)
    v = vec(u)
    return probs_from_choi(np.outer(v, v.conj()))


def compare_to_oracle(h, traj: Trajectory) -> float:
    """Max-norm deviation of a trajectory from the closed-form solution.

    Evaluates the oracle at every sample time of traj (which must have been
    produced with the same Hamiltonian) and returns the largest absolute
    componentwise difference.
    """
    arr_h = validate_hamiltonian(h)
    worst = 0.0
    for t, row in zip(traj.times, traj.probs):
        dev = float(np.max(np.abs(row - oracle_probs(arr_h, t))))
        worst = max(worst, dev)
    return worst
