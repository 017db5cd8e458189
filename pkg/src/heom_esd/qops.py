"""Dense 4x4 operator algebra for two coupled qubits.

Every matrix in the package uses the product basis |e1 e2>, |e1 g2>,
|g1 e2>, |g1 g2> (qubit 1 is the high bit).  Matrices are plain numpy
arrays; density matrices are complex128 (4, 4) arrays validated by
:func:`validate_density_matrix`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidStateError

#: Validation tolerances for density matrices.  Integrator discretization
#: error dominates round-off at these scales.
TOL_HERM = 1e-10
TOL_TRACE = 1e-8
TOL_POS = 1e-6

DIM = 4


@dataclass(frozen=True)
class SystemParams:
    """Two-qubit Hamiltonian constants, in units of the inter-qubit
    coupling (zeta = 1 fixes the energy unit; time is measured in
    1/zeta)."""

    epsilon: float
    zeta: float = 1.0

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.zeta < 0:
            raise ValueError(f"zeta must be non-negative, got {self.zeta}")


def build_system_hamiltonian(params: SystemParams) -> np.ndarray:
    """Hamiltonian of the coupled pair: qubit gaps epsilon plus the
    exchange term zeta*(a1^+ + a1)(a2^+ + a2).

    On a two-level system a^+ + a acts as the bit flip, so the coupling
    fills the anti-diagonal.  The result is real and symmetric.
    """
    eps, zeta = params.epsilon, params.zeta
    h = np.zeros((DIM, DIM))
    h[0, 0] = 2.0 * eps
    h[1, 1] = eps
    h[2, 2] = eps
    for a in range(DIM):
        h[a, DIM - 1 - a] += zeta
    return h


def coupling_operator(m: int) -> np.ndarray:
    """Bath-coupling operator V_m = a_m^+ + a_m: the bit flip on qubit m
    tensored with identity on the other.  V_m is a symmetric permutation
    matrix with V_m @ V_m = identity."""
    if m not in (1, 2):
        raise ValueError(f"qubit index must be 1 or 2, got {m!r}")
    flip = np.array([[0.0, 1.0], [1.0, 0.0]])
    eye = np.eye(2)
    if m == 1:
        return np.kron(flip, eye)
    return np.kron(eye, flip)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def trace_error(rho: np.ndarray) -> float:
    """|tr(rho) - 1|."""
    return abs(np.trace(rho) - 1.0)


def hermiticity_error(rho: np.ndarray) -> float:
    """Largest entrywise deviation from rho = rho^+."""
    return float(np.abs(rho - dagger(rho)).max())


def validate_density_matrix(
    rho: np.ndarray,
    *,
    tol_herm: float = TOL_HERM,
    tol_trace: float = TOL_TRACE,
    tol_pos: float = TOL_POS,
) -> np.ndarray:
    """Check the density-matrix invariants and return rho as complex128.

    Raises InvalidStateError if rho is not 4x4, not Hermitian within
    tol_herm, not unit-trace within tol_trace, or has an eigenvalue
    below -tol_pos.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (DIM, DIM):
        raise InvalidStateError(f"density matrix must be 4x4, got shape {rho.shape}")
    herm = hermiticity_error(rho)
    if herm > tol_herm:
        raise InvalidStateError(f"not Hermitian: max deviation {herm:.3e} > {tol_herm:g}")
    tr = trace_error(rho)
    if tr > tol_trace:
        raise InvalidStateError(f"trace deviates from 1 by {tr:.3e} > {tol_trace:g}")
    lo = float(np.linalg.eigvalsh(0.5 * (rho + dagger(rho))).min())
    if lo < -tol_pos:
        raise InvalidStateError(f"negative eigenvalue {lo:.3e} below -{tol_pos:g}")
    return rho
