"""Lorentzian bath: spectral density, Matsubara expansion, counterterm.

All scalar coefficient machinery for the hierarchy generator lives here.
The bath correlation function is expanded as c_0 exp(-gamma_0 t) plus
Matsubara terms c_k exp(-gamma_k t); the part of the series beyond the
truncation order K is folded into the real counterterm Delta_K that
multiplies the double-commutator correction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularParameterError

#: Absolute guard against cot(beta*gamma/2) poles and Matsubara
#: resonances; parameters closer than this produce meaningless
#: coefficients and are rejected loudly.
SINGULARITY_TOL = 1e-9

#: Imaginary residue allowed in the counterterm before it is stored as a
#: real scalar.  Exactly zero in exact arithmetic.
COUNTERTERM_IMAG_TOL = 1e-12


@dataclass(frozen=True)
class BathParams:
    """Bath constants in units of the inter-qubit coupling: eta is the
    system-bath coupling strength, gamma the bath characteristic
    frequency, beta the inverse temperature.  Both qubits see identical
    baths."""

    eta: float
    gamma: float
    beta: float

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError(f"eta must be non-negative, got {self.eta}")
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        _check_poles(self)


@dataclass(frozen=True)
class MatsubaraExpansion:
    """Exponential decomposition of the bath correlation function.

    frequencies[k] and coefficients[k] hold gamma_k and c_k for
    k = 0..order; counterterm is Delta_K, the (real) weight of the
    truncated Matsubara tail.
    """

    order: int
    frequencies: np.ndarray
    coefficients: np.ndarray
    counterterm: float


def spectral_density(omega, params: BathParams):
    """Lorentzian-cutoff spectral density J(omega) = omega*eta*gamma /
    (omega^2 + gamma^2).  Odd in omega; peaks at omega = gamma with value
    eta/2.  Accepts scalars or arrays."""
    omega = np.asarray(omega, dtype=float)
    out = omega * params.eta * params.gamma / (omega**2 + params.gamma**2)
    return out if out.ndim else float(out)


def _check_poles(params: BathParams) -> None:
    half = 0.5 * params.beta * params.gamma
    if abs(math.sin(half)) < SINGULARITY_TOL:
        raise SingularParameterError(
            f"beta*gamma/2 = {half:g} is within {SINGULARITY_TOL:g} of a cot pole"
        )
    # gamma_k == gamma_0 makes c_k blow up for that k.
    k_near = round(half / math.pi)
    if k_near >= 1:
        gap = abs(2.0 * math.pi * k_near / params.beta - params.gamma)
        if gap < SINGULARITY_TOL:
            raise SingularParameterError(
                f"Matsubara frequency k={k_near} resonant with bath frequency "
                f"(|gamma_k - gamma_0| = {gap:.2e})"
            )


def matsubara_frequency(k: int, params: BathParams) -> float:
    """gamma_0 is the bath frequency; gamma_k = 2*pi*k/beta for k >= 1."""
    if k == 0:
        return params.gamma
    return 2.0 * math.pi * k / params.beta


def _coefficient(k: int, params: BathParams) -> complex:
    eta, gamma, beta = params.eta, params.gamma, params.beta
    if k == 0:
        return 0.5 * eta * gamma * (-1j + 1.0 / math.tan(0.5 * beta * gamma))
    gk = matsubara_frequency(k, params)
    return complex(2.0 * eta * gamma * gk / (beta * (gk**2 - gamma**2)))


def build_matsubara_expansion(params: BathParams, order: int) -> MatsubaraExpansion:
    """Frequencies gamma_0..gamma_K, coefficients c_0..c_K, and the
    counterterm Delta_K = Re[(1/(beta*gamma_0) - i/2)*eta - sum_k c_k/gamma_k].

    The imaginary part of that bracket cancels identically because
    Im(c_0/gamma_0) = -eta/2 and the c_k are real for k >= 1; a residue
    above COUNTERTERM_IMAG_TOL means broken coefficients and raises.
    """
    if order < 0:
        raise ValueError(f"Matsubara order must be >= 0, got {order}")
    _check_poles(params)
    freqs = np.array([matsubara_frequency(k, params) for k in range(order + 1)])
    coeffs = np.array([_coefficient(k, params) for k in range(order + 1)])
    full = (1.0 / (params.beta * params.gamma) - 0.5j) * params.eta
    full -= (coeffs / freqs).sum()
    if abs(full.imag) > COUNTERTERM_IMAG_TOL:
        raise ArithmeticError(
            f"counterterm imaginary residue {full.imag:.3e} exceeds "
            f"{COUNTERTERM_IMAG_TOL:g}"
        )
    return MatsubaraExpansion(
        order=order, frequencies=freqs, coefficients=coeffs, counterterm=float(full.real)
    )


def counterterm_tail(params: BathParams, order: int, *, stop_below: float = 1e-9) -> float:
    """Independent check of Delta_K: sum c_k/gamma_k for k > K term by
    term (the terms decay as 1/k^2), then close with the midpoint
    integral of the same integrand so the result is accurate to well
    below 1e-10 without walking millions of terms.
    """
    if order < 0:
        raise ValueError(f"Matsubara order must be >= 0, got {order}")
    _check_poles(params)
    eta, gamma, beta = params.eta, params.gamma, params.beta
    if eta == 0.0:
        return 0.0
    coef = eta * gamma * beta / (2.0 * math.pi**2)  # c_k/gamma_k = coef/(k^2 - a^2)
    a = beta * gamma / (2.0 * math.pi)
    total = 0.0
    k_lo = order + 1
    block = 1 << 16
    while True:
        ks = np.arange(k_lo, k_lo + block, dtype=float)
        terms = coef / (ks * ks - a * a)
        total += float(terms.sum())
        k_lo += block
        if ks[-1] > a + 1.0 and abs(terms[-1]) < stop_below:
            break
    x = ks[-1] + 0.5  # midpoint continuation of the summed series
    total += coef * math.log1p(2.0 * a / (x - a)) / (2.0 * a)
    return total
