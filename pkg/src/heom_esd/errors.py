"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad command-line argument, config-file entry, or sweep definition."""


class InvalidStateError(ValueError):
    """A density matrix violates Hermiticity, trace, or positivity bounds."""


class SingularParameterError(ValueError):
    """Bath parameters sit on (or too close to) a pole of the Matsubara
    expansion: cot(beta*gamma/2) divergent or a Matsubara frequency
    resonant with the bath frequency."""


class DivergenceError(RuntimeError):
    """The integrator produced a non-finite auxiliary operator.

    Usually means the hierarchy depth is too shallow or dt too large for
    the requested parameters.
    """

    def __init__(self, time, tier):
        self.time = time
        self.tier = tier
        super().__init__(
            f"non-finite hierarchy entry at t={time:g} (tier {tier}); "
            "increase the hierarchy depth or reduce dt"
        )


class AccuracyError(RuntimeError):
    """A conservation monitor exceeded its bound during evolution."""


class NumericalDegradationError(RuntimeError):
    """Eigenvalues of rho * rho_tilde left the real non-negative region by
    more than the allowed tolerance, signalling an unphysical state
    upstream."""


class InsufficientDataError(ValueError):
    """Too few trajectory samples for transition detection."""
