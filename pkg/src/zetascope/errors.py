"""Exception types shared across the package."""


class ZetascopeError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ZetascopeError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """The requested point is a pole of the function being evaluated."""


class ConfigError(ZetascopeError, ValueError):
    """A configuration value violates its documented range."""


class WindowError(ZetascopeError, ValueError):
    """The (z, n) pair violates the Hardy-Littlewood validity window."""


class PrecisionNotReachedError(ZetascopeError):
    """The asymptotic series started diverging before the accuracy target.

    Carries the best achieved truncation bound in ``bound`` and the partial
    value accumulated so far in ``value``.
    """

    def __init__(self, message: str, value: complex, bound: float):
        super().__init__(message)
        self.value = value
        self.bound = bound


class PrecisionError(ZetascopeError):
    """A quantity that must be real carries too much imaginary leakage."""


class DegenerateRatioError(ZetascopeError, ZeroDivisionError):
    """The denominator of a ratio underflowed below 1e-300 in modulus."""


class DegenerateSeriesError(ZetascopeError, ValueError):
    """A convergence series cannot be fitted or extrapolated (zero modulus,
    too few points, or missing doubling pairs)."""


class NearZeroWarning(UserWarning):
    """A ratio was evaluated within 1e-3 (in Im z) of a known zero of its
    denominator, where the quotient is delicate."""


class PossiblyMissedZeroWarning(UserWarning):
    """The scan step may have been too coarse to separate close zeros."""
