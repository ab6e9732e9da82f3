"""Euler-Maclaurin reference evaluator for the regularized zeta value.

Provides the Bernoulli remainder R_n(z), a high-accuracy reference value of
the regularized zeta function in Re z > 0, and the Hardy-Littlewood validity
window |Im z| <= 2 pi n / C that gates both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ConfigError,
    DomainError,
    PoleError,
    PrecisionNotReachedError,
    WindowError,
)
from .series import N_CAP, zeta_partial
from .special import bernoulli_numbers, complex_pow_base_real

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class EulerMaclaurinConfig:
    """Truncation depth, base summation length, accuracy target, window constant."""

    depth: int = 10
    n_base: int = 50
    target_rel_error: float = 1e-12
    window_C: float = 2.0

    def __post_init__(self):
        if not 1 <= self.depth <= 30:
            raise ConfigError(f"depth must be in [1, 30], got {self.depth}")
        if self.n_base < 10:
            raise ConfigError(f"n_base must be >= 10, got {self.n_base}")
        if not self.target_rel_error > 0:
            raise ConfigError("target_rel_error must be positive")
        if not self.window_C > 1:
            raise ConfigError(f"window constant C must exceed 1, got {self.window_C}")


DEFAULT_CONFIG = EulerMaclaurinConfig()


@dataclass(frozen=True)
class ValidityWindow:
    """Hardy-Littlewood condition |Im z| <= 2 pi n / C, C > 1."""

    C: float = 2.0

    def __post_init__(self):
        if not self.C > 1:
            raise ConfigError(f"window constant C must exceed 1, got {self.C}")

    def max_im(self, n: int) -> float:
        return TWO_PI * n / self.C


def check_window(z: complex, n: int, w: ValidityWindow) -> bool:
    """True iff |Im z| <= 2 pi n / C."""
    return abs(complex(z).imag) <= w.max_im(n)


@dataclass(frozen=True)
class RemainderResult:
    """Truncated Bernoulli remainder plus the modulus of the first omitted term."""

    value: complex
    bound: float
    terms_used: int


def remainder_with_bound(
    z: complex, n: int, cfg: EulerMaclaurinConfig = DEFAULT_CONFIG
) -> RemainderResult:
    """R_n(z) = sum_k B_{2k}/(2k)! (z)(z+1)...(z+2k-2) n^(1-z-2k), truncated.

    Terms are added while they keep shrinking and stay above the relative
    target; the reported bound is the modulus of the first term not added
    (standard practice for a divergent asymptotic series). Raises
    PrecisionNotReachedError if the series starts growing before the target
    accuracy is met.
    """
    z = complex(z)
    if z.real <= 0:
        raise DomainError(f"remainder requires Re z > 0, got {z}")
    if not check_window(z, n, ValidityWindow(cfg.window_C)):
        raise WindowError(
            f"|Im z|={abs(z.imag):.6g} exceeds the window 2*pi*{n}/{cfg.window_C}"
        )
    table = bernoulli_numbers(min(cfg.depth + 1, 30))
    acc = 0.0 + 0.0j
    poch = z  # (z)(z+1)...(z+2k-2), grown incrementally
    prev_mod = math.inf
    k = 1
    while True:
        coeff = table.b2k(k) / math.factorial(2 * k)
        term = coeff * poch * complex_pow_base_real(n, z + (2 * k - 1))
        mod = abs(term)
        if mod >= prev_mod:
            # asymptotic divergence onset: stop before this term
            if mod > cfg.target_rel_error * abs(acc):
                raise PrecisionNotReachedError(
                    f"remainder series diverges at k={k} with bound {mod:.3e}",
                    value=acc,
                    bound=mod,
                )
            return RemainderResult(value=acc, bound=mod, terms_used=k - 1)
        if k > cfg.depth:
            # depth exhausted: this term is the first omitted one
            return RemainderResult(value=acc, bound=mod, terms_used=k - 1)
        acc += term
        prev_mod = mod
        if mod <= cfg.target_rel_error * abs(acc):
            # converged; next term is smaller still, so mod is a safe bound
            return RemainderResult(value=acc, bound=mod, terms_used=k)
        poch *= (z + (2 * k - 1)) * (z + 2 * k)
        k += 1


def remainder(z: complex, n: int, cfg: EulerMaclaurinConfig = DEFAULT_CONFIG) -> complex:
    """Truncated Bernoulli remainder R_n(z); see remainder_with_bound."""
    return remainder_with_bound(z, n, cfg).value


def _choose_n(z: complex, cfg: EulerMaclaurinConfig) -> int:
    # meet the window with a 4x margin
    return max(cfg.n_base, math.ceil(4.0 * cfg.window_C * abs(z.imag) / TWO_PI))


def zeta_hat_reference(
    z: complex, cfg: EulerMaclaurinConfig = DEFAULT_CONFIG
) -> complex:
    """High-accuracy regularized zeta value in Re z > 0, z != 1.

    Evaluates zeta_n(z) - n^(1-z)/(1-z) - 1/(2 n^z) + R_n(z) at an n chosen
    from the config; the result is n-independent up to target_rel_error. In
    the strip this equals the analytic continuation of zeta.
    """
    z = complex(z)
    if z.real <= 0:
        raise DomainError(f"reference evaluator requires Re z > 0, got {z}")
    if z == 1:
        raise PoleError("zeta has its pole at z=1")
    n = _choose_n(z, cfg)
    while True:
        try:
            rem = remainder_with_bound(z, n, cfg)
            break
        except PrecisionNotReachedError:
            if 2 * n > N_CAP:
                raise
            n *= 2
    tail = n * complex_pow_base_real(n, z) / (1.0 - z)
    half = 0.5 * complex_pow_base_real(n, z)
    return zeta_partial(z, n) - tail - half + rem.value
