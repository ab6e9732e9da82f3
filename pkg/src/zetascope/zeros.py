"""Critical-line zero location via the Hardy Z function.

Z(t) = Re[exp(i theta(t)) zeta(1/2 + i t)] is real up to rounding leakage;
its sign changes bracket the on-line zeros, which bisection then refines.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, PossiblyMissedZeroWarning, PrecisionError
from .euler_maclaurin import DEFAULT_CONFIG, EulerMaclaurinConfig, zeta_hat_reference
from .special import log_gamma

#: maximum tolerated |Im(exp(i theta) zeta)| before hardy_z refuses the value
IM_LEAK_LIMIT = 1e-9

#: bisection refines brackets below this width (tighter than strictly needed,
#: so downstream identity checks are not limited by the zero residual)
BRACKET_WIDTH = 1e-12

#: warn when consecutive zeros sit closer than this many scan steps
_MIN_SEPARATION_STEPS = 4


@dataclass(frozen=True)
class HardyZSample:
    t: float
    value: float


@dataclass(frozen=True)
class ZeroRecord:
    """A refined on-line zero rho = 1/2 + i t with its bracket and residual."""

    index: int
    t: float
    rho: complex
    bracket: tuple[float, float]
    residual: float


def riemann_siegel_theta(t: float) -> float:
    """theta(t) = Im log Gamma(1/4 + i t / 2) - (t / 2) ln pi, for t > 0."""
    if t <= 0:
        raise DomainError(f"theta requires t > 0, got {t}")
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * math.log(math.pi)


def hardy_z(t: float, cfg: EulerMaclaurinConfig = DEFAULT_CONFIG) -> float:
    """Z(t) = Re[exp(i theta(t)) zeta(1/2 + i t)], with leakage checked."""
    if not 0 < t <= 100:
        raise DomainError(f"hardy_z is supported for t in (0, 100], got {t}")
    zeta_val = zeta_hat_reference(complex(0.5, t), cfg)
    w = cmath.exp(1j * riemann_siegel_theta(t)) * zeta_val
    if abs(w.imag) > IM_LEAK_LIMIT:
        raise PrecisionError(
            f"imaginary leakage {abs(w.imag):.3e} exceeds {IM_LEAK_LIMIT} at t={t}"
        )
    return w.real


def _bisect(
    t_lo: float,
    z_lo: float,
    t_hi: float,
    z_hi: float,
    cfg: EulerMaclaurinConfig,
) -> tuple[float, float]:
    while t_hi - t_lo > BRACKET_WIDTH:
        mid = 0.5 * (t_lo + t_hi)
        if mid <= t_lo or mid >= t_hi:
            break  # hit float spacing
        z_mid = hardy_z(mid, cfg)
        if z_mid == 0.0:
            half = max(BRACKET_WIDTH / 4, (t_hi - t_lo) * 1e-6)
            return mid - half, mid + half
        if (z_lo < 0) != (z_mid < 0):
            t_hi, z_hi = mid, z_mid
        else:
            t_lo, z_lo = mid, z_mid
    return t_lo, t_hi


def find_zeros(
    t_min: float,
    t_max: float,
    step: float = 0.05,
    cfg: EulerMaclaurinConfig = DEFAULT_CONFIG,
) -> list[ZeroRecord]:
    """Scan Z on a grid over (t_min, t_max), bracket sign changes, bisect.

    Returns records ordered and 1-indexed by increasing t. Deterministic for
    identical inputs. Warns if found zeros sit suspiciously close relative
    to the scan step (a coarser scan could have missed a pair).
    """
    if not 0 < t_min < t_max <= 100:
        raise DomainError(
            f"need 0 < t_min < t_max <= 100, got ({t_min}, {t_max})"
        )
    if not 0 < step <= 0.25:
        raise DomainError(f"scan step must be in (0, 0.25], got {step}")

    records: list[ZeroRecord] = []
    t_prev = t_min
    z_prev = hardy_z(t_prev, cfg)
    k = 1
    while t_prev < t_max:
        t_cur = min(t_prev + step, t_max)
        z_cur = hardy_z(t_cur, cfg)
        if z_prev == 0.0:
            pass  # grid point exactly on a zero: the previous bracket took it
        elif z_cur == 0.0 or (z_prev < 0) != (z_cur < 0):
            lo, hi = _bisect(t_prev, z_prev, t_cur, z_cur, cfg)
            t_zero = 0.5 * (lo + hi)
            rho = complex(0.5, t_zero)
            residual = abs(zeta_hat_reference(rho, cfg))
            records.append(
                ZeroRecord(index=k, t=t_zero, rho=rho, bracket=(lo, hi), residual=residual)
            )
            k += 1
        t_prev, z_prev = t_cur, z_cur

    for a, b in zip(records, records[1:]):
        if b.t - a.t < _MIN_SEPARATION_STEPS * step:
            warnings.warn(
                f"zeros at t={a.t:.4f} and t={b.t:.4f} are within "
                f"{_MIN_SEPARATION_STEPS} scan steps; a coarser feature may "
                "have been missed",
                PossiblyMissedZeroWarning,
            )
            break
    return records
