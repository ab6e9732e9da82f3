"""Complex elementary and special functions used by every other module.

Everything here is a pure function of its arguments: complex powers of a
positive real base, the log-gamma function, and exact Bernoulli numbers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConfigError, DomainError, PoleError

TWO_PI = 2.0 * math.pi
LN_TWO_PI = math.log(TWO_PI)

# Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
# Gives ~14 significant digits for Re z >= 0.5, |z| <= a few hundred.
_LANCZOS_G = 4.7421875
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
)


def complex_pow_base_real(k: float, z: complex) -> complex:
    """k**(-z) for real k > 0, via exp(-z ln k) on the principal branch."""
    if k <= 0:
        raise DomainError(f"base must be positive, got {k}")
    z = complex(z)
    if k == 1.0 or z == 0:
        return 1.0 + 0.0j
    return cmath.exp(-z * math.log(k))


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 0.5
    s = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        s += _LANCZOS_C[i] / (z - 1.0 + i)
    t = z + (_LANCZOS_G - 0.5)
    return (
        0.5 * LN_TWO_PI
        + (z - 0.5) * cmath.log(t)
        - t
        + cmath.log(s)
    )


def log_gamma(z: complex) -> complex:
    """log Gamma(z) on the standard (continuous) branch.

    For Re z < 0.5 the argument is lifted by the recurrence
    Gamma(z) = Gamma(z+m) / [z (z+1) ... (z+m-1)], which keeps the branch
    consistent for the desk-scale domain |z| <= 100 used here.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise PoleError(f"log_gamma pole at non-positive integer z={z.real}")
    if z.real >= 0.5:
        return _lanczos_log_gamma(z)
    m = int(math.ceil(0.5 - z.real))
    shift = 0.0 + 0.0j
    for j in range(m):
        shift += cmath.log(z + j)
    return _lanczos_log_gamma(z + m) - shift


def gamma(z: complex) -> complex:
    """Gamma(z) = exp(log_gamma(z)); convenience wrapper."""
    return cmath.exp(log_gamma(z))


@dataclass(frozen=True)
class BernoulliTable:
    """Even-index Bernoulli numbers B_2, B_4, ..., B_{2m} as floats."""

    values: tuple[float, ...]
    depth: int

    def __post_init__(self):
        if len(self.values) != self.depth:
            raise ConfigError("table length must equal depth")

    def b2k(self, k: int) -> float:
        """B_{2k} for 1 <= k <= depth."""
        return self.values[k - 1]


@lru_cache(maxsize=None)
def _bernoulli_fractions(count: int) -> tuple[Fraction, ...]:
    # B_0 .. B_count via the exact recurrence
    # sum_{k=0}^{j} C(j+1, k) B_k = 0  (j >= 1), B_1 = -1/2 convention.
    b = [Fraction(1)]
    for j in range(1, count + 1):
        s = sum(Fraction(math.comb(j + 1, k)) * b[k] for k in range(j))
        b.append(-s / (j + 1))
    return tuple(b)


def bernoulli_numbers(m: int) -> BernoulliTable:
    """B_2 .. B_{2m}, computed exactly over the rationals then rounded once."""
    if not isinstance(m, int) or not 1 <= m <= 30:
        raise ConfigError(f"bernoulli depth must be an integer in [1, 30], got {m}")
    b = _bernoulli_fractions(2 * m)
    return BernoulliTable(values=tuple(float(b[2 * k]) for k in range(1, m + 1)), depth=m)
