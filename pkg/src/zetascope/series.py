"""Finite-n zeta sums: plain, alternating, regularized, and their z-derivatives.

All sums run over ascending k with compensated (Kahan) accumulation so that
rounding drift stays bounded even at 10^6 terms. Everything is a pure
function of (z, n) and safe to call concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .errors import DomainError, PoleError
from .special import complex_pow_base_real

#: hard cap on n; keeps every sum at desk scale
N_CAP = 2**24


class SeriesKind(Enum):
    ZETA_N = "zeta_n"
    XI_N = "xi_n"
    ZETA_HAT_N = "zeta_hat_n"
    ZETA_N_PRIME = "zeta_n_prime"
    ZETA_HAT_N_PRIME = "zeta_hat_n_prime"


@dataclass(frozen=True)
class SeriesEvaluation:
    """Value of one named finite sum at (z, n)."""

    kind: SeriesKind
    z: complex
    n: int
    value: complex


class _Kahan:
    """Compensated accumulator for one float."""

    __slots__ = ("total", "carry")

    def __init__(self):
        self.total = 0.0
        self.carry = 0.0

    def add(self, value: float) -> None:
        y = value - self.carry
        t = self.total + y
        self.carry = (t - self.total) - y
        self.total = t


class RawSums(NamedTuple):
    """Plain, alternating, and derivative sums sharing one pass over k."""

    zeta: complex
    xi: complex
    zeta_prime: complex | None


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n > N_CAP:
        raise DomainError(f"n={n} exceeds the configured cap {N_CAP}")


def raw_sums_at(
    z: complex, checkpoints: Iterable[int], include_derivative: bool = False
) -> dict[int, RawSums]:
    """One ascending compensated pass, snapshotting the sums at each checkpoint.

    ``checkpoints`` must be positive integers; they are deduplicated and
    visited in increasing order.
    """
    z = complex(z)
    ns = sorted(set(checkpoints))
    for n in ns:
        _check_n(n)
    zr, zi = _Kahan(), _Kahan()
    xr, xi_ = _Kahan(), _Kahan()
    dr, di = (_Kahan(), _Kahan()) if include_derivative else (None, None)
    out: dict[int, RawSums] = {}
    pending = iter(ns)
    next_cp = next(pending)
    for k in range(1, ns[-1] + 1):
        lk = math.log(k)
        term = cmath.exp(-z * lk)
        zr.add(term.real)
        zi.add(term.imag)
        if k % 2 == 1:
            xr.add(term.real)
            xi_.add(term.imag)
        else:
            xr.add(-term.real)
            xi_.add(-term.imag)
        if include_derivative:
            dr.add(-lk * term.real)
            di.add(-lk * term.imag)
        if k == next_cp:
            out[k] = RawSums(
                zeta=complex(zr.total, zi.total),
                xi=complex(xr.total, xi_.total),
                zeta_prime=complex(dr.total, di.total) if include_derivative else None,
            )
            next_cp = next(pending, None)
            if next_cp is None:
                break
    for sums in out.values():
        if not (cmath.isfinite(sums.zeta) and cmath.isfinite(sums.xi)):
            raise OverflowError(f"partial sum overflowed at z={z}")
    return out


def _pow_n(n: int, z: complex) -> complex:
    """n**(1-z) computed as n * n**(-z); exact when z = 0."""
    return n * complex_pow_base_real(n, z)


def _tail(z: complex, n: int) -> complex:
    """The divergent-tail model n**(1-z) / (1-z)."""
    if z == 1:
        raise PoleError("the tail term n^(1-z)/(1-z) has a pole at z=1")
    return _pow_n(n, z) / (1.0 - z)


def zeta_partial(z: complex, n: int) -> complex:
    """Sum_{k=1..n} k**(-z)."""
    return raw_sums_at(z, (n,))[n].zeta


def xi_partial(z: complex, n: int) -> complex:
    """Alternating sum_{k=1..n} (-1)**(k-1) k**(-z)."""
    return raw_sums_at(z, (n,))[n].xi


def zeta_hat_partial(z: complex, n: int) -> complex:
    """Regularized partial sum: zeta_partial(z, n) - n**(1-z)/(1-z)."""
    return zeta_partial(z, n) - _tail(z, n)


def zeta_partial_derivative(z: complex, n: int) -> complex:
    """Term-wise z-derivative: -sum_{k=1..n} ln(k) k**(-z)."""
    return raw_sums_at(z, (n,), include_derivative=True)[n].zeta_prime


def zeta_hat_partial_derivative(z: complex, n: int) -> complex:
    """Exact z-derivative of the regularized partial sum."""
    if z == 1:
        raise PoleError("the tail term n^(1-z)/(1-z) has a pole at z=1")
    p = _pow_n(n, z)
    ln_n = math.log(n)
    return (
        zeta_partial_derivative(z, n)
        + ln_n * p / (1.0 - z)
        - p / (1.0 - z) ** 2
    )


_DISPATCH = {
    SeriesKind.ZETA_N: zeta_partial,
    SeriesKind.XI_N: xi_partial,
    SeriesKind.ZETA_HAT_N: zeta_hat_partial,
    SeriesKind.ZETA_N_PRIME: zeta_partial_derivative,
    SeriesKind.ZETA_HAT_N_PRIME: zeta_hat_partial_derivative,
}


def evaluate(kind: SeriesKind, z: complex, n: int) -> SeriesEvaluation:
    """Evaluate one named sum and wrap it with its truncation metadata."""
    return SeriesEvaluation(kind=kind, z=complex(z), n=n, value=_DISPATCH[kind](z, n))
