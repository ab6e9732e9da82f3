"""Dyadic-n sweeps, power-law slope fits, ratio-limit extrapolation, and the
claim-verification report.

Each sweep evaluates one named quantity at n = n0, 2 n0, ..., n0 2^d using a
single compensated pass per argument point, then the fitting/extrapolation
helpers quantify the convergence order or limit. verify_claims aggregates
the nine per-zero checks into one report record.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DegenerateRatioError, DegenerateSeriesError, DomainError
from .euler_maclaurin import (
    EulerMaclaurinConfig,
    ValidityWindow,
    check_window,
    remainder_with_bound,
)
from .functional_eq import h_hat_exact
from .series import RawSums, raw_sums_at
from .special import complex_pow_base_real
from .zeros import ZeroRecord


class Quantity(Enum):
    ZETA_HAT_AT_RHO = "zeta_hat_at_rho"
    ZETA_HAT_AT_ONE_MINUS_RHO = "zeta_hat_at_one_minus_rho"
    H_HAT_N = "H_hat_n"
    H_N = "H_n"
    SMALL_H_2N = "h_2n"
    SMALL_G_2N = "g_2n"
    DERIV_RATIO = "deriv_ratio"
    H_HAT_DOUBLING_RATIO = "H_hat_doubling_ratio"
    H_DOUBLING_RATIO = "H_doubling_ratio"


class Normalizer(Enum):
    NONE = "none"
    N_POW_1_MINUS_2RHO = "n_pow_1_minus_2rho"


@dataclass(frozen=True)
class ConvergenceSeries:
    quantity: Quantity
    rho: complex
    points: tuple[tuple[int, complex], ...]

    def ns(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.points)

    def values(self) -> tuple[complex, ...]:
        return tuple(v for _, v in self.points)


@dataclass(frozen=True)
class SlopeFit:
    exponent: float
    intercept: float
    max_abs_residual: float
    points_used: int


@dataclass(frozen=True)
class RatioLimit:
    limit: complex
    last_delta: float
    points_used: int


@dataclass(frozen=True)
class SweepPlan:
    """Sweep geometry plus the two Euler-Maclaurin configs used by claims.

    identity_cfg keeps the remainder truncation shallow so its reported
    bound dominates rounding and zero-residual floors in the identity
    checks; identity_ns are the n values those checks run at.
    """

    n0: int = 64
    doublings: int = 10
    cfg: EulerMaclaurinConfig = field(default_factory=EulerMaclaurinConfig)
    identity_cfg: EulerMaclaurinConfig = field(
        default_factory=lambda: EulerMaclaurinConfig(depth=1, target_rel_error=0.5)
    )
    identity_ns: tuple[int, ...] = (2**8, 2**10, 2**12)


def _pow_1_minus_2rho(n: int, rho: complex) -> complex:
    # n^(1-2 rho) = n * n^(-2 rho), exact integer factor up front
    return n * complex_pow_base_real(n, 2.0 * rho)


def _tail(z: complex, n: int) -> complex:
    return n * complex_pow_base_real(n, z) / (1.0 - z)


def _hat(sums: RawSums, z: complex, n: int) -> complex:
    return sums.zeta - _tail(z, n)


def _hat_prime(sums: RawSums, z: complex, n: int) -> complex:
    p = n * complex_pow_base_real(n, z)
    ln_n = math.log(n)
    return sums.zeta_prime + ln_n * p / (1.0 - z) - p / (1.0 - z) ** 2


def sweep(
    quantity: Quantity,
    rho: complex,
    n0: int = 64,
    doublings: int = 10,
    cfg: EulerMaclaurinConfig | None = None,
) -> ConvergenceSeries:
    """Evaluate ``quantity`` at n = n0 * 2^k for k = 0..doublings."""
    if doublings < 4:
        raise DomainError(f"a sweep needs at least 4 doublings, got {doublings}")
    rho = complex(rho)
    window = ValidityWindow((cfg or EulerMaclaurinConfig()).window_C)
    while not check_window(rho, n0, window):
        warnings.warn(
            f"n0={n0} violates the validity window for Im z={rho.imag}; doubling",
            stacklevel=2,
        )
        n0 *= 2
    ns = [n0 * 2**k for k in range(doublings + 1)]

    needs_double = quantity in (
        Quantity.SMALL_H_2N,
        Quantity.SMALL_G_2N,
        Quantity.H_HAT_DOUBLING_RATIO,
        Quantity.H_DOUBLING_RATIO,
    )
    checkpoints = sorted(set(ns) | {2 * n for n in ns}) if needs_double else ns
    needs_deriv = quantity is Quantity.DERIV_RATIO
    needs_mirror = quantity in (
        Quantity.ZETA_HAT_AT_ONE_MINUS_RHO,
        Quantity.H_HAT_N,
        Quantity.H_N,
        Quantity.DERIV_RATIO,
        Quantity.H_HAT_DOUBLING_RATIO,
        Quantity.H_DOUBLING_RATIO,
    )
    at_rho = raw_sums_at(rho, checkpoints, include_derivative=needs_deriv)
    at_mirror = (
        raw_sums_at(1.0 - rho, checkpoints, include_derivative=needs_deriv)
        if needs_mirror
        else None
    )

    def value_at(n: int) -> complex:
        if quantity is Quantity.ZETA_HAT_AT_RHO:
            return _hat(at_rho[n], rho, n)
        if quantity is Quantity.ZETA_HAT_AT_ONE_MINUS_RHO:
            return _hat(at_mirror[n], 1.0 - rho, n)
        if quantity is Quantity.H_HAT_N:
            return _hat(at_rho[n], rho, n) / _hat(at_mirror[n], 1.0 - rho, n)
        if quantity is Quantity.H_N:
            return at_rho[n].zeta / at_mirror[n].zeta
        if quantity is Quantity.SMALL_H_2N:
            return at_rho[2 * n].xi + _hat(at_rho[2 * n], rho, 2 * n)
        if quantity is Quantity.SMALL_G_2N:
            return at_rho[2 * n].xi + 0.5 * complex_pow_base_real(2 * n, rho)
        if quantity is Quantity.DERIV_RATIO:
            return _hat_prime(at_rho[n], rho, n) / _hat_prime(
                at_mirror[n], 1.0 - rho, n
            )
        if quantity is Quantity.H_HAT_DOUBLING_RATIO:
            h = lambda m: _hat(at_rho[m], rho, m) / _hat(at_mirror[m], 1.0 - rho, m)
            return h(2 * n) / h(n)
        if quantity is Quantity.H_DOUBLING_RATIO:
            h = lambda m: at_rho[m].zeta / at_mirror[m].zeta
            return h(2 * n) / h(n)
        raise DomainError(f"unknown quantity {quantity}")

    return ConvergenceSeries(
        quantity=quantity,
        rho=rho,
        points=tuple((n, value_at(n)) for n in ns),
    )


def fit_power_law(series: ConvergenceSeries) -> SlopeFit:
    """Least-squares slope of ln|value| against ln n."""
    if len(series.points) < 4:
        raise DegenerateSeriesError("power-law fit needs at least 4 points")
    mods = [abs(v) for v in series.values()]
    if any(m == 0.0 for m in mods):
        raise DegenerateSeriesError("power-law fit hit a zero-modulus point")
    x = np.log(np.array(series.ns(), dtype=float))
    y = np.log(np.array(mods))
    slope, intercept = np.polyfit(x, y, 1)
    resid = np.max(np.abs(y - (slope * x + intercept)))
    return SlopeFit(
        exponent=float(slope),
        intercept=float(intercept),
        max_abs_residual=float(resid),
        points_used=len(series.points),
    )


def doubling_ratio(series: ConvergenceSeries) -> ConvergenceSeries:
    """(n, value(2n) / value(n)) for every n whose double is also present."""
    by_n = dict(series.points)
    pairs = [
        (n, by_n[2 * n] / by_n[n]) for n in series.ns() if 2 * n in by_n
    ]
    if len(pairs) < 4:
        raise DegenerateSeriesError(
            "doubling ratio needs n and 2n entries for at least 4 values of n"
        )
    mapped = {
        Quantity.H_HAT_N: Quantity.H_HAT_DOUBLING_RATIO,
        Quantity.H_N: Quantity.H_DOUBLING_RATIO,
    }.get(series.quantity, series.quantity)
    return ConvergenceSeries(quantity=mapped, rho=series.rho, points=tuple(pairs))


def ratio_limit(
    series: ConvergenceSeries, normalizer: Normalizer = Normalizer.NONE
) -> RatioLimit:
    """Last-point extrapolation of the (optionally normalized) series.

    last_delta is the relative change over the final doubling and is always
    reported, however large.
    """
    if len(series.points) < 4:
        raise DegenerateSeriesError("ratio limit needs at least 4 points")
    if normalizer is Normalizer.N_POW_1_MINUS_2RHO:
        scaled = []
        for n, v in series.points:
            w = _pow_1_minus_2rho(n, series.rho)
            if abs(w) < 1e-300:
                raise DegenerateRatioError("normalizer underflowed")
            scaled.append(v / w)
    else:
        scaled = [v for _, v in series.points]
    last, prev = scaled[-1], scaled[-2]
    denom = abs(last)
    delta = abs(last - prev) / denom if denom > 0 else math.inf
    return RatioLimit(limit=last, last_delta=delta, points_used=len(scaled))


def derivative_ratio_limit(
    rho: complex,
    n0: int = 64,
    doublings: int = 10,
    cfg: EulerMaclaurinConfig | None = None,
) -> RatioLimit:
    """Limit of zeta_hat_n'(rho) / zeta_hat_n'(1-rho); compare to -H_hat(rho)."""
    return ratio_limit(sweep(Quantity.DERIV_RATIO, rho, n0, doublings, cfg))


@dataclass(frozen=True)
class ClaimResult:
    zero_index: int
    claim: str
    expected: str
    measured: str
    tolerance: float
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "zero_index": self.zero_index,
            "claim": self.claim,
            "expected": self.expected,
            "measured": self.measured,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "detail": self.detail,
        }


CLAIM_IDS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9")

#: exponent window for the h_2n decay order (target -(1 + sigma) = -3/2)
C1_EXPONENT_RANGE = (-1.65, -1.35)
#: limit tolerances at the sweep's final n
LIMIT_TOL = 1e-3
#: |2^(1-2 rho)| for an on-line zero
C9_TOL = 1e-12
#: identity checks pass within this multiple of the reported truncation bound
IDENTITY_BOUND_FACTOR = 10.0
#: the fit for C1 stops at this n (values beyond it add no order information)
C1_FIT_MAX_N = 2**14


def _fmt(v: complex | float) -> str:
    if isinstance(v, complex):
        return f"{v.real:.9g}{v.imag:+.9g}i"
    return f"{v:.9g}"


def _monotone_final_decrease(devs: Sequence[float], window: int = 4) -> bool:
    # allow one non-monotone step for rounding
    tail = devs[-(window + 1):]
    violations = sum(1 for a, b in zip(tail, tail[1:]) if b >= a)
    return violations <= 1


def verify_claims(
    zeros: Sequence[ZeroRecord], plan: SweepPlan | None = None
) -> list[ClaimResult]:
    """Run the nine convergence/identity claims at every supplied zero.

    Any error inside one claim becomes a failed row carrying the message;
    it never aborts the rest of the report.
    """
    if not zeros:
        raise DomainError("verify_claims needs at least one zero")
    plan = plan or SweepPlan()
    results: list[ClaimResult] = []
    for zr in zeros:
        results.extend(_claims_for_zero(zr, plan))
    return results


def _claims_for_zero(zr: ZeroRecord, plan: SweepPlan) -> list[ClaimResult]:
    rho = zr.rho
    rows: list[ClaimResult] = []

    def run(claim: str, fn) -> None:
        try:
            rows.append(fn())
        except Exception as exc:  # per-claim containment
            rows.append(
                ClaimResult(
                    zero_index=zr.index,
                    claim=claim,
                    expected="",
                    measured="error",
                    tolerance=math.nan,
                    passed=False,
                    detail=f"{type(exc).__name__}: {exc}",
                )
            )

    def c1() -> ClaimResult:
        full = sweep(Quantity.SMALL_H_2N, rho, plan.n0, plan.doublings, plan.cfg)
        pts = tuple(p for p in full.points if p[0] <= C1_FIT_MAX_N)
        fit = fit_power_law(
            ConvergenceSeries(quantity=full.quantity, rho=rho, points=pts)
        )
        lo, hi = C1_EXPONENT_RANGE
        return ClaimResult(
            zero_index=zr.index,
            claim="C1",
            expected="-1.5",
            measured=_fmt(fit.exponent),
            tolerance=0.15,
            passed=lo <= fit.exponent <= hi,
            detail=f"|h_2n| decay exponent over n<=2^14; max fit residual {fit.max_abs_residual:.2e}",
        )

    def c2() -> ClaimResult:
        ratios = sweep(
            Quantity.H_HAT_DOUBLING_RATIO, rho, plan.n0, plan.doublings - 1, plan.cfg
        )
        n_last, v_last = ratios.points[-1]
        dev = abs(abs(v_last) - 1.0)
        return ClaimResult(
            zero_index=zr.index,
            claim="C2",
            expected="1",
            measured=_fmt(abs(v_last)),
            tolerance=LIMIT_TOL,
            passed=dev <= LIMIT_TOL,
            detail=f"|H_hat_2n/H_hat_n| at n={n_last}",
        )

    def c3() -> ClaimResult:
        ser = sweep(Quantity.H_HAT_N, rho, plan.n0, plan.doublings, plan.cfg)
        devs = [
            abs(v / _pow_1_minus_2rho(n, rho) - 1.0) for n, v in ser.points
        ]
        n_last = ser.points[-1][0]
        ok = devs[-1] <= LIMIT_TOL and _monotone_final_decrease(devs)
        return ClaimResult(
            zero_index=zr.index,
            claim="C3",
            expected="1",
            measured=_fmt(ser.points[-1][1] / _pow_1_minus_2rho(n_last, rho)),
            tolerance=LIMIT_TOL,
            passed=ok,
            detail=(
                f"H_hat_n/n^(1-2rho) at n={n_last}; deviation {devs[-1]:.3e}; "
                f"final-doubling deviations {['%.2e' % d for d in devs[-5:]]}"
            ),
        )

    def c4() -> ClaimResult:
        ser = sweep(Quantity.H_N, rho, plan.n0, plan.doublings, plan.cfg)
        lim = ratio_limit(ser, Normalizer.N_POW_1_MINUS_2RHO)
        target = rho / (1.0 - rho)
        dev = abs(lim.limit - target)
        return ClaimResult(
            zero_index=zr.index,
            claim="C4",
            expected=_fmt(target),
            measured=_fmt(lim.limit),
            tolerance=LIMIT_TOL,
            passed=dev <= LIMIT_TOL,
            detail=f"H_n/n^(1-2rho) at n={ser.points[-1][0]}; last_delta {lim.last_delta:.3e}",
        )

    def c5() -> ClaimResult:
        ser = sweep(Quantity.H_N, rho, plan.n0, plan.doublings, plan.cfg)
        n_last, v_last = ser.points[-1]  # n_last plays the role of 2n
        target = rho / (1.0 - rho) * _pow_1_minus_2rho(n_last, rho)
        dev = abs(v_last - target)
        return ClaimResult(
            zero_index=zr.index,
            claim="C5",
            expected=_fmt(target),
            measured=_fmt(v_last),
            tolerance=LIMIT_TOL,
            passed=dev <= LIMIT_TOL,
            detail=f"H_2n vs (rho/(1-rho))(2n)^(1-2rho) at 2n={n_last}",
        )

    def c6() -> ClaimResult:
        lim = derivative_ratio_limit(rho, plan.n0, plan.doublings, plan.cfg)
        target = -h_hat_exact(rho)
        dev = abs(lim.limit - target)
        return ClaimResult(
            zero_index=zr.index,
            claim="C6",
            expected=_fmt(target),
            measured=_fmt(lim.limit),
            tolerance=LIMIT_TOL,
            passed=dev <= LIMIT_TOL,
            detail=(
                f"zeta_hat_n'(rho)/zeta_hat_n'(1-rho) at n={plan.n0 * 2**plan.doublings}; "
                f"deviation {dev:.3e}; last_delta {lim.last_delta:.3e}"
            ),
        )

    def _identity_claim(claim: str, lhs_fn, rhs_fn) -> ClaimResult:
        worst = 0.0
        details = []
        for n in plan.identity_ns:
            r_n = remainder_with_bound(rho, n, plan.identity_cfg)
            r_2n = remainder_with_bound(rho, 2 * n, plan.identity_cfg)
            lhs = lhs_fn(n)
            rhs = rhs_fn(r_n.value, r_2n.value)
            tol = IDENTITY_BOUND_FACTOR * (
                r_2n.bound + abs(complex_pow_base_real(2.0, rho - 1.0)) * r_n.bound
            )
            err = abs(lhs - rhs)
            worst = max(worst, err / tol)
            details.append(f"n={n}: err {err:.2e} vs tol {tol:.2e}")
        return ClaimResult(
            zero_index=zr.index,
            claim=claim,
            expected="0",
            measured=_fmt(worst),
            tolerance=1.0,
            passed=worst <= 1.0,
            detail="max |lhs-rhs|/tol; " + "; ".join(details),
        )

    def c7() -> ClaimResult:
        from .functional_eq import small_g_2n

        two_pow = complex_pow_base_real(2.0, rho - 1.0)  # 2^(1-rho)
        return _identity_claim(
            "C7",
            lambda n: small_g_2n(rho, n),
            lambda r_n, r_2n: -r_2n + two_pow * r_n,
        )

    def c8() -> ClaimResult:
        from .functional_eq import small_h_2n

        two_pow = complex_pow_base_real(2.0, rho - 1.0)
        return _identity_claim(
            "C8",
            lambda n: small_h_2n(rho, n),
            lambda r_n, r_2n: -2.0 * r_2n + two_pow * r_n,
        )

    def c9() -> ClaimResult:
        mod = abs(complex_pow_base_real(2.0, 2.0 * rho - 1.0))  # |2^(1-2rho)|
        return ClaimResult(
            zero_index=zr.index,
            claim="C9",
            expected="1",
            measured=_fmt(mod),
            tolerance=C9_TOL,
            passed=abs(mod - 1.0) <= C9_TOL,
            detail="|2^(1-2rho)| from the located zero",
        )

    for claim, fn in zip(CLAIM_IDS, (c1, c2, c3, c4, c5, c6, c7, c8, c9)):
        run(claim, fn)
    return rows
