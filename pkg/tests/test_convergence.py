import math

import pytest

from zetascope.convergence import (
    CLAIM_IDS,
    ClaimResult,
    ConvergenceSeries,
    Normalizer,
    Quantity,
    SweepPlan,
    derivative_ratio_limit,
    doubling_ratio,
    fit_power_law,
    ratio_limit,
    sweep,
    verify_claims,
)
from zetascope.errors import DegenerateSeriesError, DomainError
from zetascope.functional_eq import h_hat_exact, small_h_2n
from zetascope.series import zeta_hat_partial

from conftest import RHO_1


def synthetic_series(exponent: float, n0: int = 64, count: int = 8):
    pts = tuple(
        (n0 * 2**k, complex((n0 * 2**k) ** exponent, 0.0)) for k in range(count)
    )
    return ConvergenceSeries(quantity=Quantity.SMALL_H_2N, rho=RHO_1, points=pts)


class TestSweep:
    def test_geometry(self):
        ser = sweep(Quantity.ZETA_HAT_AT_RHO, RHO_1, n0=64, doublings=5)
        assert ser.ns() == tuple(64 * 2**k for k in range(6))

    def test_matches_direct_evaluation(self):
        ser = sweep(Quantity.ZETA_HAT_AT_RHO, RHO_1, n0=64, doublings=4)
        for n, v in ser.points:
            assert v == pytest.approx(zeta_hat_partial(RHO_1, n), rel=1e-13)

    def test_composite_matches_direct(self):
        ser = sweep(Quantity.SMALL_H_2N, RHO_1, n0=64, doublings=4)
        for n, v in ser.points:
            assert v == pytest.approx(small_h_2n(RHO_1, n), rel=1e-12)

    def test_requires_four_doublings(self):
        with pytest.raises(DomainError):
            sweep(Quantity.H_N, RHO_1, n0=64, doublings=3)

    def test_window_violation_shifts_n0(self):
        with pytest.warns(UserWarning, match="validity window"):
            ser = sweep(Quantity.ZETA_HAT_AT_RHO, complex(0.5, 40.0), n0=2, doublings=4)
        # 2 pi n / C >= 40 with C = 2 first holds at n = 16
        assert ser.ns()[0] == 16


class TestFitting:
    def test_exact_power_law_recovered(self):
        fit = fit_power_law(synthetic_series(-1.5))
        assert fit.exponent == pytest.approx(-1.5, abs=1e-12)
        assert fit.max_abs_residual < 1e-12
        assert fit.points_used == 8

    def test_too_few_points(self):
        short = ConvergenceSeries(
            quantity=Quantity.H_N, rho=RHO_1, points=((64, 1.0 + 0.0j),) * 3
        )
        with pytest.raises(DegenerateSeriesError):
            fit_power_law(short)

    def test_zero_modulus_rejected(self):
        pts = ((64, 1.0 + 0.0j), (128, 0.0 + 0.0j), (256, 1.0 + 0.0j), (512, 1.0 + 0.0j))
        bad = ConvergenceSeries(quantity=Quantity.H_N, rho=RHO_1, points=pts)
        with pytest.raises(DegenerateSeriesError):
            fit_power_law(bad)

    def test_observed_order_at_first_zero(self):
        ser = sweep(Quantity.SMALL_H_2N, RHO_1, n0=64, doublings=8)
        fit = fit_power_law(ser)
        assert -1.65 <= fit.exponent <= -1.35


class TestDoublingRatio:
    def test_pairs_and_quantity_mapping(self):
        pts = tuple((2**k, complex(2.0**-k, 0.0)) for k in range(6, 12))
        ser = ConvergenceSeries(quantity=Quantity.H_HAT_N, rho=RHO_1, points=pts)
        ratios = doubling_ratio(ser)
        assert ratios.quantity is Quantity.H_HAT_DOUBLING_RATIO
        assert all(v == pytest.approx(0.5, rel=1e-14) for _, v in ratios.points)

    def test_needs_four_pairs(self):
        pts = ((64, 1.0 + 0.0j), (128, 1.0 + 0.0j), (4096, 1.0 + 0.0j))
        ser = ConvergenceSeries(quantity=Quantity.H_N, rho=RHO_1, points=pts)
        with pytest.raises(DegenerateSeriesError):
            doubling_ratio(ser)


class TestRatioLimit:
    def test_plain_last_point(self):
        pts = tuple(
            (64 * 2**k, complex(1.0 + 2.0**-k, 0.0)) for k in range(6)
        )
        ser = ConvergenceSeries(quantity=Quantity.H_N, rho=RHO_1, points=pts)
        lim = ratio_limit(ser)
        assert lim.limit == pts[-1][1]
        assert lim.last_delta == pytest.approx(2.0**-5 / (1.0 + 2.0**-5), rel=1e-12)

    def test_normalized_limit_at_first_zero(self):
        ser = sweep(Quantity.H_N, RHO_1, n0=64, doublings=10)
        lim = ratio_limit(ser, Normalizer.N_POW_1_MINUS_2RHO)
        target = RHO_1 / (1.0 - RHO_1)
        assert abs(lim.limit - target) < 1e-3

    def test_too_few_points(self):
        ser = ConvergenceSeries(
            quantity=Quantity.H_N, rho=RHO_1, points=((64, 1.0 + 0.0j),)
        )
        with pytest.raises(DegenerateSeriesError):
            ratio_limit(ser)


class TestDerivativeRatio:
    def test_limit_near_negated_factor(self):
        # convergence here carries a (ln n) n^(-1/2) envelope, so only a
        # loose agreement with -H_hat(rho) is observable at n = 2^16
        lim = derivative_ratio_limit(RHO_1, 64, 10)
        assert abs(lim.limit - (-h_hat_exact(RHO_1))) < 0.05


class TestVerifyClaims:
    def test_report_shape(self, claim_report, scanned_zeros):
        records, _ = scanned_zeros
        assert len(claim_report) == 9 * len(records)
        for i, rec in enumerate(records):
            chunk = claim_report[9 * i : 9 * (i + 1)]
            assert [row.claim for row in chunk] == list(CLAIM_IDS)
            assert all(row.zero_index == rec.index for row in chunk)

    def test_rows_carry_detail(self, claim_report):
        assert all(row.detail for row in claim_report)
        assert all(row.measured for row in claim_report)

    def test_unit_modulus_claim_everywhere(self, claim_report):
        assert all(row.passed for row in claim_report if row.claim == "C9")

    def test_identity_claims_within_bounds(self, claim_report):
        for row in claim_report:
            if row.claim in ("C7", "C8"):
                assert row.passed, row.detail

    def test_as_dict_keys(self, claim_report):
        d = claim_report[0].as_dict()
        assert set(d) == {
            "zero_index", "claim", "expected", "measured",
            "tolerance", "pass", "detail",
        }

    def test_requires_zeros(self):
        with pytest.raises(DomainError):
            verify_claims([])

    def test_error_containment(self, scanned_zeros):
        # a plan whose sweep would be degenerate must yield failed rows,
        # not an exception
        records, _ = scanned_zeros
        bad_plan = SweepPlan(n0=64, doublings=4, identity_ns=(2**8,))
        rows = verify_claims(records[:1], bad_plan)
        assert len(rows) == 9
        assert all(isinstance(r, ClaimResult) for r in rows)
