"""Tests for the identity registry and the verification harness."""

import pytest

from qmex.identities import (
    Comparison,
    IdentityDescriptor,
    OraclePair,
    SeriesPair,
    Status,
    monotonicity_check,
    parity_check,
    positivity_check,
    registry,
    verify,
    verify_descriptor,
)
from qmex.qfunctions import sigma_d_mex_series
from qmex.series import IntSeries, make_series


REQUIRED_NAMES = {
    "thm-sigma-d-mex",
    "sigma-sum-identity",
    "a-d-form-equivalence",
    "moex-form-equivalence",
    "euler-identity",
    "d-i-sum",
    "d-i-bijection",
    "sigma-mex-equals-d2-oracle",
    "chern-sigma-maex-oracle",
    "a-series-oracle-gate",
}


class TestRegistry:
    def test_size_and_names(self):
        entries = registry()
        names = [d.name for d in entries]
        assert len(entries) >= 14
        assert len(names) == len(set(names))
        assert REQUIRED_NAMES <= set(names)

    def test_descriptors_are_complete(self):
        for d in registry():
            assert d.checks, d.name
            assert d.default_range > 0
            assert d.statement
            if d.comparison is Comparison.SERIES_SERIES:
                assert all(isinstance(c, SeriesPair) for c in d.checks)
            else:
                assert all(isinstance(c, OraclePair) for c in d.checks)

    def test_lhs_rhs_expose_first_check(self):
        d = next(x for x in registry() if x.name == "thm-sigma-d-mex")
        assert d.lhs(10).coefficients() == d.rhs(10).coefficients()


class TestVerify:
    @pytest.mark.parametrize("name", sorted(REQUIRED_NAMES))
    def test_required_identities_pass(self, name):
        d = next(x for x in registry() if x.name == name)
        rng = 120 if d.comparison is Comparison.SERIES_SERIES else min(d.default_range, 25)
        report = verify(name, rng)
        assert report.passed, report
        assert report.range_checked == rng
        assert report.first_mismatch is None

    def test_remaining_identities_pass(self):
        for d in registry():
            if d.name in REQUIRED_NAMES:
                continue
            rng = 120 if d.comparison is Comparison.SERIES_SERIES else min(d.default_range, 25)
            report = verify(d.name, rng)
            assert report.passed, report

    def test_default_range_used_when_omitted(self):
        d = next(x for x in registry() if x.name == "sigma-sum-identity")
        assert verify("sigma-sum-identity").range_checked == d.default_range

    def test_unknown_identity(self):
        with pytest.raises(KeyError):
            verify("not-an-identity", 10)

    def test_negative_range_rejected(self):
        with pytest.raises(ValueError):
            verify("euler-identity", -1)

    def test_sigma_mex_d2_example(self):
        report = verify("sigma-mex-equals-d2-oracle", 30)
        assert report.passed and report.range_checked == 30


class TestHarnessDetectsPerturbations:
    """The harness itself is under test: a planted bug must be caught."""

    def test_series_perturbation_found_at_smallest_index(self):
        def broken(order):
            c = list(sigma_d_mex_series(order).coefficients())
            if order >= 7:
                c[7] += 1
            return IntSeries(c)

        desc = IdentityDescriptor(
            name="planted-series-bug",
            comparison=Comparison.SERIES_SERIES,
            checks=(SeriesPair("planted", sigma_d_mex_series, broken),),
            default_range=40,
            statement="intentionally wrong at index 7",
        )
        report = verify_descriptor(desc)
        assert report.status is Status.FAIL
        assert report.first_mismatch.n == 7
        assert report.first_mismatch.lhs + 1 == report.first_mismatch.rhs

    def test_oracle_perturbation_found(self):
        desc = IdentityDescriptor(
            name="planted-oracle-bug",
            comparison=Comparison.SERIES_ORACLE,
            checks=(
                OraclePair("planted", sigma_d_mex_series, lambda n: -1 if n == 5 else sigma_d_mex_series(40).coefficient(n)),
            ),
            default_range=12,
            statement="oracle intentionally wrong at n = 5",
        )
        report = verify_descriptor(desc)
        assert report.status is Status.FAIL
        assert report.first_mismatch.n == 5
        assert report.first_mismatch.rhs == -1

    def test_smallest_mismatch_across_checks(self):
        def off_at(idx):
            def builder(order):
                c = list(sigma_d_mex_series(order).coefficients())
                c[idx] += 1
                return IntSeries(c)

            return builder

        desc = IdentityDescriptor(
            name="planted-two-bugs",
            comparison=Comparison.SERIES_SERIES,
            checks=(
                SeriesPair("later", sigma_d_mex_series, off_at(9)),
                SeriesPair("earlier", sigma_d_mex_series, off_at(3)),
            ),
            default_range=20,
            statement="wrong at 9 and at 3; report must pick 3",
        )
        report = verify_descriptor(desc)
        assert report.status is Status.FAIL
        assert report.first_mismatch.n == 3
        assert report.first_mismatch.check == "earlier"

    def test_pass_on_exact_equality(self):
        desc = IdentityDescriptor(
            name="self-comparison",
            comparison=Comparison.SERIES_SERIES,
            checks=(SeriesPair("same", sigma_d_mex_series, sigma_d_mex_series),),
            default_range=30,
            statement="trivially true",
        )
        assert verify_descriptor(desc).passed


class TestScans:
    def test_monotonicity_small_range(self):
        report = monotonicity_check(300)
        assert report.passed
        assert "6 -> 7" in report.note

    def test_monotonicity_boundary_values(self):
        s = sigma_d_mex_series(8)
        assert s.coefficient(6) == s.coefficient(7) == 8
        assert s.coefficient(8) > s.coefficient(7)

    def test_monotonicity_needs_room(self):
        with pytest.raises(ValueError):
            monotonicity_check(7)

    def test_monotonicity_report_shape(self):
        report = monotonicity_check(50)
        assert report.name == "monotonicity"
        assert report.range_checked == 50

    def test_parity(self):
        report = parity_check(120)
        assert report.passed, report

    def test_parity_small(self):
        assert parity_check(10).passed
        with pytest.raises(ValueError):
            parity_check(0)

    def test_positivity(self):
        report = positivity_check(200)
        assert report.passed, report
        with pytest.raises(ValueError):
            positivity_check(1)
