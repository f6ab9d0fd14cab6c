"""Registry of series identities and the machinery that checks them.

Every entry pins one clean mathematical statement to executable code.
A SERIES_SERIES identity compares two independently built series
coefficient by coefficient; a SERIES_ORACLE identity compares a series
against brute-force partition enumeration. Comparison is exact integer
equality, never approximate: these are theorems, and a single
mismatched coefficient is a failure that reports the smallest bad
index.

Beyond the registry there are three scan-style checks (monotonicity,
parity, positivity) whose statements quantify over a coefficient range
rather than equating two series.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .partitions import CountKind, StatKind, refined_count_oracle, stat_sum_oracle, two_colored_distinct_count
from .qfunctions import (
    Form,
    RefinedKind,
    a_d_series,
    a_series,
    chern_sigma_maex_series,
    dcount_series,
    distinct_gen,
    refined_series,
    sigma_L_series,
    sigma_d_maex_series,
    sigma_d_mex_series,
    sigma_d_moex_series,
    sigma_mex_series,
    sigma_series,
)
from .series import INFINITE, IntSeries, one, poch, zero

SeriesBuilder = Callable[[int], IntSeries]
Oracle = Callable[[int], int]


class Comparison(enum.Enum):
    SERIES_SERIES = "series-series"
    SERIES_ORACLE = "series-oracle"


class Status(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class SeriesPair:
    """Two routes to the same series."""

    label: str
    lhs: SeriesBuilder
    rhs: SeriesBuilder


@dataclass(frozen=True)
class OraclePair:
    """A series against an enumeration oracle."""

    label: str
    series: SeriesBuilder
    oracle: Oracle


Check = Union[SeriesPair, OraclePair]


@dataclass(frozen=True)
class IdentityDescriptor:
    """One registered identity.

    checks holds every concrete comparison the identity bundles (a
    three-form equivalence carries all pairwise comparisons, for
    instance). default_range is the coefficient range used when the
    caller does not pick one: a truncation order for SERIES_SERIES, a
    maximal n for SERIES_ORACLE.
    """

    name: str
    comparison: Comparison
    checks: tuple[Check, ...]
    default_range: int
    statement: str

    @property
    def lhs(self) -> Callable:
        first = self.checks[0]
        return first.lhs if isinstance(first, SeriesPair) else first.series

    @property
    def rhs(self) -> Callable:
        first = self.checks[0]
        return first.rhs if isinstance(first, SeriesPair) else first.oracle


@dataclass(frozen=True)
class Mismatch:
    n: int
    lhs: int
    rhs: int
    check: str


@dataclass(frozen=True)
class VerificationReport:
    name: str
    range_checked: int
    status: Status
    first_mismatch: Optional[Mismatch] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS


# ----------------------------------------------------------------------
# builders used by more than one entry


def _sum_dcount(order: int) -> IntSeries:
    total = zero(order)
    i = 0
    while i * (i + 1) // 2 <= order:
        total = total + dcount_series(i, order)
        i += 1
    return total


def _sum_mex_slices(order: int, weighted: bool) -> IntSeries:
    total = zero(order)
    m = 1
    while m * (m - 1) // 2 <= order:
        s = refined_series(RefinedKind.MEX, m, order)
        total = total + (s.scale_shift(m) if weighted else s)
        m += 1
    return total


def _sum_omex_slices(order: int) -> IntSeries:
    total = zero(order)
    k = 0
    while k * (2 * k + 1) <= order:
        total = total + refined_series(RefinedKind.OMEX, k, order)
        k += 1
    return total


def _sum_moex_slices(order: int) -> IntSeries:
    total = zero(order)
    k = 0
    while k * k <= order:
        total = total + refined_series(RefinedKind.MOEX, k, order).scale_shift(2 * k + 1)
        k += 1
    return total


def _sum_maex_slices(order: int) -> IntSeries:
    total = zero(order)
    k = 1
    while k + 1 <= order:
        total = total + refined_series(RefinedKind.MAEX, k, order).scale_shift(k)
        k += 1
    return total


def _shifted_smallest_gt(i: int) -> Oracle:
    t = i * (i + 1) // 2

    def oracle(n: int) -> int:
        if n < t:
            return 0
        return refined_count_oracle(CountKind.SMALLEST_GT, i, n - t, True)

    return oracle


def _mex_sum_all(n: int) -> int:
    return stat_sum_oracle(StatKind.MEX, n)


def _odd_mex_count_all(n: int) -> int:
    return refined_count_oracle(CountKind.ODD_MEX, 0, n)


# ----------------------------------------------------------------------
# the registry itself

_SS = Comparison.SERIES_SERIES
_SO = Comparison.SERIES_ORACLE


def _build_registry() -> tuple[IdentityDescriptor, ...]:
    entries: list[IdentityDescriptor] = []

    def ss(name: str, statement: str, *checks: Check, rng: int = 300) -> None:
        entries.append(IdentityDescriptor(name, _SS, tuple(checks), rng, statement))

    def so(name: str, statement: str, *checks: Check, rng: int) -> None:
        entries.append(IdentityDescriptor(name, _SO, tuple(checks), rng, statement))

    ss(
        "thm-sigma-d-mex",
        "mex-sum over distinct partitions: (-q;q)_inf sigma(q) "
        "= (-q;q)_inf sum_{m>=1} m q^(m(m-1)/2)/(-q;q)_m",
        SeriesPair(
            "canonical-vs-alt1",
            lambda o: sigma_d_mex_series(o, Form.CANONICAL),
            lambda o: sigma_d_mex_series(o, Form.ALT1),
        ),
    )
    ss(
        "sigma-sum-identity",
        "sum_{n>=0} q^(n(n+1)/2)/(-q;q)_n = sum_{m>=1} m q^(m(m-1)/2)/(-q;q)_m",
        SeriesPair(
            "canonical-vs-alt1",
            lambda o: sigma_series(o, Form.CANONICAL),
            lambda o: sigma_series(o, Form.ALT1),
        ),
    )
    ss(
        "a-d-form-equivalence",
        "odd-mex count over distinct partitions: alternating triangular sum "
        "= sum over q^(n(2n+1))/(-q;q)_(2n+1)",
        SeriesPair(
            "canonical-vs-alt1",
            lambda o: a_d_series(o, Form.CANONICAL),
            lambda o: a_d_series(o, Form.ALT1),
        ),
    )
    ss(
        "moex-form-equivalence",
        "moex-sum over distinct partitions: q^(n^2)/(-q;q^2)_n sum "
        "= alternating q^n (q^2;q^2)_(n-1) sum = 1 + sigma_star(-q), "
        "all times (-q;q)_inf",
        SeriesPair(
            "canonical-vs-alt1",
            lambda o: sigma_d_moex_series(o, Form.CANONICAL),
            lambda o: sigma_d_moex_series(o, Form.ALT1),
        ),
        SeriesPair(
            "canonical-vs-alt2",
            lambda o: sigma_d_moex_series(o, Form.CANONICAL),
            lambda o: sigma_d_moex_series(o, Form.ALT2),
        ),
        SeriesPair(
            "alt1-vs-alt2",
            lambda o: sigma_d_moex_series(o, Form.ALT1),
            lambda o: sigma_d_moex_series(o, Form.ALT2),
        ),
    )
    ss(
        "euler-identity",
        "(-q;q)_inf (q;q^2)_inf = 1, equivalently distinct = 1/odd-parts",
        SeriesPair(
            "product-is-one",
            lambda o: poch(1, 1, 1, INFINITE, o) * poch(-1, 1, 2, INFINITE, o),
            one,
        ),
        SeriesPair(
            "distinct-vs-inverted-odd",
            distinct_gen,
            lambda o: poch(-1, 1, 2, INFINITE, o).invert(),
        ),
    )
    ss(
        "d-i-sum",
        "sum_{i>=0} [distinct partitions with mex > i] = mex-sum over "
        "distinct partitions",
        SeriesPair("sum-vs-sigma-d-mex", _sum_dcount, sigma_d_mex_series),
    )
    ss(
        "refined-mex-weighted-sum",
        "sum_m m [distinct partitions with mex = m] = mex-sum over distinct",
        SeriesPair(
            "weighted-slices",
            lambda o: _sum_mex_slices(o, True),
            sigma_d_mex_series,
        ),
    )
    ss(
        "refined-mex-unweighted-sum",
        "sum_m [distinct partitions with mex = m] = (-q;q)_inf",
        SeriesPair(
            "unweighted-slices",
            lambda o: _sum_mex_slices(o, False),
            distinct_gen,
        ),
    )
    ss(
        "refined-omex-sum",
        "sum_k [distinct partitions with mex = 2k+1] = odd-mex count over distinct",
        SeriesPair("omex-slices", _sum_omex_slices, a_d_series),
    )
    ss(
        "refined-moex-weighted-sum",
        "sum_k (2k+1) [distinct partitions with moex = 2k+1] = moex-sum over distinct",
        SeriesPair("weighted-moex-slices", _sum_moex_slices, sigma_d_moex_series),
    )
    ss(
        "refined-maex-weighted-sum",
        "sum_k k [distinct partitions with maex = k] = maex-sum over distinct",
        SeriesPair("weighted-maex-slices", _sum_maex_slices, sigma_d_maex_series),
    )

    so(
        "sigma-mex-equals-d2-oracle",
        "mex-sum over all partitions of n = number of two-colored "
        "distinct-part partition pairs of total weight n = [q^n] (-q;q)_inf^2",
        OraclePair("series-vs-mex-sum", sigma_mex_series, _mex_sum_all),
        OraclePair("series-vs-pair-count", sigma_mex_series, two_colored_distinct_count),
        rng=30,
    )
    so(
        "sigma-d-mex-oracle",
        "[q^n] (-q;q)_inf sigma(q) = mex-sum over distinct partitions of n",
        OraclePair(
            "series-vs-enumeration",
            sigma_d_mex_series,
            lambda n: stat_sum_oracle(StatKind.MEX, n, True),
        ),
        rng=40,
    )
    so(
        "a-d-oracle",
        "[q^n] odd-mex series = count of distinct partitions of n with odd mex",
        OraclePair(
            "series-vs-enumeration",
            a_d_series,
            lambda n: refined_count_oracle(CountKind.ODD_MEX, 0, n, True),
        ),
        rng=40,
    )
    so(
        "sigma-d-moex-oracle",
        "[q^n] moex series = moex-sum over distinct partitions of n",
        OraclePair(
            "series-vs-enumeration",
            sigma_d_moex_series,
            lambda n: stat_sum_oracle(StatKind.MOEX, n, True),
        ),
        rng=40,
    )
    so(
        "sigma-d-maex-oracle",
        "[q^n] maex double sum = maex-sum over distinct partitions of n",
        OraclePair(
            "series-vs-enumeration",
            sigma_d_maex_series,
            lambda n: stat_sum_oracle(StatKind.MAEX, n, True),
        ),
        rng=40,
    )
    so(
        "chern-sigma-maex-oracle",
        "[q^n] maex double sum over all partitions = maex-sum over all partitions",
        OraclePair(
            "series-vs-enumeration",
            chern_sigma_maex_series,
            lambda n: stat_sum_oracle(StatKind.MAEX, n),
        ),
        rng=30,
    )
    so(
        "sigma-l-oracle",
        "[q^n] sum_m m q^m/(q;q)_m = largest-part sum over all partitions of n",
        OraclePair(
            "series-vs-enumeration",
            sigma_L_series,
            lambda n: stat_sum_oracle(StatKind.LARGEST, n),
        ),
        rng=30,
    )
    so(
        "a-series-oracle-gate",
        "[q^n] odd-mex series over all partitions = count of partitions of n "
        "with odd mex",
        OraclePair("series-vs-enumeration", a_series, _odd_mex_count_all),
        rng=35,
    )
    so(
        "d-i-bijection",
        "distinct partitions of n with mex > i = distinct partitions of "
        "n - i(i+1)/2 with all parts > i (staircase removal)",
        *[
            c
            for i in (1, 2, 3, 4)
            for c in (
                OraclePair(
                    f"dcount-{i}-vs-mex-gt",
                    (lambda i: lambda o: dcount_series(i, o))(i),
                    (lambda i: lambda n: refined_count_oracle(CountKind.MEX_GT, i, n, True))(i),
                ),
                OraclePair(
                    f"dcount-{i}-vs-shifted-smallest-gt",
                    (lambda i: lambda o: dcount_series(i, o))(i),
                    _shifted_smallest_gt(i),
                ),
            )
        ],
        rng=40,
    )
    so(
        "refined-mex-slice-oracle",
        "[q^n] mex slice m = count of distinct partitions of n with mex = m",
        *[
            OraclePair(
                f"slice-{m}-vs-enumeration",
                (lambda m: lambda o: refined_series(RefinedKind.MEX, m, o))(m),
                (lambda m: lambda n: refined_count_oracle(CountKind.MEX_EQ, m, n, True))(m),
            )
            for m in (1, 2, 3)
        ],
        rng=40,
    )

    return tuple(entries)


_REGISTRY = _build_registry()
_BY_NAME = {d.name: d for d in _REGISTRY}


def registry() -> list[IdentityDescriptor]:
    """All registered identities, in registration order."""
    return list(_REGISTRY)


def verify(name: str, order_or_nmax: Optional[int] = None) -> VerificationReport:
    """Check one registered identity over a coefficient range.

    The range is a truncation order for series-vs-series entries and a
    maximal n for oracle entries; None picks the entry's default.
    Unknown names raise KeyError.
    """
    try:
        desc = _BY_NAME[name]
    except KeyError:
        raise KeyError(f"no identity named {name!r}") from None
    return verify_descriptor(desc, order_or_nmax)


def verify_descriptor(
    desc: IdentityDescriptor, order_or_nmax: Optional[int] = None
) -> VerificationReport:
    """Run every check of a descriptor; FAIL carries the smallest bad n."""
    rng = desc.default_range if order_or_nmax is None else order_or_nmax
    if rng < 0:
        raise ValueError("verification range must be non-negative")
    worst: Optional[Mismatch] = None
    for check in desc.checks:
        if isinstance(check, SeriesPair):
            ls = check.lhs(rng)
            rs = check.rhs(rng)
            for n in range(rng + 1):
                a, b = ls.coefficient(n), rs.coefficient(n)
                if a != b:
                    if worst is None or n < worst.n:
                        worst = Mismatch(n, a, b, check.label)
                    break
        else:
            s = check.series(rng)
            for n in range(rng + 1):
                a, b = s.coefficient(n), check.oracle(n)
                if a != b:
                    if worst is None or n < worst.n:
                        worst = Mismatch(n, a, b, check.label)
                    break
    status = Status.PASS if worst is None else Status.FAIL
    return VerificationReport(desc.name, rng, status, worst)


# ----------------------------------------------------------------------
# scan-style checks


def monotonicity_check(nmax: int) -> VerificationReport:
    """Strict growth of the distinct-mex sum from n = 7 on.

    The sum is flat from 6 to 7 (both coefficients are 8) and strictly
    increasing afterwards; the flat step is recorded as a note, the
    strict part is the checked claim.
    """
    if nmax < 8:
        raise ValueError("monotonicity scan needs nmax >= 8")
    s = sigma_d_mex_series(nmax)
    note = None
    if s.coefficient(6) == s.coefficient(7):
        note = f"boundary equality at 6 -> 7 (both {s.coefficient(6)})"
    for n in range(7, nmax):
        a, b = s.coefficient(n), s.coefficient(n + 1)
        if not b > a:
            return VerificationReport(
                "monotonicity",
                nmax,
                Status.FAIL,
                Mismatch(n, a, b, "strict-increase"),
                note,
            )
    return VerificationReport("monotonicity", nmax, Status.PASS, None, note)


def parity_check(nmax: int) -> VerificationReport:
    """Parity of the odd-mex count over all partitions.

    a(n) is odd exactly when n = j(3j-1) or j(3j+1) for some j >= 1
    (n = 0 is left out of the scan), and the mex-sum over all
    partitions has the same parity as a(n). The series for a(n) is
    gated against the enumeration oracle up to n = 35 before the
    pattern is trusted.
    """
    if nmax < 1:
        raise ValueError("parity scan needs nmax >= 1")
    gate = min(nmax, 35)
    a = a_series(max(nmax, gate))
    for n in range(gate + 1):
        got, want = a.coefficient(n), _odd_mex_count_all(n)
        if got != want:
            return VerificationReport(
                "parity", nmax, Status.FAIL, Mismatch(n, got, want, "oracle-gate")
            )
    special = set()
    j = 1
    while j * (3 * j - 1) <= nmax:
        special.add(j * (3 * j - 1))
        if j * (3 * j + 1) <= nmax:
            special.add(j * (3 * j + 1))
        j += 1
    smex = sigma_mex_series(nmax)
    for n in range(1, nmax + 1):
        odd = a.coefficient(n) % 2
        want = 1 if n in special else 0
        if odd != want:
            return VerificationReport(
                "parity", nmax, Status.FAIL, Mismatch(n, odd, want, "odd-iff-pentagonal-pair")
            )
        if smex.coefficient(n) % 2 != odd:
            return VerificationReport(
                "parity",
                nmax,
                Status.FAIL,
                Mismatch(n, smex.coefficient(n) % 2, odd, "mex-sum-parity"),
            )
    return VerificationReport("parity", nmax, Status.PASS, None, f"oracle gate to {gate}")


def positivity_check(nmax: int) -> VerificationReport:
    """The odd-mex count over distinct partitions vanishes only at n = 1."""
    if nmax < 2:
        raise ValueError("positivity scan needs nmax >= 2")
    s = a_d_series(nmax)
    if s.coefficient(1) != 0:
        return VerificationReport(
            "positivity", nmax, Status.FAIL, Mismatch(1, s.coefficient(1), 0, "zero-at-one")
        )
    for n in range(nmax + 1):
        if n == 1:
            continue
        v = s.coefficient(n)
        if v <= 0:
            return VerificationReport(
                "positivity", nmax, Status.FAIL, Mismatch(n, v, 1, "strictly-positive")
            )
    return VerificationReport("positivity", nmax, Status.PASS)
