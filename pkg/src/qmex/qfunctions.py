"""Generating functions for excludant statistics of partitions.

Each builder returns an IntSeries of exactly the requested order with
exact integer coefficients. Several families come in more than one
closed form (Form.CANONICAL, Form.ALT1, ...); the forms are computed
through genuinely different formulas and are compared coefficientwise
by the identity registry, so a bug in one route shows up as a mismatch
rather than silently agreeing with itself.

Partial sums of q-hypergeometric type are accumulated incrementally:
the ratio of consecutive terms is a monomial times one or two binomial
factors, so each new term costs O(N) list work instead of a fresh
O(N^2) product. A term enters the sum iff its minimal exponent is at
most the truncation order.

Naming follows the statistics themselves: mex is the least missing
part, moex the least missing odd part, maex the largest missing value
below the largest part. The sigma_d_* builders sum a statistic over
partitions into distinct parts; sigma_mex sums mex over all
partitions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .series import (
    INFINITE,
    IntSeries,
    _div_binomial_inplace,
    _mul_binomial_inplace,
    _shift_inplace,
    poch,
)


class Form(enum.Enum):
    """Which closed form of a series family to evaluate."""

    CANONICAL = "canonical"
    ALT1 = "alt1"
    ALT2 = "alt2"


class RefinedKind(enum.Enum):
    """Index families exposed by refined_series."""

    MEX = "mex"
    OMEX = "omex"
    MOEX = "moex"
    MAEX = "maex"


@dataclass(frozen=True)
class NamedSeries:
    """A built series together with the name, form and order that produced it."""

    name: str
    form: Form
    order: int
    series: IntSeries


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError("order must be non-negative")


def _bad_form(name: str, form: Form) -> ValueError:
    return ValueError(f"{name} has no form {form.value!r}")


# ----------------------------------------------------------------------
# Ramanujan's sigma and sigma-star


@lru_cache(maxsize=None)
def sigma_series(order: int, form: Form = Form.CANONICAL) -> IntSeries:
    """Ramanujan's sigma series, truncated.

    CANONICAL is sum_{n>=0} q^{n(n+1)/2} / (-q;q)_n, ALT1 the m-weighted
    variant sum_{m>=1} m * q^{m(m-1)/2} / (-q;q)_m. Both open as
    1 + q - q^2 + 2q^3 - 2q^4 + q^5 + ...; their equality is one of the
    registered identities.
    """
    _check_order(order)
    if form is Form.CANONICAL:
        total = [0] * (order + 1)
        total[0] = 1  # n = 0 term
        term = [1] + [0] * order
        n = 1
        while n * (n + 1) // 2 <= order:
            # term_n = term_{n-1} * q^n / (1 + q^n)
            _shift_inplace(term, n)
            _div_binomial_inplace(term, 1, n)
            for j in range(n * (n + 1) // 2, order + 1):
                v = term[j]
                if v:
                    total[j] += v
            n += 1
        return IntSeries(total)
    if form is Form.ALT1:
        total = [0] * (order + 1)
        term = [1] + [0] * order
        n = 1
        while n * (n - 1) // 2 <= order:
            # term_n = q^{n(n-1)/2} / (-q;q)_n, ratio q^{n-1}/(1+q^n)
            _shift_inplace(term, n - 1)
            _div_binomial_inplace(term, 1, n)
            for j in range(n * (n - 1) // 2, order + 1):
                v = term[j]
                if v:
                    total[j] += n * v
            n += 1
        return IntSeries(total)
    raise _bad_form("sigma", form)


@lru_cache(maxsize=None)
def sigma_star_series(order: int) -> IntSeries:
    """Companion series 2 * sum_{n>=1} (-1)^n q^{n^2} / (q;q^2)_n."""
    _check_order(order)
    total = [0] * (order + 1)
    term = [1] + [0] * order
    sign = 1
    n = 1
    while n * n <= order:
        # term_n = q^{n^2} / (q;q^2)_n, ratio q^{2n-1}/(1-q^{2n-1})
        _shift_inplace(term, 2 * n - 1)
        _div_binomial_inplace(term, -1, 2 * n - 1)
        sign = -sign
        for j in range(n * n, order + 1):
            v = term[j]
            if v:
                total[j] += 2 * sign * v
        n += 1
    return IntSeries(total)


# ----------------------------------------------------------------------
# distinct-part machinery


@lru_cache(maxsize=None)
def distinct_gen(order: int) -> IntSeries:
    """(-q;q)_inf prefix: coefficient n counts partitions of n into distinct parts."""
    return poch(1, 1, 1, INFINITE, order)


@lru_cache(maxsize=None)
def sigma_d_mex_series(order: int, form: Form = Form.CANONICAL) -> IntSeries:
    """Generating function of the mex-sum over distinct-part partitions.

    Both forms are (-q;q)_inf times a sigma form; they differ through
    the inner sum actually evaluated. Coefficient n equals the sum of
    mex over all partitions of n into distinct parts, which the oracle
    checks directly.
    """
    _check_order(order)
    if form is Form.CANONICAL:
        return distinct_gen(order) * sigma_series(order, Form.CANONICAL)
    if form is Form.ALT1:
        return distinct_gen(order) * sigma_series(order, Form.ALT1)
    raise _bad_form("sigma-d-mex", form)


@lru_cache(maxsize=None)
def sigma_mex_series(order: int) -> IntSeries:
    """Mex-sum over all partitions: (-q;q)_inf squared.

    The same series counts pairs of distinct-part partitions by total
    weight, which is how the oracle cross-checks it.
    """
    d = distinct_gen(order)
    return d * d


@lru_cache(maxsize=None)
def a_d_series(order: int, form: Form = Form.CANONICAL) -> IntSeries:
    """Count of distinct-part partitions with odd mex.

    CANONICAL: (-q;q)_inf * sum_{n>=0} (-1)^n q^{n(n+1)/2} / (-q;q)_n.
    ALT1:      (-q;q)_inf * sum_{n>=0} q^{n(2n+1)} / (-q;q)_{2n+1}.
    """
    _check_order(order)
    if form is Form.CANONICAL:
        inner = [0] * (order + 1)
        inner[0] = 1
        term = [1] + [0] * order
        sign = 1
        n = 1
        while n * (n + 1) // 2 <= order:
            _shift_inplace(term, n)
            _div_binomial_inplace(term, 1, n)
            sign = -sign
            for j in range(n * (n + 1) // 2, order + 1):
                v = term[j]
                if v:
                    inner[j] += sign * v
            n += 1
        return distinct_gen(order) * IntSeries(inner)
    if form is Form.ALT1:
        inner = [0] * (order + 1)
        term = [1] + [0] * order
        _div_binomial_inplace(term, 1, 1)  # n = 0 term is 1/(1+q)
        for j in range(order + 1):
            inner[j] += term[j]
        n = 1
        while n * (2 * n + 1) <= order:
            # ratio q^{4n-1} / ((1+q^{2n})(1+q^{2n+1}))
            _shift_inplace(term, 4 * n - 1)
            _div_binomial_inplace(term, 1, 2 * n)
            _div_binomial_inplace(term, 1, 2 * n + 1)
            for j in range(n * (2 * n + 1), order + 1):
                v = term[j]
                if v:
                    inner[j] += v
            n += 1
        return distinct_gen(order) * IntSeries(inner)
    raise _bad_form("a-d", form)


@lru_cache(maxsize=None)
def sigma_d_moex_series(order: int, form: Form = Form.CANONICAL) -> IntSeries:
    """Sum of the smallest odd excludant over distinct-part partitions.

    Three routes to the same coefficients:

    CANONICAL  (-q;q)_inf * (1 + 2 sum_{n>=1} q^{n^2} / (-q;q^2)_n)
    ALT1       (-q;q)_inf * (1 + 2 sum_{n>=1} (-1)^{n-1} q^n (q^2;q^2)_{n-1})
    ALT2       (-q;q)_inf * (1 + sigma_star(-q))
    """
    _check_order(order)
    if form is Form.CANONICAL:
        inner = [0] * (order + 1)
        inner[0] = 1
        term = [1] + [0] * order
        n = 1
        while n * n <= order:
            # ratio q^{2n-1} / (1 + q^{2n-1})
            _shift_inplace(term, 2 * n - 1)
            _div_binomial_inplace(term, 1, 2 * n - 1)
            for j in range(n * n, order + 1):
                v = term[j]
                if v:
                    inner[j] += 2 * v
            n += 1
        return distinct_gen(order) * IntSeries(inner)
    if form is Form.ALT1:
        inner = [0] * (order + 1)
        inner[0] = 1
        term = [1] + [0] * order
        sign = -1
        n = 1
        while n <= order:
            # term_n = q^n (q^2;q^2)_{n-1}: shift by 1, then a new
            # factor (1 - q^{2(n-1)}) appears for n >= 2
            _shift_inplace(term, 1)
            if n >= 2:
                _mul_binomial_inplace(term, -1, 2 * (n - 1))
            sign = -sign
            for j in range(n, order + 1):
                v = term[j]
                if v:
                    inner[j] += 2 * sign * v
            n += 1
        return distinct_gen(order) * IntSeries(inner)
    if form is Form.ALT2:
        star = sigma_star_series(order).coefficients()
        inner = [(-c if j % 2 else c) for j, c in enumerate(star)]  # q -> -q
        inner[0] += 1
        return distinct_gen(order) * IntSeries(inner)
    raise _bad_form("sigma-d-moex", form)


@lru_cache(maxsize=None)
def sigma_d_maex_series(order: int) -> IntSeries:
    """Sum of the maximal excludant over distinct-part partitions.

    Double sum  sum_{k>=1} k (-q;q)_{k-1} sum_{m>=1} q^{m(m+1)/2 + km},
    grouping by maex value k and by the number m of parts above the
    gap. Truncation drops (k, m) pairs whose minimal exponent exceeds
    the order; constant and linear coefficients are zero.
    """
    _check_order(order)
    total = [0] * (order + 1)
    pk = [1] + [0] * order  # (-q;q)_{k-1}, starts at k = 1
    k = 1
    while k + 1 <= order:
        if k > 1:
            _mul_binomial_inplace(pk, 1, k - 1)
        m = 1
        e = 1 + k
        while e <= order:
            for j in range(order + 1 - e):
                v = pk[j]
                if v:
                    total[e + j] += k * v
            m += 1
            e = m * (m + 1) // 2 + k * m
        k += 1
    return IntSeries(total)


@lru_cache(maxsize=None)
def chern_sigma_maex_series(order: int) -> IntSeries:
    """Sum of the maximal excludant over all partitions.

    Double sum  sum_{n>=1} n / (q;q)_{n-1} * sum_{m>=1} q^{m(n+1)} (-q;q)_{m-1},
    grouping by maex value n. The inner sum is rebuilt for each n (it
    shrinks fast); the outer prefix 1/(q;q)_{n-1} is extended one factor
    at a time.
    """
    _check_order(order)
    total = [0] * (order + 1)
    qn = [1] + [0] * order  # 1/(q;q)_{n-1}, starts at n = 1
    n = 1
    while n + 1 <= order:
        if n > 1:
            _div_binomial_inplace(qn, -1, n - 1)
        inner = [0] * (order + 1)
        pm = [1] + [0] * order  # (-q;q)_{m-1}
        m = 1
        while m * (n + 1) <= order:
            if m > 1:
                _mul_binomial_inplace(pm, 1, m - 1)
            e = m * (n + 1)
            for j in range(order + 1 - e):
                v = pm[j]
                if v:
                    inner[e + j] += v
            m += 1
        prod = (IntSeries(qn) * IntSeries(inner)).coefficients()
        for j, v in enumerate(prod):
            if v:
                total[j] += n * v
        n += 1
    return IntSeries(total)


# ----------------------------------------------------------------------
# refined families and single-statistic slices


@lru_cache(maxsize=None)
def refined_series(kind: RefinedKind, index: int, order: int) -> IntSeries:
    """Distinct-part partitions refined by the value of one statistic.

    MEX m>=1   partitions with mex exactly m:
               q^{m(m-1)/2} (-q^{m+1};q)_inf
    OMEX k>=0  partitions with mex exactly 2k+1:
               q^{k(2k+1)} (-q^{2k+2};q)_inf
    MOEX k>=0  partitions with smallest odd excludant 2k+1:
               q^{k^2} (-q;q)_inf / (-q;q^2)_{k+1}
    MAEX k>=1  partitions with maximal excludant k:
               (-q;q)_{k-1} sum_{m>=1} q^{m(m+1)/2 + km}

    Weighted sums of these slices reproduce the aggregate series, which
    the identity registry checks.
    """
    _check_order(order)
    if kind is RefinedKind.MEX:
        if index < 1:
            raise ValueError("mex slice index must be >= 1")
        base = index * (index - 1) // 2
        return poch(1, index + 1, 1, INFINITE, order).scale_shift(1, base)
    if kind is RefinedKind.OMEX:
        if index < 0:
            raise ValueError("omex slice index must be >= 0")
        base = index * (2 * index + 1)
        return poch(1, 2 * index + 2, 1, INFINITE, order).scale_shift(1, base)
    if kind is RefinedKind.MOEX:
        if index < 0:
            raise ValueError("moex slice index must be >= 0")
        c = list(distinct_gen(order).coefficients())
        _shift_inplace(c, index * index)
        for j in range(index + 1):
            _div_binomial_inplace(c, 1, 2 * j + 1)
        return IntSeries(c)
    if kind is RefinedKind.MAEX:
        if index < 1:
            raise ValueError("maex slice index must be >= 1")
        pk = poch(1, 1, 1, index - 1, order).coefficients()
        total = [0] * (order + 1)
        m = 1
        e = 1 + index
        while e <= order:
            for j in range(order + 1 - e):
                v = pk[j]
                if v:
                    total[e + j] += v
            m += 1
            e = m * (m + 1) // 2 + index * m
        return IntSeries(total)
    raise ValueError(f"unknown refined kind {kind!r}")


@lru_cache(maxsize=None)
def dcount_series(i: int, order: int) -> IntSeries:
    """Distinct-part partitions whose mex exceeds i: q^{i(i+1)/2} (-q^{i+1};q)_inf.

    Equivalently (by removing a staircase) distinct-part partitions of
    n - i(i+1)/2 with every part above i.
    """
    if i < 0:
        raise ValueError("index must be >= 0")
    _check_order(order)
    return poch(1, i + 1, 1, INFINITE, order).scale_shift(1, i * (i + 1) // 2)


@lru_cache(maxsize=None)
def a_series(order: int) -> IntSeries:
    """Count of all partitions of n with odd mex.

    A partition with mex = m contains 1..m-1 and omits m, so the slice
    generating function is q^{m(m-1)/2} (1-q^m) / (q;q)_inf. Summing
    over odd m telescopes the sparse factor into an alternating theta
    over triangular numbers; the 1/(q;q)_inf factor is one series
    inversion.
    """
    _check_order(order)
    sparse = [0] * (order + 1)
    m = 1
    while m * (m - 1) // 2 <= order:
        sparse[m * (m - 1) // 2] += 1
        if m * (m + 1) // 2 <= order:
            sparse[m * (m + 1) // 2] -= 1
        m += 2
    all_parts = poch(-1, 1, 1, INFINITE, order).invert()  # 1/(q;q)_inf
    return all_parts * IntSeries(sparse)


@lru_cache(maxsize=None)
def sigma_L_series(order: int) -> IntSeries:
    """Sum of the largest part over all partitions: sum_{m>=1} m q^m / (q;q)_m."""
    _check_order(order)
    total = [0] * (order + 1)
    term = [1] + [0] * order
    m = 1
    while m <= order:
        # term_m = q^m / (q;q)_m, ratio q/(1-q^m)
        _shift_inplace(term, 1)
        _div_binomial_inplace(term, -1, m)
        for j in range(m, order + 1):
            v = term[j]
            if v:
                total[j] += m * v
        m += 1
    return IntSeries(total)


# ----------------------------------------------------------------------
# catalog for the command line and other callers working from names

_PLAIN = {
    "sigma-star": sigma_star_series,
    "distinct": distinct_gen,
    "sigma-mex": sigma_mex_series,
    "sigma-d-maex": sigma_d_maex_series,
    "chern-sigma-maex": chern_sigma_maex_series,
    "a": a_series,
    "sigma-l": sigma_L_series,
}

_FORMED = {
    "sigma": (sigma_series, (Form.CANONICAL, Form.ALT1)),
    "sigma-d-mex": (sigma_d_mex_series, (Form.CANONICAL, Form.ALT1)),
    "a-d": (a_d_series, (Form.CANONICAL, Form.ALT1)),
    "sigma-d-moex": (sigma_d_moex_series, (Form.CANONICAL, Form.ALT1, Form.ALT2)),
}


def available_series() -> tuple[str, ...]:
    return tuple(sorted(_PLAIN) + sorted(_FORMED))


def build_named(name: str, order: int, form: Form = Form.CANONICAL) -> NamedSeries:
    """Build a cataloged series by name; unknown names raise KeyError."""
    if name in _PLAIN:
        if form is not Form.CANONICAL:
            raise _bad_form(name, form)
        return NamedSeries(name, Form.CANONICAL, order, _PLAIN[name](order))
    if name in _FORMED:
        builder, forms = _FORMED[name]
        if form not in forms:
            raise _bad_form(name, form)
        return NamedSeries(name, form, order, builder(order, form))
    raise KeyError(f"no series named {name!r}")
