"""Exact truncated power series in one variable over the integers.

The carrier type is :class:`IntSeries`, a fixed-order prefix

    c_0 + c_1 q + c_2 q^2 + ... + c_N q^N

of a formal power series with arbitrary-precision integer coefficients.
All arithmetic is exact. Binary operations truncate to the smaller
operand order instead of padding with zeros, so a truncation artifact
can never masquerade as a genuine coefficient.

Unbounded q-Pochhammer style products are handled by :func:`poch`,
which simply omits factors whose lowest exponent exceeds the truncation
order. Such a factor is 1 + O(q^{N+1}) and cannot change any retained
coefficient, so the truncated product is still exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence

# Sentinel accepted by poch() for an unbounded product.
INFINITE = None


class IntSeries:
    """A truncated formal power series with exact integer coefficients.

    Instances are immutable and hashable. Index n of the coefficient
    tuple holds the coefficient of q^n; the truncation order is the
    largest retained exponent. Reading past the order raises instead of
    returning 0, because a coefficient beyond the truncation is simply
    unknown.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least the q^0 coefficient")
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        self._coeffs = cs

    @property
    def order(self) -> int:
        """Largest exponent whose coefficient is retained."""
        return len(self._coeffs) - 1

    def coefficients(self) -> tuple[int, ...]:
        """All retained coefficients, lowest exponent first."""
        return self._coeffs

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(
                f"coefficient {n} is outside the retained range 0..{self.order}"
            )
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if len(self._coeffs) <= 8:
            return f"IntSeries({list(self._coeffs)})"
        head = ", ".join(str(c) for c in self._coeffs[:8])
        return f"IntSeries([{head}, ...], order={self.order})"

    # ------------------------------------------------------------------
    # ring operations

    def __neg__(self) -> "IntSeries":
        return IntSeries([-c for c in self._coeffs])

    def __add__(self, other: "IntSeries") -> "IntSeries":
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return IntSeries([a[i] + b[i] for i in range(n + 1)])

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return IntSeries([a[i] - b[i] for i in range(n + 1)])

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        """Cauchy product truncated to the smaller operand order.

        The outer loop runs over the operand with fewer nonzero entries,
        so multiplying by a sparse series (a theta-like sum, say) costs
        O(nnz * N) instead of O(N^2).
        """
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a = self._coeffs[: n + 1]
        b = other._coeffs[: n + 1]
        na = sum(1 for c in a if c)
        nb = sum(1 for c in b if c)
        if na > nb:
            a, b = b, a
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b[: n + 1 - i]):
                    if bj:
                        out[i + j] += ai * bj
        return IntSeries(out)

    def invert(self) -> "IntSeries":
        """Multiplicative inverse as a truncated series.

        Over the integers this exists exactly when the constant term is
        +1 or -1; anything else raises ValueError. Uses the standard
        recurrence g_n = -(1/f_0) * sum_{i>=1} f_i g_{n-i}, iterating
        only over the nonzero support of f.
        """
        c0 = self._coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(
                "series is invertible over the integers only when the "
                f"constant term is +1 or -1, got {c0}"
            )
        n = self.order
        cs = self._coeffs
        support = [i for i in range(1, n + 1) if cs[i]]
        g = [0] * (n + 1)
        g[0] = c0  # 1/c0 == c0 for units of Z
        for m in range(1, n + 1):
            acc = 0
            for i in support:
                if i > m:
                    break
                acc += cs[i] * g[m - i]
            if acc:
                g[m] = -c0 * acc
        return IntSeries(g)

    def scale_shift(self, c: int, a: int = 0) -> "IntSeries":
        """Return c * q^a * self, truncated to the original order.

        Coefficients below index a are zero and the top a coefficients
        fall off the end. The shift must be non-negative.
        """
        if not isinstance(c, int):
            raise TypeError("scale factor must be int")
        if a < 0:
            raise ValueError("shift exponent must be non-negative")
        n = self.order
        out = [0] * (n + 1)
        if c:
            for j in range(a, n + 1):
                v = self._coeffs[j - a]
                if v:
                    out[j] = c * v
        return IntSeries(out)

    def eval_at(self, x: float) -> float:
        """Evaluate the truncated polynomial at a float point in (0, 1).

        Horner from the highest index down. Each int-to-float conversion
        is correctly rounded, so the result is faithful to float
        precision for any coefficient that fits in a float exponent.
        The open-interval restriction keeps the tail of the underlying
        series decaying, which is what makes the prefix meaningful.
        """
        if not 0.0 < x < 1.0:
            raise ValueError("evaluation point must lie in the open interval (0, 1)")
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc


# ----------------------------------------------------------------------
# module-level operations (thin wrappers plus the product builder)


def make_series(coeffs: Sequence[int], order: int) -> IntSeries:
    """Build a series from an explicit coefficient list of length order+1."""
    if order < 0:
        raise ValueError("order must be non-negative")
    cs = list(coeffs)
    if len(cs) != order + 1:
        raise ValueError(
            f"expected {order + 1} coefficients for order {order}, got {len(cs)}"
        )
    return IntSeries(cs)


def zero(order: int) -> IntSeries:
    return IntSeries([0] * (order + 1))


def one(order: int) -> IntSeries:
    return IntSeries([1] + [0] * order)


def add(f: IntSeries, g: IntSeries) -> IntSeries:
    return f + g


def mul(f: IntSeries, g: IntSeries) -> IntSeries:
    return f * g


def invert(f: IntSeries) -> IntSeries:
    return f.invert()


def scale_shift(f: IntSeries, c: int, a: int = 0) -> IntSeries:
    return f.scale_shift(c, a)


def coefficient(f: IntSeries, n: int) -> int:
    return f.coefficient(n)


def eval_at(f: IntSeries, x: float) -> float:
    return f.eval_at(x)


def poch(sign: int, a: int, step: int, count: int | None, order: int) -> IntSeries:
    """Truncated product of binomial factors (1 + sign * q^{a + k*step}).

    k runs over 0 <= k < count; pass INFINITE (None) for an unbounded
    product. Factors whose exponent exceeds the truncation order are
    omitted, which is exact at this order. sign must be +1 or -1, a
    positive, step positive.

    poch(-1, 1, 1, INFINITE, N) is the Euler product (q; q)_N prefix,
    poch(+1, 1, 1, INFINITE, N) its two-line relative (-q; q)_N, whose
    coefficients count partitions into distinct parts.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a < 1:
        raise ValueError("base exponent must be a positive integer")
    if step < 1:
        raise ValueError("step must be a positive integer")
    if order < 0:
        raise ValueError("order must be non-negative")
    if count is not None and count < 0:
        raise ValueError("count must be non-negative or INFINITE")
    c = [0] * (order + 1)
    c[0] = 1
    if count is None:
        e = a
        while e <= order:
            _mul_binomial_inplace(c, sign, e)
            e += step
    else:
        for k in range(count):
            e = a + k * step
            if e > order:
                break  # later factors only have higher exponents
            _mul_binomial_inplace(c, sign, e)
    return IntSeries(c)


# ----------------------------------------------------------------------
# in-place list kernels
#
# These operate on plain coefficient lists so that incremental series
# builders (partial sums with term ratios that are single binomials) can
# run in O(N) per step. They are shared with the builder module and are
# not part of the public surface.


def _mul_binomial_inplace(c: list[int], sign: int, m: int) -> None:
    """c *= (1 + sign*q^m), truncated to len(c)-1."""
    if m < 1:
        raise ValueError("binomial exponent must be positive")
    if m >= len(c):
        return
    if sign > 0:
        c[m:] = [x + y for x, y in zip(c[m:], c)]
    else:
        c[m:] = [x - y for x, y in zip(c[m:], c)]


def _div_binomial_inplace(c: list[int], sign: int, m: int) -> None:
    """c /= (1 + sign*q^m) via g[j] = f[j] - sign*g[j-m], ascending j."""
    if m < 1:
        raise ValueError("binomial exponent must be positive")
    if m >= len(c):
        return
    if sign > 0:
        for j in range(m, len(c)):
            c[j] -= c[j - m]
    else:
        for j in range(m, len(c)):
            c[j] += c[j - m]


def _shift_inplace(c: list[int], a: int) -> None:
    """c := q^a * c at fixed length: prepend a zeros, drop the top a."""
    if a <= 0:
        return
    n = len(c)
    if a >= n:
        c[:] = [0] * n
    else:
        c[:] = [0] * a + c[: n - a]
