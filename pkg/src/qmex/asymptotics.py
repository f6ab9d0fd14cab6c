"""Exact-arithmetic number theory and floating-point asymptotics.

The arithmetic that must be exact (sawtooth values, Dedekind sums, the
phases of the Kloosterman-type sums) runs on fractions.Fraction; floats
appear only at the final evaluation of cosines, Bessel values and
exponentials. The Kloosterman sums are mathematically real because the
h and k-h terms are conjugate, so the accumulated imaginary part is
pure rounding noise; it is measured and a blown tolerance raises
instead of returning garbage.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qfunctions import distinct_gen, sigma_d_mex_series

Rational = Fraction

# Euler-Mascheroni constant, double precision.
EULER_GAMMA = 0.5772156649015329

# Largest tolerated imaginary residue of a Kloosterman-type sum.
IMAG_TOLERANCE = 1e-9

# Relative size at which the Bessel power series stops adding terms.
_BESSEL_EPS = 1e-17


class NumericalIntegrityError(ArithmeticError):
    """An internal consistency bound was violated at evaluation time."""


class AsymKind(enum.Enum):
    SIGMA_MEX = "sigma-mex"
    SIGMA_D_MEX = "sigma-d-mex"
    SIGMA_L = "sigma-l"


@dataclass(frozen=True)
class HrrResult:
    """A truncated Hardy-Ramanujan-Rademacher style evaluation."""

    n: int
    terms: int
    partial_sum: float
    rounded: int
    residual: float


def sawtooth(x: Fraction | int) -> Fraction:
    """((x)): x - floor(x) - 1/2 for non-integral x, else 0. Exact."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


@lru_cache(maxsize=None)
def dedekind_sum(h: int, k: int) -> Fraction:
    """Dedekind sum s(h, k) = sum_{r=1}^{k-1} ((r/k)) ((hr/k)), exact.

    Satisfies reciprocity s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12
    for coprime positive h, k, and s(k-h, k) = -s(h, k); both are used
    as test oracles, not assumed here.
    """
    if k < 1:
        raise ValueError("modulus k must be a positive integer")
    total = Fraction(0)
    for r in range(1, k):
        total += sawtooth(Fraction(r, k)) * sawtooth(Fraction(h * r, k))
    return total


def kloosterman_A(k: int, n: int) -> tuple[float, float]:
    """Kloosterman-type sum over residues h coprime to k.

    Each term is exp(2 pi i (s(h,k) - s(2h,k) - hn/k)); the phase is
    reduced modulo 1 in exact rational arithmetic before any float
    enters. Returns (real part, |imaginary part|); an imaginary part
    above IMAG_TOLERANCE raises NumericalIntegrityError.
    """
    if k < 1:
        raise ValueError("modulus k must be a positive integer")
    re = 0.0
    im = 0.0
    for h in range(k):
        if math.gcd(h, k) != 1:
            continue
        phase = dedekind_sum(h, k) - dedekind_sum(2 * h % k, k) - Fraction(h * n, k)
        frac = phase - math.floor(phase)  # exact value in [0, 1)
        angle = 2.0 * math.pi * float(frac)
        re += math.cos(angle)
        im += math.sin(angle)
    if abs(im) > IMAG_TOLERANCE:
        raise NumericalIntegrityError(
            f"imaginary residue {im:.3e} of A_{k}({n}) exceeds {IMAG_TOLERANCE:.1e}"
        )
    return re, abs(im)


def bessel_I1(x: float) -> float:
    """Modified Bessel function of the first kind, order one.

    Power series sum_j (x/2)^{2j+1} / (j! (j+1)!). All terms are
    positive, so there is no cancellation; summation stops once a term
    drops below 1e-17 of the running sum.
    """
    if x < 0:
        raise ValueError("argument must be non-negative")
    half = 0.5 * x
    term = half  # j = 0
    total = term
    j = 1
    while term > _BESSEL_EPS * total:
        term *= half * half / (j * (j + 1))
        total += term
        j += 1
    return total


def hrr_sigma_mex(n: int, terms: int) -> HrrResult:
    """Exact-phase Rademacher-style partial sum for the mex-sum over all partitions.

    partial = pi / (2 sqrt(6 (n + 1/12)))
              * sum_{k=1}^{terms} A_{2k-1}(n)/(2k-1)
              * I_1(pi sqrt(2 (n + 1/12)) / (sqrt(3) (2k-1)))

    The returned residual is the distance to the nearest integer, which
    for moderate n already identifies the exact coefficient.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if terms < 1:
        raise ValueError("need at least one term")
    shifted = n + 1.0 / 12.0
    prefactor = math.pi / (2.0 * math.sqrt(6.0 * shifted))
    arg_top = math.pi * math.sqrt(2.0 * shifted) / math.sqrt(3.0)
    acc = 0.0
    for k in range(1, terms + 1):
        odd = 2 * k - 1
        a, _ = kloosterman_A(odd, n)
        acc += a / odd * bessel_I1(arg_top / odd)
    partial = prefactor * acc
    rounded = math.floor(partial + 0.5)
    return HrrResult(n, terms, partial, int(rounded), abs(partial - rounded))


# ----------------------------------------------------------------------
# leading-order asymptotics and series-side ratios


def asym_value(kind: AsymKind, n: int) -> float:
    """Leading-order growth of a statistic sum at n.

    SIGMA_MEX    exp(pi sqrt(2n/3)) / (4 (6 n^3)^(1/4))
    SIGMA_D_MEX  exp(pi sqrt(n/3)) / (2 (3 n^3)^(1/4))
    SIGMA_L      (log(6n/pi^2) + 2 gamma) / (4 pi sqrt(2n)) * exp(pi sqrt(2n/3))
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if kind is AsymKind.SIGMA_MEX:
        return math.exp(math.pi * math.sqrt(2.0 * n / 3.0)) / (4.0 * (6.0 * n**3) ** 0.25)
    if kind is AsymKind.SIGMA_D_MEX:
        return math.exp(math.pi * math.sqrt(n / 3.0)) / (2.0 * (3.0 * n**3) ** 0.25)
    if kind is AsymKind.SIGMA_L:
        return (
            (math.log(6.0 * n / math.pi**2) + 2.0 * EULER_GAMMA)
            / (4.0 * math.pi * math.sqrt(2.0 * n))
            * math.exp(math.pi * math.sqrt(2.0 * n / 3.0))
        )
    raise ValueError(f"unknown asymptotic kind {kind!r}")


# Taylor coefficients of the sigma series at q = exp(-t), ascending in t.
_ZAGIER_COEFFS = (2.0, -2.0, 5.0, -55.0 / 3.0, 1073.0 / 12.0, -32671.0 / 60.0)


def zagier_value(t: float) -> float:
    """Degree-five expansion of sigma(exp(-t)) around t = 0."""
    if t <= 0:
        raise ValueError("t must be positive")
    acc = 0.0
    for c in reversed(_ZAGIER_COEFFS):
        acc = acc * t + c
    return acc


def required_order(t: float) -> int:
    """Truncation order needed before an eval at exp(-t) is trusted.

    The summand peaks near pi^2/(6 t^2); 8/t^2 clears the peak with a
    tail that is exponentially negligible at the comparison precision.
    """
    return math.ceil(8.0 / (t * t))


def tauberian_ratio(t: float, order: int) -> float:
    """Distinct-mex sum at q = exp(-t) against its exponential prediction.

    ratio = B(exp(-t)) / (sqrt(2) exp(pi^2/(12 t))) where B is the
    mex-sum series over distinct partitions; the ratio climbs toward 1
    as t drops. Requires 0 < t <= 1/4 and order >= ceil(8/t^2).
    """
    if not 0.0 < t <= 0.25:
        raise ValueError("t must lie in (0, 0.25]")
    need = required_order(t)
    if order < need:
        raise ValueError(f"order {order} too small: t = {t} needs at least {need}")
    value = sigma_d_mex_series(order).eval_at(math.exp(-t))
    return value / (math.sqrt(2.0) * math.exp(math.pi**2 / (12.0 * t)))


def eta_ratio(t: float, order: int) -> float:
    """(-exp(-t); exp(-t))_inf against exp(pi^2/(12 t)) / sqrt(2)."""
    if not 0.0 < t <= 0.25:
        raise ValueError("t must lie in (0, 0.25]")
    need = required_order(t)
    if order < need:
        raise ValueError(f"order {order} too small: t = {t} needs at least {need}")
    value = distinct_gen(order).eval_at(math.exp(-t))
    return value / (math.exp(math.pi**2 / (12.0 * t)) / math.sqrt(2.0))
