"""The convolution sum W_{a,b}(n) = sum of sigma(l)*sigma(m) over positive
(l, m) with a*l + b*m = n: brute-force oracle, gcd reduction, and the five
closed-form evaluators.

Each closed form is a rational-linear combination of dilated divisor sums
sigma_3(n/d), terms (1/24 - n/s)*sigma(n/d), and cusp coefficients c_j(n).
The coefficient tables are data, one literal per published coefficient, so
they can be audited line by line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import sigma, sigma_scaled
from .errors import NonIntegralResult
from .eta import CuspTable

Pair = tuple[int, int]


@dataclass(frozen=True)
class ConvolutionFormula:
    """Closed form: sigma3 terms (d, coef) meaning coef*sigma_3(n/d);
    sigma1 terms (d, const, slope) meaning (const + slope*n)*sigma(n/d);
    cusp terms (j, coef) meaning coef*c_j(n)."""

    sigma3: tuple[tuple[int, Fraction], ...]
    sigma1: tuple[tuple[int, Fraction, Fraction], ...]
    cusp: tuple[tuple[int, Fraction], ...]


def _f(text: str) -> Fraction:
    return Fraction(text)


FORMULAS: dict[Pair, ConvolutionFormula] = {
    (1, 28): ConvolutionFormula(
        sigma3=(
            (1, _f("1/2400")), (2, _f("1/800")), (4, _f("1/150")),
            (7, _f("49/2400")), (14, _f("49/800")), (28, _f("49/150")),
        ),
        sigma1=((1, _f("1/24"), _f("-1/112")), (28, _f("1/24"), _f("-1/4"))),
        cusp=(
            (1, _f("1121/67200")), (2, _f("2389/22400")), (3, _f("-1/128")),
            (4, _f("-3349/67200")), (5, _f("-101/200")), (6, _f("-17/40")),
            (7, _f("13/200")), (8, _f("-433/150")), (9, _f("-254/75")),
        ),
    ),
    (4, 7): ConvolutionFormula(
        sigma3=(
            (1, _f("1/2400")), (2, _f("1/800")), (4, _f("1/150")),
            (7, _f("49/2400")), (14, _f("49/800")), (28, _f("49/150")),
        ),
        sigma1=((4, _f("1/24"), _f("-1/28")), (7, _f("1/24"), _f("-1/16"))),
        cusp=(
            (1, _f("697/470400")), (2, _f("139/22400")), (3, _f("-9/896")),
            (4, _f("-893/470400")), (5, _f("43/1400")), (6, _f("-7/40")),
            (7, _f("241/1400")), (8, _f("-881/1050")), (9, _f("-178/525")),
        ),
    ),
    (1, 14): ConvolutionFormula(
        sigma3=(
            (1, _f("1/600")), (2, _f("1/150")),
            (7, _f("49/600")), (14, _f("49/150")),
        ),
        sigma1=((1, _f("1/24"), _f("-1/56")), (14, _f("1/24"), _f("-1/4"))),
        cusp=((2, _f("2/175")), (3, _f("-1/600")), (4, _f("-107/4200"))),
    ),
    (2, 7): ConvolutionFormula(
        sigma3=(
            (1, _f("1/600")), (2, _f("1/150")),
            (7, _f("49/600")), (14, _f("49/150")),
        ),
        sigma1=((2, _f("1/24"), _f("-1/28")), (7, _f("1/24"), _f("-1/8"))),
        cusp=((2, _f("2/175")), (3, _f("-107/4200")), (4, _f("-1/600"))),
    ),
    (1, 7): ConvolutionFormula(
        sigma3=((1, _f("1/120")), (7, _f("49/120"))),
        sigma1=((1, _f("1/24"), _f("-1/28")), (7, _f("1/24"), _f("-1/4"))),
        cusp=((1, _f("-1/70")), (2, _f("-2/35"))),
    ),
}

CLOSED_FORM_PAIRS: tuple[Pair, ...] = tuple(FORMULAS)

_shared_table: CuspTable | None = None


def shared_cusp_table(min_order: int) -> CuspTable:
    """Module-wide cusp table, regrown monotonically as larger n arrive."""
    global _shared_table
    if _shared_table is None or _shared_table.order < min_order:
        current = 0 if _shared_table is None else _shared_table.order
        _shared_table = CuspTable(max(min_order, 2 * current, 64))
    return _shared_table


def w_brute(a: int, b: int, n: int) -> int:
    """Direct evaluation of the convolution sum; the oracle everything else
    is judged against."""
    if a < 1 or b < 1 or n < 1:
        raise ValueError(f"w_brute needs a, b, n >= 1, got {a}, {b}, {n}")
    total = 0
    for m in range(1, (n - a) // b + 1):
        rest = n - b * m
        if rest % a == 0:
            total += sigma(1, rest // a) * sigma(1, m)
    return total


def w_formula(pair: Pair, n: int, cusp: CuspTable | None = None) -> int:
    """Closed-form W for one of the five supported pairs.

    Evaluated verbatim in exact rationals; a non-integer total means a
    corrupted coefficient table and raises NonIntegralResult.
    """
    if pair not in FORMULAS:
        raise ValueError(f"no closed form for pair {pair}")
    if n < 1:
        raise ValueError(f"w_formula needs n >= 1, got {n}")
    table = cusp if cusp is not None else shared_cusp_table(n)
    formula = FORMULAS[pair]
    total = Fraction(0)
    for d, coef in formula.sigma3:
        total += coef * sigma_scaled(3, n, d)
    for d, const, slope in formula.sigma1:
        total += (const + slope * n) * sigma_scaled(1, n, d)
    for j, coef in formula.cusp:
        total += coef * table.c(j, n)
    if total.denominator != 1:
        raise NonIntegralResult(f"W{pair}({n}) evaluated to {total}")
    return total.numerator


def w_reduce(a: int, b: int, n: int, cusp: CuspTable | None = None) -> int:
    """W for any pair: divide out gcd(a, b) (zero unless it divides n),
    then use the closed form when the reduced pair has one, else brute force."""
    if a < 1 or b < 1 or n < 1:
        raise ValueError(f"w_reduce needs a, b, n >= 1, got {a}, {b}, {n}")
    g = gcd(a, b)
    if n % g != 0:
        return 0
    a, b, n = a // g, b // g, n // g
    if a > b:
        a, b = b, a
    if (a, b) in FORMULAS:
        return w_formula((a, b), n, cusp)
    return w_brute(a, b, n)
