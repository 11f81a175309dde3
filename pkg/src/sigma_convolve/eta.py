"""Eta-quotient expansions, the modularity criterion, and the nine
level-28 cusp generators with their coefficient tables.

An eta quotient is a finite product prod eta(delta*z)^{r_delta} over
divisors delta of a level N, where eta is the weight-1/2 product
q^(1/24) * prod (1 - q^n). The fractional power of q never enters the
series ring: expansions carry the accumulated exponent in units of 1/24
("offset24") next to an integer-exponent body series, and conversion to a
plain series is gated on 24 dividing the offset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from types import MappingProxyType
from typing import Mapping

from .arith import divisors, normalize, prime_factors
from .errors import FractionalExponent, NegativeValuation, OutOfRange
from .qseries import QSeries


class EtaQuotientSpec:
    """Level plus a map divisor -> integer exponent (zero entries dropped)."""

    __slots__ = ("level", "exponents")

    level: int
    exponents: Mapping[int, int]

    def __init__(self, level: int, exponents: Mapping[int, int]):
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        cleaned: dict[int, int] = {}
        for delta, r in sorted(exponents.items()):
            if not isinstance(delta, int) or not isinstance(r, int):
                raise ValueError(f"exponent entries must be integers, got {delta!r}: {r!r}")
            if delta < 1 or level % delta != 0:
                raise ValueError(f"{delta} is not a positive divisor of level {level}")
            if r != 0:
                cleaned[delta] = r
        if not cleaned:
            raise ValueError("eta quotient needs at least one nonzero exponent")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "exponents", MappingProxyType(cleaned))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("EtaQuotientSpec is immutable")

    @classmethod
    def from_string(cls, level: int, text: str) -> "EtaQuotientSpec":
        """Parse the CLI format "delta:exponent,delta:exponent,..."."""
        exps: dict[int, int] = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                raise ValueError(f"empty entry in spec string {text!r}")
            head, sep, tail = part.partition(":")
            if not sep:
                raise ValueError(f"missing ':' in spec entry {part!r}")
            try:
                delta, r = int(head), int(tail)
            except ValueError:
                raise ValueError(f"non-integer spec entry {part!r}") from None
            if delta in exps:
                raise ValueError(f"duplicate divisor {delta} in spec string")
            exps[delta] = r
        return cls(level, exps)

    def offset24(self) -> int:
        """Sum of delta * r_delta: the q-exponent numerator in units of 1/24."""
        return sum(d * r for d, r in self.exponents.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EtaQuotientSpec):
            return NotImplemented
        return self.level == other.level and dict(self.exponents) == dict(other.exponents)

    def __hash__(self) -> int:
        return hash((self.level, tuple(self.exponents.items())))

    def __repr__(self) -> str:
        body = ",".join(f"{d}:{r}" for d, r in self.exponents.items())
        return f"EtaQuotientSpec(level={self.level}, {body})"


@dataclass(frozen=True)
class EtaExpansion:
    """q^(offset24/24) times an integer-exponent body series."""

    offset24: int
    body: QSeries

    def __mul__(self, other: "EtaExpansion") -> "EtaExpansion":
        return EtaExpansion(self.offset24 + other.offset24, self.body * other.body)

    def as_series(self) -> QSeries:
        """The plain q-series, defined only when the q-power is a whole number."""
        if self.offset24 % 24 != 0:
            raise FractionalExponent(
                f"q-exponent {self.offset24}/24 is not an integer"
            )
        shift = self.offset24 // 24
        if shift < 0:
            raise NegativeValuation(f"leading q-power {shift} is negative")
        order = self.body.order
        out = [0] * (order + 1)
        for i in range(order + 1 - shift):
            out[i + shift] = self.body.coeffs[i]
        return QSeries(out, order)


@dataclass(frozen=True)
class LigozatReport:
    """Outcome of the eta-quotient modularity criterion, condition by condition."""

    weight_k: int | Fraction
    s_value: int | Fraction
    cond_i: bool
    cond_ii: bool
    cusp_orders: Mapping[int, int | Fraction]
    cond_iii: bool
    cond_iii_strict: bool
    cond_iv: bool
    cond_v: bool
    is_modular: bool
    is_cusp: bool


def _euler_product(delta: int, order: int) -> QSeries:
    """prod_{n>=1} (1 - q^(delta*n)) via the pentagonal number expansion."""
    out: list[int] = [0] * (order + 1)
    out[0] = 1
    m = 1
    while True:
        e1 = delta * m * (3 * m - 1) // 2
        e2 = delta * m * (3 * m + 1) // 2
        if e1 > order and e2 > order:
            break
        sign = -1 if m % 2 else 1
        if e1 <= order:
            out[e1] = sign
        if e2 <= order:
            out[e2] = sign
        m += 1
    return QSeries(out, order)


def eta_factor(delta: int, r: int, order: int) -> EtaExpansion:
    """Expansion of eta(delta*z)^r: offset delta*r plus the product body."""
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    base = _euler_product(delta, order)
    body = base ** abs(r)
    if r < 0:
        body = body.inverse()
    return EtaExpansion(delta * r, body)


def expand(spec: EtaQuotientSpec, order: int) -> QSeries:
    """Full q-expansion of an eta quotient as a plain series."""
    acc: EtaExpansion | None = None
    for delta, r in spec.exponents.items():
        factor = eta_factor(delta, r, order)
        acc = factor if acc is None else acc * factor
    assert acc is not None
    return acc.as_series()


def _is_rational_square(exps_by_prime: dict[int, int]) -> bool:
    return all(e % 2 == 0 for e in exps_by_prime.values())


def ligozat_check(spec: EtaQuotientSpec) -> LigozatReport:
    """Evaluate the modularity criterion for an eta quotient.

    Conditions: (i) sum delta*r_delta and (ii) sum (N/delta)*r_delta both
    divisible by 24; (iii) for every divisor d of N the cusp sum
    sum_delta gcd(d, delta)^2 * r_delta / delta is >= 0, strictly > 0 for
    a cusp form; (iv) the weight k = (1/2) sum r_delta is an even integer;
    (v) s = prod delta^r_delta is the square of a rational.
    """
    n = spec.level
    items = spec.exponents.items()

    weight_k = normalize(Fraction(sum(r for _, r in items), 2))
    cond_i = sum(d * r for d, r in items) % 24 == 0
    cond_ii = sum((n // d) * r for d, r in items) % 24 == 0
    cond_iv = isinstance(weight_k, int) and weight_k % 2 == 0

    # s = prod delta^r_delta, assembled exactly with negative exponents allowed
    s_frac = Fraction(1)
    s_prime_exps: dict[int, int] = {}
    for d, r in items:
        s_frac *= Fraction(d) ** r
        for p, e in prime_factors(d).items():
            s_prime_exps[p] = s_prime_exps.get(p, 0) + e * r
    s_value = normalize(s_frac)
    cond_v = _is_rational_square(s_prime_exps)

    cusp_orders: dict[int, int | Fraction] = {}
    for d in divisors(n):
        total = Fraction(0)
        for delta, r in items:
            total += Fraction(gcd(d, delta) ** 2 * r, delta)
        cusp_orders[d] = normalize(total)
    cond_iii = all(v >= 0 for v in cusp_orders.values())
    cond_iii_strict = all(v > 0 for v in cusp_orders.values())

    is_modular = cond_i and cond_ii and cond_iii and cond_iv and cond_v
    return LigozatReport(
        weight_k=weight_k,
        s_value=s_value,
        cond_i=cond_i,
        cond_ii=cond_ii,
        cusp_orders=MappingProxyType(cusp_orders),
        cond_iii=cond_iii,
        cond_iii_strict=cond_iii_strict,
        cond_iv=cond_iv,
        cond_v=cond_v,
        is_modular=is_modular,
        is_cusp=is_modular and cond_iii_strict,
    )


# The nine weight-4 cusp generators at level 28, as exponent maps.
CUSP_LEVEL = 28
CUSP_GENERATORS: dict[int, dict[int, int]] = {
    1: {1: 5, 2: -1, 7: 5, 14: -1},
    2: {1: 2, 2: 2, 7: 2, 14: 2},
    3: {1: 6, 2: -2, 7: -2, 14: 6},
    4: {1: -2, 2: 6, 7: 6, 14: -2},
    5: {4: 2, 14: 4, 28: 2},
    6: {2: 6, 4: -2, 14: -2, 28: 6},
    7: {2: 4, 4: -2, 28: 6},
    8: {1: 1, 2: 1, 7: 1, 14: -3, 28: 8},
    9: {2: 1, 4: 1, 14: -3, 28: 9},
}


def cusp_spec(j: int) -> EtaQuotientSpec:
    """The eta-quotient spec of the j-th cusp generator, 1 <= j <= 9."""
    if j not in CUSP_GENERATORS:
        raise ValueError(f"generator index must be 1..9, got {j}")
    return EtaQuotientSpec(CUSP_LEVEL, CUSP_GENERATORS[j])


_cusp_cache: dict[int, QSeries] = {}


def c_series(j: int, order: int) -> QSeries:
    """q-expansion of the j-th cusp generator, cached at the largest order seen."""
    cached = _cusp_cache.get(j)
    if cached is None or cached.order < order:
        cached = expand(cusp_spec(j), order)
        _cusp_cache[j] = cached
    return cached.truncate(order)


class CuspTable:
    """All nine generator expansions at one order, with indexed access c(j, n)."""

    __slots__ = ("order", "_series")

    def __init__(self, order: int):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(
            self, "_series", {j: c_series(j, order) for j in range(1, 10)}
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CuspTable is immutable")

    def series(self, j: int) -> QSeries:
        if j not in self._series:
            raise ValueError(f"generator index must be 1..9, got {j}")
        return self._series[j]

    def c(self, j: int, n: int) -> int | Fraction:
        """Coefficient c_j(n), zero-extended to n < 1."""
        if j not in self._series:
            raise ValueError(f"generator index must be 1..9, got {j}")
        if n < 1:
            return 0
        if n > self.order:
            raise OutOfRange(f"coefficient {n} beyond table order {self.order}")
        return self._series[j].coeffs[n]
