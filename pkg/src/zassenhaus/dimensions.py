"""Dimension pipeline: series coefficients a_n -> log coefficients b_n ->
product exponents w_n -> filtration subquotient dimensions c_n.

The chain implements, in exact arithmetic,

    P(t) = sum a_n t^n = prod_n 1/(1 - t^n)^(w_n),
    w_n  = (1/n) sum_{m | n} mu(n/m) m b_m        with b = log P,
    c_n  = w_m + w_{pm} + ... + w_n               for n = p^k m, gcd(m, p) = 1.

For gcd(n, p) = 1 this gives c_n = w_n, and for p | n it gives
c_n = c_{n/p} + w_n; both identities hold by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .groupspec import Demushkin, Free, GroupSpec, hp_series
from .numtheory import divisors, is_prime, moebius

__all__ = [
    "DimensionTable",
    "NonIntegralW",
    "NegativeDimension",
    "UnsupportedSpec",
    "OutOfRange",
    "moebius",
    "w_sequence",
    "c_sequence",
    "dims_table",
    "w_free_closed",
    "demushkin_power_sum",
    "w_demushkin_power_sum",
    "w_demushkin_closed",
    "power_sums_free_product_cp",
    "min_generators",
    "galois_exponent",
]


class NonIntegralW(ValueError):
    """w_n came out non-integral: the input is not a group dimension series."""

    def __init__(self, n: int, value: Fraction):
        super().__init__(f"w_{n} = {value} is not an integer")
        self.degree = n
        self.value = value


class NegativeDimension(ValueError):
    """c_n came out negative: the input is not a group dimension series."""

    def __init__(self, n: int, value: int):
        super().__init__(f"c_{n} = {value} is negative")
        self.degree = n
        self.value = value


class UnsupportedSpec(ValueError):
    """Operation defined only for certain leaf families."""


class OutOfRange(ValueError):
    """Degree argument outside the table's range."""


def w_sequence(b: Sequence[Fraction]) -> list[int]:
    """Product exponents from log coefficients: w_n = (1/n) sum mu(n/m) m b_m.

    b lists b_1, b_2, ... (entry i is the coefficient of t^(i+1) in log P).
    Raises NonIntegralW at the first non-integral degree.
    """
    out = []
    for n in range(1, len(b) + 1):
        acc = Fraction(0)
        for m in divisors(n):
            mu = moebius(n // m)
            if mu:
                acc += mu * m * Fraction(b[m - 1])
        acc /= n
        if acc.denominator != 1:
            raise NonIntegralW(n, acc)
        out.append(acc.numerator)
    return out


def c_sequence(w: Sequence[int], p: int) -> list[int]:
    """Subquotient dimensions c_n = sum of w over the chain m, pm, ..., n.

    w lists w_1, w_2, ...; raises NegativeDimension at the first negative c_n.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    out = []
    for n in range(1, len(w) + 1):
        total = w[n - 1]
        m = n
        while m % p == 0:
            m //= p
            total += w[m - 1]
        if total < 0:
            raise NegativeDimension(n, total)
        out.append(total)
    return out


@dataclass(frozen=True)
class DimensionTable:
    """All four sequences for one group at one prime, degrees 1..order.

    Tuples are indexed by degree; entry 0 is padding (a_0 = 1 is real, the
    others hold a zero placeholder so that table.c[n] means c_n).
    """

    p: int
    order: int
    a: tuple[int, ...]
    b: tuple[Fraction, ...]
    w: tuple[int, ...]
    c: tuple[int, ...]

    def galois_exponent(self, n: int) -> int:
        """log_p of the relevant Galois section size: sum of c_1 .. c_(n-1)."""
        if not 1 <= n <= self.order + 1:
            raise OutOfRange(f"n must be in 1..{self.order + 1}, got {n}")
        return sum(self.c[1:n])


def dims_table(spec: GroupSpec, p: int, order: int) -> DimensionTable:
    """Run the whole pipeline for a group expression."""
    series = hp_series(spec, p, order)
    a = series.int_coeffs()
    assert a[0] == 1
    b = series.log().coeffs[1:]
    w = w_sequence(b)
    c = c_sequence(w, p)
    return DimensionTable(
        p=p,
        order=order,
        a=tuple(a),
        b=(Fraction(0),) + tuple(b),
        w=(0,) + tuple(w),
        c=(0,) + tuple(c),
    )


def galois_exponent(table: DimensionTable, n: int) -> int:
    """Module-level alias for DimensionTable.galois_exponent."""
    return table.galois_exponent(n)


def w_free_closed(d: int, n: int) -> int:
    """Necklace count (1/n) sum_{m | n} mu(m) d^(n/m): free-group exponents."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    acc = Fraction(0)
    for m in divisors(n):
        mu = moebius(m)
        if mu:
            acc += mu * Fraction(d) ** (n // m)
    acc /= n
    assert acc.denominator == 1
    return acc.numerator


def demushkin_power_sum(d: int, m: int) -> int:
    """s_m = alpha^m + beta^m for alpha + beta = d, alpha beta = 1."""
    if m < 0:
        raise ValueError("need m >= 0")
    s_prev, s_cur = 2, d
    if m == 0:
        return 2
    for _ in range(m - 1):
        s_prev, s_cur = s_cur, d * s_cur - s_prev
    return s_cur


def w_demushkin_power_sum(d: int, n: int) -> int:
    """Demushkin exponents via power sums: (1/n) sum mu(n/m) s_m."""
    if n < 1:
        raise ValueError("need n >= 1")
    acc = Fraction(0)
    for m in divisors(n):
        mu = moebius(n // m)
        if mu:
            acc += mu * demushkin_power_sum(d, m)
    acc /= n
    assert acc.denominator == 1
    return acc.numerator


def w_demushkin_closed(d: int, n: int) -> int:
    """Demushkin exponents via the alternating binomial form of s_m:

        s_m = sum_{0 <= i <= m/2} (-1)^i (m/(m-i)) C(m-i, i) d^(m-2i).

    Must agree with w_demushkin_power_sum for all d, n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    acc = Fraction(0)
    for m in divisors(n):
        mu = moebius(n // m)
        if not mu:
            continue
        inner = Fraction(0)
        for i in range(m // 2 + 1):
            inner += (-1) ** i * Fraction(m, m - i) * comb(m - i, i) * Fraction(d) ** (m - 2 * i)
        assert inner.denominator == 1
        acc += mu * inner
    acc /= n
    assert acc.denominator == 1
    return acc.numerator


def _exponent_tuples(n: int, p: int):
    """All (k_1, ..., k_p) with k_i >= 0 and sum i*k_i = n."""

    def rec(size, remaining, suffix):
        if size == 1:
            yield (remaining,) + suffix
            return
        for k in range(remaining // size + 1):
            yield from rec(size - 1, remaining - size * k, (k,) + suffix)

    yield from rec(p, n, ())


def power_sums_free_product_cp(d: int, p: int, n: int) -> int:
    """Power sums of the inverse roots of 1 - d t - d t^2 - ... - d t^p.

    These control the free product of d copies of the cyclic group with a free
    factor; computed by the explicit multinomial sum

        s_n = sum over k_1 + 2 k_2 + ... + p k_p = n of
              (n / K) * K! / (k_1! ... k_p!) * d^K,   K = k_1 + ... + k_p.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    acc = Fraction(0)
    for ks in _exponent_tuples(n, p):
        big_k = sum(ks)
        if big_k == 0:
            continue
        multinomial = factorial(big_k)
        for k in ks:
            multinomial //= factorial(k)
        acc += Fraction(n, big_k) * multinomial * Fraction(d) ** big_k
    assert acc.denominator == 1
    return acc.numerator


def min_generators(spec: GroupSpec, p: int, n: int, c: Sequence[int]) -> int:
    """Minimal generator count of the n-th filtration subgroup (index formula).

    For the free group of rank d the subgroup is free of rank
    p^(c_1 + ... + c_(n-1)) (d - 1) + 1; for a Demushkin group of rank d it is
    Demushkin of rank p^(...) (d - 2) + 2. Other specs are not supported.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if len(c) < n - 1:
        raise OutOfRange(f"need c_1..c_{n - 1}, got {len(c)} values")
    if isinstance(spec, Free) and spec.rank >= 1:
        scale, shift = spec.rank - 1, 1
    elif isinstance(spec, Demushkin) and spec.rank >= 2:
        scale, shift = spec.rank - 2, 2
    else:
        raise UnsupportedSpec(
            "index formula applies to free(d >= 1) and demushkin(d >= 2) only"
        )
    exponent = sum(c[: n - 1])
    return p ** exponent * scale + shift
