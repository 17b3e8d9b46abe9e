"""Closed-form counts of relatively prime subsets of integer intervals.

A set X of positive integers is relatively prime when gcd(X) = 1. The
functions here count such subsets of four ground-set shapes exactly, by
alternating divisor sums over a sieved Mobius table:

  f_prefix(n)                subsets of [1, n]
  f_interval(l, m)           subsets of [l, m]
  f_prefix_union(m1, l2, m2) subsets of [1, m1] u [l2, m2]
  f_union(u)                 subsets of [l1, m1] u [l2, m2]

The *_k variants fix the subset cardinality (k >= 1 always; there is no
empty relatively prime set). The g_/h1_/h2_ families additionally force
named elements to be members: g forces l2 on a prefix-union ground set,
h1 forces l1 on an interval, h2 forces both l1 and l2 on a union. Forcing
an element x restricts the Mobius sum to divisors of x, since any common
divisor of the subset must divide x.

Every function accepts an optional prebuilt MobiusTable; by default the
shared lazily-grown table is used. All results are exact ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterator, Union

from .arith import MobiusTable, binom, divisors, resolve_mobius


@dataclass(frozen=True)
class Interval:
    """Integer interval [lo, hi] with 1 <= lo <= hi."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 1 or self.hi < self.lo:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def elements(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class IntervalUnion:
    """Two intervals in ascending order with first.hi < second.lo.

    A contiguous pair (second starts right after the first ends) is
    accepted; overlap is rejected rather than silently merged.
    """

    first: Interval
    second: Interval

    def __post_init__(self) -> None:
        if self.first.hi >= self.second.lo:
            raise ValueError("interval pieces must be disjoint and ascending")

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def elements(self) -> Iterator[int]:
        yield from self.first.elements()
        yield from self.second.elements()

    def __str__(self) -> str:
        return f"{self.first},{self.second}"


GroundShape = Union[Interval, IntervalUnion]


class FormulaId(str, Enum):
    INTERVAL = "interval"
    INTERVAL_K = "interval-k"
    PREFIX_UNION = "prefix-union"
    PREFIX_UNION_K = "prefix-union-k"
    UNION = "union"
    UNION_K = "union-k"


@dataclass(frozen=True)
class CountResult:
    """A count together with the equation that produced it."""

    value: int
    formula_id: FormulaId
    spec: str
    k: int | None = None


def _require_k(k: int) -> None:
    if k < 1:
        raise ValueError("cardinality k must be at least 1")


def _check_prefix_union(m1: int, l2: int, m2: int) -> None:
    if not 1 <= m1 < l2 <= m2:
        raise ValueError(f"need 1 <= m1 < l2 <= m2, got m1={m1}, l2={l2}, m2={m2}")


# --- unconstrained counts ---------------------------------------------------


def f_prefix(n: int, table: MobiusTable | None = None) -> int:
    """Number of relatively prime subsets of [1, n].

    Evaluates sum_{d=1}^{n} mu(d) * (2^(n//d) - 1): the d-th term counts
    nonempty subsets of the n//d multiples of d, signed to sieve the
    common divisor down to exactly 1.
    """
    if n < 1:
        raise ValueError("prefix bound must be positive")
    mu = resolve_mobius(n, table).values
    total = 0
    for d in range(1, n + 1):
        md = mu[d]
        if md:
            total += md * ((1 << (n // d)) - 1)
    return total


def fk_prefix(n: int, k: int, table: MobiusTable | None = None) -> int:
    """Relatively prime k-subsets of [1, n]: sum mu(d) * C(n//d, k)."""
    if n < 1:
        raise ValueError("prefix bound must be positive")
    _require_k(k)
    mu = resolve_mobius(n, table).values
    total = 0
    for d in range(1, n + 1):
        md = mu[d]
        if md:
            total += md * binom(n // d, k)
    return total


def f_interval(l: int, m: int, table: MobiusTable | None = None) -> int:
    """Relatively prime subsets of [l, m].

    Evaluates sum_{d=1}^{m} mu(d) * (2^(m//d - (l-1)//d) - 1); the
    exponent counts the multiples of d inside [l, m].
    """
    if not 1 <= l <= m:
        raise ValueError(f"need 1 <= l <= m, got l={l}, m={m}")
    mu = resolve_mobius(m, table).values
    total = 0
    lm1 = l - 1
    for d in range(1, m + 1):
        md = mu[d]
        if md:
            total += md * ((1 << (m // d - lm1 // d)) - 1)
    return total


def fk_interval(l: int, m: int, k: int, table: MobiusTable | None = None) -> int:
    """Relatively prime k-subsets of [l, m]."""
    if not 1 <= l <= m:
        raise ValueError(f"need 1 <= l <= m, got l={l}, m={m}")
    _require_k(k)
    mu = resolve_mobius(m, table).values
    total = 0
    lm1 = l - 1
    for d in range(1, m + 1):
        md = mu[d]
        if md:
            total += md * binom(m // d - lm1 // d, k)
    return total


def f_prefix_union(m1: int, l2: int, m2: int, table: MobiusTable | None = None) -> int:
    """Relatively prime subsets of [1, m1] u [l2, m2].

    Evaluates sum_{d=1}^{m2} mu(d) * (2^(m1//d + m2//d - (l2-1)//d) - 1).
    """
    _check_prefix_union(m1, l2, m2)
    mu = resolve_mobius(m2, table).values
    total = 0
    l2m1 = l2 - 1
    for d in range(1, m2 + 1):
        md = mu[d]
        if md:
            e = m1 // d + m2 // d - l2m1 // d
            assert e >= 0
            total += md * ((1 << e) - 1)
    return total


def fk_prefix_union(m1: int, l2: int, m2: int, k: int, table: MobiusTable | None = None) -> int:
    """Relatively prime k-subsets of [1, m1] u [l2, m2]."""
    _check_prefix_union(m1, l2, m2)
    _require_k(k)
    mu = resolve_mobius(m2, table).values
    total = 0
    l2m1 = l2 - 1
    for d in range(1, m2 + 1):
        md = mu[d]
        if md:
            total += md * binom(m1 // d + m2 // d - l2m1 // d, k)
    return total


def f_union(u: IntervalUnion, table: MobiusTable | None = None) -> int:
    """Relatively prime subsets of a two-interval union.

    Evaluates sum_{d=1}^{m2} mu(d) * (2^e - 1) with
    e = m1//d - (l1-1)//d + m2//d - (l2-1)//d, the number of multiples of
    d lying in either interval.
    """
    l1, m1 = u.first.lo, u.first.hi
    l2, m2 = u.second.lo, u.second.hi
    mu = resolve_mobius(m2, table).values
    total = 0
    a, b = l1 - 1, l2 - 1
    for d in range(1, m2 + 1):
        md = mu[d]
        if md:
            e = m1 // d - a // d + m2 // d - b // d
            assert e >= 0
            total += md * ((1 << e) - 1)
    return total


def fk_union(u: IntervalUnion, k: int, table: MobiusTable | None = None) -> int:
    """Relatively prime k-subsets of a two-interval union."""
    _require_k(k)
    l1, m1 = u.first.lo, u.first.hi
    l2, m2 = u.second.lo, u.second.hi
    mu = resolve_mobius(m2, table).values
    total = 0
    a, b = l1 - 1, l2 - 1
    for d in range(1, m2 + 1):
        md = mu[d]
        if md:
            total += md * binom(m1 // d - a // d + m2 // d - b // d, k)
    return total


# --- counts with forced members ---------------------------------------------


def g_count(m1: int, l2: int, m2: int, table: MobiusTable | None = None) -> int:
    """Relatively prime subsets of [1, m1] u [l2, m2] that contain l2.

    Only divisors of the forced element survive (d | gcd(X) | l2), so the
    sum runs over d | l2: sum mu(d) * 2^(m1//d + m2//d - l2/d).
    """
    _check_prefix_union(m1, l2, m2)
    mu = resolve_mobius(l2, table).values
    total = 0
    for d in divisors(l2):
        md = mu[d]
        if md:
            e = m1 // d + m2 // d - l2 // d
            assert e >= 0
            total += md * (1 << e)
    return total


def gk_count(m1: int, l2: int, m2: int, k: int, table: MobiusTable | None = None) -> int:
    """k-subsets counted by g_count; l2 is one member, k-1 remain free."""
    _check_prefix_union(m1, l2, m2)
    _require_k(k)
    mu = resolve_mobius(l2, table).values
    total = 0
    for d in divisors(l2):
        md = mu[d]
        if md:
            total += md * binom(m1 // d + m2 // d - l2 // d, k - 1)
    return total


def h1_count(l1: int, m1: int, table: MobiusTable | None = None) -> int:
    """Relatively prime subsets of [l1, m1] that contain l1.

    sum over d | l1 of mu(d) * 2^(m1//d - l1/d).
    """
    if not 1 <= l1 <= m1:
        raise ValueError(f"need 1 <= l1 <= m1, got l1={l1}, m1={m1}")
    mu = resolve_mobius(l1, table).values
    total = 0
    for d in divisors(l1):
        md = mu[d]
        if md:
            e = m1 // d - l1 // d
            assert e >= 0
            total += md * (1 << e)
    return total


def h1k_count(l1: int, m1: int, k: int, table: MobiusTable | None = None) -> int:
    """k-subsets counted by h1_count.

    The binomial lower index is k-1: l1 is already a member, so k-1
    further elements are chosen. (With lower index k the k=1 case would
    fail to reduce to [l1 = 1]; the brute-force oracle agrees with k-1.)
    """
    if not 1 <= l1 <= m1:
        raise ValueError(f"need 1 <= l1 <= m1, got l1={l1}, m1={m1}")
    _require_k(k)
    mu = resolve_mobius(l1, table).values
    total = 0
    for d in divisors(l1):
        md = mu[d]
        if md:
            total += md * binom(m1 // d - l1 // d, k - 1)
    return total


def h2_count(l1: int, m1: int, l2: int, m2: int, table: MobiusTable | None = None) -> int:
    """Relatively prime subsets of [l1, m1] u [l2, m2] containing l1 and l2.

    Common divisors must divide gcd(l1, l2):
    sum over d | gcd(l1, l2) of mu(d) * 2^(m1//d + m2//d - (l1+l2)/d).
    """
    if not 1 <= l1 <= m1 or not m1 < l2 <= m2:
        raise ValueError(
            f"need 1 <= l1 <= m1 < l2 <= m2, got l1={l1}, m1={m1}, l2={l2}, m2={m2}"
        )
    g = gcd(l1, l2)
    mu = resolve_mobius(g, table).values
    total = 0
    for d in divisors(g):
        md = mu[d]
        if md:
            e = m1 // d + m2 // d - (l1 + l2) // d
            assert e >= 0
            total += md * (1 << e)
    return total


def h2k_count(l1: int, m1: int, l2: int, m2: int, k: int, table: MobiusTable | None = None) -> int:
    """k-subsets counted by h2_count; two members are forced, so k >= 2."""
    if not 1 <= l1 <= m1 or not m1 < l2 <= m2:
        raise ValueError(
            f"need 1 <= l1 <= m1 < l2 <= m2, got l1={l1}, m1={m1}, l2={l2}, m2={m2}"
        )
    if k < 2:
        raise ValueError("cardinality k must be at least 2 when two members are forced")
    g = gcd(l1, l2)
    mu = resolve_mobius(g, table).values
    total = 0
    for d in divisors(g):
        md = mu[d]
        if md:
            total += md * binom(m1 // d + m2 // d - (l1 + l2) // d, k - 2)
    return total


# --- dispatch ----------------------------------------------------------------


def count(ground: GroundShape, k: int | None = None, table: MobiusTable | None = None) -> CountResult:
    """Route a ground-set description to the matching closed form."""
    if isinstance(ground, Interval):
        if k is None:
            return CountResult(f_interval(ground.lo, ground.hi, table), FormulaId.INTERVAL, str(ground))
        return CountResult(fk_interval(ground.lo, ground.hi, k, table), FormulaId.INTERVAL_K, str(ground), k)
    if isinstance(ground, IntervalUnion):
        m1, l2, m2 = ground.first.hi, ground.second.lo, ground.second.hi
        if ground.first.lo == 1:
            if k is None:
                return CountResult(f_prefix_union(m1, l2, m2, table), FormulaId.PREFIX_UNION, str(ground))
            return CountResult(fk_prefix_union(m1, l2, m2, k, table), FormulaId.PREFIX_UNION_K, str(ground), k)
        if k is None:
            return CountResult(f_union(ground, table), FormulaId.UNION, str(ground))
        return CountResult(fk_union(ground, k, table), FormulaId.UNION_K, str(ground), k)
    raise TypeError(f"unsupported ground set {ground!r}")
