"""Sieved Mobius and Mertens tables plus exact integer helpers.

Everything is plain Python int arithmetic, so results are exact at any
size. The tables are built once and read many times: MobiusTable holds
mu(1..limit), MertensTable the running sums M(n) = sum_{d<=n} mu(d).
A process-wide table pair grows lazily through ensure_mobius and
ensure_mertens; tables are never mutated after construction, only
replaced, so shared reads are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable


@dataclass(frozen=True)
class MobiusTable:
    """mu(n) for 1 <= n <= limit; values[0] is an unused sentinel."""

    limit: int
    values: list[int]

    def mu(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"mu({n}) is outside table range 1..{self.limit}")
        return self.values[n]


@dataclass(frozen=True)
class MertensTable:
    """M(n) = sum_{d=1}^{n} mu(d) for 0 <= n <= limit, with M(0) = 0."""

    limit: int
    prefix: list[int]


def build_mobius(limit: int) -> MobiusTable:
    """Sieve mu(1..limit) in linear time.

    Every composite is struck exactly once, through its smallest prime
    factor p: mu(i*p) = -mu(i) when p does not divide i, and mu(i*p) = 0
    when it does (i*p then carries p^2).
    """
    if limit < 1:
        raise ValueError("table limit must be at least 1")
    mu = [0] * (limit + 1)
    mu[1] = 1
    is_composite = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not is_composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            is_composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return MobiusTable(limit, mu)


def build_mertens(mobius: MobiusTable) -> MertensTable:
    """Accumulate a Mobius table into Mertens prefix sums."""
    prefix = [0] * (mobius.limit + 1)
    acc = 0
    values = mobius.values
    for n in range(1, mobius.limit + 1):
        acc += values[n]
        prefix[n] = acc
    return MertensTable(mobius.limit, prefix)


def mertens(table: MertensTable, n: int) -> int:
    """M(n) looked up from a prefix table; n may be 0."""
    if not 0 <= n <= table.limit:
        raise ValueError(f"M({n}) is outside table range 0..{table.limit}")
    return table.prefix[n]


_mobius_cache: MobiusTable | None = None
_mertens_cache: MertensTable | None = None


def ensure_mobius(limit: int) -> MobiusTable:
    """Return a shared Mobius table covering at least `limit`.

    Grows geometrically so creeping bounds do not trigger rebuild storms.
    Replacement is atomic; concurrent callers at worst build twice.
    """
    global _mobius_cache
    table = _mobius_cache
    if table is None or table.limit < limit:
        table = build_mobius(max(limit, 2 * (table.limit if table else 0), 1))
        _mobius_cache = table
    return table


def ensure_mertens(limit: int) -> MertensTable:
    """Mertens companion of ensure_mobius, grown the same way."""
    global _mertens_cache
    table = _mertens_cache
    if table is None or table.limit < limit:
        table = build_mertens(ensure_mobius(limit))
        _mertens_cache = table
    return table


def resolve_mobius(bound: int, table: MobiusTable | None) -> MobiusTable:
    """Use the caller's table (which must cover bound) or the shared one."""
    if table is None:
        return ensure_mobius(bound)
    if table.limit < bound:
        raise ValueError(f"Mobius table limit {table.limit} is below required {bound}")
    return table


def resolve_mertens(bound: int, table: MertensTable | None) -> MertensTable:
    if table is None:
        return ensure_mertens(bound)
    if table.limit < bound:
        raise ValueError(f"Mertens table limit {table.limit} is below required {bound}")
    return table


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors are defined for positive integers only")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def gcd_all(xs: Iterable[int]) -> int:
    """gcd of a nonempty collection of positive integers."""
    xs = list(xs)
    if not xs:
        raise ValueError("gcd of an empty collection is undefined")
    if any(x < 1 for x in xs):
        raise ValueError("gcd_all expects positive integers")
    return reduce(math.gcd, xs)


def pow2(e: int) -> int:
    """2**e as an exact integer; e must be nonnegative."""
    if e < 0:
        raise ValueError("negative power of two requested")
    return 1 << e


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 whenever n < 0 or k > n.

    The counting sums feed differences of floor divisions into the upper
    index, which can drop below the lower one at large d; the zero
    convention makes those terms vanish instead of erroring out.
    """
    if k < 0:
        raise ValueError("binomial lower index must be nonnegative")
    if n < 0 or k > n:
        return 0
    return math.comb(n, k)
