"""Brute-force ground truth for the counting formulas.

Everything here enumerates on purpose. count_relprime visits all
2^(free elements) subset extensions and takes one gcd per subset; there is
no combinatorial shortcut to inherit a bug from. The enumeration cap keeps
an accidental 2^40 request from eating the machine.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import comb, gcd
from typing import Sequence

from .arith import divisors

DEFAULT_CAP = 24


class CapacityError(RuntimeError):
    """Requested enumeration exceeds the configured subset cap."""


@dataclass(frozen=True)
class GroundSet:
    """Finite set of distinct positive integers, stored ascending.

    Input order does not matter; elements are sorted on construction, so
    every count taken over the set is order-invariant by normalization.
    """

    elements: tuple[int, ...]
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        elems = tuple(sorted(self.elements))
        if any(x < 1 for x in elems):
            raise ValueError("ground set elements must be positive")
        if any(a == b for a, b in zip(elems, elems[1:])):
            raise ValueError("ground set elements must be distinct")
        if len(elems) > self.cap:
            raise CapacityError(
                f"{len(elems)} elements exceed the enumeration cap of {self.cap}"
            )
        object.__setattr__(self, "elements", elems)


@dataclass(frozen=True)
class ConstraintSpec:
    """Membership constraints: forced elements, optional exact cardinality."""

    required: tuple[int, ...] = ()
    cardinality: int | None = None

    def __post_init__(self) -> None:
        req = tuple(sorted(set(self.required)))
        if any(x < 1 for x in req):
            raise ValueError("required elements must be positive")
        if self.cardinality is not None and self.cardinality < 1:
            raise ValueError("cardinality constraint must be at least 1")
        object.__setattr__(self, "required", req)


def _unpack(ground: GroundSet, spec: ConstraintSpec | None) -> tuple[tuple[int, ...], int | None]:
    if len(ground.elements) > ground.cap:
        raise CapacityError(
            f"{len(ground.elements)} elements exceed the enumeration cap of {ground.cap}"
        )
    if spec is None:
        return (), None
    if not set(spec.required) <= set(ground.elements):
        raise ValueError("required elements must belong to the ground set")
    k = spec.cardinality
    if k is not None and not len(spec.required) <= k <= len(ground.elements):
        raise ValueError("cardinality must lie between |required| and |elements|")
    return spec.required, k


@lru_cache(maxsize=None)
def _subset_gcd_tally(free: tuple[int, ...], seed: int) -> tuple[int, ...]:
    """Per-cardinality counts of relatively prime extensions of a seed gcd.

    Entry j is the number of subsets S of free with |S| = j and
    gcd(seed, *S) = 1. Seed 0 means nothing is forced, so the empty
    extension (gcd 0) never counts. All 2^len(free) extensions are
    visited, one incremental gcd apiece, one cardinality layer at a time.
    """
    rows: list[list[int]] = [[seed]]
    for x in free:
        rows.append([])
        for j in range(len(rows) - 2, -1, -1):
            rows[j + 1].extend([gcd(d, x) for d in rows[j]])
    return tuple(row.count(1) for row in rows)


def count_relprime(ground: GroundSet, spec: ConstraintSpec | None = None) -> int:
    """Count subsets X with gcd(X) = 1 under the given constraints.

    X ranges over nonempty subsets of the ground set that include every
    required element and, when a cardinality is given, have exactly that
    many members.
    """
    required, k = _unpack(ground, spec)
    req_set = set(required)
    free = tuple(x for x in ground.elements if x not in req_set)
    seed = reduce(gcd, required, 0)
    tally = _subset_gcd_tally(free, seed)
    if k is None:
        return sum(tally)
    return tally[k - len(required)]


def gcd_class_counts(ground: GroundSet, spec: ConstraintSpec | None = None) -> dict[int, int]:
    """Histogram {d: number of constrained subsets with gcd exactly d}.

    Plain bitmask walk; used by the partition check and the scaling tests,
    always on small sets.
    """
    required, k = _unpack(ground, spec)
    req_set = set(required)
    free = [x for x in ground.elements if x not in req_set]
    seed = reduce(gcd, required, 0)
    counts: dict[int, int] = {}
    for mask in range(1 << len(free)):
        size = len(required) + mask.bit_count()
        if size == 0:
            continue
        if k is not None and size != k:
            continue
        d = seed
        mm = mask
        while mm:
            low = mm & -mm
            d = gcd(d, free[low.bit_length() - 1])
            mm ^= low
        counts[d] = counts.get(d, 0) + 1
    return counts


def gcd_partition_check(ground: GroundSet, spec: ConstraintSpec | None = None) -> bool:
    """Check that the gcd classes partition the constrained subsets.

    Every admissible subset has exactly one gcd, so the class sizes must
    add back up to the total number of admissible subsets.
    """
    required, k = _unpack(ground, spec)
    counts = gcd_class_counts(ground, spec)
    nfree = len(ground.elements) - len(required)
    if k is None:
        total = (1 << nfree) - (0 if required else 1)
    else:
        total = comb(nfree, k - len(required))
    return sum(counts.values()) == total


def mobius_naive(n: int) -> int:
    """mu(n) by trial-division factorization; the slow, obvious route."""
    if n < 1:
        raise ValueError("mu is defined on positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def inversion_check(a: int, b: int, bounds: Sequence[int], seed: int = 0) -> bool:
    """Round-trip a random integer function through the divisor transform.

    The function takes a coordinates walked over exact divisors and b
    coordinates walked over floor divisions. With g = gcd of the first a
    coordinates, define G(p) = sum_{d | g} F(m/d, n//d). The check
    recovers F from G by mu-weighted sums at every lattice point, then
    repeats the trip in the other direction from a fresh random G. Both
    directions must match exactly everywhere.
    """
    if a < 1:
        raise ValueError("need at least one divisor-type coordinate")
    if b < 0 or len(bounds) != a + b or any(limit < 1 for limit in bounds):
        raise ValueError("bounds must list one positive limit per coordinate")
    rng = random.Random(seed)
    axes = [range(1, bounds[i] + 1) for i in range(a)]
    # floor-divided coordinates reach 0 under n//d, so include it
    axes += [range(0, bounds[a + j] + 1) for j in range(b)]
    points = list(product(*axes))

    def pull(table: dict, p: tuple, weight) -> int:
        ms, ns = p[:a], p[a:]
        total = 0
        for d in divisors(reduce(gcd, ms)):
            q = tuple(m // d for m in ms) + tuple(n // d for n in ns)
            total += weight(d) * table[q]
        return total

    def one(_d: int) -> int:
        return 1

    f = {p: rng.randint(-99, 99) for p in points}
    g_from_f = {p: pull(f, p, one) for p in points}
    if any(pull(g_from_f, p, mobius_naive) != f[p] for p in points):
        return False
    g = {p: rng.randint(-99, 99) for p in points}
    f_from_g = {p: pull(g, p, mobius_naive) for p in points}
    return all(pull(f_from_g, p, one) == g[p] for p in points)
