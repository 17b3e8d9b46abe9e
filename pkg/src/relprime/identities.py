"""Mertens-function identities arising from interval subset counts.

Catalog of verified identities (M is the Mertens function, all sums over
integer d, gcd written (a,b)):

  3.1   sum_{d=1}^{n+1} mu(d) 2^((n+1)//d - (n-1)//d) = 1 + M(n+1)          for n > 1
  3.2   sum_{d=1}^{n}   mu(d) 2^(n//d - (n-3)//d)     = 3 + M(n), n even    for n > 3
                                                      = 4 + M(n), n odd
  3.3a  sum_{d=1}^{n+1} mu(d) 2^((n+1)//d - (n-1)//d + m//d - (m-1)//d)
                                                      = c + M(n+1)          for 1 < m < n
  3.3b  the same summand, summed for d = 1..m         = c + M(m)            for 1 < n < m-1

where c is 4 when (m,n) = (m,n+1) = 1, 2 when both gcds exceed 1, and 3
otherwise. Each verifier evaluates its sum literally, term by term, and
compares against the predicted right side. Range sweeps of 3.1 and 3.2
use a sieve pass over divisor-restricted mu sums instead, which is the
same exact value reached by different code (the test suite pins the two
routes to each other); 3.3 sweeps call the termwise verifiers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Iterator

from .arith import (
    MertensTable,
    MobiusTable,
    mertens,
    resolve_mertens,
    resolve_mobius,
)

THEOREMS = ("3.1", "3.2", "3.3a", "3.3b")


class GcdCase(Enum):
    """How (gcd(m, n), gcd(m, n+1)) split between 1 and greater."""

    BOTH_GT1 = "both_gt1"
    EXACTLY_ONE_COPRIME = "one_coprime"
    BOTH_COPRIME = "both_coprime"

    @property
    def constant(self) -> int:
        if self is GcdCase.BOTH_GT1:
            return 2
        if self is GcdCase.EXACTLY_ONE_COPRIME:
            return 3
        return 4


def classify_case(m: int, n: int) -> GcdCase:
    """Case split used by identities 3.3a/3.3b."""
    if m < 1 or n < 1:
        raise ValueError("classification needs positive arguments")
    first = gcd(m, n) == 1
    second = gcd(m, n + 1) == 1
    if first and second:
        return GcdCase.BOTH_COPRIME
    if first or second:
        return GcdCase.EXACTLY_ONE_COPRIME
    return GcdCase.BOTH_GT1


@dataclass(frozen=True)
class IdentityReport:
    """One verified instance; holds is simply lhs == rhs."""

    theorem: str
    n: int
    m: int | None
    case: str | None
    lhs: int
    rhs: int
    holds: bool

    def to_json_dict(self) -> dict:
        record: dict = {"schema": "identity-report/v1", "theorem": self.theorem, "n": self.n}
        if self.m is not None:
            record["m"] = self.m
        record["case"] = self.case
        record["lhs"] = str(self.lhs)
        record["rhs"] = str(self.rhs)
        record["holds"] = self.holds
        return record


def verify_t31(
    n: int,
    mobius_table: MobiusTable | None = None,
    mertens_table: MertensTable | None = None,
) -> IdentityReport:
    """Check identity 3.1 at one n, evaluating the sum term by term."""
    if n <= 1:
        raise ValueError("identity 3.1 needs n > 1")
    mu = resolve_mobius(n + 1, mobius_table).values
    lhs = 0
    for d in range(1, n + 2):
        md = mu[d]
        if md:
            lhs += md * (1 << ((n + 1) // d - (n - 1) // d))
    rhs = 1 + mertens(resolve_mertens(n + 1, mertens_table), n + 1)
    return IdentityReport("3.1", n, None, None, lhs, rhs, lhs == rhs)


def verify_t32(
    n: int,
    mobius_table: MobiusTable | None = None,
    mertens_table: MertensTable | None = None,
) -> IdentityReport:
    """Check identity 3.2 at one n; the constant depends on parity."""
    if n <= 3:
        raise ValueError("identity 3.2 needs n > 3")
    mu = resolve_mobius(n, mobius_table).values
    lhs = 0
    for d in range(1, n + 1):
        md = mu[d]
        if md:
            lhs += md * (1 << (n // d - (n - 3) // d))
    case = "even" if n % 2 == 0 else "odd"
    rhs = (3 if n % 2 == 0 else 4) + mertens(resolve_mertens(n, mertens_table), n)
    return IdentityReport("3.2", n, None, case, lhs, rhs, lhs == rhs)


def _t33_lhs(m: int, n: int, bound: int, mu: list[int]) -> int:
    lhs = 0
    for d in range(1, bound + 1):
        md = mu[d]
        if md:
            e = (n + 1) // d - (n - 1) // d + m // d - (m - 1) // d
            lhs += md * (1 << e)
    return lhs


def verify_t33a(
    m: int,
    n: int,
    mobius_table: MobiusTable | None = None,
    mertens_table: MertensTable | None = None,
) -> IdentityReport:
    """Check identity 3.3a (sum bound n+1) at one pair 1 < m < n."""
    if not 1 < m < n:
        raise ValueError("identity 3.3a needs 1 < m < n")
    mu = resolve_mobius(n + 1, mobius_table).values
    lhs = _t33_lhs(m, n, n + 1, mu)
    case = classify_case(m, n)
    rhs = case.constant + mertens(resolve_mertens(n + 1, mertens_table), n + 1)
    return IdentityReport("3.3a", n, m, case.value, lhs, rhs, lhs == rhs)


def verify_t33b(
    m: int,
    n: int,
    mobius_table: MobiusTable | None = None,
    mertens_table: MertensTable | None = None,
) -> IdentityReport:
    """Check identity 3.3b (sum bound m) at one pair 1 < n < m-1."""
    if not 1 < n < m - 1:
        raise ValueError("identity 3.3b needs 1 < n < m - 1")
    mu = resolve_mobius(m, mobius_table).values
    lhs = _t33_lhs(m, n, m, mu)
    case = classify_case(m, n)
    rhs = case.constant + mertens(resolve_mertens(m, mertens_table), m)
    return IdentityReport("3.3b", n, m, case.value, lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class SweepSummary:
    theorem: str
    instances: int
    failures: int

    def to_json_dict(self) -> dict:
        return {
            "schema": "sweep-summary/v1",
            "theorem": self.theorem,
            "instances": self.instances,
            "failures": self.failures,
        }


def summarize(theorem: str, reports: Iterable[IdentityReport]) -> SweepSummary:
    instances = failures = 0
    for report in reports:
        instances += 1
        if not report.holds:
            failures += 1
    return SweepSummary(theorem, instances, failures)


def _divisor_mu_sums(lo: int, hi: int, min_d: int, mu: list[int]) -> list[int]:
    """acc[x - lo] = sum of mu(d) over divisors d >= min_d of x, lo <= x <= hi."""
    acc = [0] * (hi - lo + 1)
    for d in range(min_d, hi + 1):
        md = mu[d]
        if not md:
            continue
        start = ((lo + d - 1) // d) * d
        for x in range(start, hi + 1, d):
            acc[x - lo] += md
    return acc


def _sweep_t31(
    ns: list[int], mobius_table: MobiusTable | None, mertens_table: MertensTable | None
) -> Iterator[IdentityReport]:
    # Only d | n or d | n+1 contribute an exponent above 0, and for d >= 2
    # the exponent is exactly 1, so 2^e - 1 collapses to divisor mu-sums:
    # lhs = 3 + A(n) + A(n+1) + M(n+1) with A(x) = sum_{d|x, d>=2} mu(d).
    lo, hi = min(ns), max(ns)
    mu = resolve_mobius(hi + 1, mobius_table).values
    mer = resolve_mertens(hi + 1, mertens_table)
    acc = _divisor_mu_sums(lo, hi + 1, 2, mu)
    for n in ns:
        lhs = 3 + acc[n - lo] + acc[n + 1 - lo] + mertens(mer, n + 1)
        rhs = 1 + mertens(mer, n + 1)
        yield IdentityReport("3.1", n, None, None, lhs, rhs, lhs == rhs)


def _sweep_t32(
    ns: list[int], mobius_table: MobiusTable | None, mertens_table: MertensTable | None
) -> Iterator[IdentityReport]:
    # Among the window {n-2, n-1, n}: d=1 covers all three (2^3 - 1 = 7),
    # d=2 covers two of them for even n (2^2 - 1 = 3, weighted mu(2) = -1)
    # and one for odd n; every d >= 3 covers at most one, so the rest
    # collapses to B(n-2) + B(n-1) + B(n) with B(x) = sum_{d|x, d>=3} mu(d).
    lo, hi = min(ns), max(ns)
    mu = resolve_mobius(hi, mobius_table).values
    mer = resolve_mertens(hi, mertens_table)
    acc = _divisor_mu_sums(lo - 2, hi, 3, mu)
    base = lo - 2
    for n in ns:
        lhs = (
            7
            + (-3 if n % 2 == 0 else -1)
            + acc[n - 2 - base]
            + acc[n - 1 - base]
            + acc[n - base]
            + mertens(mer, n)
        )
        case = "even" if n % 2 == 0 else "odd"
        rhs = (3 if n % 2 == 0 else 4) + mertens(mer, n)
        yield IdentityReport("3.2", n, None, case, lhs, rhs, lhs == rhs)


def sweep(
    theorem: str,
    n_range: Iterable[int],
    m_range: Iterable[int] | None = None,
    mobius_table: MobiusTable | None = None,
    mertens_table: MertensTable | None = None,
) -> Iterator[IdentityReport]:
    """Yield one report per in-domain instance, in deterministic order.

    Out-of-domain points are skipped silently (for 3.3a only pairs with
    1 < m < n are emitted, and so on). Failures never stop the stream;
    callers tally them, e.g. with summarize().
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown identity {theorem!r}; expected one of {THEOREMS}")
    if theorem in ("3.1", "3.2"):
        if m_range is not None:
            raise ValueError(f"identity {theorem} takes only an n range")
        floor = 2 if theorem == "3.1" else 4
        ns = [n for n in n_range if n >= floor]
        if not ns:
            return
        engine = _sweep_t31 if theorem == "3.1" else _sweep_t32
        yield from engine(ns, mobius_table, mertens_table)
        return
    if m_range is None:
        raise ValueError(f"identity {theorem} needs both an m range and an n range")
    ms = list(m_range)
    ns = list(n_range)
    if theorem == "3.3a":
        bound = max((n + 1 for n in ns), default=1)
        mu = resolve_mobius(bound, mobius_table)
        mer = resolve_mertens(bound, mertens_table)
        for m in ms:
            for n in ns:
                if 1 < m < n:
                    yield verify_t33a(m, n, mu, mer)
    else:
        bound = max(ms, default=1)
        mu = resolve_mobius(max(bound, 1), mobius_table)
        mer = resolve_mertens(max(bound, 1), mertens_table)
        for m in ms:
            for n in ns:
                if 1 < n < m - 1:
                    yield verify_t33b(m, n, mu, mer)
