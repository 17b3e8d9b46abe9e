"""Command-line front end.

Subcommands: mobius, mertens (point lookups), count (closed formula,
brute-force oracle, or both with a match check), verify (identity sweeps
streamed as JSON lines), bench (micro-benchmarks). Exit codes: 0 success
and every checked instance held; 1 identity or cross-check failure;
2 argument or parse error; 3 enumeration or budget cap exceeded.

Numeric results are serialized as exact decimal strings in JSON output,
never as floats, so arbitrarily large counts round-trip losslessly.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from typing import Sequence

from . import formulas, identities
from .arith import build_mobius, build_mertens, ensure_mertens, ensure_mobius, mertens
from .formulas import Interval, IntervalUnion
from .oracle import DEFAULT_CAP, CapacityError, ConstraintSpec, GroundSet, count_relprime

SIEVE_BUDGET = 30_000_000
FORMULA_BUDGET = 250_000

_INTERVAL_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def parse_interval(text: str) -> Interval:
    match = _INTERVAL_RE.match(text)
    if not match:
        raise ValueError(f"bad interval {text!r}; expected L..M")
    return Interval(int(match.group(1)), int(match.group(2)))


def parse_ground(text: str) -> Interval | IntervalUnion:
    parts = text.split(",")
    if len(parts) == 1:
        return parse_interval(parts[0])
    if len(parts) == 2:
        return IntervalUnion(parse_interval(parts[0]), parse_interval(parts[1]))
    raise ValueError(f"bad ground set {text!r}; expected L..M or L1..M1,L2..M2")


def parse_span(text: str) -> range:
    match = _INTERVAL_RE.match(text)
    if not match:
        raise ValueError(f"bad range {text!r}; expected A..B")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise ValueError(f"bad range {text!r}; lower end exceeds upper end")
    return range(lo, hi + 1)


def _emit(args: argparse.Namespace, schema: str, result: dict, elapsed_ms: float, plain: str) -> None:
    if getattr(args, "json", False):
        record = {
            "schema": schema,
            "command": args.command_echo,
            "result": result,
            "elapsed_ms": round(elapsed_ms, 3),
        }
        print(json.dumps(record))
    else:
        print(plain)


def cmd_mobius(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError("n must be at least 1")
    start = time.perf_counter()
    value = ensure_mobius(args.n).mu(args.n)
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit(args, "mobius/v1", {"n": args.n, "mu": str(value)}, elapsed, str(value))
    return 0


def cmd_mertens(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError("n must be at least 1")
    start = time.perf_counter()
    value = mertens(ensure_mertens(args.n), args.n)
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit(args, "mertens/v1", {"n": args.n, "mertens": str(value)}, elapsed, str(value))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    ground = parse_ground(args.spec)
    k = args.k
    if k is not None and k < 1:
        raise ValueError("--k must be at least 1")
    start = time.perf_counter()
    formula_result = oracle_value = None
    if args.method in ("formula", "both"):
        formula_result = formulas.count(ground, k)
    if args.method in ("oracle", "both"):
        ground_set = GroundSet(tuple(ground.elements()), cap=args.cap)
        spec = ConstraintSpec(cardinality=k) if k is not None else None
        oracle_value = count_relprime(ground_set, spec)
    elapsed = (time.perf_counter() - start) * 1000.0

    result: dict = {"spec": str(ground), "k": k, "method": args.method}
    if args.method == "formula":
        result["value"] = str(formula_result.value)
        result["formula_id"] = formula_result.formula_id.value
        _emit(args, "count/v1", result, elapsed, str(formula_result.value))
        return 0
    if args.method == "oracle":
        result["value"] = str(oracle_value)
        _emit(args, "count/v1", result, elapsed, str(oracle_value))
        return 0
    match = formula_result.value == oracle_value
    result.update(
        formula=str(formula_result.value),
        oracle=str(oracle_value),
        formula_id=formula_result.formula_id.value,
        match=match,
    )
    plain = f"formula={formula_result.value} oracle={oracle_value} match={'true' if match else 'false'}"
    _emit(args, "count/v1", result, elapsed, plain)
    return 0 if match else 1


def cmd_verify(args: argparse.Namespace) -> int:
    theorem = args.theorem
    if args.n is None:
        raise ValueError("verify needs --n A..B")
    needs_m = theorem in ("3.3a", "3.3b")
    if needs_m and args.m is None:
        raise ValueError(f"identity {theorem} needs --m A..B as well")
    if not needs_m and args.m is not None:
        raise ValueError(f"identity {theorem} does not take --m")
    n_span = parse_span(args.n)
    m_span = parse_span(args.m) if needs_m else None
    start = time.perf_counter()
    instances = failures = 0
    for report in identities.sweep(theorem, n_span, m_span):
        instances += 1
        if not report.holds:
            failures += 1
        print(json.dumps(report.to_json_dict()))
    elapsed = (time.perf_counter() - start) * 1000.0
    summary = identities.SweepSummary(theorem, instances, failures).to_json_dict()
    summary["elapsed_ms"] = round(elapsed, 3)
    print(json.dumps(summary))
    return 0 if failures == 0 else 1


def cmd_bench(args: argparse.Namespace) -> int:
    size = args.size
    if size < 1:
        raise ValueError("size must be at least 1")
    if args.target == "sieve":
        if size > SIEVE_BUDGET:
            raise CapacityError(f"sieve size {size} exceeds budget {SIEVE_BUDGET}")
        start = time.perf_counter()
        table = build_mobius(size)
        elapsed = (time.perf_counter() - start) * 1000.0
        checksum = mertens(build_mertens(table), size)
        result = {"target": "sieve", "size": size, "mertens_at_limit": str(checksum)}
        plain = f"sieve size={size} elapsed_ms={elapsed:.1f} mertens={checksum}"
    elif args.target == "formula":
        if size > FORMULA_BUDGET:
            raise CapacityError(f"formula size {size} exceeds budget {FORMULA_BUDGET}")
        # fixed ladder: eight intervals with tops stepping up to the size
        ladder = sorted({max(1, size * i // 8) for i in range(1, 9)})
        table = ensure_mobius(size)
        start = time.perf_counter()
        digits = []
        for top in ladder:
            value = formulas.f_interval(top // 2 + 1, top, table)
            digits.append(len(str(value)))
        elapsed = (time.perf_counter() - start) * 1000.0
        result = {"target": "formula", "size": size, "ladder": ladder, "result_digits": digits}
        plain = f"formula size={size} calls={len(ladder)} elapsed_ms={elapsed:.1f}"
    else:
        if size > args.cap:
            raise CapacityError(f"oracle size {size} exceeds the enumeration cap of {args.cap}")
        ground = GroundSet(tuple(range(1, size + 1)), cap=args.cap)
        start = time.perf_counter()
        value = count_relprime(ground)
        elapsed = (time.perf_counter() - start) * 1000.0
        result = {
            "target": "oracle",
            "size": size,
            "subsets": str((1 << size) - 1),
            "relprime_count": str(value),
        }
        plain = f"oracle size={size} count={value} elapsed_ms={elapsed:.1f}"
    _emit(args, "bench/v1", result, elapsed, plain)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relprime",
        description="Exact counts of relatively prime subsets of integer intervals, "
        "Mertens identities, and a brute-force cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mobius = sub.add_parser("mobius", help="print mu(n)")
    p_mobius.add_argument("n", type=int)
    p_mobius.add_argument("--json", action="store_true")
    p_mobius.set_defaults(handler=cmd_mobius)

    p_mertens = sub.add_parser("mertens", help="print M(n)")
    p_mertens.add_argument("n", type=int)
    p_mertens.add_argument("--json", action="store_true")
    p_mertens.set_defaults(handler=cmd_mertens)

    p_count = sub.add_parser("count", help="count relatively prime subsets of L..M[,L2..M2]")
    p_count.add_argument("spec")
    p_count.add_argument("--k", type=int, default=None, help="restrict to subsets of this size")
    p_count.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p_count.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle enumeration cap")
    p_count.add_argument("--json", action="store_true")
    p_count.set_defaults(handler=cmd_count)

    p_verify = sub.add_parser("verify", help="sweep an identity, one JSON line per instance")
    p_verify.add_argument("theorem", choices=identities.THEOREMS)
    p_verify.add_argument("--n", default=None, metavar="A..B")
    p_verify.add_argument("--m", default=None, metavar="A..B")
    p_verify.set_defaults(handler=cmd_verify)

    p_bench = sub.add_parser("bench", help="time the sieve, the formulas, or the oracle")
    p_bench.add_argument("target", choices=("sieve", "formula", "oracle"))
    p_bench.add_argument("size", type=int)
    p_bench.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle enumeration cap")
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    # counts get huge (thousands of digits); lift the int->str guard so
    # exact decimal output never truncates or errors
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command_echo = " ".join(argv)
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
