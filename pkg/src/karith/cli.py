"""Command-line surface for the arithmetic, orbit, coverage and sequence ops.

Output formats: plain (space-separated values and bracketed rows), csv, and
json (canonical: sorted keys, no whitespace, no floating point, so parse +
re-render is byte identical).  Exit codes: 0 success (including inexact
quotients and empty results), 2 usage error, 3 domain error, 4 fixture
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .collatz import (
    DEFAULT_MAGNITUDE_BOUND,
    DEFAULT_STEP_LIMIT,
    goldbach_scan,
    orbit,
    orbit_length_scan,
)
from .core import (
    DomainError,
    NotDivisible,
    k_divisors,
    k_primes_below,
    k_product,
    k_quotient,
)
from .coverage import residual_set, seq_residual_set
from .generated import (
    cubes_sequence,
    exact_divisor_count_numbers,
    seq_divisors,
    seq_primes_below,
    seq_product,
    seq_quotient,
    squares_sequence,
)
from .generators import (
    Constant,
    Generator,
    GeneratorSpecError,
    parse_generator,
    supports_default_divisor_bound,
)
from .oeis import BFileParseError, compare_prefix, parse_bfile

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4


def canon_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _arith(text: str) -> Generator:
    try:
        return parse_generator(text)
    except GeneratorSpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, text: str) -> None:
    payload = text if text.endswith("\n") or text == "" else text + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


# ---------------------------------------------------------------- product

def cmd_product(args) -> int:
    g = args.arith
    if isinstance(g, Constant):
        result = k_product(args.m, args.n, g.k)
    else:
        result = seq_product(args.m, args.n, g)
    if args.format == "json":
        _emit(args, canon_json({
            "arith": g.spec(), "command": "product",
            "m": args.m, "n": args.n, "result": result,
        }))
    elif args.format == "csv":
        _emit(args, f"m,n,result\n{args.m},{args.n},{result}")
    else:
        _emit(args, str(result))
    return EXIT_OK


def cmd_quotient(args) -> int:
    g = args.arith
    if isinstance(g, Constant):
        result = k_quotient(args.a, args.b, g.k)
    else:
        result = seq_quotient(args.a, args.b, g)
    if isinstance(result, NotDivisible):
        status, value = "not_divisible", str(result.ratio)
    else:
        status, value = "ok", result
    if args.format == "json":
        _emit(args, canon_json({
            "a": args.a, "arith": g.spec(), "b": args.b,
            "command": "quotient", "status": status,
            "ratio" if status == "not_divisible" else "result": value,
        }))
    elif args.format == "csv":
        _emit(args, f"a,b,status,value\n{args.a},{args.b},{status},{value}")
    else:
        _emit(args, str(result) if status == "ok" else f"NotDivisible {value}")
    return EXIT_OK


# --------------------------------------------------------------- divisors

def _divisor_report(g: Generator, subject: int, bound: int | None):
    """Report plus whether the scan bound had to be defaulted without a lemma."""
    if isinstance(g, Constant):
        return k_divisors(subject, g.k), False
    if bound is None and not supports_default_divisor_bound(g):
        bound = 6 * abs(subject)
        _warn(f"no divisor bound is known for {g.spec()}; defaulting to 6*|a| = {bound}")
        return seq_divisors(subject, g, search_bound=bound), True
    return seq_divisors(subject, g, search_bound=bound), False


def cmd_divisors(args) -> int:
    g = args.arith
    report, defaulted = _divisor_report(g, args.a, args.bound)
    if args.format == "json":
        _emit(args, canon_json({
            "arith": g.spec(), "bound_defaulted": defaulted,
            "command": "divisors", "divisors": list(report.divisors),
            "search_bound": report.search_bound, "subject": report.subject,
            "witnesses": [list(w) for w in report.witnesses],
        }))
    elif args.format == "csv":
        rows = "\n".join(f"{d},{b}" for d, b in report.witnesses)
        _emit(args, "divisor,witness\n" + rows)
    else:
        _emit(args, " ".join(str(d) for d in report.divisors))
    return EXIT_OK


def _resolve_bound_factor(g: Generator, factor: int | None) -> tuple[int | None, bool]:
    if factor is not None or isinstance(g, Constant) or supports_default_divisor_bound(g):
        return factor, False
    _warn(f"no divisor bound is known for {g.spec()}; defaulting to 6*a scans")
    return 6, True


def cmd_primes(args) -> int:
    g = args.arith
    factor, defaulted = _resolve_bound_factor(g, args.bound_factor)
    if isinstance(g, Constant):
        primes = k_primes_below(args.limit, g.k)
    else:
        primes = seq_primes_below(args.limit, g, bound_factor=factor)
    if args.format == "json":
        _emit(args, canon_json({
            "arith": g.spec(), "bound_defaulted": defaulted, "command": "primes",
            "limit": args.limit, "primes": primes,
        }))
    elif args.format == "csv":
        _emit(args, "prime\n" + "\n".join(str(p) for p in primes))
    else:
        _emit(args, " ".join(str(p) for p in primes))
    return EXIT_OK


# ------------------------------------------------------------------ orbit

def _parse_scan(text: str) -> list[int]:
    head, _, step_text = text.partition(":")
    lo_text, sep, hi_text = head.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"scan range must look like k1..k2[:step], got {text!r}")
    try:
        lo, hi = int(lo_text), int(hi_text)
        step = int(step_text) if step_text else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad scan range {text!r}") from None
    if step < 1:
        raise argparse.ArgumentTypeError("scan step must be positive")
    return list(range(lo, hi + 1, step))


def _orbit_summary(outcome) -> str:
    parts = [f"kind={outcome.kind.value}"]
    if outcome.ns is not None:
        parts.append(f"ns={outcome.ns}")
    if outcome.pre_period is not None:
        parts.append(f"pre_period={outcome.pre_period}")
    if outcome.kind.value == "cycle":
        parts.append(f"cycle_length={outcome.cycle_length}")
        parts.append(f"cycle_entry={outcome.cycle_entry}")
    if outcome.kind.value == "fixed_point":
        parts.append(f"fixed_value={outcome.fixed_value}")
    if outcome.bound is not None:
        parts.append(f"bound={outcome.bound}")
    if outcome.steps is not None:
        parts.append(f"steps={outcome.steps}")
    return " ".join(parts)


def cmd_orbit(args) -> int:
    if (args.k is None) == (args.scan is None):
        raise argparse.ArgumentTypeError("give exactly one of --k or --scan")
    if args.scan is not None:
        rows = orbit_length_scan(args.n, args.scan, args.bound, args.steps)
        if args.format == "json":
            _emit(args, canon_json({
                "command": "orbit_scan", "n": args.n,
                "rows": [{"k": k, "kind": kind, "ns": ns} for k, ns, kind in rows],
            }))
        elif args.format == "csv":
            lines = ["k,ns,kind"]
            lines += [f"{k},{'' if ns is None else ns},{kind}" for k, ns, kind in rows]
            _emit(args, "\n".join(lines))
        else:
            _emit(args, "\n".join(
                f"k={k} ns={'-' if ns is None else ns} kind={kind}" for k, ns, kind in rows
            ))
        return EXIT_OK
    outcome = orbit(args.n, args.k, args.bound, args.steps)
    if args.format == "json":
        _emit(args, canon_json({
            "command": "orbit", "k": args.k, "kind": outcome.kind.value,
            "n": args.n, "ns": outcome.ns,
            "trajectory": list(outcome.trajectory),
        }))
    elif args.format == "csv":
        lines = ["step,value"]
        lines += [f"{i},{v}" for i, v in enumerate(outcome.trajectory)]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, " ".join(str(v) for v in outcome.trajectory) + "\n"
              + _orbit_summary(outcome))
    return EXIT_OK


# --------------------------------------------------------------- coverage

def cmd_coverage(args) -> int:
    g = args.arith
    prime_limit = args.prime_limit
    defaulted = False
    if isinstance(g, Constant):
        report = residual_set(g.k, args.window)
    else:
        if prime_limit is None:
            prime_limit = 2 * args.window
            defaulted = True
        factor, _ = _resolve_bound_factor(g, args.bound_factor)
        report = seq_residual_set(g, args.window, prime_limit, bound_factor=factor)
    if args.format == "json":
        payload = report.to_json_dict()
        payload["command"] = "coverage"
        payload["prime_limit_defaulted"] = defaulted
        _emit(args, canon_json(payload))
    elif args.format == "csv":
        _emit(args, "residual\n" + "\n".join(str(x) for x in report.residual))
    else:
        _emit(args, report.to_bracket_row())
    return EXIT_OK


# --------------------------------------------------------------- sequence

def _sequence_terms(args) -> list[int]:
    g = args.arith
    if args.kind in ("squares", "cubes"):
        if args.count is None:
            raise argparse.ArgumentTypeError(f"--count is required for --kind {args.kind}")
        fn = squares_sequence if args.kind == "squares" else cubes_sequence
        return fn(args.count, g)
    if args.limit is None:
        raise argparse.ArgumentTypeError(f"--limit is required for --kind {args.kind}")
    factor, _ = _resolve_bound_factor(g, getattr(args, "bound_factor", None))
    if args.kind == "primes":
        if isinstance(g, Constant):
            return k_primes_below(args.limit, g.k)
        return seq_primes_below(args.limit, g, bound_factor=factor)
    return exact_divisor_count_numbers(3, args.limit, g, bound_factor=factor)


def cmd_sequence(args) -> int:
    terms = _sequence_terms(args)
    if args.format == "json":
        _emit(args, canon_json({
            "arith": args.arith.spec(), "command": "sequence",
            "kind": args.kind, "terms": terms,
        }))
    elif args.format == "csv":
        lines = ["index,value"]
        lines += [f"{i},{v}" for i, v in enumerate(terms, start=1)]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, " ".join(str(v) for v in terms))
    return EXIT_OK


def cmd_oeis_check(args) -> int:
    terms = _sequence_terms(args)
    fixture = parse_bfile(args.bfile)
    result = compare_prefix(terms, fixture, offset=args.offset)
    if args.format == "json":
        _emit(args, canon_json({
            "arith": args.arith.spec(), "bfile": fixture.sequence_id,
            "command": "oeis_check", "compared": result.compared,
            "detail": result.detail, "kind": args.kind,
            "matched": result.matched, "offset": args.offset,
        }))
    else:
        _emit(args, result.detail)
    return EXIT_OK if result.matched else EXIT_MISMATCH


# --------------------------------------------------------------- goldbach

def cmd_goldbach(args) -> int:
    report = goldbach_scan(args.k, args.limit, record_witnesses=args.witness)
    if args.format == "json":
        payload = {
            "command": "goldbach", "counterexamples": list(report.counterexamples),
            "k": report.k, "limit": report.limit,
        }
        if report.decompositions is not None:
            payload["decompositions"] = [
                [h, p1, p2] for h, (p1, p2) in sorted(report.decompositions.items())
            ]
        _emit(args, canon_json(payload))
    elif args.format == "csv":
        _emit(args, "counterexample\n" + "\n".join(str(h) for h in report.counterexamples))
    else:
        lines = [" ".join(str(h) for h in report.counterexamples)]
        if report.decompositions is not None:
            lines += [
                f"{h} = {p1} + {p2}" for h, (p1, p2) in sorted(report.decompositions.items())
            ]
        _emit(args, "\n".join(lines))
    return EXIT_OK


# ------------------------------------------------------------------ wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="karith",
        description="Generalized integer arithmetics: products, divisors, primes, "
                    "orbits, covering sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--arith", type=_arith, default=parse_generator("const:2"),
                       help="arithmetic spec, e.g. const:3, ap:1,2, gp:1,2, "
                            "poly:1,0,5, primes, alt, zeroone, fpattern, explicit:[...]")
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("product", help="product of m by n")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("quotient", help="start value writing a as b terms")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    common(p)
    p.set_defaults(handler=cmd_quotient)

    p = sub.add_parser("divisors", help="divisor report for an integer")
    p.add_argument("a", type=int)
    common(p)
    p.add_argument("--bound", type=int, help="scan bound for generated arithmetics")
    p.set_defaults(handler=cmd_divisors)

    p = sub.add_parser("primes", help="primes below a limit")
    p.add_argument("limit", type=int)
    common(p)
    p.add_argument("--bound-factor", type=int,
                   help="per-candidate divisor scan bound factor (default 6)")
    p.set_defaults(handler=cmd_primes)

    p = sub.add_parser("orbit", help="Collatz-style orbit or orbit-length scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--scan", type=_parse_scan, help="k range, e.g. 2..100:2")
    p.add_argument("--bound", type=int, default=DEFAULT_MAGNITUDE_BOUND)
    p.add_argument("--steps", type=int, default=DEFAULT_STEP_LIMIT)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_orbit)

    p = sub.add_parser("coverage", help="residual of a window under prime multiples")
    common(p)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--prime-limit", type=int)
    p.add_argument("--bound-factor", type=int)
    p.set_defaults(handler=cmd_coverage)

    p = sub.add_parser("sequence", help="squares, cubes, primes, three-divisor numbers")
    p.add_argument("--kind", choices=("squares", "cubes", "primes", "three-divisor"),
                   required=True)
    common(p)
    p.add_argument("--count", type=int, help="term count for squares/cubes")
    p.add_argument("--limit", type=int, help="upper limit for primes/three-divisor")
    p.add_argument("--bound-factor", type=int)
    p.set_defaults(handler=cmd_sequence)

    p = sub.add_parser("oeis-check", help="diff a generated sequence against a b-file")
    p.add_argument("--kind", choices=("squares", "cubes", "primes"), required=True)
    common(p)
    p.add_argument("--count", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--bound-factor", type=int)
    p.add_argument("--bfile", required=True)
    p.add_argument("--offset", type=int, default=1,
                   help="b-file index aligned with the first generated term")
    p.set_defaults(handler=cmd_oeis_check)

    p = sub.add_parser("goldbach", help="even targets not a sum of two primes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--witness", action="store_true",
                   help="record one decomposition per target")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_goldbach)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except argparse.ArgumentTypeError as exc:
        parser.exit(EXIT_USAGE, f"usage error: {exc}\n")
    except BFileParseError as exc:
        print(f"b-file parse error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
