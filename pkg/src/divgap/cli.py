"""Command-line interface: every library operation behind one executable.

Output modes: plain text (default), --json (a stable envelope with all
integers as decimal strings), and --bfile (index/value lines, sequences
only). Exit codes: 0 ok, 2 usage, 3 resource or precision limit, 4 a
mathematically meaningful negative result.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .constants import (
    DEFAULT_TERMS,
    c_digits,
    c_enclosure,
    k3_digits,
    k3_enclosure,
    relation_check,
)
from .divisors import (
    DIVISOR_CAP,
    ORACLE_BOUND,
    check_divisor_count_law,
    check_middle_pair_law,
    delta,
    delta_above,
    delta_pair,
    divisor_count,
    divisor_list_factored,
    factorize,
    middle_pair_3x2k,
)
from .errors import (
    EmptyIntersection,
    InsufficientPrecision,
    NoQualifyingPair,
    OracleBoundExceeded,
    ResourceLimit,
    SimulationCapExceeded,
)
from .josephus import (
    SIMULATION_CAP,
    survivor_recurrence,
    survivor_simulation,
    survivor_via_ow,
)
from .sequences import A_PATHS, a_seq, b_seq, verify_theorem

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_FINDING = 4

C_REFERENCE_26 = "0.36050455619661495910154466"

# Largest decimal rendering seq will attempt per term (about five seconds).
DIGIT_PRINT_LIMIT = 10**6

_PARAM_KEYS = {
    "seq": ("which", "max", "path", "oracle_bound", "digit_limit"),
    "delta": ("m", "above", "oracle_bound"),
    "divisors": ("m", "count_only", "oracle_bound", "divisor_cap"),
    "theorem": ("max", "path", "oracle_bound"),
    "lemma": ("which", "max_k"),
    "josephus": ("n", "q", "algo", "sim_cap"),
    "constants": ("which", "terms", "digits"),
    "verify": ("target", "terms", "min_places"),
    "reproduce": ("fast_only", "terms"),
}


@dataclass
class Outcome:
    result: dict
    plain: list[str]
    status: str = "ok"
    bfile: list[str] | None = None
    exit_code: int = EXIT_OK


def _jsonable(x):
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _command_label(args) -> str:
    which = getattr(args, "which", None)
    if args.command == "verify":
        return f"verify {args.target}"
    return f"{args.command} {which}" if which is not None else args.command


def _envelope(args, result, status) -> dict:
    params = {k: getattr(args, k) for k in _PARAM_KEYS[args.command]}
    return {
        "command": _command_label(args),
        "parameters": _jsonable(params),
        "result": _jsonable(result),
        "status": status,
    }


# --- subcommand handlers ---


def _cmd_seq(args) -> Outcome:
    if args.which == "a":
        rep = a_seq(args.max, args.path, oracle_bound=args.oracle_bound)
    else:
        rep = b_seq(args.max)
    # decimal rendering of an n-bit integer is quadratic, so refuse terms
    # beyond the print budget before materializing anything; machine-scale
    # terms always print, whatever the budget
    bit_budget = args.digit_limit * 100000 // 30103  # digits / log10(2)
    for n in range(rep.start_index, rep.last_index + 1):
        bits = rep.term_bits(n)
        if bits > 64 and bits > bit_budget:
            raise ResourceLimit(
                f"term {n} needs about {bits * 30103 // 100000 + 1} decimal "
                f"digits, above the print limit {args.digit_limit}; "
                "raise it with --digit-limit"
            )
    lines = [f"{i} {t}" for i, t in enumerate(rep, start=rep.start_index)]
    result = {
        "name": rep.name,
        "start_index": rep.start_index,
        "path": rep.path,
        "terms": rep.terms,
    }
    return Outcome(result, lines, bfile=lines)


def _cmd_delta(args) -> Outcome:
    if args.above is not None:
        pair = delta_above(args.m, args.above, oracle_bound=args.oracle_bound)
    else:
        pair = delta_pair(args.m, oracle_bound=args.oracle_bound)
    result = {
        "m": args.m,
        "above": args.above,
        "difference": pair.difference,
        "small": pair.small,
        "large": pair.large,
    }
    return Outcome(result, [f"{pair.difference} (pair {pair.small} {pair.large})"])


def _cmd_divisors(args) -> Outcome:
    f = factorize(args.m, oracle_bound=args.oracle_bound)
    count = divisor_count(f)
    if args.count_only:
        return Outcome({"m": args.m, "count": count}, [str(count)])
    divs = divisor_list_factored(f, divisor_cap=args.divisor_cap)
    result = {"m": args.m, "count": count, "divisors": divs}
    return Outcome(result, [" ".join(str(d) for d in divs)])


def _cmd_theorem(args) -> Outcome:
    rep = verify_theorem(args.max, args.path, oracle_bound=args.oracle_bound)
    lines = [
        f"n={r.index} gap=2^{r.actual if r.actual is not None else '?'} "
        f"expected=2^{r.expected} {'ok' if r.passed else 'MISMATCH'}"
        for r in rep.records
    ]
    if rep.all_passed:
        lines.append(f"all {len(rep.records)} checks pass (n=3..{args.max}, {args.path} path)")
    else:
        lines.append(f"{len(rep.failures)} of {len(rep.records)} checks FAILED")
    result = {
        "max": args.max,
        "path": args.path,
        "checked": len(rep.records),
        "all_passed": rep.all_passed,
        "failures": [
            {"n": r.index, "expected_exponent": r.expected, "actual_exponent": r.actual}
            for r in rep.failures
        ],
    }
    ok = rep.all_passed
    return Outcome(result, lines, status="ok" if ok else "finding",
                   exit_code=EXIT_OK if ok else EXIT_FINDING)


def _cmd_lemma(args) -> Outcome:
    if args.which == "1":
        rep = check_divisor_count_law(args.max_k)
        summary = f"divisor count of 3*2^k equals 2k+2 for k=1..{args.max_k}"
    else:
        rep = check_middle_pair_law(args.max_k)
        summary = (
            f"minimal gap of 3*2^k equals the middle-pair gap 2^(ceil(k/2)-1) "
            f"for k=1..{args.max_k}"
        )
    lines = []
    if rep.all_passed:
        lines.append(summary)
    else:
        for r in rep.failures:
            lines.append(f"k={r.index} expected={r.expected} got={r.actual} MISMATCH")
    for note in rep.notes:
        lines.append(f"note: {note}")
    result = {
        "which": args.which,
        "max_k": args.max_k,
        "all_passed": rep.all_passed,
        "failures": [
            {"k": r.index, "expected": r.expected, "actual": r.actual} for r in rep.failures
        ],
        "notes": list(rep.notes),
    }
    ok = rep.all_passed
    return Outcome(result, lines, status="ok" if ok else "finding",
                   exit_code=EXIT_OK if ok else EXIT_FINDING)


def _cmd_josephus(args) -> Outcome:
    runs = []
    if args.algo in ("recurrence", "all"):
        runs.append(survivor_recurrence(args.n, args.q))
    if args.algo in ("simulation", "all"):
        runs.append(survivor_simulation(args.n, args.q, simulation_cap=args.sim_cap))
    if args.algo in ("ow", "all"):
        runs.append(survivor_via_ow(args.n, args.q))
    agree = len({r.survivor for r in runs}) == 1
    lines = [f"n={r.n} q={r.q} survivor={r.survivor} [{r.algorithm}]" for r in runs]
    if args.algo == "all":
        lines.append(f"agreement: {'yes' if agree else 'NO'}")
    result = {
        "n": args.n,
        "q": args.q,
        "results": [{"algorithm": r.algorithm, "survivor": r.survivor} for r in runs],
        "agree": agree,
    }
    return Outcome(result, lines, status="ok" if agree else "finding",
                   exit_code=EXIT_OK if agree else EXIT_FINDING)


def _cmd_constants(args) -> Outcome:
    if args.which == "c":
        iv = c_enclosure(args.terms)
        cert = c_digits(args.terms, args.digits)
    else:
        iv = k3_enclosure(args.terms)
        cert = k3_digits(args.terms, args.digits)
    shown = cert.decimal_prefix if cert.decimal_prefix else "(no certified digits)"
    lines = [shown, f"certified places: {cert.certified_places}", f"terms: {args.terms}"]
    result = {
        "which": args.which,
        "terms": args.terms,
        "lo": iv.lo,
        "hi": iv.hi,
        "decimal_prefix": cert.decimal_prefix,
        "certified_places": cert.certified_places,
    }
    return Outcome(result, lines)


def _cmd_verify(args) -> Outcome:
    rel = relation_check(args.terms)
    if rel.overlap and rel.agreeing_places < args.min_places:
        raise InsufficientPrecision(
            f"intervals overlap but agree to only {rel.agreeing_places} places, "
            f"below the required {args.min_places}; raise --terms"
        )
    passed = rel.overlap
    lines = [
        f"overlap: {'yes' if rel.overlap else 'NO'}",
        f"agreeing places: {rel.agreeing_places} (required {args.min_places})",
        f"verdict: {'PASS' if passed else 'FINDING: intervals are disjoint'}",
    ]
    result = {
        "terms": args.terms,
        "min_places": args.min_places,
        "overlap": rel.overlap,
        "agreeing_places": rel.agreeing_places,
        "c": {"lo": rel.c_interval.lo, "hi": rel.c_interval.hi},
        "k3_scaled": {"lo": rel.k3_scaled_interval.lo, "hi": rel.k3_scaled_interval.hi},
        "passed": passed,
    }
    return Outcome(result, lines, status="ok" if passed else "finding",
                   exit_code=EXIT_OK if passed else EXIT_FINDING)


# --- full reproduction ---


def _row(claim: str, reference: str, computed: str, ok: bool, finding: bool = False) -> dict:
    verdict = "FINDING" if finding else ("PASS" if ok else "FAIL")
    return {"claim": claim, "reference": reference, "computed": computed, "verdict": verdict}


def reproduce(fast_only: bool = False, terms: int = DEFAULT_TERMS) -> tuple[list[dict], bool]:
    """Recompute every reference value and identity; returns (rows, all_ok).

    The middle-pair exponent row is a documented finding, not a failure: the
    corrected exponent is what enumeration confirms.
    """
    rows = []

    path = "factored" if fast_only else "oracle"
    want = "4 3 4 2 4 8 16 64"
    got = " ".join(str(t) for t in a_seq(7, path))
    rows.append(_row(f"gap sequence, indices 0..7 ({path} path)", want, got, got == want))

    want = "1 1 1 2 3 4 6 9 14"
    got = " ".join(str(t) for t in b_seq(9))
    rows.append(_row("ceiling recurrence, indices 1..9", want, got, got == want))

    if not fast_only:
        rep = verify_theorem(10, "oracle")
        rows.append(_row(
            "gap term = 2^b(n), n=3..10 (oracle path)", "equal at every index",
            f"{len(rep.records)} checks, {'all equal' if rep.all_passed else 'MISMATCH'}",
            rep.all_passed,
        ))

    rep = verify_theorem(40, "factored")
    rows.append(_row(
        "gap term = 2^b(n), n=3..40 (factored path)", "equal at every index",
        f"{len(rep.records)} checks, {'all equal' if rep.all_passed else 'MISMATCH'}",
        rep.all_passed,
    ))

    rep = check_divisor_count_law(30)
    rows.append(_row(
        "divisor count of 3*2^k, k=1..30 (enumerated)", "2k+2",
        "2k+2 at every k" if rep.all_passed else "MISMATCH", rep.all_passed,
    ))

    rep = check_divisor_count_law(1000, enumerate_up_to=0)
    rows.append(_row(
        "divisor count of 3*2^k, k=1..1000 (formula)", "2k+2",
        "2k+2 at every k" if rep.all_passed else "MISMATCH", rep.all_passed,
    ))

    rep = check_middle_pair_law(30)
    rows.append(_row(
        "minimal gap of 3*2^k = middle-pair gap, k=1..30 (brute force)", "equal",
        "equal at every k" if rep.all_passed else "MISMATCH", rep.all_passed,
    ))

    d48 = delta(48)
    rows.append(_row("minimal divisor gap of 48", "2", str(d48), d48 == 2))

    corrected = all(
        middle_pair_3x2k(k).difference == 2 ** ((k + 1) // 2 - 1) for k in range(1, 1001)
    )
    rows.append(_row(
        "middle-pair gap exponent for 3*2^k, k=1..1000",
        "2^ceil(k/2)", "2^(ceil(k/2) - 1)", corrected, finding=corrected,
    ))

    cert = c_digits(terms)
    ok = cert.decimal_prefix.startswith(C_REFERENCE_26)
    shown = cert.decimal_prefix[: len(C_REFERENCE_26)]
    rows.append(_row(
        f"growth constant to 26 places ({terms} terms)",
        C_REFERENCE_26, f"{shown} ({cert.certified_places} certified)", ok,
    ))

    rel = relation_check(terms)
    ok = rel.overlap and rel.agreeing_places >= 24
    rows.append(_row(
        f"growth constant = (2/9) * game constant ({terms} terms)",
        "overlap, >= 24 shared places",
        f"overlap: {'yes' if rel.overlap else 'no'}, {rel.agreeing_places} shared places",
        ok,
    ))

    all_ok = all(r["verdict"] != "FAIL" for r in rows)
    return rows, all_ok


def _cmd_reproduce(args) -> Outcome:
    rows, all_ok = reproduce(args.fast_only, args.terms)
    widths = (
        max(len(r["claim"]) for r in rows),
        max(len(r["reference"]) for r in rows),
        max(len(r["computed"]) for r in rows),
    )
    lines = [
        f"{r['claim']:<{widths[0]}}  {r['reference']:<{widths[1]}}  "
        f"{r['computed']:<{widths[2]}}  {r['verdict']}"
        for r in rows
    ]
    passes = sum(r["verdict"] == "PASS" for r in rows)
    findings = sum(r["verdict"] == "FINDING" for r in rows)
    fails = sum(r["verdict"] == "FAIL" for r in rows)
    lines.append(f"{passes} pass, {findings} flagged finding(s), {fails} fail")
    result = {"fast_only": args.fast_only, "terms": args.terms, "rows": rows, "all_ok": all_ok}
    return Outcome(result, lines, status="ok" if all_ok else "finding",
                   exit_code=EXIT_OK if all_ok else EXIT_FINDING)


# --- parser and entry points ---


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON envelope")
    fmt.add_argument("--bfile", action="store_true",
                     help="emit index/value lines (sequences only)")

    parser = argparse.ArgumentParser(
        prog="divgap",
        description="Exact divisor-gap sequences, circle-game survivors, and certified constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="list a sequence prefix")
    p.add_argument("which", choices=["a", "b"])
    p.add_argument("--max", type=int, required=True, help="last index to compute")
    p.add_argument("--path", choices=list(A_PATHS), default="factored")
    p.add_argument("--oracle-bound", type=int, default=ORACLE_BOUND)
    p.add_argument("--digit-limit", type=int, default=DIGIT_PRINT_LIMIT,
                   help="largest decimal rendering to attempt per term")
    p.set_defaults(handler=_cmd_seq)

    p = sub.add_parser("delta", parents=[common], help="minimal divisor gap of an integer")
    p.add_argument("m", type=int)
    p.add_argument("--above", type=int, default=None,
                   help="restrict to gaps strictly above this threshold")
    p.add_argument("--oracle-bound", type=int, default=ORACLE_BOUND)
    p.set_defaults(handler=_cmd_delta)

    p = sub.add_parser("divisors", parents=[common], help="divisors of an integer")
    p.add_argument("m", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--oracle-bound", type=int, default=ORACLE_BOUND)
    p.add_argument("--divisor-cap", type=int, default=DIVISOR_CAP)
    p.set_defaults(handler=_cmd_divisors)

    p = sub.add_parser("theorem", parents=[common],
                       help="check gap term = 2^b(n) over a range")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--path", choices=["oracle", "factored"], default="factored")
    p.add_argument("--oracle-bound", type=int, default=ORACLE_BOUND)
    p.set_defaults(handler=_cmd_theorem)

    p = sub.add_parser("lemma", parents=[common], help="check a 3*2^k divisor law")
    p.add_argument("which", choices=["1", "2"],
                   help="1: divisor count; 2: middle-pair gap")
    p.add_argument("--max-k", type=int, default=30)
    p.set_defaults(handler=_cmd_lemma)

    p = sub.add_parser("josephus", parents=[common], help="circle-game survivor")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--algo", choices=["recurrence", "simulation", "ow", "all"], default="all")
    p.add_argument("--sim-cap", type=int, default=SIMULATION_CAP)
    p.set_defaults(handler=_cmd_josephus)

    p = sub.add_parser("constants", parents=[common], help="certified constant digits")
    p.add_argument("which", choices=["c", "k3"])
    p.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    p.add_argument("--digits", type=int, default=None,
                   help="cap on rendered decimal places (default: maximal)")
    p.set_defaults(handler=_cmd_constants)

    p = sub.add_parser("verify", parents=[common], help="cross-checks between components")
    p.add_argument("target", choices=["relation"])
    p.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    p.add_argument("--min-places", type=int, default=24)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("reproduce", parents=[common],
                       help="recompute every reference value and identity")
    p.add_argument("--fast-only", action="store_true",
                   help="skip the trial-division oracle rows")
    p.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    p.set_defaults(handler=_cmd_reproduce)

    return parser


def _emit_failure(args, exc: Exception, status: str, code: int) -> int:
    print(f"error: {exc}", file=sys.stderr)
    if getattr(args, "json", False):
        result = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(_envelope(args, result, status)))
    return code


def run(argv=None) -> int:
    """Parse argv, execute, print, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    # the interpreter's own conversion guard must not undercut the seq
    # print budget; everything else this tool prints is far smaller
    wanted = max(getattr(args, "digit_limit", 0), DIGIT_PRINT_LIMIT) + 100
    if hasattr(sys, "set_int_max_str_digits") and sys.get_int_max_str_digits() < wanted:
        sys.set_int_max_str_digits(wanted)
    if getattr(args, "bfile", False) and args.command != "seq":
        print("error: --bfile applies only to seq", file=sys.stderr)
        return EXIT_USAGE
    try:
        out = args.handler(args)
    except (OracleBoundExceeded, ResourceLimit, SimulationCapExceeded,
            InsufficientPrecision) as exc:
        return _emit_failure(args, exc, "error", EXIT_RESOURCE)
    except (EmptyIntersection, NoQualifyingPair) as exc:
        return _emit_failure(args, exc, "finding", EXIT_FINDING)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(_envelope(args, out.result, out.status)))
    elif getattr(args, "bfile", False):
        for line in out.bfile:
            print(line)
    else:
        for line in out.plain:
            print(line)
    return out.exit_code


def main() -> None:
    sys.exit(run())
