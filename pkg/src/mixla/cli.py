"""Command-line front door: verify, bound, construct, search, locate,
simulate, convert.

Exit codes: 0 for success and true verdicts, 1 for false verdicts or
exhausted searches, 2 for usage and input errors. Array documents go to
--out or stdout; verification reports go to stderr, so pipelines stay clean.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bounds import lower_bound
from .core import (
    Array,
    FormatError,
    Interaction,
    LevelProfile,
    PreconditionError,
    SizeCapError,
    canonicalize,
    parse_array,
    serialize_array,
)
from .decoder import Locator, Outcomes, simulate_outcomes
from .direct import (
    build_la_1_w,
    build_la_2_3,
    build_oa_sum,
    build_pdimoa_star_general,
    build_pdimoa_star_t_plus_1,
)
from .recursive import (
    derive,
    expand_level,
    fuse,
    pdimoa_product,
    product,
    roux_one,
    roux_two,
    split_column,
    truncate,
)
from .search import SearchParams, anneal
from .verifier import (
    NotAnMoaError,
    VerificationReport,
    is_detecting,
    is_locating,
    is_mca,
    is_mca2_star,
    is_pdimoa,
    is_pdimoa_star,
    moa_indices,
)

VERIFY_KINDS = (
    "mca",
    "la",
    "bar-la",
    "da",
    "moa",
    "pdimoa",
    "pdimoa-star",
    "mca2-star",
)


def _levels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad levels {text!r}, expected a comma list like 2,3,4"
        ) from None


def _load(path: str) -> Array:
    return parse_array(Path(path).read_text())


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("LA_THREADS", "1"))


def _write_array(a: Array, out: str | None) -> None:
    text = serialize_array(a)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report_exit(report: VerificationReport) -> int:
    print(report.render(), file=sys.stderr)
    return 0 if report.verdict else 1


# ---------------------------------------------------------------------------
# subcommands


def _cmd_verify(args) -> int:
    a = _load(args.array)
    t = args.strength if args.strength is not None else a.t
    threads = _threads(args)
    kind = args.kind
    if kind == "mca":
        report = is_mca(a, t, args.lam, force=args.force, threads=threads)
    elif kind == "la":
        report = is_locating(
            a, t, args.d, barred=False, force=args.force, threads=threads
        )
    elif kind == "bar-la":
        report = is_locating(
            a, t, args.d, barred=True, force=args.force, threads=threads
        )
    elif kind == "da":
        report = is_detecting(a, t, args.d, force=args.force)
    elif kind == "moa":
        try:
            profile = moa_indices(a, t, force=args.force, threads=threads)
        except NotAnMoaError as e:
            print(f"VERDICT moa false\n{e.witness.render()}")
            return 1
        print("VERDICT moa true")
        for cols, lam in profile.entries:
            print(f"INDEX {','.join(str(c) for c in cols)}={lam}")
        return 0
    elif kind == "pdimoa":
        report = is_pdimoa(a, t, force=args.force, threads=threads)
    elif kind == "pdimoa-star":
        report = is_pdimoa_star(a, t, force=args.force, threads=threads)
    else:  # mca2-star
        report = is_mca2_star(a, t, force=args.force, threads=threads)
    print(report.render())
    return 0 if report.verdict else 1


def _cmd_bound(args) -> int:
    result = lower_bound(LevelProfile(args.levels, args.strength))
    print(result.render())
    return 0


def _cmd_search(args) -> int:
    params = SearchParams(
        n_rows=args.rows,
        seed=args.seed,
        max_iterations=args.max_iters,
        initial_temperature=args.t0,
        cooling=args.cooling,
        time_budget_s=args.time_budget,
    )
    profile = LevelProfile(args.levels, args.strength)
    log = open(args.log, "w") if args.log else None
    try:
        found = anneal(profile, params, log=log)
    finally:
        if log is not None:
            log.close()
    if found is None:
        print("NOT-FOUND budget exhausted", file=sys.stderr)
        return 1
    _write_array(found, args.out)
    report = is_locating(found, args.strength, 1, barred=True)
    print(report.render(), file=sys.stderr)
    return 0 if report.verdict else 1


def _cmd_locate(args) -> int:
    a = _load(args.array)
    t = args.strength if args.strength is not None else a.t
    spec = args.outcomes
    if set(spec) <= {"p", "f"}:
        outcomes = Outcomes.from_text(spec)
    elif Path(spec).exists():
        outcomes = Outcomes.from_text(Path(spec).read_text())
    else:
        raise ValueError(
            f"outcomes {spec!r} is neither a p/f string nor an existing file"
        )
    locator = Locator(a, t, assume_verified=args.assume_verified)
    diagnosis = locator.locate(outcomes)
    print(diagnosis.render())
    return 0 if diagnosis.kind in ("no-fault", "located") else 1


def _cmd_simulate(args) -> int:
    a = _load(args.array)
    fault = Interaction.parse(args.fault) if args.fault else None
    if fault is not None:
        fault.validate_for(a.profile)
    outcomes = simulate_outcomes(a, fault)
    for flag in outcomes.fails:
        print("f" if flag else "p")
    return 0


def _cmd_convert(args) -> int:
    a = _load(args.array)
    if args.canonicalize:
        a, _ = canonicalize(a)
    _write_array(a, args.out)
    return 0


# construct ops: name -> (builder, advertised verification)


def _cmd_construct(args) -> int:
    threads = _threads(args)
    unchecked = args.unchecked
    op = args.op

    if op == "oa-sum":
        out = build_oa_sum(args.v, args.strength)
    elif op == "pdimoa-t1":
        out = build_pdimoa_star_t_plus_1(args.levels)
    elif op == "pdimoa-general":
        out = build_pdimoa_star_general(args.levels, args.strength)
    elif op == "la-2-3":
        if len(args.levels) != 3:
            raise ValueError("la-2-3 takes exactly 3 levels")
        out = build_la_2_3(*args.levels)
    elif op == "la-1-w":
        out = build_la_1_w(args.w, args.v)
    elif op == "truncate":
        out = truncate(_load(args.array), args.col, unchecked=unchecked)
    elif op == "derive":
        out = derive(
            _load(args.array), args.col, args.symbol, unchecked=unchecked
        )
    elif op == "product":
        out = product(_load(args.a), _load(args.b), unchecked=unchecked)
    elif op == "split":
        out = split_column(
            _load(args.array), args.col, args.factors, unchecked=unchecked
        )
    elif op == "pdimoa-product":
        out = pdimoa_product(_load(args.a), _load(args.b), unchecked=unchecked)
    elif op == "expand":
        out = expand_level(
            _load(args.array), args.col, args.new_size, unchecked=unchecked
        )
    elif op == "fuse":
        out = fuse(
            _load(args.array), args.col, args.target, unchecked=unchecked
        )
    elif op == "roux-one":
        out = roux_one(
            _load(args.a), _load(args.b), args.col, args.e, unchecked=unchecked
        )
    else:  # roux-two
        out = roux_two(
            _load(args.a),
            _load(args.b),
            _load(args.c),
            _load(args.d),
            args.i,
            args.j,
            args.p,
            args.q,
            unchecked=unchecked,
        )

    if op == "oa-sum":
        try:
            profile = moa_indices(out, out.t, force=args.force, threads=threads)
            ok = all(lam == 1 for lam in profile.lambdas)
            report = VerificationReport("oa", ok)
        except NotAnMoaError as e:
            report = VerificationReport("oa", False, e.witness)
    elif op in ("pdimoa-t1", "pdimoa-general", "split", "pdimoa-product"):
        report = is_pdimoa_star(out, out.t, force=args.force, threads=threads)
    else:
        report = is_locating(
            out, out.t, 1, barred=True, force=args.force, threads=threads
        )
    _write_array(out, args.out)
    return _report_exit(report)


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixla",
        description="Mixed-level locating arrays: verify, bound, construct,"
        " search, and decode.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check an array property")
    p.add_argument("array", help="array document")
    p.add_argument("--kind", required=True, choices=VERIFY_KINDS)
    p.add_argument("--strength", type=int, help="override the file's t")
    p.add_argument("--d", type=int, default=1, help="fault count (la/bar-la/da)")
    p.add_argument("--lam", type=int, default=1, help="minimum index (mca)")
    p.add_argument("--force", action="store_true", help="lift the size caps")
    p.add_argument("--threads", type=int, help="verifier workers (env LA_THREADS)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bound", help="lower bound on locating-array size")
    p.add_argument("--levels", type=_levels, required=True)
    p.add_argument("--strength", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("search", help="simulated-annealing search")
    p.add_argument("--levels", type=_levels, required=True)
    p.add_argument("--strength", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=2_000_000)
    p.add_argument("--t0", type=float, default=3.0, help="initial temperature")
    p.add_argument("--cooling", type=float, default=0.9997)
    p.add_argument("--time-budget", type=float, default=120.0, help="seconds")
    p.add_argument("--out", help="write the array here instead of stdout")
    p.add_argument("--log", help="JSON-lines progress log")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("locate", help="decode outcomes to a faulty interaction")
    p.add_argument("--array", required=True)
    p.add_argument(
        "--outcomes",
        required=True,
        help="p/f string, or a file with one p or f per line",
    )
    p.add_argument("--strength", type=int)
    p.add_argument(
        "--assume-verified",
        action="store_true",
        help="skip the locating-array check",
    )
    p.set_defaults(func=_cmd_locate)

    p = sub.add_parser("simulate", help="outcomes under one faulty interaction")
    p.add_argument("--array", required=True)
    p.add_argument("--fault", help="interaction like 1:0,5:2; omit for no fault")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("convert", help="reformat an array document")
    p.add_argument("array")
    p.add_argument("--canonicalize", action="store_true", help="sort columns by level")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("construct", help="run a construction, verified")
    ops = p.add_subparsers(dest="op", required=True)

    def common(q):
        q.add_argument("--out", help="write the array here instead of stdout")
        q.add_argument("--unchecked", action="store_true",
                       help="skip precondition verification")
        q.add_argument("--force", action="store_true")
        q.add_argument("--threads", type=int)
        q.set_defaults(func=_cmd_construct)

    q = ops.add_parser("oa-sum", help="index-1 orthogonal array on t+1 columns")
    q.add_argument("--v", type=int, required=True)
    q.add_argument("--strength", type=int, required=True)
    common(q)

    q = ops.add_parser("pdimoa-t1", help="distinct-index array on t+1 columns")
    q.add_argument("--levels", type=_levels, required=True)
    common(q)

    q = ops.add_parser("pdimoa-general", help="distinct-index array, k columns")
    q.add_argument("--levels", type=_levels, required=True)
    q.add_argument("--strength", type=int, required=True)
    common(q)

    q = ops.add_parser("la-2-3", help="optimal strength-2 array on 3 columns")
    q.add_argument("--levels", type=_levels, required=True)
    common(q)

    q = ops.add_parser("la-1-w", help="optimal strength-1 array on w+1 columns")
    q.add_argument("--w", type=int, required=True)
    q.add_argument("--v", type=int, required=True)
    common(q)

    q = ops.add_parser("truncate", help="drop a column")
    q.add_argument("--array", required=True)
    q.add_argument("--col", type=int, required=True)
    common(q)

    q = ops.add_parser("derive", help="fix a symbol and drop its column")
    q.add_argument("--array", required=True)
    q.add_argument("--col", type=int, required=True)
    q.add_argument("--symbol", type=int, required=True)
    common(q)

    q = ops.add_parser("product", help="pair with a covering array")
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    common(q)

    q = ops.add_parser("split", help="split a column by mixed radix")
    q.add_argument("--array", required=True)
    q.add_argument("--col", type=int, required=True)
    q.add_argument("--factors", type=_levels, required=True)
    common(q)

    q = ops.add_parser("pdimoa-product", help="pair two distinct-index arrays")
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    common(q)

    q = ops.add_parser("expand", help="grow one alphabet, doubling the rows")
    q.add_argument("--array", required=True)
    q.add_argument("--col", type=int, required=True)
    q.add_argument("--new-size", type=int, required=True)
    common(q)

    q = ops.add_parser("fuse", help="merge symbols within one column")
    q.add_argument("--array", required=True)
    q.add_argument("--col", type=int, required=True)
    q.add_argument("--target", type=int, required=True)
    common(q)

    q = ops.add_parser("roux-one", help="grow one alphabet by stacking")
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--col", type=int, required=True)
    q.add_argument("--e", type=int, required=True)
    common(q)

    q = ops.add_parser("roux-two", help="grow two alphabets by stacking")
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--c", required=True)
    q.add_argument("--d", required=True)
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--q", type=int, required=True)
    common(q)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, PreconditionError, SizeCapError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
