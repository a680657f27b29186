"""Command-line entry point: ``dihedral-integral <subcommand> ...``.

Exit codes: 0 success (or integral for ``check``), 1 not integral,
2 usage/validation error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census, oracle
from .errors import DihedralIntegralError, InvariantViolation
from .group import (
    ConnectionSet,
    atom,
    difference_multiset,
    in_boolean_algebra,
    in_integral_cone,
    parse_connection_set,
)
from .integrality import check_integral, check_numeric, dp_integral_sets
from .numtheory import divisors, ramanujan_sum
from .spectra import spectrum

EXIT_OK, EXIT_NOT_INTEGRAL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _load_set(args, min_n: int = 3) -> ConnectionSet:
    if args.set is not None:
        return parse_connection_set(args.set, min_n=min_n)
    if args.json_file is not None:
        return ConnectionSet.from_json(Path(args.json_file).read_text(), min_n=min_n)
    raise DihedralIntegralError("give a connection set with --set or --json-file")


def _add_set_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--set", help='inline set, e.g. "n=7; s1=; s2=1,2,4"')
    g.add_argument("--json-file", help='file holding {"n": .., "s1": [..], "s2": [..]}')


def _emit(obj, fmt: str, text: str) -> None:
    print(json.dumps(obj, indent=2) if fmt == "json" else text)


def cmd_spectrum(args) -> int:
    S = _load_set(args)
    rep = spectrum(S, args.mode)
    text = "\n".join(f"{v}\t^{k}" for v, k in rep.eigenvalues)
    _emit(rep.to_json(), args.format, text)
    return EXIT_OK


def cmd_check(args) -> int:
    S = _load_set(args)
    rep = check_integral(S)
    obj = rep.to_json()
    if args.numeric:
        num = check_numeric(S, args.tol)
        obj["numeric_advisory"] = {
            "integral": num.integral,
            "rows": [vars(r) for r in num.rows],
        }
    text = rep.verdict + ("" if rep.reason is None else f": {rep.reason}")
    _emit(obj, args.format, text)
    return EXIT_OK if rep.integral else EXIT_NOT_INTEGRAL


def cmd_atoms(args) -> int:
    if args.set is None and args.json_file is None:
        n = args.n
        if n is None:
            raise DihedralIntegralError("atoms needs --n or a connection set")
        table = {str(d): atom(d, n) for d in reversed(divisors(n))}
        _emit({"n": n, "atoms": table}, args.format, "\n".join(f"[a^{d}]: {us}" for d, us in table.items()))
        return EXIT_OK
    S = _load_set(args)
    s1 = in_boolean_algebra(S.s1, S.n)
    s2 = in_boolean_algebra(S.s2, S.n)
    sq = in_integral_cone(difference_multiset(S.s2, S.n))
    obj = {
        **S.to_json(),
        "s1_atoms": s1.to_json() if s1 else None,
        "bs2_atoms": s2.to_json() if s2 else None,
        "s2_square": list(difference_multiset(S.s2, S.n).mult),
        "s2_square_cone": sq.to_json() if sq else None,
    }
    text = "\n".join(
        [
            f"S1    : {s1 if s1 else 'not a union of atoms'}",
            f"bS2   : {s2 if s2 else 'not a union of atoms'}",
            f"S2^2  : {sq if sq else 'not in the integral cone'}",
        ]
    )
    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_ramanujan(args) -> int:
    value = ramanujan_sum(args.s, args.n)
    _emit({"s": args.s, "n": args.n, "value": value}, args.format, str(value))
    return EXIT_OK


def cmd_oracle(args) -> int:
    S = _load_set(args, min_n=1)
    if args.dot:
        sys.stdout.write(oracle.to_dot(S))
        return EXIT_OK
    verdict = oracle.is_integral(S)
    text = "char_poly: {}\nintegral: {}".format(" ".join(map(str, verdict.char_poly)), verdict.integral)
    _emit({**S.to_json(), **verdict.to_json()}, args.format, text)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.sample:
        sets = census.sample_sets(args.n, args.sample, args.seed)
        report = census.CensusReport(args.n, [census.audit_set(S) for S in sets])
    else:
        report = census.run_census(
            args.n,
            nonempty_s2=args.nonempty_s2,
            connected_only=args.connected_only,
            s1_in_b_only=args.s1_in_b_only,
            up_to_rotation=args.up_to_rotation,
            cap=args.cap,
            workers=args.workers,
        )
    body = report.to_jsonl() if args.format == "jsonl" else report.to_csv()
    summary = json.dumps(report.summary, indent=2)
    if args.summary:
        Path(args.summary).write_text(summary + "\n")
    if args.out:
        # rows go to the file, the summary to stdout
        Path(args.out).write_text(body)
        print(summary)
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_dp_list(args) -> int:
    sets = dp_integral_sets(args.p, include_empty_s2=args.include_empty_s2)
    if args.format == "text":
        print("\n".join(S.to_text() for S in sets))
    else:
        print(json.dumps([S.to_json() for S in sets], indent=None if args.format == "jsonl" else 2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dihedral-integral", description=__doc__.splitlines()[0])
    parser.add_argument("--json-errors", action="store_true", help="report errors as JSON on stderr")
    # also accepted after the subcommand; SUPPRESS keeps the global value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-errors", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    p = add("spectrum", help="eigenvalues of X(D_n, S)")
    _add_set_args(p)
    p.add_argument("--mode", choices=["exact", "float"], default="exact")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_spectrum)

    p = add("check", help="exact integrality verdict with witness")
    _add_set_args(p)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--numeric", action="store_true", help="also run the floating-point advisory check")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_check)

    p = add("atoms", help="atoms of <a>, or atom decompositions of a set")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--set")
    g.add_argument("--json-file")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_atoms)

    p = add("ramanujan", help="Ramanujan sum c(s, n)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_ramanujan)

    p = add("oracle", help="characteristic polynomial and brute-force verdict")
    _add_set_args(p)
    p.add_argument("--dot", action="store_true", help="print the graph in DOT format instead")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_oracle)

    p = add("census", help="enumerate and audit all connection sets for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nonempty-s2", action="store_true")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--s1-in-b-only", action="store_true")
    p.add_argument("--up-to-rotation", action="store_true")
    p.add_argument("--cap", type=int, default=census.DEFAULT_CAP)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--sample", type=int, default=0, help="audit this many random sets instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write rows here (CSV or JSON lines)")
    p.add_argument("--summary", help="write the summary JSON here")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.set_defaults(func=cmd_census)

    p = add("dp-list", help="all integral connection sets over D_p")
    p.add_argument("p", type=int)
    p.add_argument("--include-empty-s2", action="store_true")
    p.add_argument("--format", choices=["json", "jsonl", "text"], default="json")
    p.set_defaults(func=cmd_dp_list)
    return parser


def _report_error(args, exc: Exception, code: int) -> int:
    if getattr(args, "json_errors", False):
        payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
        for attr in ("h", "value", "reproducer"):
            if getattr(exc, attr, None) is not None:
                payload[attr] = getattr(exc, attr)
        print(json.dumps(payload), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        return _report_error(args, exc, EXIT_INTERNAL)
    except (DihedralIntegralError, ValueError, OSError, json.JSONDecodeError) as exc:
        return _report_error(args, exc, EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
