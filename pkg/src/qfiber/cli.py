"""Command line interface for exact coefficient tables and identity suites.

Examples:

    qfiber coeffs 2 2
    qfiber residue-sums 6 5 6 --format csv
    qfiber fibers 5 2 --format json
    qfiber orbits 6 6 units
    qfiber verify all

Exit codes: 0 success, 1 a verification check failed, 2 bad arguments,
3 enumeration cap exceeded.  Machine formats (json, csv) serialize every
integer as a decimal string so arbitrarily large values survive any
downstream parser.  The environment variable QFIBER_MAX_ENUM overrides the
default enumeration cap; --max-enum overrides both.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections import Counter
from math import comb

from .errors import DEFAULT_ENUMERATION_CAP, EnumerationCapError
from .heisenberg import delta_fiber_sizes
from .qbinomial import gaussian_coefficients, residue_sums
from .surjections import GROUPS, orbits
from .verify import (
    DEFAULT_KL_BOUND,
    DEFAULT_MULTIPLIER_BOUND,
    DEFAULT_RING_BOUND,
    SUITES,
    CheckReport,
    run_suite,
)

SCHEMA_VERSION = "1"
FORMATS = ("table", "csv", "json")


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def _record(command: str, parameters: dict[str, str], result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "result": result,
    }


def _emit_json(record: dict) -> None:
    print(json.dumps(record, sort_keys=True, separators=(",", ":")))


def _emit_csv(header: list[str], rows: list[list[str]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _enum_cap(args: argparse.Namespace) -> int:
    if args.max_enum is not None:
        return args.max_enum
    env = os.environ.get("QFIBER_MAX_ENUM")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"QFIBER_MAX_ENUM must be an integer: {env!r}")
    return DEFAULT_ENUMERATION_CAP


def _cmd_coeffs(args: argparse.Namespace) -> int:
    values = [str(c) for c in gaussian_coefficients(args.m, args.n).coeffs]
    if args.format == "json":
        _emit_json(
            _record("coeffs", {"m": str(args.m), "n": str(args.n)}, {"coeffs": values})
        )
    elif args.format == "csv":
        _emit_csv(["index", "coefficient"], [[str(i), v] for i, v in enumerate(values)])
    else:
        print(" ".join(values))
    return 0


def _cmd_residue_sums(args: argparse.Namespace) -> int:
    values = [str(v) for v in residue_sums(args.m, args.n, args.r)]
    if args.format == "json":
        _emit_json(
            _record(
                "residue-sums",
                {"m": str(args.m), "n": str(args.n), "r": str(args.r)},
                {"sums": values},
            )
        )
    elif args.format == "csv":
        _emit_csv(["residue", "sum"], [[str(i), v] for i, v in enumerate(values)])
    else:
        print(" ".join(values))
    return 0


def _cmd_fibers(args: argparse.Namespace) -> int:
    sizes = delta_fiber_sizes(args.ring_size, args.marked, max_elements=_enum_cap(args))
    values = [str(v) for v in sizes]
    total = str(comb(args.ring_size - 1, args.marked - 1))
    if args.format == "json":
        _emit_json(
            _record(
                "fibers",
                {"N": str(args.ring_size), "r": str(args.marked)},
                {"sizes": values, "total": total},
            )
        )
    elif args.format == "csv":
        rows = [[str(s), v] for s, v in enumerate(values)]
        rows.append(["total", total])
        _emit_csv(["class", "cardinality"], rows)
    else:
        print(" ".join(values))
        print(f"total {total}")
    return 0


def _cmd_orbits(args: argparse.Namespace) -> int:
    orbit_list = orbits(args.k, args.l, args.group, max_elements=_enum_cap(args))
    histogram = sorted(Counter(len(o) for o in orbit_list).items())
    total = str(comb(args.k + args.l - 1, args.l - 1))
    if args.format == "json":
        _emit_json(
            _record(
                "orbits",
                {"k": str(args.k), "l": str(args.l), "group": args.group},
                {
                    "histogram": [[str(size), str(count)] for size, count in histogram],
                    "total_sequences": total,
                },
            )
        )
    elif args.format == "csv":
        rows = [[str(size), str(count)] for size, count in histogram]
        rows.append(["total", total])
        _emit_csv(["orbit_size", "orbit_count"], rows)
    else:
        for size, count in histogram:
            print(f"{size} {count}")
        print(f"total {total}")
    return 0


def _report_payload(report: CheckReport) -> dict:
    def values(v):
        return [str(x) for x in v] if isinstance(v, list) else str(v)

    return {
        "check_id": report.check_id,
        "parameters": {key: str(value) for key, value in report.parameters.items()},
        "expected": values(report.expected),
        "actual": values(report.actual),
        "status": report.status,
    }


def _cmd_verify(args: argparse.Namespace) -> int:
    primes = tuple(int(part) for part in args.primes.split(","))
    reports = run_suite(
        args.suite,
        k_max=args.k_max,
        l_max=args.l_max,
        primes=primes,
        multiplier_max=args.m_max,
        ring_max=args.n_max,
    )
    failures = sum(1 for report in reports if report.status != "pass")
    if args.format == "json":
        bounds = {
            "suite": args.suite,
            "k_max": str(args.k_max),
            "l_max": str(args.l_max),
            "primes": args.primes,
            "m_max": str(args.m_max),
            "n_max": str(args.n_max),
        }
        result = {
            "checks": str(len(reports)),
            "failures": str(failures),
            "reports": [_report_payload(report) for report in reports],
        }
        _emit_json(_record("verify", bounds, result))
    elif args.format == "csv":
        rows = []
        for report in reports:
            payload = _report_payload(report)
            params = " ".join(f"{k}={v}" for k, v in payload["parameters"].items())
            expected = payload["expected"]
            actual = payload["actual"]
            rows.append(
                [
                    payload["check_id"],
                    params,
                    " ".join(expected) if isinstance(expected, list) else expected,
                    " ".join(actual) if isinstance(actual, list) else actual,
                    payload["status"],
                ]
            )
        _emit_csv(["check_id", "parameters", "expected", "actual", "status"], rows)
    else:
        for report in reports:
            params = " ".join(f"{k}={v}" for k, v in report.parameters.items())
            print(f"{report.status.upper():4s} {report.check_id} {params}".rstrip())
        print(f"{len(reports) - failures} of {len(reports)} checks passed")
    return 1 if failures else 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=FORMATS, default="table", help="output format (default: table)"
    )


def _add_cap(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-enum",
        type=_positive,
        default=None,
        help="enumeration cap (default: QFIBER_MAX_ENUM or 10^7)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfiber",
        description="Exact coefficient tables, orbit histograms, ring fiber counts, "
        "and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="coefficient vector for an m x n box")
    coeffs.add_argument("m", type=_nonneg, help="box width (max part size)")
    coeffs.add_argument("n", type=_nonneg, help="box height (max part count)")
    _add_format(coeffs)
    coeffs.set_defaults(handler=_cmd_coeffs)

    sums = sub.add_parser("residue-sums", help="coefficient sums per index class mod r")
    sums.add_argument("m", type=_nonneg, help="box width")
    sums.add_argument("n", type=_nonneg, help="box height")
    sums.add_argument("r", type=_positive, help="modulus")
    _add_format(sums)
    sums.set_defaults(handler=_cmd_residue_sums)

    fibers = sub.add_parser("fibers", help="gap-vector fiber sizes for a marked ring")
    fibers.add_argument("ring_size", metavar="N", type=_positive, help="ring size")
    fibers.add_argument("marked", metavar="r", type=_positive, help="marked nodes")
    _add_format(fibers)
    _add_cap(fibers)
    fibers.set_defaults(handler=_cmd_fibers)

    orb = sub.add_parser("orbits", help="orbit-size histogram of step sequences")
    orb.add_argument("k", type=_nonneg)
    orb.add_argument("l", type=_positive)
    orb.add_argument("group", choices=GROUPS)
    _add_format(orb)
    _add_cap(orb)
    orb.set_defaults(handler=_cmd_orbits)

    ver = sub.add_parser("verify", help="run an identity suite")
    ver.add_argument("suite", choices=SUITES)
    ver.add_argument("--k-max", type=_positive, default=DEFAULT_KL_BOUND)
    ver.add_argument("--l-max", type=_positive, default=DEFAULT_KL_BOUND)
    ver.add_argument("--primes", default="3,5,7,11", help="comma-separated odd primes")
    ver.add_argument("--m-max", type=_positive, default=DEFAULT_MULTIPLIER_BOUND)
    ver.add_argument("--n-max", type=_positive, default=DEFAULT_RING_BOUND)
    _add_format(ver)
    ver.set_defaults(handler=_cmd_verify)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "fibers" and args.marked > args.ring_size:
        parser.error(f"r={args.marked} must not exceed N={args.ring_size}")
    if args.command == "verify" and args.suite in ("main1", "all"):
        if args.k_max < 2 or args.l_max < 2:
            parser.error("--k-max and --l-max must be at least 2")
    if args.command == "verify" and args.suite in ("fibrations", "all"):
        if args.n_max < 3:
            parser.error("--n-max must be at least 3")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.handler(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        parser.error(str(exc))
        return 2  # unreachable; parser.error exits


if __name__ == "__main__":
    sys.exit(main())
