"""Command-line front end.

Exit status: 0 on success or a passing experiment, 1 when an experiment
does not pass, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .algebra import LaurentPoly, format_laurent
from .bracket import STATE_LIMIT_ENV, StateLimitError, jones_kauffman, kauffman_bracket, vk_series
from .experiments import EXPERIMENT_ALIASES, EXPERIMENTS, derivative_table_csv, find_shift, interpolants
from .gauss import GaussCodeError, parse_gauss_code, serialize
from .gpv import gpv_derivative_scan
from .twist import fractional_family, lattice_eval, parse_lattice

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def _read_input(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read().strip()
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit_laurent(p: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([[e, c] for e, c in p.to_pairs()])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent", "coefficient"])
        for e, c in sorted(p.terms.items(), reverse=True):
            w.writerow([e, c])
        return buf.getvalue().rstrip("\n")
    return format_laurent(p)


def _parse_z(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad lattice point {text!r}") from None


def _cmd_bracket(args) -> int:
    d = parse_gauss_code(_read_input(args.code))
    print(_emit_laurent(kauffman_bracket(d), args.format))
    return 0


def _cmd_jk(args) -> int:
    d = parse_gauss_code(_read_input(args.code))
    print(_emit_laurent(jones_kauffman(d), args.format))
    return 0


def _cmd_vk(args) -> int:
    d = parse_gauss_code(_read_input(args.code))
    series = vk_series(d, args.k)
    if args.series:
        values = [series[i] for i in range(args.k + 1)]
    else:
        values = [series[args.k]]
    if args.format == "json":
        print(json.dumps([_fraction_str(v) for v in values]))
    elif args.format == "csv":
        first = 0 if args.series else args.k
        print("k,value")
        for i, v in enumerate(values, start=first):
            print(f"{i},{_fraction_str(v)}")
    else:
        print(" ".join(str(v) for v in values))
    return 0


def _cmd_twist(args) -> int:
    lattice = parse_lattice(_read_input(args.lattice))
    z = _parse_z(args.z)
    if len(z) != lattice.dim:
        raise UsageError(f"lattice has {lattice.dim} axes but --z gives {len(z)} values")
    d = lattice_eval(lattice, z)
    code = serialize(d)
    if args.format == "json":
        out = {"z": list(z), "code": code}
        if args.jk:
            out["jk"] = [[e, c] for e, c in jones_kauffman(d).to_pairs()]
        print(json.dumps(out, sort_keys=True))
    else:
        print(code)
        if args.jk:
            print(format_laurent(jones_kauffman(d)))
    return 0


def _cmd_family(args) -> int:
    d = fractional_family(args.n)
    code = serialize(d)
    if args.format == "json":
        out = {"n": args.n, "code": code}
        if args.jk:
            out["jk"] = [[e, c] for e, c in jones_kauffman(d).to_pairs()]
        print(json.dumps(out, sort_keys=True))
    else:
        print(code)
        if args.jk:
            print(format_laurent(jones_kauffman(d)))
    return 0


def _experiment_kwargs(name: str, args) -> dict:
    given = {
        "n_max": args.n_max,
        "k": args.k,
        "k_max": args.k,
        "alpha_max": args.alpha_max,
        "seed": args.seed,
        "trials": args.trials,
    }
    accepted = {
        "closed-forms": ("n_max",),
        "inductive": ("k_max", "n_max"),
        "coefficients": ("k",),
        "explicit": ("k", "n_max"),
        "monotonicity": ("k", "n_max"),
        "nonvanishing": ("k", "alpha_max"),
        "finitetype": ("k", "trials", "seed"),
    }[name]
    required = {"coefficients": ("k",), "explicit": ("k",), "monotonicity": ("k",),
                "nonvanishing": ("k",), "finitetype": ("k",)}.get(name, ())
    for key in required:
        if given[key] is None:
            raise UsageError(f"experiment {name} needs --{key.replace('_', '-')}")
    return {key: given[key] for key in accepted if given[key] is not None}


def _cmd_experiment(args) -> int:
    args.name = EXPERIMENT_ALIASES.get(args.name, args.name)
    if args.name not in EXPERIMENTS:
        raise UsageError(f"unknown experiment {args.name!r}; choose from {', '.join(sorted(EXPERIMENTS))}")
    try:
        report = EXPERIMENTS[args.name](**_experiment_kwargs(args.name, args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv(), end="")
    else:
        print(report.to_text())
    return 0 if report.verdict == "pass" else 1


def _cmd_gpv_scan(args) -> int:
    from .bracket import vk

    alphas = list(range(args.k + 1, args.alpha_max + 1))
    if args.shift is not None:
        shift = args.shift
    elif args.k >= 2:
        shift, _ = find_shift(*interpolants(args.k), args.alpha_max)
        if shift is None:
            raise UsageError("no separating shift found; pass --shift")
    else:
        shift = 0
    try:
        scan = gpv_derivative_scan(lambda d: vk(d, args.k), fractional_family, shift, alphas)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({"k": args.k, "shift": shift,
                          "rows": [[a, _fraction_str(v), s] for a, v, s in scan]}, sort_keys=True))
    elif args.format == "csv":
        print(derivative_table_csv(scan), end="")
    else:
        print(f"shift {shift}")
        for a, v, _ in scan:
            print(f"{a} {v}")
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--limit", type=_positive, default=None,
                        help=f"state-sum crossing limit (default from ${STATE_LIMIT_ENV} or 24)")

    parser = argparse.ArgumentParser(prog="twistlattice", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    code_help = "Gauss code, '-' for stdin, or @file"
    p = sub.add_parser("bracket", parents=[common], help="Kauffman bracket")
    p.add_argument("code", help=code_help)
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("jk", parents=[common], help="Jones-Kauffman polynomial")
    p.add_argument("code", help=code_help)
    p.set_defaults(func=_cmd_jk)

    p = sub.add_parser("vk", parents=[common], help="coefficient v_k of f(e^x)")
    p.add_argument("code", help=code_help)
    p.add_argument("--k", type=_nonnegative, required=True)
    p.add_argument("--series", action="store_true", help="print v_0..v_k")
    p.set_defaults(func=_cmd_vk)

    p = sub.add_parser("twist", help="twist lattices")
    tsub = p.add_subparsers(dest="twist_command", required=True)
    t = tsub.add_parser("eval", parents=[common], help="evaluate a lattice at a point")
    t.add_argument("lattice", help="'<code>; slot_a slot_b XYZ; ...', '-' for stdin, or @file")
    t.add_argument("--z", required=True, help="comma separated lattice point")
    t.add_argument("--jk", action="store_true", help="also print the Jones-Kauffman polynomial")
    t.set_defaults(func=_cmd_twist)

    p = sub.add_parser("family", aliases=["figure5"], parents=[common], help="member n of the interleaved twist family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jk", action="store_true", help="also print the Jones-Kauffman polynomial")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("experiment", parents=[common], help="run a verification experiment")
    p.add_argument("name", help=", ".join(sorted(EXPERIMENTS)))
    p.add_argument("--k", type=_nonnegative)
    p.add_argument("--n-max", type=int)
    p.add_argument("--alpha-max", type=_positive)
    p.add_argument("--trials", type=_positive)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("gpv", help="finite-difference scans")
    gsub = p.add_subparsers(dest="gpv_command", required=True)
    g = gsub.add_parser("scan", parents=[common], help="high-order differences of v_k along the family")
    g.add_argument("--k", type=_nonnegative, required=True)
    g.add_argument("--alpha-max", type=_positive, required=True)
    g.add_argument("--shift", type=_nonnegative, default=None)
    g.set_defaults(func=_cmd_gpv_scan)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    previous = os.environ.get(STATE_LIMIT_ENV)
    if args.limit is not None:
        os.environ[STATE_LIMIT_ENV] = str(args.limit)
    try:
        return args.func(args)
    except (GaussCodeError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StateLimitError as exc:
        print(f"error: {exc}; raise --limit or ${STATE_LIMIT_ENV}", file=sys.stderr)
        return 2
    finally:
        if args.limit is not None:
            if previous is None:
                os.environ.pop(STATE_LIMIT_ENV, None)
            else:
                os.environ[STATE_LIMIT_ENV] = previous


def main() -> None:
    sys.exit(run())
