"""Command-line front end.

    relaysimp capacity --net net.json --mode hd
    relaysimp select   --net net.json --k 2 --mode hd
    relaysimp sweep    --k 1,2 --n-max 10 --c 1 --out sweep.csv
    relaysimp verify   table1 --trials 10000 --seed 0
    relaysimp gen      family --n 4 --c 1
    relaysimp gen      example sym2

Exit codes: 0 success (all verdicts hold), 1 verification failure,
2 usage, parse or cap error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cuts import fd_capacity
from .network import (DEFAULT_FD_CAP, DEFAULT_LARGE_R, DEFAULT_LP_CAP, EXAMPLE_NAMES, NetworkError,
                      gen_paper_example, gen_worst_case_family, network_from_csv, network_from_json,
                      network_to_json)
from .schedule_lp import hd_capacity
from .simplify import best_k_fd, best_k_hd, format_number, sweep_family_ratios, sweep_to_csv
from .verify import SUITES, TOL, conjecture_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _round(obj):
    """Round every float in a JSON-like object to 12 significant digits."""
    if isinstance(obj, float):
        return float(format_number(obj))
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _dump(obj) -> str:
    return json.dumps(_round(obj), sort_keys=True)


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be >= 1")
    return v


def _real(text):
    """Exact value when the text is a decimal or a/b fraction."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None


def _positive_real(text):
    v = float(text) if "e" in text.lower() else _real(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be > 0")
    return v


def _k_list(text):
    try:
        ks = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of ints") from None
    if not ks or ks[0] < 1:
        raise argparse.ArgumentTypeError("k values must be >= 1")
    return ks


def _read_net(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        if path.endswith(".csv") or text.lstrip().startswith("i,"):
            return network_from_csv(text)
        return network_from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(f"cannot parse network {path}: {e}") from None


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_capacity(args):
    net = _read_net(args.net)
    if args.mode == "fd":
        res = fd_capacity(net, cap=args.fd_cap)
    else:
        res = hd_capacity(net, lp_cap=args.lp_cap, exact=args.exact)
    d = res.to_dict()
    d["n"] = net.n
    line = f"{res.mode} capacity {format_number(res.value)}  min cut {d.get('min_cut')}"
    if args.exact and res.exact_value is not None:
        line += f"  exact {res.exact_value}"
    _emit(line + "\n" + _dump(d) + "\n", args.out)
    return EXIT_OK


def cmd_select(args):
    net = _read_net(args.net)
    if args.k > net.n:
        raise UsageError(f"--k {args.k} exceeds the relay count {net.n}")
    if args.mode == "fd":
        rep = best_k_fd(net, args.k, fd_cap=args.fd_cap)
    else:
        rep = best_k_hd(net, args.k, lp_cap=args.lp_cap, full=net.n <= args.lp_cap)
    parts = [f"best {args.k}-relay {rep.mode} subset {list(rep.best_subset)}",
             f"capacity {format_number(rep.subset_capacity)}"]
    if rep.ratio_hd is not None:
        parts.append(f"ratio_hd {format_number(rep.ratio_hd)}")
    parts.append(f"ratio_fd {format_number(rep.ratio_fd)}")
    _emit("  ".join(parts) + "\n" + _dump(rep.to_dict()) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args):
    if args.n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    if args.columns == "all" and args.n_max > args.lp_cap:
        raise UsageError(f"--n-max {args.n_max} exceeds --lp-cap {args.lp_cap}; "
                         "use --columns closed-form")
    rows = sweep_family_ratios(range(args.n_min, args.n_max + 1), c=args.c, k_set=args.k,
                               columns=args.columns, lp_cap=args.lp_cap, fd_cap=args.fd_cap)
    _emit(sweep_to_csv(rows), args.out)
    return EXIT_OK


def cmd_verify(args):
    reports = run_suite(args.suite, args.trials, args.seed, tol=args.tol)
    log = sys.stdout if not args.out else open(args.out, "w")
    try:
        for rep in reports:
            print(rep.summary(), file=sys.stderr)
            for v in rep.failures:
                log.write(_dump(v.to_dict()) + "\n")
        if args.suite == "theorems" and args.conjecture:
            print("conjecture (reported only): " + _dump(conjecture_report(args.trials, args.seed)),
                  file=sys.stderr)
    finally:
        if log is not sys.stdout:
            log.close()
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_gen(args):
    if args.kind == "family":
        if args.n is None:
            raise UsageError("gen family needs --n")
        net = gen_worst_case_family(args.n, args.c)
    else:
        if args.name not in EXAMPLE_NAMES:
            raise UsageError(f"unknown example {args.name!r}; known: {', '.join(EXAMPLE_NAMES)}")
        net = gen_paper_example(args.name, large_r=args.large_r)
    _emit(network_to_json(net) + "\n", args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="relaysimp", description="Gaussian diamond relay networks: "
                                "approximate capacities, relay selection and lemma audits.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--lp-cap", type=_positive_int, default=DEFAULT_LP_CAP,
                        help="largest n for the HD schedule LP (default %(default)s)")
    common.add_argument("--fd-cap", type=_positive_int, default=DEFAULT_FD_CAP,
                        help="largest n for FD cut enumeration (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("capacity", parents=[common], help="FD or HD approximate capacity")
    c.add_argument("--net", required=True, help="network JSON/CSV file, '-' for stdin")
    c.add_argument("--mode", choices=("fd", "hd"), default="hd")
    c.add_argument("--exact", action="store_true", help="certify the HD optimum in rationals")
    c.set_defaults(func=cmd_capacity)

    s = sub.add_parser("select", parents=[common], help="best k-relay subnetwork")
    s.add_argument("--net", required=True)
    s.add_argument("--k", type=_positive_int, required=True)
    s.add_argument("--mode", choices=("fd", "hd"), default="hd")
    s.set_defaults(func=cmd_select)

    w = sub.add_parser("sweep", parents=[common], help="ratios on the worst-case family (CSV)")
    w.add_argument("--k", type=_k_list, default=[1, 2], help="comma-separated k values")
    w.add_argument("--n-min", type=_positive_int, default=1)
    w.add_argument("--n-max", type=_positive_int, default=10)
    w.add_argument("--c", type=_positive_real, default=Fraction(1))
    w.add_argument("--columns", choices=("all", "closed-form"), default="all")
    w.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", parents=[common], help="randomized lemma and theorem audits")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--trials", type=_positive_int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=_positive_real, default=TOL)
    v.add_argument("--conjecture", action="store_true",
                   help="also report the best-2 versus FD/2 conjecture (theorems suite)")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", parents=[common], help="write a network JSON file")
    g.add_argument("kind", choices=("family", "example"))
    g.add_argument("name", nargs="?", help="example name")
    g.add_argument("--n", type=_positive_int)
    g.add_argument("--c", type=_positive_real, default=Fraction(1))
    g.add_argument("--large-r", type=_positive_real, default=Fraction(DEFAULT_LARGE_R),
                   help="finite stand-in for an unbounded link (default %(default)s)")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "tol", None) is not None:
        args.tol = float(args.tol)
    try:
        return args.func(args)
    except (UsageError, NetworkError) as e:
        print(f"relaysimp: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
