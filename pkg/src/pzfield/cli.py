"""``pz`` command line: classify, portrait, galois, darboux, verify.

Exit codes: 0 success, 1 failed verification, 2 a = b = c = 0,
3 unparseable input (or C = 0), 4 unwritable output path, 5 rho = 0 for
``darboux``.
"""

from __future__ import annotations

import argparse
import re
import sys

from pzfield import report
from pzfield.errors import AllZeroParams, RhoZero
from pzfield.model import Params, parse_literal, full_family

EXIT_VERIFY_FAILED = 1
EXIT_ALL_ZERO = 2
EXIT_PARSE = 3
EXIT_UNWRITABLE = 4
EXIT_RHO_ZERO = 5


NEGATIVE_LITERAL = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+/\d+$|^-\d*\.?\d+e[-+]?\d+$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # negative literals such as -1, -3/2 or -1e-3 are values, not options
        self._negative_number_matcher = NEGATIVE_LITERAL

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _literal(text: str):
    try:
        return parse_literal(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a decimal or p/q literal: {text!r}") from exc


def _add_params(sub, exponents=True):
    for name in ("a", "b", "c"):
        sub.add_argument(name, type=_literal)
    if exponents:
        sub.add_argument("-m", type=_literal, default=1, help="exponent m (default 1)")
        sub.add_argument("-k", type=_literal, default=0, help="exponent k (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pz", description="Analysis of the linear PZ families.")
    cmds = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = cmds.add_parser("classify", help="full JSON analysis report")
    _add_params(p)
    p.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
    p.add_argument("-C", type=_literal, default=1, help="integration constant (default 1)")

    p = cmds.add_parser("portrait", help="Poincare-disk portrait as SVG")
    _add_params(p, exponents=False)
    p.add_argument("--out", required=True, help="SVG output path")
    p.add_argument("--csv", help="optional CSV of the seed trajectories")

    p = cmds.add_parser("galois", help="rho, Galois group and solution bases")
    _add_params(p)

    p = cmds.add_parser("darboux", help="Darboux elements of the Riccati field")
    _add_params(p)
    p.add_argument("-C", type=_literal, default=1, help="integration constant (default 1)")

    p = cmds.add_parser("verify", help="run every invariant check")
    _add_params(p)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _params(args) -> Params:
    return Params(args.a, args.b, args.c, getattr(args, "m", 1), getattr(args, "k", 0))


def _warn(params: Params):
    if not params.is_exact:
        print("warning: decimal inputs; boundary sets have measure zero in floating point, "
              "use p/q literals to land on them", file=sys.stderr)


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_classify(args) -> int:
    params = _params(args)
    _warn(params)
    sys.stdout.write(report.dumps(report.analysis_report(params, args.C)))
    return 0


def cmd_portrait(args) -> int:
    from pzfield.numerics import write_trajectory_csv
    from pzfield.portrait import portrait

    params = _params(args)
    _warn(params)
    svg, trajectories = portrait(params.a, params.b, params.c)
    try:
        _write(args.out, svg)
        if args.csv:
            # seeds are concatenated in ring order; t restarts at -t_end for each
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                write_trajectory_csv(fh, trajectories, ("t", "x", "y"))
    except OSError as exc:
        print(f"pz portrait: cannot write output: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return 0


def cmd_galois(args) -> int:
    from pzfield.galois import params_galois

    params = _params(args)
    _warn(params)
    out = {"schema_version": report.SCHEMA_VERSION,
           "galois": report.galois_summary(params_galois(params))}
    sys.stdout.write(report.dumps(out))
    return 0


def cmd_darboux(args) -> int:
    from pzfield.galois import compute_rho

    params = _params(args)
    _warn(params)
    rho = compute_rho(params)
    if rho.is_zero:
        print("pz darboux: rho = 0 (additive Galois case); no Darboux set", file=sys.stderr)
        return EXIT_RHO_ZERO
    out = {"schema_version": report.SCHEMA_VERSION,
           "darboux": report.darboux_summary(rho.rho, args.C)}
    sys.stdout.write(report.dumps(out))
    return 0


def cmd_verify(args) -> int:
    from pzfield.verify import run_verification

    params = _params(args)
    _warn(params)
    full_family(params.a, params.b, params.c)  # rejects a = b = c = 0
    checks = run_verification(params, args.seed)
    for check in checks:
        print(check.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed or skipped")
    return EXIT_VERIFY_FAILED if failed else 0


COMMANDS = {
    "classify": cmd_classify,
    "portrait": cmd_portrait,
    "galois": cmd_galois,
    "darboux": cmd_darboux,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a parse failure with EXIT_PARSE
        return exc.code
    if getattr(args, "C", 1) == 0:
        print("pz: C = 0 collapses the second Riccati solution; choose C != 0", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](args)
    except AllZeroParams as exc:
        print(f"pz: {exc}", file=sys.stderr)
        return EXIT_ALL_ZERO
    except RhoZero as exc:
        print(f"pz: {exc}", file=sys.stderr)
        return EXIT_RHO_ZERO


if __name__ == "__main__":
    sys.exit(main())
