"""``perichar`` command-line front end.

Every subcommand prints deterministic output: JSON by default, or a short
human-readable form with ``--text``.  Polynomials are read only from JSON
files (``--poly-file``) or standard input (``--stdin``).

Exit codes: 0 success, 1 domain error (one ``ERROR: ...`` line on stderr),
2 usage error, 130 when interrupted.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import signal
import sys
from pathlib import Path

from . import euler, schur, selftest, superchar, weights
from .cancel import CancelToken, Cancelled
from .laurent import LaurentPolynomial, PolynomialError

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_CANCELLED = 0, 1, 2, 130

DOMAIN_ERRORS = (PolynomialError, schur.WeightError, superchar.SupercharError,
                 euler.ParabolicError)


GRAMMAR = ("perichar <subcommand> [--n INT] [--weight CSV] [--k INT] [--gamma CSV] "
           "[--a INT | --a-min INT --a-max INT] [--poly-file PATH | --stdin] [--json | --text]")

VALUE_FLAGS = ("--n", "--weight", "--k", "--gamma", "--a", "--a-min", "--a-max", "--window")
_NEGATIVE_CSV = re.compile(r"-\d+(,-?\d+)*$")


class UsageError(Exception):
    pass


def _attach_negative_values(argv: list) -> list:
    # "--weight -1,-2" would otherwise be read as an unknown option
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE_CSV.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _csv_ints(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _window(text: str) -> tuple:
    vals = _csv_ints(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError("window must be LO,HI")
    return vals


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# -- input helpers -------------------------------------------------------------

def _weight(args, required=True) -> tuple | None:
    lam = args.weight
    if lam is None:
        if required:
            raise UsageError("--weight is required")
        return None
    if args.n is not None and len(lam) != args.n:
        raise UsageError(f"--weight has {len(lam)} entries but --n is {args.n}")
    return lam


def _poly(args, stdin) -> LaurentPolynomial:
    if args.poly_file is not None and args.stdin:
        raise UsageError("give only one of --poly-file and --stdin")
    if args.poly_file is not None:
        try:
            text = Path(args.poly_file).read_text()
        except OSError as exc:
            raise PolynomialError(f"cannot read {args.poly_file}: {exc.strerror}") from None
    elif args.stdin:
        text = stdin.read()
    else:
        raise UsageError("a polynomial is required: use --poly-file PATH or --stdin")
    f = LaurentPolynomial.from_json(text)
    if args.n is not None and f.nvars != args.n:
        raise PolynomialError(f"polynomial has {f.nvars} variables but --n is {args.n}")
    return f


def _element(args, stdin) -> superchar.SupercharElement:
    f = _poly(args, stdin)
    return superchar.SupercharElement(f.nvars, f)


# -- output helpers ----------------------------------------------------------------

def _fmt_weight(lam) -> str:
    return "(" + ",".join(str(v) for v in lam) + ")"


def _emit_poly(args, f: LaurentPolynomial) -> str:
    return f.to_json() if not args.text else str(f)


def _emit_combination(args, c: superchar.ThinKacCombination) -> str:
    if not args.text:
        return _compact(c.to_json_obj())
    if not c.coeffs:
        return "0"
    return "\n".join(f"{c.coeffs[lam]:+d} nabla{_fmt_weight(lam)}" for lam in sorted(c.coeffs))


def _emit_bool(args, value: bool) -> str:
    return "true" if value else "false"


# -- subcommands -------------------------------------------------------------------

def cmd_schur(args, stdin, cancel):
    lam = _weight(args, required=False)
    if lam is not None:
        return _emit_poly(args, schur.schur_laurent(lam))
    coeffs = schur.schur_decompose(_poly(args, stdin), cancel=cancel)
    if args.text:
        return "\n".join(f"{c:+d} s{_fmt_weight(lam)}" for lam, c in sorted(coeffs.items())) or "0"
    return _compact(schur.decomposition_to_json_obj(coeffs))


def cmd_thinkac(args, stdin, cancel):
    return _emit_poly(args, superchar.sch_thin_kac(_weight(args)).poly)


def cmd_diagram(args, stdin, cancel):
    lam = _weight(args)
    bullets = weights.to_diagram(lam)
    if args.window is not None:
        lo, hi = args.window
    else:
        lo, hi = (min(bullets) - 2, max(bullets) + 2) if bullets else (-2, 2)
    if args.text:
        return weights.render_diagram(lam, lo, hi)
    return _compact({"weight": list(lam), "bullets": list(bullets), "window": [lo, hi],
                     "beads": "".join("b" if p in set(bullets) else "o" for p in range(lo, hi + 1))})


def cmd_member(args, stdin, cancel):
    return _emit_bool(args, superchar.jn_membership(_element(args, stdin)))


def cmd_ds(args, stdin, cancel):
    k = 1 if args.k is None else args.k
    return _emit_poly(args, superchar.ds_iterate(_element(args, stdin), k).poly)


def cmd_translate(args, stdin, cancel):
    lam = _weight(args)
    if args.k is not None:
        return _emit_combination(args, superchar.translate_thin_kac(lam, args.k))
    table = superchar.sign_table(lam)
    if args.text:
        lines = []
        for k, terms in table.items():
            case = superchar.translation_case(lam, k)
            for mu, c in terms.items():
                lines.append(f"k={k} case={case} {c:+d} nabla{_fmt_weight(mu)}")
        return "\n".join(lines) or "0"
    return _compact({"weight": list(lam), "sources": [
        {"k": k, "case": superchar.translation_case(lam, k),
         "terms": [[list(mu), c] for mu, c in terms.items()]}
        for k, terms in table.items()]})


def cmd_tensorv(args, stdin, cancel):
    return _emit_combination(args, superchar.tensor_V_decompose(_weight(args)))


def cmd_kernel(args, stdin, cancel):
    return _emit_combination(args, superchar.kernel_decompose(_element(args, stdin), cancel=cancel))


def cmd_euler(args, stdin, cancel):
    lam = _weight(args)
    if args.gamma is None:
        raise UsageError("--gamma is required")
    if len(args.gamma) != len(lam):
        raise UsageError("--gamma and --weight lengths differ")
    if args.schur:
        coeffs = euler.euler_schur_coefficients(lam, args.gamma, cancel=cancel)
        if args.text:
            return "\n".join(f"{c:+d} s{_fmt_weight(mu)}" for mu, c in sorted(coeffs.items())) or "0"
        return _compact(schur.decomposition_to_json_obj(coeffs))
    return _emit_poly(args, euler.euler_characteristic(lam, args.gamma, cancel=cancel).poly)


def _a_values(args) -> list:
    if args.a is not None:
        if args.a_min is not None or args.a_max is not None:
            raise UsageError("give either --a or --a-min/--a-max")
        return [args.a]
    if args.a_min is None or args.a_max is None:
        raise UsageError("give --a or both --a-min and --a-max")
    if args.a_min > args.a_max:
        raise UsageError("--a-min exceeds --a-max")
    return list(range(args.a_min, args.a_max + 1))


def cmd_probe(args, stdin, cancel):
    if args.n is None or args.k is None:
        raise UsageError("probe needs --n and --k")
    report = euler.surjectivity_probe(args.n, args.k, _a_values(args), cancel=cancel)
    if args.text:
        target = superchar.sch_thin_kac((0,) * (args.n - 2 * args.k))
        lines = [f"n={args.n} k={args.k} target={target}"]
        for row in report["rows"]:
            value = LaurentPolynomial.from_json_obj(row["ds_value"])
            match = "+" if row["equals_plus"] else "-" if row["equals_minus"] else "no"
            lines.append(f"a={row['a']} match={match} ds={value}")
        return "\n".join(lines)
    return _compact(report)


def cmd_selftest(args, stdin, cancel):
    scale = selftest.QUICK if args.quick else selftest.FULL
    if args.write_golden is not None:
        out = Path(args.write_golden)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in selftest.golden_files().items():
            (out / name).write_text(text)
        return None
    keys = args.only or list(selftest.CRITERIA)
    unknown = [k for k in keys if k not in selftest.CRITERIA]
    if unknown:
        raise UsageError(f"unknown criterion {unknown[0]!r}; choose from {', '.join(selftest.CRITERIA)}")
    results = []
    for key in keys:
        cancel.check()
        results.append((key, selftest.CRITERIA[key](scale)))
    passed = all(r.passed for _, r in results)
    if args.text:
        lines = [f"{'PASS' if r.passed else 'FAIL'} {key} {r.name} checked={r.checked}"
                 + ("" if r.counterexample is None else f" counterexample={_compact(r.counterexample)}")
                 for key, r in results]
        text = "\n".join(lines)
    else:
        text = selftest.dump_json({"scale": scale.name, "passed": passed,
                                   "results": [dict(r.to_json_obj(), criterion=key)
                                               for key, r in results]}).rstrip("\n")
    return text, (EXIT_OK if passed else EXIT_DOMAIN)


COMMANDS = {
    "schur": (cmd_schur, "Schur polynomial of --weight, or Schur decomposition of a polynomial"),
    "thinkac": (cmd_thinkac, "supercharacter of the thin Kac module of --weight"),
    "diagram": (cmd_diagram, "weight diagram of --weight"),
    "member": (cmd_member, "test membership of a polynomial in J_n"),
    "ds": (cmd_ds, "apply ds_n (or its --k-fold iterate) to a polynomial"),
    "translate": (cmd_translate, "translation summands of nabla(--weight), one --k or all"),
    "tensorv": (cmd_tensorv, "class of nabla(--weight) tensor V in the thin Kac basis"),
    "kernel": (cmd_kernel, "thin Kac decomposition of a kernel element of ds_n"),
    "euler": (cmd_euler, "Euler characteristic of --weight for the parabolic of --gamma"),
    "probe": (cmd_probe, "compare ds^(k) of the parabolic candidates against nabla(0)"),
    "selftest": (cmd_selftest, "run the property suites"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank")
    common.add_argument("--weight", type=_csv_ints, metavar="CSV", help="weight, e.g. 2,0,-1")
    common.add_argument("--k", type=int)
    common.add_argument("--gamma", type=_csv_ints, metavar="CSV")
    common.add_argument("--a", type=int)
    common.add_argument("--a-min", type=int)
    common.add_argument("--a-max", type=int)
    common.add_argument("--poly-file", metavar="PATH")
    common.add_argument("--stdin", action="store_true", help="read the polynomial JSON from stdin")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="human-readable output")

    parser = argparse.ArgumentParser(
        prog="perichar", usage=GRAMMAR,
        description="Exact computations in the supercharacter ring of the periplectic supergroup.")
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>", required=True,
                                prog="perichar")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "diagram":
            p.add_argument("--window", type=_window, metavar="LO,HI", help="positions to draw")
        elif name == "euler":
            p.add_argument("--schur", action="store_true", help="print Schur coefficients instead")
        elif name == "selftest":
            scale = p.add_mutually_exclusive_group()
            scale.add_argument("--quick", action="store_true")
            scale.add_argument("--full", action="store_true")
            p.add_argument("--only", action="append", metavar="CRITERION",
                           help="run one criterion (repeatable)")
            p.add_argument("--write-golden", metavar="DIR",
                           help="regenerate the golden files into DIR and exit")
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None, cancel: CancelToken | None = None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    cancel = CancelToken() if cancel is None else cancel
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(_attach_negative_values(
                list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handler = COMMANDS[args.command][0]
    try:
        out = handler(args, stdin, cancel)
    except UsageError as exc:
        print(f"usage: {GRAMMAR}", file=stderr)
        print(f"perichar {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except DOMAIN_ERRORS as exc:
        print(f"ERROR: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}", file=stderr)
        return EXIT_DOMAIN
    except Cancelled:
        print("ERROR: cancelled", file=stderr)
        return EXIT_CANCELLED
    code = EXIT_OK
    if isinstance(out, tuple):
        out, code = out
    if out is not None:
        print(out, file=stdout)
    return code


def main(argv=None) -> int:
    token = CancelToken()

    def on_sigint(signum, frame):
        # flag any cooperative loops, then unwind the main thread right away
        token.cancel()
        raise KeyboardInterrupt

    previous = signal.signal(signal.SIGINT, on_sigint)
    try:
        return run(argv, cancel=token)
    except KeyboardInterrupt:
        print("ERROR: cancelled", file=sys.stderr)
        return EXIT_CANCELLED
    finally:
        signal.signal(signal.SIGINT, previous)


if __name__ == "__main__":
    sys.exit(main())
