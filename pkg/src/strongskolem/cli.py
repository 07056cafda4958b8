"""Command-line interface.

Exit codes: 0 success, 1 mathematical failure (verification false, no
construction, search budget exhausted), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import designs, report
from .construct import ZpParams, construct_zp, construct_zpq, zpq_params
from .errors import (
    BadModulus,
    BadParams,
    BudgetExhausted,
    NoLambda,
    NotAStarter,
    StructuralError,
    VerificationFailed,
)
from .search import DEFAULT_BUDGET, MODES, SearchConfig, search_skolem
from .starter import Classification, canonical_form, classify, dumps, loads, starter_to_dict

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def render_classification(c: Classification) -> str:
    lines = [f"starter: {_yes(c.is_starter)}, strong: {_yes(c.is_strong)}, "
             f"skolem: {_yes(c.is_skolem)}"]
    lines += [f"witness: {w.describe()}" for w in c.witnesses]
    lines += [f"witness: {kind} ... {count} more suppressed"
              for kind, count in sorted(c.suppressed.items())]
    return "\n".join(lines) + "\n"


def _classification_dict(c: Classification) -> dict:
    return {
        "starter": c.is_starter,
        "strong": c.is_strong,
        "skolem": c.is_skolem,
        "witnesses": [w.describe() for w in c.witnesses],
    }


# -- subcommands -------------------------------------------------------------


def cmd_construct(args) -> int:
    try:
        if args.target == "zp":
            if len(args.moduli) != 1:
                raise _Usage("construct zp takes exactly one prime")
            params = ZpParams.from_variant(args.moduli[0], args.variant)
            s = construct_zp(params)
            block = {"p": params.p, "variant": params.variant, "beta": params.beta}
        else:
            if len(args.moduli) != 2:
                raise _Usage("construct zpq takes exactly two primes")
            params = zpq_params(*args.moduli, args.variant)
            s = construct_zpq(params)
            block = params.as_dict()
    except (BadModulus, BadParams, NoLambda) as exc:
        print(f"error: not constructible: {exc}", file=sys.stderr)
        return EXIT_MATH
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH

    s = canonical_form(s)
    c = classify(s)
    if args.format == "structured":
        data = starter_to_dict(s)
        if args.report:
            data["report"] = {"classification": _classification_dict(c), "params": block}
        text = json.dumps(data, separators=(", ", ": ")) + "\n"
    else:
        text = dumps(s, "plain")
        if args.report:
            text += "".join(f"# {line}\n" for line in render_classification(c).splitlines())
            text += "# params: " + " ".join(f"{k}={v}" for k, v in block.items()) + "\n"
    _write(text, args.output)
    if args.figures:
        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        from .plots import plot_starter

        plot_starter(s, out / f"starter_{s.n}_{block['variant']}.png")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        s = loads(_read(args.path))
    except StructuralError as exc:
        print(f"structural error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    c = classify(s)
    sys.stdout.write(render_classification(c))
    return EXIT_OK if c.is_strong_skolem else EXIT_MATH


def cmd_search(args) -> int:
    config = SearchConfig(args.n, args.mode, args.strong, args.budget)
    code = EXIT_OK
    try:
        result = search_skolem(config)
    except BudgetExhausted as exc:
        result = exc.partial
        code = EXIT_MATH
        print(f"budget exhausted after {result.nodes} nodes; "
              f"the count is a lower bound", file=sys.stderr)
    bound = "" if result.exhaustive else ">= "
    kind = "strong Skolem" if args.strong else "Skolem"
    if args.mode == "count":
        sys.stdout.write(f"count: {bound}{result.count}\n")
    elif args.format == "structured":
        sys.stdout.write(json.dumps([starter_to_dict(s) for s in result.starters]) + "\n")
    else:
        sys.stdout.write("\n".join(dumps(s, "plain") for s in result.starters))
    status = "exhaustive" if result.exhaustive else "incomplete"
    if args.mode == "first" and result.count:
        status = "stopped at first"
    print(f"{kind} starters of Z_{args.n}: {bound}{result.count} ({status}, "
          f"{result.nodes} nodes)", file=sys.stderr)
    return code


def cmd_scan(args) -> int:
    if args.max_n is not None:
        rows = report.scan_orders(args.max_n, run=args.run)
        cols = report.columns(rows, report.N_COLUMNS)
    else:
        rows = report.scan_pairs(args.max_pq, run=args.run)
        cols = report.columns(rows, report.PQ_COLUMNS)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=cols, delimiter=args.delimiter,
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write(buf.getvalue(), args.output)
    if args.figures:
        from .plots import plot_order_coverage, plot_pair_outcomes

        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        if args.max_n is not None:
            plot_order_coverage(rows, out / "order_coverage.png")
        else:
            plot_pair_outcomes(rows, out / "pair_outcomes.png")
    failed = any(r.get(v) == "fail" for r in rows for v in ("x2", "half"))
    return EXIT_MATH if failed else EXIT_OK


def cmd_factorize(args) -> int:
    try:
        s = loads(_read(args.path))
    except StructuralError as exc:
        print(f"structural error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        fact = designs.one_factorization(s)
    except NotAStarter as exc:
        print(f"error: {exc}", file=sys.stderr)
        for w in exc.witnesses:
            print(f"witness: {w.describe()}", file=sys.stderr)
        return EXIT_MATH
    _write(designs.to_json(fact), args.output)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongskolem",
        description="Construct, verify and search for strong Skolem starters of Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a starter of Z_p or Z_pq")
    p.add_argument("target", choices=["zp", "zpq"])
    p.add_argument("moduli", nargs="+", type=int, metavar="PRIME")
    p.add_argument("--variant", choices=["x2", "half"], default="x2",
                   help="pair x with 2x (x2) or with x/2 (half)")
    p.add_argument("--format", choices=["plain", "structured"], default="plain")
    p.add_argument("--report", action="store_true",
                   help="append the classification and parameter block")
    p.add_argument("--figures", metavar="DIR", help="write a pair diagram into DIR")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="classify a starter file")
    p.add_argument("path", help="starter file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for Skolem starters")
    p.add_argument("n", type=int)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--mode", choices=MODES, default="count")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["plain", "structured"], default="plain")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", help="tabulate construction coverage")
    limit = p.add_mutually_exclusive_group(required=True)
    limit.add_argument("--max-n", type=int)
    limit.add_argument("--max-pq", type=int)
    p.add_argument("--run", action="store_true", help="construct and verify each row")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--figures", metavar="DIR", help="write coverage figures into DIR")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("factorize", help="one-factorization of K_{n+1} from a starter")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_factorize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
