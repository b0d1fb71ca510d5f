"""Command-line front end.

Exit codes: 0 success, 1 verification failure or disagreement, 2 usage
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Optional, Sequence

from . import verifiers
from .calculus import X_PAIRS, Y_PAIRS, InputError, TripartiteSpec, total_count
from .closed_forms import best_bounds, upper_general
from .constructions import (
    k22n_construction,
    k22n_green_count,
    k22n_red_count,
    k22n_total,
    linear_labels,
    linear_stripe_model,
)
from .render import DEFAULT_COLORS, RenderSpec, render_svg
from .stripes import stripe_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

VERIFY_TARGETS = {
    "fmin": "fmin",
    "three-terms": "three_terms",
    "mixed": "mixed",
    "ys": "ys",
    "k22n-lb": "k22n_lower",
    "k22n-lower": "k22n_lower",
    "bichromatic-min": "bichromatic_min",
    "construction": "construction",
    "table": "table",
    "hh": "hh",
}


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _spec(values: Sequence[int]) -> TripartiteSpec:
    try:
        return TripartiteSpec(*values)
    except InputError as exc:
        raise UsageError(str(exc)) from None


def cmd_bounds(args) -> int:
    report = best_bounds(_spec((args.m, args.n, args.p)))
    if args.json:
        print(dump_json(report.to_dict()))
        return EXIT_OK
    s = report.spec
    print(f"K_{{{s.m},{s.n},{s.p}}}")
    for side in ("lower", "upper"):
        bound = getattr(report, side)
        print(f"  {side}: {bound.value} ({bound.method})")
        for method, value in bound.candidates.items():
            print(f"    {method}: {value}")
    if report.lower.value == report.upper.value:
        print(f"  exact: {report.lower.value}")
    return EXIT_OK


TABLE_HEADER = ("n", "lower", "improved_lower", "improved_upper", "upper")


def cmd_table(args) -> int:
    if not 2 <= args.max_n <= 10:
        raise UsageError(f"--max-n must be in 2..10, got {args.max_n}")
    rows = [(n, *verifiers.table_row(n)) for n in range(2, args.max_n + 1)]
    if args.csv:
        out = csv.writer(sys.stdout, lineterminator="\n")
        out.writerow(TABLE_HEADER)
        for row in rows:
            out.writerow(["" if v is None else v for v in row])
        return EXIT_OK
    widths = [max(len(h), 6) for h in TABLE_HEADER]
    print("  ".join(h.rjust(w) for h, w in zip(TABLE_HEADER, widths)))
    for row in rows:
        cells = ["--" if v is None else str(v) for v in row]
        print("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
    return EXIT_OK


def _style(args, layout: str) -> RenderSpec:
    colors = dict(DEFAULT_COLORS)
    for pair in ("MN", "MP", "NP"):
        value = getattr(args, f"color_{pair.lower()}")
        if value:
            colors[pair] = value
    try:
        return RenderSpec(
            layout=layout,
            colors=colors,
            width=args.width,
            height=args.height,
            circle_radius=args.radius,
        )
    except InputError as exc:
        raise UsageError(str(exc)) from None


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_construct(args) -> int:
    if args.kind == "linear":
        if len(args.sizes) != 3:
            raise UsageError("linear construction takes three sizes m n p")
        spec = _spec(args.sizes)
        labels = linear_labels(spec)
        breakdown = total_count(labels)
        payload = {
            "kind": "linear",
            "spec": {"m": spec.m, "n": spec.n, "p": spec.p},
            "labels": {
                "x": {a + b: list(labels.x[(a, b)].values) for a, b in X_PAIRS},
                "y": {a + b: list(labels.y[(a, b)].values) for a, b in Y_PAIRS},
            },
            "breakdown": breakdown.to_dict(),
        }
        layout = "cyclic"
        lines = [f"linear construction of K_{{{spec.m},{spec.n},{spec.p}}}"]
        if args.labels:
            for family, values in payload["labels"].items():
                lines += [f"  {family}-labels {k}: {v}" for k, v in values.items()]
        lines.append(f"  mono: {breakdown.to_dict()['mono']}")
        lines.append(f"  bi: {breakdown.to_dict()['bi']}")
        lines.append(f"  total: {breakdown.total}")
    else:
        if len(args.sizes) != 1:
            raise UsageError("k22n construction takes one size n")
        try:
            drawing = k22n_construction(args.sizes[0])
        except InputError as exc:
            raise UsageError(str(exc)) from None
        spec = TripartiteSpec(2, 2, drawing.n)
        red, green = k22n_red_count(drawing), k22n_green_count(drawing)
        payload = {
            "kind": "k22n",
            "drawing": drawing.to_dict(),
            "red": red,
            "green": green,
            "total": k22n_total(drawing),
        }
        layout = "nested"
        lines = [
            f"K_{{2,2,{drawing.n}}} construction (type {drawing.type})",
            f"  x: {list(drawing.x)}",
            f"  y: {list(drawing.y)}",
            f"  red: {red}",
            f"  green: {green}",
            f"  total: {payload['total']}",
        ]
    if args.svg:
        svg = render_svg(spec, _style(args, layout), title=lines[0])
        try:
            _write(args.svg, svg)
        except OSError as exc:
            print(f"tricircle: cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_IO
    if args.json:
        print(dump_json(payload))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _need(args, name: str, flag: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"verify {args.target} needs {flag}")
    return value


def _run_verifier(args) -> verifiers.VerificationReport:
    target = VERIFY_TARGETS[args.target]
    if target == "fmin":
        return verifiers.verify_fmin(_need(args, "n_max", "--n-max"))
    if target in ("three_terms", "mixed", "ys"):
        fn = getattr(verifiers, f"verify_{target}")
        return fn(_need(args, "n", "--n"))
    if target == "k22n_lower":
        progress = None if args.quiet else (lambda msg: print(msg, file=sys.stderr, flush=True))
        return verifiers.verify_k22n_lower(
            _need(args, "n", "--n"), allow_large=args.allow_large, progress=progress
        )
    if target == "bichromatic_min":
        return verifiers.verify_bichromatic_min(
            _need(args, "a", "--a"), _need(args, "b", "--b"), _need(args, "c", "--c")
        )
    if target == "construction":
        return verifiers.verify_construction(_need(args, "n_max", "--n-max"))
    if target == "table":
        return verifiers.verify_table(_need(args, "n_max", "--max-n"))
    return verifiers.verify_hh(_need(args, "N", "--N"))


def cmd_verify(args) -> int:
    try:
        report = _run_verifier(args)
    except InputError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(dump_json(report.to_dict()))
    else:
        print(f"{args.target}: {report.status} ({report.checked_count} cases, {report.elapsed_ms} ms)")
        for key, value in sorted(report.details.items()):
            print(f"  {key}: {value}")
        if report.counterexample is not None:
            print(f"  counterexample: {report.counterexample}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args) -> int:
    sizes = (args.m, args.n, args.p)
    if not all(1 <= s <= 8 for s in sizes):
        raise UsageError(f"oracle sizes must be in 1..8, got {sizes}")
    spec = _spec(sizes)
    counted = stripe_oracle(linear_stripe_model(spec))
    formula = upper_general(spec)
    agree = counted == formula
    if args.json:
        print(dump_json({
            "spec": {"m": spec.m, "n": spec.n, "p": spec.p},
            "stripe_oracle": counted,
            "formula": formula,
            "agree": agree,
        }))
    else:
        verdict = "agree" if agree else "DISAGREE"
        print(f"K_{{{spec.m},{spec.n},{spec.p}}}: stripe oracle {counted}, formula {formula}, {verdict}")
    return EXIT_OK if agree else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricircle",
        description="Bounds, constructions and brute-force checks for tripartite-circle crossing numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="best lower and upper bounds for K_{m,n,p}")
    for name in ("m", "n", "p"):
        p.add_argument(name, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="bounds for K_{n,n,n}, n = 2..max-n")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("construct", help="labels, crossing counts and optional SVG of a construction")
    p.add_argument("kind", choices=("linear", "k22n"))
    p.add_argument("sizes", type=int, nargs="+")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--labels", action="store_true", help="also list the label vectors")
    p.add_argument("--json", action="store_true")
    p.add_argument("--width", type=int, default=600)
    p.add_argument("--height", type=int, default=600)
    p.add_argument("--radius", type=float, default=0.0, help="inner circle radius (0 = automatic)")
    for pair in ("MN", "MP", "NP"):
        p.add_argument(f"--color-{pair.lower()}", metavar="COLOR", help=f"stroke for {pair} edges")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="exhaustive checks")
    p.add_argument("target", choices=sorted(VERIFY_TARGETS))
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", "--max-n", dest="n_max", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--N", dest="N", type=int)
    p.add_argument("--allow-large", action="store_true", help="lift the n <= 10 cap of k22n-lb")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare the stripe oracle with the closed form")
    for name in ("m", "n", "p"):
        p.add_argument(name, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tricircle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
