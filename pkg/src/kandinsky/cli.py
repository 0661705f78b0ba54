"""Command-line front end: ``kandinsky generate|eval|render|validate``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import geometric_violations, DEFAULT_MARGIN, DEFAULT_SEPARATION
from .dsl import GRAMMAR, parse
from .errors import (
    BudgetExhausted,
    DatasetIOError,
    DslError,
    KandinskyError,
    SchemaError,
)
from .io import (
    RenderConfig,
    emit_dataset,
    load_figure,
    render_svg,
    universe_from_dict,
    validate_dataset,
)
from .patterns import PatternSpec, builtin_patterns, get_pattern

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetIOError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _statement(path: str):
    try:
        return parse(_read(path))
    except DslError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _figure(path: str):
    try:
        return load_figure(_read(path))
    except SchemaError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _resolve_pattern(args) -> PatternSpec:
    if args.pattern is not None:
        if args.statement or args.universe:
            raise UsageError("use either --pattern or --statement with --universe, not both")
        try:
            p = get_pattern(args.pattern)
        except KeyError:
            raise UsageError(f"unknown pattern {args.pattern!r}; known: "
                             + ", ".join(p.name for p in builtin_patterns())) from None
        if p.ground_truth is None:
            raise UsageError(f"pattern {p.name!r} defines only a universe; "
                             "supply the rule with --statement and --universe")
        return p
    if not (args.statement and args.universe):
        raise UsageError("give --pattern, or both --statement and --universe")
    gt = _statement(args.statement)
    try:
        universe = universe_from_dict(json.loads(_read(args.universe)))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.universe}: invalid JSON: {exc}") from exc
    except SchemaError as exc:
        raise UsageError(f"{args.universe}: {exc}") from exc
    return PatternSpec(Path(args.statement).stem, universe, gt)


def cmd_generate(args) -> int:
    if min(args.n_true, args.n_false, args.n_cf) < 0:
        raise UsageError("counts must be non-negative")
    if args.resolution < 64:
        raise UsageError("--resolution must be at least 64")
    p = _resolve_pattern(args)
    hypothesis = _statement(args.cf_hypothesis) if args.cf_hypothesis else None
    if args.n_cf > 0 and hypothesis is None:
        raise UsageError("--n-cf > 0 requires --cf-hypothesis")
    manifest = emit_dataset(p, (args.n_true, args.n_false, args.n_cf), hypothesis,
                            args.seed, args.out, args.resolution)
    print(manifest.digest)
    return EXIT_OK


def cmd_eval(args) -> int:
    statement = _statement(args.statement)
    fig = _figure(args.figure)
    issues = geometric_violations(fig.objects, DEFAULT_MARGIN, DEFAULT_SEPARATION)
    if issues:
        rules = ", ".join(sorted({v.rule for v in issues}))
        print(f"warning: {args.figure} is not a valid figure ({rules}); evaluating anyway",
              file=sys.stderr)
    print("true" if statement.evaluate(fig) else "false")
    return EXIT_OK


def cmd_render(args) -> int:
    if args.resolution < 64:
        raise UsageError("--resolution must be at least 64")
    fig = _figure(args.figure)
    svg = render_svg(fig, RenderConfig(resolution=args.resolution))
    try:
        Path(args.out).write_text(svg, encoding="utf-8")
    except OSError as exc:
        raise DatasetIOError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    return EXIT_OK


def cmd_validate(args) -> int:
    report = validate_dataset(args.dir)
    if report.ok:
        print("ok")
        return EXIT_OK
    for v in report.violations:
        print(f"{v.rule}: {v.detail}")
    print(f"{len(report.violations)} violation(s)")
    return EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="kandinsky",
        description="Generate, evaluate, render and validate Kandinsky figure datasets.",
        epilog="Statement (.kst) grammar:\n\n" + GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"kandinsky {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="emit a seeded dataset directory")
    g.add_argument("--pattern", help="built-in pattern name")
    g.add_argument("--statement", help="ground-truth .kst file")
    g.add_argument("--universe", help="universe JSON file")
    g.add_argument("--n-true", type=int, default=0)
    g.add_argument("--n-false", type=int, default=0)
    g.add_argument("--n-cf", type=int, default=0)
    g.add_argument("--cf-hypothesis", help="hypothesis .kst file for counterfactuals")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.add_argument("--resolution", type=int, default=512)
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("eval", help="evaluate a statement on a figure")
    e.add_argument("--statement", required=True)
    e.add_argument("--figure", required=True)
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("render", help="render a figure JSON to SVG")
    r.add_argument("--figure", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--resolution", type=int, default=512)
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("validate", help="re-check a dataset against its manifest")
    v.add_argument("--dir", required=True)
    v.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DatasetIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except KandinskyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
