"""Command-line interface.

    akivis check FILE [--identity NAME] [--max-witnesses N]
                      [--report PATH] [--figure PATH]
    akivis classify FILE
    akivis table FILE [--op bracket|ternary|product]
    akivis example list
    akivis example emit NAME [--out PATH]
    akivis envelope dims FILE [--max-degree N] [--figure PATH]
    akivis envelope eval FILE --expr TEXT [--max-degree N]
    akivis envelope verify FILE [--max-degree N] [--report PATH]

FILE is an algebra file (see algfile).  Commands that need an Akivis
structure (check, classify, table --op bracket/ternary, all envelope
commands) accept product-table files too and derive bracket = super-
commutator, ternary = associator first; `table --op product` requires a
product-table file.

Output is deterministic: identical invocations print identical bytes.
Tables and dimension listings are tab-delimited; `--report` writes a JSON
document with sorted keys; `--figure` renders a PNG next to the text
output.  Exit codes: 0 all checks passed, 1 an identity or verification
sweep failed, 2 usage, parse, or truncation errors (reported on stderr).
The AKIVIS_MAX_DEGREE environment variable sets the default truncation
degree when --max-degree is not given.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .algfile import emit_algebra, load_algebra
from .catalog import CATALOG, catalog_names, random_vector
from .core import AkivisSpec, AlgebraError, SuperTable, Vector, derive_akivis
from .envelope import (
    TruncationPolicy,
    graded_dim,
    iota_roundtrip,
    verify_embedding_relations,
    verify_leading_term,
)
from .exprs import ExprError, eval_in_envelope, parse_expr
from .identities import DEFAULT_WITNESS_CAP, ReportBuilder, classify, run_check

_IDENTITY_KEYS = {
    "akivis": "akivis",
    "superanticomm": "superanticommutative",
    "lie": "lie",
    "malcev-ternary": "malcev-ternary",
}


class _UsageError(Exception):
    """A bad combination of file kind and command; reported like usage errors."""


def _load_spec(path: str) -> AkivisSpec:
    """Load an algebra file, deriving the Akivis structure from tables."""
    alg = load_algebra(path)
    if isinstance(alg, SuperTable):
        return derive_akivis(alg)
    return alg


def _policy(max_degree: int | None) -> TruncationPolicy:
    if max_degree is None:
        return TruncationPolicy.default()
    return TruncationPolicy(max_degree=max_degree)


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _print_grid(corner: str, row_names, col_names, cell) -> None:
    print("\t".join([corner, *col_names]))
    for r in row_names:
        print("\t".join([r, *(str(cell(r, c)) for c in col_names)]))


def cmd_check(args: argparse.Namespace) -> int:
    spec = _load_spec(args.file)
    report = run_check(spec, _IDENTITY_KEYS[args.identity], args.max_witnesses)
    print(report.summary_line())
    for w in report.witnesses:
        note = f" [{w.note}]" if w.note else ""
        print(f"  witness ({', '.join(w.args)}): {w.lhs} != {w.rhs}{note}")
    if args.report:
        _write_json(args.report, {"algebra": spec.name, **report.to_dict()})
    if args.figure:
        from .viz import save_check_figure

        save_check_figure(args.figure, report)
    return 0 if report.passed else 1


def cmd_classify(args: argparse.Namespace) -> int:
    print(classify(_load_spec(args.file)))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    alg = load_algebra(args.file)
    op = args.op
    if op is None:
        op = "product" if isinstance(alg, SuperTable) else "bracket"
    if op == "product":
        if not isinstance(alg, SuperTable):
            raise _UsageError("--op product needs a product-table file")
        names = alg.basis.names
        _print_grid("*", names, names, alg.product_of)
        return 0
    spec = alg if isinstance(alg, AkivisSpec) else derive_akivis(alg)
    names = spec.basis.names
    if op == "bracket":
        _print_grid("[,]", names, names, spec.bracket_of)
        return 0
    first = True
    for a in names:
        if not first:
            print()
        first = False
        _print_grid(f"A({a},-,-)", names, names,
                    lambda b, c, a=a: spec.ternary_of(a, b, c))
    return 0


def cmd_example_list(args: argparse.Namespace) -> int:
    for name in catalog_names():
        e = CATALOG[name]
        print("\t".join([e.name, e.kind, e.classification, e.description]))
    return 0


def cmd_example_emit(args: argparse.Namespace) -> int:
    if args.name not in CATALOG:
        raise _UsageError(f"unknown example {args.name!r}; "
                          f"known: {', '.join(catalog_names())}")
    text = emit_algebra(CATALOG[args.name].algebra())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def cmd_envelope_dims(args: argparse.Namespace) -> int:
    spec = _load_spec(args.file)
    policy = _policy(args.max_degree)
    dims = [graded_dim(spec, n, policy) for n in range(policy.max_degree + 1)]
    for n, d in enumerate(dims):
        print(f"{n}\t{d}")
    if args.figure:
        from .viz import save_dims_figure

        save_dims_figure(args.figure, spec.name or args.file, dims)
    return 0


def cmd_envelope_eval(args: argparse.Namespace) -> int:
    spec = _load_spec(args.file)
    ast = parse_expr(args.expr, spec)
    print(eval_in_envelope(ast, spec, _policy(args.max_degree)))
    return 0


def cmd_envelope_verify(args: argparse.Namespace) -> int:
    spec = _load_spec(args.file)
    policy = _policy(args.max_degree)
    if policy.max_degree < 3:
        raise _UsageError("envelope verify needs a truncation degree of at "
                          "least 3 (the associator checks reach degree 3)")
    reports = [verify_embedding_relations(spec, policy)]
    for n in range(2, min(3, policy.max_degree) + 1):
        rep = verify_leading_term(spec, n, policy)
        rep.identity = f"leading-term(n={n})"
        reports.append(rep)
    rng = random.Random(0)
    col = ReportBuilder("iota-roundtrip", DEFAULT_WITNESS_CAP)
    vectors = [Vector.unit(spec.basis, name) for name in spec.basis.names]
    vectors += [random_vector(rng, spec.basis) for _ in range(25)]
    for v in vectors:
        col.record((str(v),), iota_roundtrip(spec, v, policy), v)
    reports.append(col.report())
    passed = all(r.passed for r in reports)
    for r in reports:
        print(r.summary_line())
    if args.report:
        _write_json(args.report, {
            "algebra": spec.name,
            "max_degree": policy.max_degree,
            "status": "pass" if passed else "fail",
            "checks": [r.to_dict() for r in reports],
        })
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="akivis",
        description="Verify identities of Z2-graded algebras and compute in "
                    "their degree-filtered enveloping algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run an identity sweep over a file")
    p.add_argument("file")
    p.add_argument("--identity", choices=sorted(_IDENTITY_KEYS), default="akivis")
    p.add_argument("--max-witnesses", type=int, default=DEFAULT_WITNESS_CAP)
    p.add_argument("--report", metavar="PATH", help="write a JSON report")
    p.add_argument("--figure", metavar="PATH", help="render a PNG summary")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("classify", help="print the identity classification")
    p.add_argument("file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("table", help="print a multiplication table")
    p.add_argument("file")
    p.add_argument("--op", choices=["bracket", "ternary", "product"])
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("example", help="bundled example algebras")
    esub = p.add_subparsers(dest="example_command", required=True)
    q = esub.add_parser("list", help="list the bundled examples")
    q.set_defaults(fn=cmd_example_list)
    q = esub.add_parser("emit", help="write an example as an algebra file")
    q.add_argument("name")
    q.add_argument("--out", metavar="PATH")
    q.set_defaults(fn=cmd_example_emit)

    p = sub.add_parser("envelope", help="enveloping-algebra computations")
    vsub = p.add_subparsers(dest="envelope_command", required=True)
    q = vsub.add_parser("dims", help="print graded dimensions 0..N")
    q.add_argument("file")
    q.add_argument("--max-degree", type=int, metavar="N")
    q.add_argument("--figure", metavar="PATH")
    q.set_defaults(fn=cmd_envelope_dims)
    q = vsub.add_parser("eval", help="evaluate an expression")
    q.add_argument("file")
    q.add_argument("--expr", required=True, metavar="TEXT")
    q.add_argument("--max-degree", type=int, metavar="N")
    q.set_defaults(fn=cmd_envelope_eval)
    q = vsub.add_parser("verify", help="embedding, leading-term, and round-trip checks")
    q.add_argument("file")
    q.add_argument("--max-degree", type=int, metavar="N")
    q.add_argument("--report", metavar="PATH")
    q.set_defaults(fn=cmd_envelope_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ExprError, AlgebraError, _UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
