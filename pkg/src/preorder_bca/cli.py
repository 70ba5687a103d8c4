"""Command-line front end.

Subcommands wrap the library operations one-for-one:

  check, metric, bca, index, canonical, condition-star, generate, dot,
  covering-radius

Exit codes are a stable contract: 0 success, 2 semantic error (violations,
mismatched labels, bad parameters), 3 I/O or parse error, 4 feasibility
guard.  Output is deterministic ASCII; pass --unicode for relation glyphs.
No color is ever emitted, so NO_COLOR is honored trivially.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .core import (
    GroundSet,
    Preorder,
    Relation,
    incomparable_witness,
    relation_violations,
    validate_preorder,
)
from .completions import canonical_completion
from .documents import (
    RelationDocument,
    document_from_relation,
    document_from_total,
    document_to_json,
    document_to_relation,
    parse_document,
    render_dot,
    transitive_closure_rows,
)
from .errors import (
    BadParameter,
    DocumentError,
    EmptySubset,
    GroundMismatch,
    NotACompletion,
    NotTotal,
    ParameterMismatch,
    PreorderBcaError,
    TooLarge,
    ViolationError,
)
from .families import FamilySpec
from .metrics import ksb_distance, top_difference_direct, top_difference_fast
from .scoring import index_general
from .solver import (
    ApproximationReport,
    bca_auto,
    bca_bruteforce,
    bca_duality,
    bca_theorem5,
    condition_star,
    covering_radius,
)

EXIT_OK = 0
EXIT_SEMANTIC = 2
EXIT_IO = 3
EXIT_GUARD = 4


def _read_document(path: str) -> RelationDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_document(handle.read())


def _load_preorder(path: str) -> Preorder:
    return validate_preorder(document_to_relation(_read_document(path)))


def _strict_sep(args) -> str:
    return " ≻ " if args.unicode else " > "


def _render_report(report: ApproximationReport, args, verdict: str | None) -> str:
    lines = [f"method: {report.method}", f"distance: {report.distance}"]
    if verdict is not None:
        lines.insert(0, f"condition-star: {verdict}")
    if not report.complete_set:
        lines.append("note: canonical completion is a member; the tie set "
                      "may be larger")
    lines.append("candidates:")
    for cand, index in zip(report.bca_set, report.indices):
        lines.append(f"  {cand.render(_strict_sep(args))}  (index {index})")
    return "\n".join(lines) + "\n"


def _report_json(report: ApproximationReport, verdict: str | None) -> str:
    payload = {
        "schema": "bca-report/1",
        "method": report.method,
        "distance": report.distance,
        "complete_set": report.complete_set,
        "condition_star": verdict,
        "indices": [str(i) for i in report.indices],
        "candidates": [
            json.loads(document_to_json(document_from_total(c)))
            for c in report.bca_set
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_check(args) -> int:
    doc = _read_document(args.file)
    rel = document_to_relation(doc)
    witnesses = relation_violations(rel)
    if witnesses:
        for w in witnesses:
            print("violation:", " ".join(str(t) for t in w))
        return EXIT_SEMANTIC
    preorder = Preorder(rel.ground, rel.rows)
    if args.total:
        pair = incomparable_witness(preorder)
        if pair is not None:
            i, j = pair
            print(f"not total: {preorder.ground.labels[i]} and "
                  f"{preorder.ground.labels[j]} are incomparable")
            return EXIT_SEMANTIC
    print(f"ok: preorder on {preorder.n} elements")
    return EXIT_OK


def cmd_metric(args) -> int:
    p = _load_preorder(args.file_a)
    q = _load_preorder(args.file_b)
    if args.metric == "top-diff":
        value = top_difference_fast(p, q)
    elif args.metric == "top-diff-direct":
        value = top_difference_direct(p, q, max_n=args.max_n)
    else:
        value = ksb_distance(p, q)
    print(value)
    return EXIT_OK


def cmd_bca(args) -> int:
    base = _load_preorder(args.file)
    verdict: str | None = None
    if args.method == "auto":
        try:
            verdict = condition_star(base).verdict
        except TooLarge:
            verdict = None
        report = bca_auto(base)
    elif args.method == "bruteforce":
        report = bca_bruteforce(base, max_n=args.max_n)
    elif args.method == "duality":
        report = bca_duality(base, max_classes=args.max_n)
    else:
        star = condition_star(base)
        verdict = star.verdict
        maybe = bca_theorem5(base)
        if maybe is None:
            print("not applicable: condition (*) fails for this relation")
            return EXIT_SEMANTIC
        report = maybe
    if args.emit == "json":
        sys.stdout.write(_report_json(report, verdict))
    elif args.emit == "dot":
        parts = [
            render_dot(c.as_preorder, name=f"bca{i}")
            for i, c in enumerate(report.bca_set)
        ]
        sys.stdout.write("".join(parts))
    else:
        sys.stdout.write(_render_report(report, args, verdict))
    return EXIT_OK


def cmd_index(args) -> int:
    base = _load_preorder(args.file)
    print(index_general(base, max_classes=args.max_n))
    return EXIT_OK


def cmd_canonical(args) -> int:
    base = _load_preorder(args.file)
    total = canonical_completion(base)
    if args.emit == "json":
        sys.stdout.write(document_to_json(document_from_total(total)))
    elif args.emit == "dot":
        sys.stdout.write(render_dot(total.as_preorder, name="canonical"))
    else:
        print(total.render(_strict_sep(args)))
    return EXIT_OK


def cmd_condition_star(args) -> int:
    base = _load_preorder(args.file)
    report = condition_star(base, max_layer=args.max_n)
    print(f"verdict: {report.verdict}")
    if report.witnesses:
        w = report.witnesses[0]
        labels = base.ground.label_set
        print(f"witness: layer {w.layer}, S={{{','.join(labels(w.subset))}}}, "
              f"Y={{{','.join(labels(w.below))}}}, index {w.index_value}, "
              f"bound {w.bound}")
    return EXIT_OK


def _random_document(n: int, density: float, seed: int) -> RelationDocument:
    rng = random.Random(seed)
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                rows[i] |= 1 << j
    rows = transitive_closure_rows(rows)
    labels = tuple(f"x{i}" for i in range(1, n + 1))
    rel = Relation(GroundSet(labels), tuple(rows))
    return document_from_relation(rel)


def cmd_generate(args) -> int:
    if args.family == "random":
        if args.n is None:
            raise BadParameter("random family needs --n")
        doc = _random_document(args.n, args.density, args.seed)
        sys.stdout.write(document_to_json(doc))
        return EXIT_OK
    params = {}
    for name in ("z", "k", "m", "n", "alphabet"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    spec = FamilySpec(args.family, params)
    built = spec.build()
    if args.emit == "dot":
        sys.stdout.write(render_dot(built, name=args.family))
        return EXIT_OK
    doc = document_from_relation(built)
    if args.expected_bca:
        payload = {
            "schema": "family-pair/1",
            "family": json.loads(document_to_json(doc)),
            "expected_bca": json.loads(
                document_to_json(document_from_total(spec.expected_bca()))),
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(document_to_json(doc))
    return EXIT_OK


def cmd_dot(args) -> int:
    base = _load_preorder(args.file)
    sys.stdout.write(render_dot(base))
    return EXIT_OK


def cmd_covering_radius(args) -> int:
    ground = GroundSet(tuple(f"x{i}" for i in range(1, args.n + 1)))
    report = covering_radius(ground, max_n=args.max_n)
    if args.emit == "json":
        payload = {
            "schema": "covering-radius/1",
            "n": args.n,
            "radius": report.radius,
            "witness": json.loads(
                document_to_json(document_from_relation(report.witness))),
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(f"radius: {report.radius}")
        print("witness:")
        sys.stdout.write(document_to_json(document_from_relation(report.witness)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preorder-bca",
        description="Best complete approximations of finite preorders under "
                    "the top-difference semimetric.",
    )
    parser.add_argument("--emit", choices=["text", "json", "dot"],
                        default="text", help="output format where supported")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized fixtures (generate random)")
    parser.add_argument("--max-n", type=int, default=None, dest="max_n",
                        help="override the feasibility guard of the wrapped "
                             "operation")
    parser.add_argument("--unicode", action="store_true",
                        help="use relation glyphs in text output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a relation document")
    p.add_argument("file")
    p.add_argument("--total", action="store_true",
                   help="additionally require totality")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("metric", help="distance between two documents")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--metric", choices=["top-diff", "top-diff-direct", "ksb"],
                   default="top-diff")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("bca", help="best complete approximations")
    p.add_argument("file")
    p.add_argument("--method",
                   choices=["auto", "bruteforce", "duality", "theorem5"],
                   default="auto")
    p.set_defaults(func=cmd_bca)

    p = sub.add_parser("index", help="index of a preorder")
    p.add_argument("file")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("canonical", help="canonical completion")
    p.add_argument("file")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("condition-star", help="layer condition verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_condition_star)

    p = sub.add_parser("generate", help="emit a family document")
    p.add_argument("family",
                   choices=["containment", "refinement", "word_prefix",
                            "coordinatewise", "fence", "crown", "chain",
                            "equality", "indifferent", "random"])
    p.add_argument("--z", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alphabet", type=int)
    p.add_argument("--density", type=float, default=0.3,
                   help="edge density for the random family")
    p.add_argument("--expected-bca", action="store_true", dest="expected_bca",
                   help="also emit the closed-form best approximation")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("dot", help="Hasse diagram as Graphviz DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("covering-radius", help="covering radius sweep")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_covering_radius)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except TooLarge as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ViolationError, GroundMismatch, NotTotal, NotACompletion,
            EmptySubset, BadParameter, ParameterMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except PreorderBcaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
