"""Command-line front end: ``tildeiso <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 no witness found (``witness``),
4 budget exceeded.
"""

import argparse
import json
import sys

from .distance import minimal_op_sets, tilde_distance, tilde_distance_oracle
from .errors import BudgetExceededError, TildeError
from .isometry import audit_prop2, audit_subgraph_distances, classify
from .overlap import condition_tilde, error_overlaps
from .survey import rows_to_jsonl, rows_to_tsv, run_survey
from .transform import (
    enumerate_minimal_transformations,
    exists_f_free_minimal_transformation,
    is_witness_pair,
)
from .witness import construct_witnesses
from .words import Word

EXIT_OK, EXIT_INVALID, EXIT_ABSENT, EXIT_BUDGET = 0, 2, 3, 4


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _word(alphabet="01"):
    def parse(text):
        try:
            return Word(text, alphabet)
        except TildeError as exc:
            raise argparse.ArgumentTypeError(str(exc))
    return parse


def cmd_dist(args, out):
    u, v = Word(args.u, args.alphabet), Word(args.v, args.alphabet)
    if args.oracle or not (u.is_binary and v.is_binary):
        d = tilde_distance_oracle(u, v)
    else:
        d = tilde_distance(u, v)
    print(d, file=out)
    if args.explain:
        sets = minimal_op_sets(u, v)
        print(str(sets[0]) if sets[0].ops else "-", file=out)
    return EXIT_OK


def cmd_transform(args, out):
    if args.avoid is not None:
        found = exists_f_free_minimal_transformation(args.u, args.v, args.avoid)
        print(str(found) if found is not None else "none", file=out)
        return EXIT_OK
    found = enumerate_minimal_transformations(args.u, args.v)
    for t in found if args.all else found[:1]:
        print(t, file=out)
    return EXIT_OK


def cmd_witness_check(args, out):
    print(dumps(is_witness_pair(args.f, args.u, args.v).to_dict()), file=out)
    return EXIT_OK


def _condition_cell(f, eo):
    if eo.distance != 2:
        return "-"
    return "yes" if condition_tilde(f, eo) else "no"


def cmd_overlaps(args, out):
    overlaps = error_overlaps(args.f)
    if args.json:
        rows = []
        for eo in overlaps:
            row = eo.to_dict()
            row["condition"] = condition_tilde(args.f, eo) if eo.distance == 2 else None
            rows.append(row)
        print(dumps({"f": str(args.f), "overlaps": rows}), file=out)
        return EXIT_OK
    print("r\tl\tq\ttypes\tpositions\tadjacent\tcondition", file=out)
    for eo in overlaps:
        positions = "|".join(",".join(str(p + 1) for p in real.positions) for real in eo.realizations)
        adjacent = "|".join("yes" if real.adjacent else "no" for real in eo.realizations)
        print(f"{eo.shift}\t{eo.length}\t{eo.distance}\t{'|'.join(eo.type_tags)}\t"
              f"{positions or '-'}\t{adjacent or '-'}\t{_condition_cell(args.f, eo)}", file=out)
    return EXIT_OK


def cmd_witness(args, out):
    construction = construct_witnesses(args.f)
    if construction is None:
        if args.json:
            print(dumps({"f": str(args.f), "construction": None}), file=out)
        else:
            print(f"no constructive witness verified for {args.f}", file=out)
        return EXIT_ABSENT
    if args.json:
        print(dumps(construction.to_dict()), file=out)
    else:
        u, v = construction.pair
        print(f"kind: {construction.kind}", file=out)
        print(f"pair: {u} {v}", file=out)
        print(f"from: {construction.transform} overlap {construction.source_overlap.digest()}", file=out)
        verdict = construction.verdict
        print(f"verified: {verdict.passed} (distance {verdict.distance}, "
              f"{len(verdict.blocking_evidence)} blocked branches)", file=out)
        for b in verdict.blocking_evidence:
            applied = " ".join(b.applied + (b.blocking_op,))
            print(f"  {applied}: {b.word} contains {args.f} at {b.occurrence + 1}", file=out)
    return EXIT_OK


def cmd_classify(args, out):
    report = classify(args.f, args.max_len)
    if args.json:
        print(dumps(report.to_dict()), file=out)
        return EXIT_OK
    print(f"word: {report.f}", file=out)
    print(f"ham: {report.ham_status}", file=out)
    print(f"tilde: {report.tilde_label}", file=out)
    pair = report.witness_pair
    if pair is not None:
        print(f"witness: {report.witness_kind} {pair[0]} {pair[1]}", file=out)
    elif report.brute_force is not None:
        print(f"exhausted: {report.brute_force.pairs_checked} pairs up to length {report.max_len}", file=out)
    print(f"overlaps: {report.overlap_digest() or '-'}", file=out)
    print(f"prop2_consistent: {report.prop2_consistent}", file=out)
    for note in report.notes:
        print(f"note: {note}", file=out)
    return EXIT_OK


def cmd_survey(args, out):
    rows = run_survey(args.len, args.max_len, args.jobs, timing=not args.no_timing)
    out.write(rows_to_tsv(rows) if args.out == "tsv" else rows_to_jsonl(rows))
    return EXIT_OK


def cmd_audit_prop2(args, out):
    violations = audit_prop2(args.len, args.max_len)
    if args.json:
        print(dumps({"n": args.len, "violations": [v.to_dict() for v in violations]}), file=out)
    else:
        print(f"violations: {len(violations)}", file=out)
        for v in violations:
            print(f"{v.f}\t{v.witness[0]}\t{v.witness[1]}", file=out)
    return EXIT_OK


def cmd_audit_subgraph(args, out):
    pairs = audit_subgraph_distances(args.f, args.len)
    if args.json:
        print(dumps({"f": str(args.f), "m": args.len, "pairs": [p.to_dict() for p in pairs]}), file=out)
    else:
        print(f"counterexamples: {len(pairs)}", file=out)
        for p in pairs:
            print(f"{p.u}\t{p.v}\t{p.tilde_distance}\t{p.subgraph_distance}", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="tildeiso", description="Swap-and-mismatch isometric words.")
    sub = parser.add_subparsers(dest="command", required=True)
    binary = _word()

    p = sub.add_parser("dist", help="tilde distance between two words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--oracle", action="store_true", help="use the BFS oracle")
    p.add_argument("--explain", action="store_true", help="print one minimal op set")
    p.add_argument("--alphabet", default="01")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("transform", help="minimal tilde-transformations")
    p.add_argument("u", type=binary)
    p.add_argument("v", type=binary)
    p.add_argument("--avoid", type=binary, metavar="F")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("witness-check", help="check a candidate witness pair (JSON)")
    p.add_argument("f", type=binary)
    p.add_argument("u", type=binary)
    p.add_argument("v", type=binary)
    p.set_defaults(func=cmd_witness_check)

    p = sub.add_parser("overlaps", help="error overlaps of f")
    p.add_argument("f", type=binary)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_overlaps)

    p = sub.add_parser("witness", help="constructive witness pair for f")
    p.add_argument("f", type=binary)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("classify", help="Hamming and tilde isometry of f")
    p.add_argument("f", type=binary)
    p.add_argument("--max-len", type=int, default=None, help="brute-force up to this length (default |f|+4)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("survey", help="classify every word of one length")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", choices=("tsv", "json"), default="tsv")
    p.add_argument("--no-timing", action="store_true", help="write runtime_ms as 0 for reproducible output")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("audit", help="empirical audits")
    audit = p.add_subparsers(dest="audit", required=True)
    a = audit.add_parser("prop2", help="non-isometric words lacking the required overlaps")
    a.add_argument("--len", type=int, required=True)
    a.add_argument("--max-len", type=int, default=None)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_audit_prop2)
    a = audit.add_parser("subgraph", help="distance distortion in the f-free op-graph")
    a.add_argument("f", type=binary)
    a.add_argument("--len", type=int, required=True)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_audit_subgraph)
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out)
    except BudgetExceededError as exc:
        print(f"tildeiso: budget exceeded: {exc}", file=err)
        return EXIT_BUDGET
    except TildeError as exc:
        print(f"tildeiso: {exc}", file=err)
        return EXIT_INVALID


def main():
    sys.exit(run())
