"""Command-line front end.

Exit codes: 0 success, 2 malformed input or bad parameters, 3 well-formed
but unsupported input (disconnected graph, too many vertices, bipartite
graph where facet data is required), 4 internal disagreement between the
connectivity criterion and the lattice oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .facets import (
    FacetDescriptor,
    Fundamental,
    RegularVertex,
    SupportForm,
    _form_for,
    facets,
)
from .graph import (
    Graph,
    ParseError,
    UnsupportedError,
    generate_family,
    is_bipartite,
    is_connected,
    labelled_graphs,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    vset,
)
from .oracle import facet_conditions
from .serre import ClassificationReport, classify, satisfies_r1
from .sweep import run_sweep

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_DISAGREEMENT = 4


# ---------------------------------------------------------------------------
# input loading

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graphs(path: str, fmt: str | None) -> list[tuple[str, Graph]]:
    """Load (input identifier, graph) pairs from a file or stdin."""
    if fmt is None:
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edge-list"
    text = _read_text(path)
    if fmt == "graph6":
        graphs = parse_graph6(text)
        if not graphs:
            raise ParseError("no graphs in input")
        if len(graphs) == 1:
            return [(path, graphs[0])]
        return [(f"{path}#{k}", g) for k, g in enumerate(graphs, start=1)]
    return [(path, parse_edge_list(text))]


# ---------------------------------------------------------------------------
# report serialization

def violation_to_dict(f: FacetDescriptor) -> dict:
    if isinstance(f, RegularVertex):
        return {"kind": "regular_vertex", "vertex": f.vertex}
    return {"kind": "fundamental_set", "set": list(f.vertices)}


def violation_from_dict(dct: dict) -> FacetDescriptor:
    if dct["kind"] == "regular_vertex":
        return RegularVertex(dct["vertex"])
    if dct["kind"] == "fundamental_set":
        return Fundamental(vset(dct["set"]))
    raise ValueError(f"unknown violation kind {dct.get('kind')!r}")


def report_to_dict(input_id: str, g: Graph, report: ClassificationReport) -> dict:
    occ = report.occ_violation
    return {
        "input": input_id,
        "d": g.d,
        "n": g.n,
        "bipartite": report.bipartite,
        "normal": report.normal,
        "r1": report.r1,
        "r1_violations": [violation_to_dict(f) for f in report.r1_violations],
        "occ_violation": [list(c) for c in occ] if occ is not None else None,
        "notes": report.notes,
    }


def report_from_dict(dct: dict) -> ClassificationReport:
    occ = dct["occ_violation"]
    return ClassificationReport(
        bipartite=dct["bipartite"],
        normal=dct["normal"],
        r1=dct["r1"],
        r1_violations=tuple(violation_from_dict(v) for v in dct["r1_violations"]),
        occ_violation=tuple(tuple(c) for c in occ) if occ is not None else None,
        notes=dct["notes"],
    )


# ---------------------------------------------------------------------------
# text rendering

def _bool(b: bool) -> str:
    return "true" if b else "false"


def _cycle_str(c: Sequence[int]) -> str:
    return "(" + ",".join(str(v) for v in c) + ")"


def _facet_label(f: FacetDescriptor) -> str:
    if isinstance(f, RegularVertex):
        return f"regular vertex {f.vertex}"
    return "fundamental set {%s}" % ",".join(str(v) for v in f.vertices)


def _form_str(form: SupportForm) -> str:
    terms = []
    for i, c in enumerate(form.coeffs, start=1):
        if c == 0:
            continue
        sign = "+" if c > 0 else "-"
        mag = abs(c)
        terms.append(f"{sign}{'' if mag == 1 else mag}x{i}")
    body = "".join(terms)
    if form.denom == 2:
        return f"({body})/2"
    return body


def _render_classification(input_id: str, g: Graph, report: ClassificationReport) -> str:
    lines = [
        f"input: {input_id}",
        f"vertices: {g.d}",
        f"edges: {g.n}",
        f"bipartite: {_bool(report.bipartite)}",
        f"normal: {_bool(report.normal)}",
    ]
    if report.occ_violation is not None:
        a, b = report.occ_violation
        lines.append(f"odd cycle condition: fails at {_cycle_str(a)} x {_cycle_str(b)}")
    else:
        lines.append("odd cycle condition: holds")
    lines.append(f"R1: {_bool(report.r1)}")
    if report.r1_violations:
        lines.append("R1 violations:")
        lines += [f"  {_facet_label(f)}" for f in report.r1_violations]
    else:
        lines.append("R1 violations: none")
    if report.notes:
        lines.append(f"notes: {report.notes}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands

def cmd_classify(args: argparse.Namespace) -> int:
    first = True
    for input_id, g in _load_graphs(args.input, args.format):
        report = classify(g, early_exit=args.early_exit)
        if args.json:
            print(json.dumps(report_to_dict(input_id, g, report), sort_keys=True))
        else:
            if not first:
                print()
            print(_render_classification(input_id, g, report))
        first = False
    return EXIT_OK


def cmd_facets(args: argparse.Namespace) -> int:
    for input_id, g in _load_graphs(args.input, args.format):
        fs = facets(g)
        if args.json:
            entries = []
            for f in fs:
                entry = violation_to_dict(f)
                form = _form_for(g, f)
                entry["form"] = {"coeffs": list(form.coeffs), "denom": form.denom}
                entries.append(entry)
            print(json.dumps(
                {"input": input_id, "d": g.d, "n": g.n, "facets": entries},
                sort_keys=True,
            ))
        else:
            print(f"input: {input_id}")
            print(f"facets: {len(fs)}")
            for f in fs:
                print(f"  {_facet_label(f)}: {_form_str(_form_for(g, f))} >= 0")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for input_id, g in _load_graphs(args.input, args.format):
        conditions = facet_conditions(g)
        oracle_violations = [f for f, unit, match in conditions if not (unit and match)]
        oracle_verdict = not oracle_violations
        verdict, violations = satisfies_r1(g)
        agree = verdict == oracle_verdict and violations == oracle_violations
        if args.json:
            print(json.dumps({
                "input": input_id,
                "d": g.d,
                "n": g.n,
                "facets": [
                    dict(violation_to_dict(f), unit_value=unit, lattice_match=match)
                    for f, unit, match in conditions
                ],
                "r1_lattice": oracle_verdict,
                "r1_connectivity": verdict,
                "agreement": agree,
            }, sort_keys=True))
        else:
            print(f"input: {input_id}")
            for f, unit, match in conditions:
                print(
                    f"  {_facet_label(f)}: unit-value "
                    f"{'pass' if unit else 'FAIL'}, lattice-match "
                    f"{'pass' if match else 'FAIL'}"
                )
            print(f"R1 (lattice): {_bool(oracle_verdict)}")
            print(f"R1 (connectivity): {_bool(verdict)}")
            print(f"agreement: {'ok' if agree else 'MISMATCH'}")
        if not agree:
            print(f"error: criteria disagree on {input_id}", file=sys.stderr)
            status = EXIT_DISAGREEMENT
    return status


def cmd_sweep(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    disagreements = []
    if args.source:
        graphs = [g for _, g in _load_graphs(args.source, "graph6")]
        eligible = [g for g in graphs if is_connected(g) and not is_bipartite(g)]
        summary = run_sweep(eligible)
        print(
            f"source {args.source}: checked={summary.checked} "
            f"normal={summary.normal} r1={summary.r1}"
        )
        skipped = len(graphs) - len(eligible)
        if skipped:
            print(f"skipped: {skipped} (disconnected or bipartite)")
        disagreements = summary.disagreements
    else:
        total = checked = normal = r1 = 0
        for d in range(1, args.max_vertices + 1):
            summary = run_sweep(
                g for g in labelled_graphs(d)
                if is_connected(g) and not is_bipartite(g)
            )
            print(
                f"d={d}: checked={summary.checked} "
                f"normal={summary.normal} r1={summary.r1}"
            )
            checked += summary.checked
            normal += summary.normal
            r1 += summary.r1
            disagreements += summary.disagreements
        print(f"total: checked={checked} normal={normal} r1={r1}")
    print(f"disagreements: {len(disagreements)}")
    for cc in disagreements:
        print(f"  {cc.graph6}  {','.join(cc.failures)}")
    print(f"elapsed: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return EXIT_DISAGREEMENT if disagreements else EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        if args.family == "bridge":
            if args.k is None or args.n is not None:
                raise ValueError("family 'bridge' takes --k")
            g = generate_family("bridge", (args.k,))
        else:
            if args.n is None or args.k is not None:
                raise ValueError(f"family {args.family!r} takes --n")
            g = generate_family(args.family, tuple(args.n))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = serialize_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgering",
        description="Normality and Serre's (R1) for edge rings of finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="input file, or - for stdin")
        p.add_argument(
            "--format",
            choices=("edge-list", "graph6"),
            help="input format (default: by file suffix, edge-list otherwise)",
        )
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("classify", help="normality and (R1) report")
    add_input(p)
    p.add_argument(
        "--early-exit",
        action="store_true",
        help="stop at the first (R1) violation",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("facets", help="facet descriptors and supporting forms")
    add_input(p)
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("oracle", help="lattice-route facet conditions and agreement")
    add_input(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="exhaustive cross-check over small graphs")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--source", help="graph6 file to sweep instead of all graphs")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("generate", help="write a named family member as an edge list")
    p.add_argument("family", choices=("bridge", "cycle", "complete", "complete_bipartite"))
    p.add_argument("--k", type=int, help="parameter for the bridge family")
    p.add_argument(
        "--n",
        type=int,
        nargs="+",
        help="size parameter(s): one for cycle/complete, two for complete_bipartite",
    )
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT


if __name__ == "__main__":
    sys.exit(main())
