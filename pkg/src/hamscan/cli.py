"""Command-line interface.

Inputs accept three spellings: a path to an edge-list file, a raw graph6
string, or ``fixture:NAME`` for a canonical construction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .combos import classify_pair, classify_set
from .corpus import CorpusSpec, generate_corpus
from .cyclespace import enumerate_bases, fundamental_basis
from .fixtures import named_fixture
from .graphs import Graph, GraphFormatError, parse_edge_list, parse_graph6, to_graph6
from .grinberg import solve
from .locked import coverage, cycle_verdict, find_locked, is_removable, p3_locked_check
from .oracle import backtrack, dp
from .pipeline import run_batch, run_pipeline, summarize, write_reports
from .reducer import reduce


def load_graph(spec: str) -> Graph:
    if spec.startswith("fixture:"):
        return named_fixture(spec.split(":", 1)[1])
    if os.path.exists(spec):
        with open(spec, "r", encoding="ascii") as fh:
            return parse_edge_list(fh.read())
    try:
        return parse_graph6(spec)
    except GraphFormatError as exc:
        raise GraphFormatError(
            f"{spec!r} is not an existing file, a graph6 record, or fixture:NAME ({exc})"
        ) from None


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        print(f"{key}: {value}")


def cmd_reduce(args) -> int:
    g = load_graph(args.input)
    reduced, trace = reduce(g)
    payload = {
        "input_n": g.n, "input_m": g.m,
        "reduced_n": reduced.n, "reduced_m": reduced.m,
        "reduced_edges": [list(e) for e in reduced.edges],
        **trace.to_jsonable(),
    }
    _emit(payload, args.json)
    return 0


def cmd_basis(args) -> int:
    g = load_graph(args.input)
    basis = fundamental_basis(g, strategy=args.strategy)
    payload = {
        "dim": basis.dim,
        "cycles": [list(c.vertex_sequence()) for c in basis.cycles],
    }
    _emit(payload, args.json)
    return 0


def cmd_classify(args) -> int:
    g = load_graph(args.input)
    basis = fundamental_basis(g, strategy=args.strategy)
    pairs = []
    for i in range(basis.dim):
        for j in range(i + 1, basis.dim):
            pc = classify_pair(basis.cycles[i], basis.cycles[j])
            pairs.append({
                "pair": [i, j],
                "shared_vertices": pc.shared_vertices,
                "shared_edges": pc.shared_edges,
                "kind": pc.kind.value,
                "sum_elementary": pc.sum_elementary,
            })
    payload = {
        "cycles": [list(c.vertex_sequence()) for c in basis.cycles],
        "pairs": pairs,
        "set_class": classify_set(basis.cycles).value if basis.dim >= 2 else None,
    }
    _emit(payload, args.json)
    return 0


def cmd_solve(args) -> int:
    g = load_graph(args.input)
    basis = fundamental_basis(g, strategy=args.strategy)
    sols = solve(basis, g.n)
    payload = {
        "solvable": bool(sols),
        "solutions": [{
            "members": list(s.members),
            "weight": s.weight_sum,
            "sum_kind": s.sum_kind.value,
            "set_class": s.set_class.value,
            "cycles": [list(basis.cycles[i].vertex_sequence()) for i in s.members],
        } for s in sols],
    }
    _emit(payload, args.json)
    return 0


def cmd_detect(args) -> int:
    g = load_graph(args.input)
    bases = enumerate_bases(g, args.basis_budget)
    per_basis = []
    for bid, basis in enumerate(bases):
        prof = coverage(g, basis)
        locked = find_locked(g, basis, prof)
        check = p3_locked_check(g, basis)
        per_basis.append({
            "basis_id": bid,
            "cycles": [list(c.vertex_sequence()) for c in basis.cycles],
            "locked": [list(basis.cycles[i].vertex_sequence()) for i in locked.locked],
            "locked_count": locked.count,
            "removability": [{
                "cycle": list(basis.cycles[i].vertex_sequence()),
                "unique_edges": [list(e) for e in is_removable(g, basis, i, prof).unique_edges],
                "removable": is_removable(g, basis, i, prof).removable,
            } for i in range(basis.dim)],
            "p_ge_3": check.p_ge_3,
            "p3_agree": check.agree,
            "verdict": cycle_verdict(g, basis).value,
        })
    _emit({"bases": per_basis}, args.json)
    return 0


def cmd_oracle(args) -> int:
    g = load_graph(args.input)
    result = dp(g) if args.algo == "dp" else backtrack(g)
    payload = {
        "algorithm": args.algo,
        "hamiltonian": result.hamiltonian,
        "witness": list(result.witness) if result.witness else None,
        "nodes_expanded": result.nodes_expanded,
    }
    _emit(payload, args.json)
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.input)
    record = run_pipeline(g, basis_budget=args.basis_budget, force_full=args.force_full)
    _emit(record.to_jsonable(), args.json)
    return 0


def cmd_batch(args) -> int:
    if (args.g6 is None) == (args.gen is None):
        print("batch needs exactly one of --g6 FILE or --gen nMIN:nMAX", file=sys.stderr)
        return 2
    if args.gen is not None:
        lo, _, hi = args.gen.partition(":")
        spec = CorpusSpec(source="generator", n_min=int(lo), n_max=int(hi or lo))
    else:
        spec = CorpusSpec(source=args.g6, n_min=3, n_max=62)
    graphs = list(generate_corpus(spec))
    records = run_batch(graphs, basis_budget=args.basis_budget, jobs=args.jobs)
    paths = write_reports(records, args.out)
    summary = summarize(records)
    _emit({**summary, "out": str(args.out)}, args.json)
    return 0 if paths else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamscan",
        description="Hamiltonicity analysis: reduction, cycle-space verdicts, exact oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = add("reduce", cmd_reduce, "run the reduction rules to a fixed point")
    p.add_argument("input")

    p = add("basis", cmd_basis, "print a fundamental cycle basis")
    p.add_argument("input")
    p.add_argument("--strategy", choices=("bfs", "dfs"), default="bfs")

    p = add("classify", cmd_classify, "classify all basis cycle pairs")
    p.add_argument("input")
    p.add_argument("--strategy", choices=("bfs", "dfs"), default="bfs")

    p = add("solve", cmd_solve, "enumerate weight-identity solutions over a basis")
    p.add_argument("input")
    p.add_argument("--strategy", choices=("bfs", "dfs"), default="bfs")

    p = add("detect", cmd_detect, "locked-cycle detection across enumerated bases")
    p.add_argument("input")
    p.add_argument("--basis-budget", type=int, default=4)

    p = add("oracle", cmd_oracle, "exact Hamiltonicity oracle")
    p.add_argument("input")
    p.add_argument("--algo", choices=("backtrack", "dp"), default="backtrack")

    p = add("verify", cmd_verify, "full single-graph pipeline with oracle cross-check")
    p.add_argument("input")
    p.add_argument("--basis-budget", type=int, default=4)
    p.add_argument("--force-full", action="store_true",
                   help="run cycle-space analysis even when reduction settles the verdict")

    p = add("batch", cmd_batch, "pipeline a whole corpus and write reports")
    p.add_argument("--g6", default=None, help="graph6 file, one record per line")
    p.add_argument("--gen", default=None, metavar="nMIN:nMAX",
                   help="internal generator range, e.g. 4:8")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="batch-out")
    p.add_argument("--basis-budget", type=int, default=4)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
