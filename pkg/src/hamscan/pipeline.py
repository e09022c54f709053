"""Single-graph analysis pipeline and the batch harness around it.

Every record carries both the cycle-space verdicts and the exact-oracle answer,
with agreement flags derived (never hand-set). Batch output is deterministic:
stable corpus order in, byte-identical CSV/JSON out.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .cyclespace import CycleBasis, enumerate_bases
from .graphs import Graph, is_connected, to_graph6
from .grinberg import has_hamilton_solution, is_solvable, solve
from .locked import Verdict, coverage, cycle_verdict, find_locked, p3_locked_check
from .oracle import BudgetExceeded, backtrack, dp, validate_witness
from .reducer import ReductionTrace, VerdictKind, reduce

CROSS_CHECK_MAX_N = 12
DP_MAX_N = 20
SOLVE_DETAIL_MAX_DIM = 12
SOLUTION_LIST_CAP = 64


@dataclass(frozen=True)
class BasisRecord:
    basis_id: int
    dim: int
    solvable: bool
    has_hamilton_solution: bool
    locked_count: int
    p_ge_3: bool
    p3_agree: bool
    verdict: Verdict

    def to_jsonable(self) -> dict:
        return {
            "basis_id": self.basis_id,
            "dim": self.dim,
            "solvable": self.solvable,
            "has_hamilton_solution": self.has_hamilton_solution,
            "locked_count": self.locked_count,
            "p_ge_3": self.p_ge_3,
            "p3_agree": self.p3_agree,
            "verdict": self.verdict.value,
        }


@dataclass
class PipelineRecord:
    graph_id: str
    n: int
    m: int
    reduction: dict
    reduced_n: int
    reduced_m: int
    forced_full: bool
    analysis_skipped: bool
    oracle_hamiltonian: bool | None
    oracle_witness: tuple[int, ...] | None
    oracle_nodes: int
    oracle_cross_checked: bool
    oracle_budget_exceeded: bool
    bases: list[BasisRecord] = field(default_factory=list)
    solutions: list[dict] = field(default_factory=list)
    solution_count: int | None = None
    solutions_exhaustive: bool = False
    solvable_any: bool | None = None
    has_hamilton_solution_any: bool | None = None
    verdict_any_locked: str | None = None
    verdict_all_locked: str | None = None

    # agreement flags are properties derived from the fields above, never stored

    @property
    def early_verdict_agrees(self) -> bool | None:
        ev = self.reduction.get("early_verdict")
        if ev is None or self.oracle_hamiltonian is None:
            return None
        claimed = ev["kind"] == VerdictKind.HAMILTONIAN_TRIVIALLY.value
        return claimed == self.oracle_hamiltonian

    def _verdict_agreement(self, verdict: str | None) -> bool | None:
        if verdict is None or self.oracle_hamiltonian is None:
            return None
        if verdict == Verdict.NOT_SOLVABLE.value:
            return None
        return (verdict == Verdict.HAMILTONIAN.value) == self.oracle_hamiltonian

    @property
    def verdict_any_agrees(self) -> bool | None:
        return self._verdict_agreement(self.verdict_any_locked)

    @property
    def verdict_all_agrees(self) -> bool | None:
        return self._verdict_agreement(self.verdict_all_locked)

    @property
    def has_disagreement(self) -> bool:
        return False in (self.early_verdict_agrees, self.verdict_any_agrees, self.verdict_all_agrees)

    def to_jsonable(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "reduction": self.reduction,
            "reduced_n": self.reduced_n,
            "reduced_m": self.reduced_m,
            "forced_full": self.forced_full,
            "analysis_skipped": self.analysis_skipped,
            "oracle": {
                "hamiltonian": self.oracle_hamiltonian,
                "witness": list(self.oracle_witness) if self.oracle_witness else None,
                "nodes_expanded": self.oracle_nodes,
                "cross_checked": self.oracle_cross_checked,
                "budget_exceeded": self.oracle_budget_exceeded,
            },
            "bases": [b.to_jsonable() for b in self.bases],
            "solutions": self.solutions,
            "solution_count": self.solution_count,
            "solutions_exhaustive": self.solutions_exhaustive,
            "solvable_any": self.solvable_any,
            "has_hamilton_solution_any": self.has_hamilton_solution_any,
            "verdict_any_locked": self.verdict_any_locked,
            "verdict_all_locked": self.verdict_all_locked,
            "agreement": {
                "early_verdict": self.early_verdict_agrees,
                "verdict_any": self.verdict_any_agrees,
                "verdict_all": self.verdict_all_agrees,
            },
        }


def _oracle_call(g: Graph) -> tuple[bool | None, tuple[int, ...] | None, int, bool, bool]:
    """(hamiltonian, witness, nodes, cross_checked, budget_exceeded)"""
    if g.n <= CROSS_CHECK_MAX_N:
        r_dp = dp(g)
        r_bt = backtrack(g)
        assert r_dp.hamiltonian == r_bt.hamiltonian, \
            f"oracle disagreement on {to_graph6(g) if g.vertices == tuple(range(g.n)) else g!r}"
        witness = r_dp.witness or r_bt.witness
        if witness is not None:
            assert validate_witness(g, witness)
        return r_dp.hamiltonian, witness, r_dp.nodes_expanded + r_bt.nodes_expanded, True, False
    if g.n <= DP_MAX_N:
        r = dp(g)
        if r.witness is not None:
            assert validate_witness(g, r.witness)
        return r.hamiltonian, r.witness, r.nodes_expanded, False, False
    try:
        r = backtrack(g)
        return r.hamiltonian, r.witness, r.nodes_expanded, False, False
    except BudgetExceeded:
        return None, None, 0, False, True


def _analyze_bases(g: Graph, budget: int) -> tuple[list[BasisRecord], list[dict], int | None, bool]:
    bases = enumerate_bases(g, budget)
    records: list[BasisRecord] = []
    solutions: list[dict] = []
    solution_count: int | None = None
    exhaustive = False
    for bid, basis in enumerate(bases):
        prof = coverage(g, basis)
        locked = find_locked(g, basis, prof)
        check = p3_locked_check(g, basis)
        verdict = cycle_verdict(g, basis)
        records.append(BasisRecord(
            basis_id=bid,
            dim=basis.dim,
            solvable=is_solvable(basis, g.n),
            has_hamilton_solution=has_hamilton_solution(basis, g.n),
            locked_count=locked.count,
            p_ge_3=check.p_ge_3,
            p3_agree=check.agree,
            verdict=verdict,
        ))
        if bid == 0 and basis.dim <= SOLVE_DETAIL_MAX_DIM:
            sols = solve(basis, g.n)
            solution_count = len(sols)
            exhaustive = True
            for s in sols[:SOLUTION_LIST_CAP]:
                solutions.append({
                    "members": list(s.members),
                    "weight": s.weight_sum,
                    "sum_kind": s.sum_kind.value,
                    "set_class": s.set_class.value,
                    "cycles": [list(basis.cycles[i].vertex_sequence()) for i in s.members],
                })
    return records, solutions, solution_count, exhaustive


def run_pipeline(g: Graph, basis_budget: int = 4, force_full: bool = False) -> PipelineRecord:
    """Reduce, then analyze bases of the survivor (or of the input when forced).

    An early non-Hamiltonian verdict skips the cycle stages unless forced; a
    trivially-Hamiltonian survivor still gets its (single-cycle) analysis so
    the solvability columns stay populated.
    """
    if not is_connected(g):
        raise ValueError("pipeline requires a connected graph")
    graph_id = to_graph6(g) if g.vertices == tuple(range(g.n)) else f"n={g.n}"
    ham, witness, nodes, crossed, exceeded = _oracle_call(g)

    reduced, trace = reduce(g)
    early = trace.early_verdict
    skip = (early is not None and early.kind is VerdictKind.NON_HAMILTONIAN and not force_full)
    target = g if force_full else reduced

    record = PipelineRecord(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        reduction=trace.to_jsonable(),
        reduced_n=reduced.n,
        reduced_m=reduced.m,
        forced_full=force_full,
        analysis_skipped=skip,
        oracle_hamiltonian=ham,
        oracle_witness=witness,
        oracle_nodes=nodes,
        oracle_cross_checked=crossed,
        oracle_budget_exceeded=exceeded,
    )
    if skip:
        return record

    basis_records, solutions, count, exhaustive = _analyze_bases(target, basis_budget)
    record.bases = basis_records
    record.solutions = solutions
    record.solution_count = count
    record.solutions_exhaustive = exhaustive
    if basis_records:
        record.solvable_any = any(b.solvable for b in basis_records)
        record.has_hamilton_solution_any = any(b.has_hamilton_solution for b in basis_records)
        solvable = [b for b in basis_records if b.verdict is not Verdict.NOT_SOLVABLE]
        if not solvable:
            record.verdict_any_locked = Verdict.NOT_SOLVABLE.value
            record.verdict_all_locked = Verdict.NOT_SOLVABLE.value
        else:
            any_locked = any(b.locked_count > 0 for b in solvable)
            all_locked = all(b.locked_count > 0 for b in solvable)
            record.verdict_any_locked = (
                Verdict.NON_HAMILTONIAN if any_locked else Verdict.HAMILTONIAN
            ).value
            record.verdict_all_locked = (
                Verdict.NON_HAMILTONIAN if all_locked else Verdict.HAMILTONIAN
            ).value
    return record


def _worker(args: tuple[Graph, int, bool]) -> PipelineRecord:
    g, budget, force_full = args
    return run_pipeline(g, basis_budget=budget, force_full=force_full)


def run_batch(graphs: Iterable[Graph], basis_budget: int = 4, jobs: int = 1,
              force_full: bool = False) -> list[PipelineRecord]:
    """Pipeline every graph; results sorted by (n, m, graph id) regardless of jobs."""
    work = [(g, basis_budget, force_full) for g in graphs]
    if jobs <= 1:
        records = [_worker(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_worker, work, chunksize=16))
    records.sort(key=lambda r: (r.n, r.m, r.graph_id))
    return records


CSV_COLUMNS = [
    "graph_id", "n", "m", "row_type", "basis_id", "basis_dim",
    "solvable", "has_hamilton_solution", "locked_count", "p_ge_3", "p3_agree",
    "verdict", "early_verdict", "reduced_n", "reduced_m",
    "verdict_any_locked", "verdict_all_locked",
    "oracle_hamiltonian", "early_verdict_agrees", "verdict_any_agrees", "verdict_all_agrees",
]


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def records_to_csv(records: Sequence[PipelineRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        ev = r.reduction.get("early_verdict")
        ev_kind = None if ev is None else ev["kind"]
        for b in r.bases:
            writer.writerow([_fmt(x) for x in [
                r.graph_id, r.n, r.m, "basis", b.basis_id, b.dim,
                b.solvable, b.has_hamilton_solution, b.locked_count, b.p_ge_3, b.p3_agree,
                b.verdict.value, ev_kind, r.reduced_n, r.reduced_m,
                None, None, r.oracle_hamiltonian, None, None, None,
            ]])
        writer.writerow([_fmt(x) for x in [
            r.graph_id, r.n, r.m, "aggregate", None, None,
            r.solvable_any, r.has_hamilton_solution_any, None, None, None,
            None, ev_kind, r.reduced_n, r.reduced_m,
            r.verdict_any_locked, r.verdict_all_locked,
            r.oracle_hamiltonian, r.early_verdict_agrees, r.verdict_any_agrees, r.verdict_all_agrees,
        ]])
    return buf.getvalue()


def summarize(records: Sequence[PipelineRecord]) -> dict:
    """Aggregate agreement rates for the run."""
    def rate(pairs: list[bool]) -> float | None:
        return None if not pairs else sum(pairs) / len(pairs)

    early = [r.early_verdict_agrees for r in records if r.early_verdict_agrees is not None]
    v_any = [r.verdict_any_agrees for r in records if r.verdict_any_agrees is not None]
    v_all = [r.verdict_all_agrees for r in records if r.verdict_all_agrees is not None]
    p3 = [b.p3_agree for r in records for b in r.bases]
    ham = [r for r in records if r.oracle_hamiltonian]
    ham_with_solution = [r for r in ham if r.has_hamilton_solution_any]
    return {
        "graphs": len(records),
        "oracle_hamiltonian": sum(1 for r in records if r.oracle_hamiltonian),
        "early_verdicts": len(early),
        "early_verdict_agreement": rate(early),
        "verdict_any_agreement": rate(v_any),
        "verdict_all_agreement": rate(v_all),
        "p3_link_agreement": rate([bool(x) for x in p3]),
        "bases_analyzed": len(p3),
        "hamiltonian_with_hamilton_solution": len(ham_with_solution),
        "hamiltonian_with_bases_searched": sum(1 for r in ham if r.bases),
        "disagreements": sum(1 for r in records if r.has_disagreement),
    }


def write_reports(records: Sequence[PipelineRecord], outdir: str | Path) -> dict[str, Path]:
    """Write results.csv, results.json, counterexamples.g6 under outdir."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "csv": out / "results.csv",
        "json": out / "results.json",
        "counterexamples": out / "counterexamples.g6",
    }
    paths["csv"].write_text(records_to_csv(records), encoding="ascii")
    payload = {
        "summary": summarize(records),
        "records": [r.to_jsonable() for r in records],
    }
    paths["json"].write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="ascii")
    bad = [r.graph_id for r in records if r.has_disagreement]
    paths["counterexamples"].write_text("".join(x + "\n" for x in bad), encoding="ascii")
    return paths
