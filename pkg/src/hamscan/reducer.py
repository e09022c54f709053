"""Graph reduction: delete provably non-Hamiltonian edges, smooth degree-2 chains.

Two rewrite rules run to a fixed point. A vertex with three or more degree-2
neighbors certifies non-Hamiltonicity outright (each such neighbor forces both
its edges into any Hamilton cycle, and a vertex cannot carry three forced
edges). With exactly two degree-2 neighbors the two forced edges are known, so
every other edge at that vertex is deleted. Chains of degree-2 vertices carry
no routing choice and are contracted down to a single interior vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graphs import Edge, Graph, find_bridges, is_connected, norm_edge


class VerdictKind(str, Enum):
    NON_HAMILTONIAN = "non_hamiltonian"
    HAMILTONIAN_TRIVIALLY = "hamiltonian_trivially"


@dataclass(frozen=True)
class EarlyVerdict:
    kind: VerdictKind
    reason: str


@dataclass
class ReductionTrace:
    """What the reducer did: deletions with rule tags, contracted chains, verdict."""

    deleted_edges: list[tuple[Edge, str]] = field(default_factory=list)
    smoothed_chains: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    early_verdict: EarlyVerdict | None = None

    def to_jsonable(self) -> dict:
        return {
            "deleted_edges": [[list(e), tag] for e, tag in self.deleted_edges],
            "smoothed_chains": [[list(chain), kept] for chain, kept in self.smoothed_chains],
            "early_verdict": None if self.early_verdict is None else {
                "kind": self.early_verdict.kind.value,
                "reason": self.early_verdict.reason,
            },
        }


def is_cycle_graph(g: Graph) -> bool:
    """One elementary cycle spanning all vertices."""
    return g.n >= 3 and g.m == g.n and all(g.degree(v) == 2 for v in g.vertices) and is_connected(g)


def rule1_step(g: Graph) -> tuple[Graph, list[Edge], EarlyVerdict | None]:
    """Forced-edge rule: p >= 3 kills the graph, p == 2 prunes the unforced edges.

    p counts degree-2 neighbors. Degrees are read from the input graph and all
    deletions applied at once; the caller loops to a fixed point.
    """
    deg2 = {v for v in g.vertices if g.degree(v) == 2}
    for v in g.vertices:
        p = len(g.adjacency[v] & deg2)
        if p >= 3:
            return g, [], EarlyVerdict(
                VerdictKind.NON_HAMILTONIAN,
                f"vertex {v} has {p} degree-2 neighbors",
            )
    drop: set[Edge] = set()
    for v in g.vertices:
        nbrs = g.adjacency[v]
        if len(nbrs) <= 2:
            continue
        if len(nbrs & deg2) == 2:
            for u in nbrs:
                if g.degree(u) >= 3:
                    drop.add(norm_edge(v, u))
    if not drop:
        return g, [], None
    return g.without_edges(drop), sorted(drop), None


def rule2_smooth(g: Graph) -> tuple[Graph, list[tuple[tuple[int, ...], int]]]:
    """Contract each maximal chain of >= 2 degree-2 vertices to one surviving vertex.

    A chain closing on a single anchor keeps two vertices instead, since one
    survivor would need a doubled edge to that anchor.
    """
    if all(g.degree(v) == 2 for v in g.vertices):
        raise ValueError("smoothing is undefined on a graph that is all degree 2")
    deg2 = {v for v in g.vertices if g.degree(v) == 2}
    visited: set[int] = set()
    chains: list[tuple[int, tuple[int, ...], int]] = []  # (left anchor, chain, right anchor)
    for v in sorted(deg2):
        if v in visited:
            continue
        chain = [v]
        visited.add(v)
        ends: list[int] = []
        for nxt in sorted(g.adjacency[v]):
            prev, cur = v, nxt
            while cur in deg2 and cur not in visited:
                visited.add(cur)
                chain.append(cur)
                a, b = g.adjacency[cur]
                prev, cur = cur, (a if a != prev else b)
            ends.append(cur)
        # walking both directions from v leaves the chain in appended order:
        # reorder into path order along the first direction
        left, right = ends
        ordered = _order_chain(g, chain, left)
        chains.append((left, ordered, right))

    new_edges = set(g.edges)
    new_vertices = set(g.vertices)
    performed: list[tuple[tuple[int, ...], int]] = []
    for left, chain, right in chains:
        keep = 2 if left == right else 1
        if len(chain) <= keep:
            continue
        kept, dropped = chain[:keep], chain[keep:]
        for x in dropped:
            new_vertices.discard(x)
            for y in g.adjacency[x]:
                new_edges.discard(norm_edge(x, y))
        new_edges.add(norm_edge(kept[-1], right))
        performed.append((chain, kept[-1]))
    if not performed:
        return g, []
    pruned = Graph(tuple(sorted(new_vertices)), tuple(sorted(new_edges)), g.labels)
    return pruned, performed


def _order_chain(g: Graph, chain_vertices: list[int], left_anchor: int) -> tuple[int, ...]:
    """Arrange a degree-2 chain into path order starting beside ``left_anchor``."""
    members = set(chain_vertices)
    start = next(v for v in chain_vertices if left_anchor in g.adjacency[v])
    ordered = [start]
    prev, cur = left_anchor, start
    while True:
        nxts = [u for u in g.adjacency[cur] if u != prev and u in members]
        if not nxts:
            break
        prev, cur = cur, nxts[0]
        ordered.append(cur)
    return tuple(ordered)


def reduce(g: Graph) -> tuple[Graph, ReductionTrace]:
    """Run both rules to a fixed point, stopping early when a verdict is forced.

    Early verdicts: non-Hamiltonian on a rule-1 trigger, a bridge, a vertex of
    degree < 2, or disconnection; trivially Hamiltonian when the survivor is a
    single spanning cycle.
    """
    if not is_connected(g):
        raise ValueError("reduction requires a connected graph")
    trace = ReductionTrace()
    for _ in range(g.m + 1):
        if is_cycle_graph(g):
            trace.early_verdict = EarlyVerdict(
                VerdictKind.HAMILTONIAN_TRIVIALLY, "graph is a single spanning cycle"
            )
            return g, trace
        low = [v for v in g.vertices if g.degree(v) < 2]
        if low:
            trace.early_verdict = EarlyVerdict(
                VerdictKind.NON_HAMILTONIAN, f"vertex {low[0]} has degree < 2"
            )
            return g, trace
        if not is_connected(g):
            trace.early_verdict = EarlyVerdict(
                VerdictKind.NON_HAMILTONIAN, "graph became disconnected"
            )
            return g, trace
        bridges = find_bridges(g)
        if bridges:
            trace.early_verdict = EarlyVerdict(
                VerdictKind.NON_HAMILTONIAN, f"bridge {sorted(bridges)[0]}"
            )
            return g, trace
        g1, deleted, verdict = rule1_step(g)
        if verdict is not None:
            trace.early_verdict = verdict
            return g, trace
        if deleted:
            trace.deleted_edges.extend((e, "rule1") for e in deleted)
            g = g1
            continue
        g2, chains = rule2_smooth(g)
        if chains:
            trace.smoothed_chains.extend(chains)
            g = g2
            continue
        return g, trace
    raise AssertionError("reduction failed to reach a fixed point")
