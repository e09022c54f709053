"""Classify how pairs and sets of cycles overlap, and build chain fixtures.

The interesting overlap patterns: a pair glued at exactly two vertices with no
common edge (the sum is never elementary there, the shared vertices pick up
degree 4), and a pair sharing edges whose sum collapses back to one elementary
cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .cyclespace import Cycle, cycle_from_vertices, is_elementary
from .graphs import Graph, norm_edge


class PairKind(str, Enum):
    DISJOINT = "disjoint"
    TWO_VERTEX = "two_vertex"        # exactly 2 shared vertices, 0 shared edges
    EDGE_SHARING = "edge_sharing"    # >= 1 shared edge
    OTHER = "other"                  # vertex overlap that fits neither pattern


class SetKind(str, Enum):
    TWO_VERTEX_SET = "two_vertex_set"      # every joint pair is TWO_VERTEX
    EDGE_SHARING_SET = "edge_sharing_set"  # every joint pair shares edges, sums elementary
    MIXED = "mixed"
    ALL_DISJOINT = "all_disjoint"


@dataclass(frozen=True)
class PairClass:
    shared_vertices: int
    shared_edges: int
    kind: PairKind
    sum_elementary: bool


def classify_pair(a: Cycle, b: Cycle) -> PairClass:
    if a.host is not b.host and a.host != b.host:
        raise ValueError("cycles live on different host graphs")
    sv = len(a.vertex_set & b.vertex_set)
    se = (a.mask & b.mask).bit_count()
    if se >= 1:
        kind = PairKind.EDGE_SHARING
    elif sv == 2:
        kind = PairKind.TWO_VERTEX
    elif sv == 0:
        kind = PairKind.DISJOINT
    else:
        kind = PairKind.OTHER
    return PairClass(sv, se, kind, is_elementary(a.host, a.mask ^ b.mask))


def classify_set(cycles: Sequence[Cycle]) -> SetKind:
    """Aggregate pair structure over all vertex-sharing pairs of the set."""
    if len(cycles) < 2:
        raise ValueError("need at least 2 cycles to classify a set")
    return _classify_members(cycles)


def _classify_members(cycles: Sequence[Cycle]) -> SetKind:
    # relaxed variant used internally for solution sets of any size
    joint: list[PairClass] = []
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            pc = classify_pair(cycles[i], cycles[j])
            if pc.kind is not PairKind.DISJOINT:
                joint.append(pc)
    if not joint:
        return SetKind.ALL_DISJOINT
    if all(pc.kind is PairKind.TWO_VERTEX for pc in joint):
        return SetKind.TWO_VERTEX_SET
    if all(pc.kind is PairKind.EDGE_SHARING and pc.sum_elementary for pc in joint):
        return SetKind.EDGE_SHARING_SET
    return SetKind.MIXED


def chain_fixture(k: int, cycle_length: int) -> tuple[Graph, tuple[Cycle, ...]]:
    """Chain of k cycles, consecutive ones glued at a fresh hub pair, others disjoint.

    Between consecutive cycles the two shared hubs are non-adjacent in both, so
    each joint pair shares exactly 2 vertices and 0 edges. End cycles have
    ``cycle_length`` vertices; middle cycles carry two hub pairs and come out
    two longer. ``cycle_length`` must be even and at least 4 so each cycle
    splits into two equal hub-to-hub paths.
    """
    if k < 2:
        raise ValueError("chain needs k >= 2 cycles")
    if cycle_length < 4 or cycle_length % 2:
        raise ValueError("cycle_length must be even and >= 4")
    half = cycle_length // 2
    counter = 0

    def fresh(count: int) -> list[int]:
        nonlocal counter
        out = list(range(counter, counter + count))
        counter += count
        return out

    hubs = [tuple(fresh(2)) for _ in range(k - 1)]  # (u_j, w_j) per junction
    cycle_seqs: list[list[int]] = []
    for i in range(k):
        if i == 0:
            u, w = hubs[0]
            a = fresh(half - 1)
            b = fresh(half - 1)
            cycle_seqs.append([u, *a, w, *b])
        elif i == k - 1:
            u, w = hubs[k - 2]
            c = fresh(half - 1)
            d = fresh(half - 1)
            cycle_seqs.append([u, *c, w, *d])
        else:
            ul, wl = hubs[i - 1]
            ur, wr = hubs[i]
            p = fresh(half - 1)
            q = fresh(half - 1)
            cycle_seqs.append([ul, *p, ur, wl, *q, wr])

    edges = []
    seen = set()
    for seq in cycle_seqs:
        for t in range(len(seq)):
            e = norm_edge(seq[t], seq[(t + 1) % len(seq)])
            if e not in seen:
                seen.add(e)
                edges.append(e)
    g = Graph.from_edges(edges, range(counter))
    cycles = tuple(cycle_from_vertices(g, seq) for seq in cycle_seqs)
    return g, cycles
