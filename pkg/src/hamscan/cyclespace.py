"""Cycle-space algebra over GF(2): fundamental bases, XOR, elementarity, basis change.

Edge sets are int bitmasks over the host graph's sorted edge tuple, so the
symmetric difference of two cycles is a single ``^``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import Edge, Graph, is_connected, norm_edge


class NotElementaryError(ValueError):
    """A combination that must be an elementary cycle is not."""


def edge_mask(g: Graph, edges: Iterable[Edge]) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << g.edge_index[norm_edge(*e)]
    return mask


def edges_of(g: Graph, mask: int) -> tuple[Edge, ...]:
    return tuple(g.edges[i] for i in range(g.m) if (mask >> i) & 1)


def vertices_of(g: Graph, mask: int) -> frozenset[int]:
    out = set()
    for u, v in edges_of(g, mask):
        out.add(u)
        out.add(v)
    return frozenset(out)


def xor(a: int, b: int) -> int:
    """GF(2) sum of two edge sets over the same host."""
    return a ^ b


def is_elementary(g: Graph, mask: int) -> bool:
    """True iff the edge set is one simple circuit: nonempty, all member degrees 2, connected."""
    if mask == 0:
        return False
    deg: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for u, v in edges_of(g, mask):
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(adj)


@dataclass(frozen=True)
class Cycle:
    """An elementary cycle of a host graph, stored as an edge bitmask."""

    host: Graph
    mask: int

    def __post_init__(self):
        if not is_elementary(self.host, self.mask):
            raise NotElementaryError("edge set is not an elementary cycle")

    @property
    def length(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def edge_set(self) -> tuple[Edge, ...]:
        return edges_of(self.host, self.mask)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return vertices_of(self.host, self.mask)

    def vertex_sequence(self) -> tuple[int, ...]:
        """Cycle order starting at the smallest vertex, toward its smaller neighbor."""
        adj: dict[int, list[int]] = {}
        for u, v in self.edge_set:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        start = min(adj)
        seq = [start]
        prev, cur = None, start
        while True:
            a, b = sorted(adj[cur])
            nxt = a if a != prev else b
            if nxt == start:
                break
            seq.append(nxt)
            prev, cur = cur, nxt
        return tuple(seq)


def cycle_from_vertices(g: Graph, seq: Sequence[int]) -> Cycle:
    """Build a Cycle from a closed vertex walk (last edge wraps to the first vertex)."""
    edges = [norm_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
    return Cycle(g, edge_mask(g, edges))


def gf2_rank(masks: Sequence[int]) -> int:
    """Rank of bit vectors over GF(2) via elimination on int bitsets."""
    pivots: list[int] = []
    for row in masks:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def decompose(basis: "CycleBasis", mask: int) -> tuple[int, ...] | None:
    """Indices of basis cycles XOR-ing to ``mask``, or None if outside the span."""
    rows = [(c.mask, 1 << i) for i, c in enumerate(basis.cycles)]
    acc_mask, acc_tag = mask, 0
    pivots: list[tuple[int, int]] = []
    for row, tag in rows:
        for prow, ptag in pivots:
            if min(row, row ^ prow) != row:
                row ^= prow
                tag ^= ptag
        if row:
            pivots.append((row, tag))
    for prow, ptag in pivots:
        if min(acc_mask, acc_mask ^ prow) != acc_mask:
            acc_mask ^= prow
            acc_tag ^= ptag
    if acc_mask:
        return None
    return tuple(i for i in range(len(basis.cycles)) if (acc_tag >> i) & 1)


@dataclass(frozen=True)
class CycleBasis:
    """Independent elementary cycles spanning the cycle space of a connected host."""

    host: Graph
    cycles: tuple[Cycle, ...]

    @classmethod
    def build(cls, host: Graph, cycles: Iterable[Cycle]) -> "CycleBasis":
        cyc = tuple(cycles)
        dim = host.m - host.n + 1
        if len(cyc) != dim:
            raise ValueError(f"basis needs {dim} cycles, got {len(cyc)}")
        if gf2_rank([c.mask for c in cyc]) != dim:
            raise ValueError("cycles are not independent over GF(2)")
        return cls(host, cyc)

    @property
    def dim(self) -> int:
        return len(self.cycles)

    def masks(self) -> tuple[int, ...]:
        return tuple(c.mask for c in self.cycles)


def _spanning_tree(g: Graph, root: int, strategy: str) -> set[Edge]:
    tree: set[Edge] = set()
    seen = {root}
    if strategy == "bfs":
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in sorted(g.adjacency[v]):
                if u not in seen:
                    seen.add(u)
                    tree.add(norm_edge(v, u))
                    queue.append(u)
    elif strategy == "dfs":
        stack = [root]
        while stack:
            v = stack.pop()
            for u in sorted(g.adjacency[v], reverse=True):
                if u not in seen:
                    seen.add(u)
                    tree.add(norm_edge(v, u))
                    stack.append(u)
    else:
        raise ValueError(f"unknown tree strategy {strategy!r}")
    return tree


def fundamental_basis(g: Graph, strategy: str = "bfs", root: int | None = None,
                      tree: Iterable[Edge] | None = None) -> CycleBasis:
    """One fundamental cycle per non-tree edge: the edge plus the tree path joining it."""
    if not is_connected(g):
        raise ValueError("fundamental basis requires a connected graph")
    if tree is not None:
        tree_edges = {norm_edge(*e) for e in tree}
        unknown = tree_edges - set(g.edges)
        if unknown:
            raise ValueError(f"tree edges not in graph: {sorted(unknown)}")
        if len(tree_edges) != g.n - 1:
            raise ValueError("given tree must have n-1 edges")
    else:
        tree_edges = _spanning_tree(g, g.vertices[0] if root is None else root, strategy)

    # parent pointers along the tree for path reconstruction
    tree_adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for u, v in tree_edges:
        tree_adj[u].add(v)
        tree_adj[v].add(u)
    start = g.vertices[0]
    parent: dict[int, int | None] = {start: None}
    order = deque([start])
    while order:
        v = order.popleft()
        for u in sorted(tree_adj[v]):
            if u not in parent:
                parent[u] = v
                order.append(u)
    if len(parent) != g.n:
        raise ValueError("given tree does not span the graph")

    def tree_path(a: int, b: int) -> list[Edge]:
        seen_a = []
        x: int | None = a
        while x is not None:
            seen_a.append(x)
            x = parent[x]
        up_a = set(seen_a)
        path_b = []
        y: int | None = b
        while y not in up_a:
            assert y is not None
            path_b.append(y)
            y = parent[y]
        meet = y
        edges: list[Edge] = []
        x = a
        while x != meet:
            nxt = parent[x]
            assert nxt is not None
            edges.append(norm_edge(x, nxt))
            x = nxt
        prev = meet
        for z in reversed(path_b):
            edges.append(norm_edge(prev, z))
            prev = z
        return edges

    cycles = []
    for e in g.edges:
        if e in tree_edges:
            continue
        u, v = e
        mask = edge_mask(g, [e] + tree_path(u, v))
        cycles.append(Cycle(g, mask))
    return CycleBasis.build(g, cycles)


def change_basis(basis: CycleBasis, target: int, combiner: Iterable[int]) -> CycleBasis:
    """Replace cycles[target] with the XOR of the combiner cycles.

    The target must be in the combiner (this keeps the family independent) and
    the combination must itself be an elementary cycle.
    """
    comb = sorted(set(combiner))
    if target not in comb:
        raise ValueError("target must be a member of the combiner")
    if any(i < 0 or i >= basis.dim for i in comb):
        raise ValueError("combiner index out of range")
    mask = 0
    for i in comb:
        mask ^= basis.cycles[i].mask
    if not is_elementary(basis.host, mask):
        raise NotElementaryError("combination is not an elementary cycle")
    cycles = list(basis.cycles)
    cycles[target] = Cycle(basis.host, mask)
    new_rank = gf2_rank([c.mask for c in cycles])
    assert new_rank == basis.dim, "rank dropped, impossible with target in combiner"
    return CycleBasis(basis.host, tuple(cycles))


def enumerate_bases(g: Graph, budget: int) -> list[CycleBasis]:
    """Distinct fundamental bases from BFS/DFS trees rooted at every vertex."""
    out: list[CycleBasis] = []
    seen: set[frozenset[int]] = set()
    for root in g.vertices:
        for strategy in ("bfs", "dfs"):
            if len(out) >= budget:
                return out
            basis = fundamental_basis(g, strategy=strategy, root=root)
            key = frozenset(basis.masks())
            if key not in seen:
                seen.add(key)
                out.append(basis)
    return out
