"""Ground-truth Hamiltonicity by two independent exact algorithms.

``backtrack`` extends a path vertex by vertex with connectivity and forced-edge
pruning; ``dp`` sweeps (visited-set, endpoint) states bottom-up. They share no
code path, so agreement on the corpus is a meaningful cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_connected


class BudgetExceeded(RuntimeError):
    """Backtracking search hit its node budget before finishing."""


class TooLarge(ValueError):
    """Graph exceeds the subset-DP size limit."""


@dataclass(frozen=True)
class OracleResult:
    hamiltonian: bool
    witness: tuple[int, ...] | None
    nodes_expanded: int


def validate_witness(g: Graph, seq: tuple[int, ...]) -> bool:
    """Independent check: visits every vertex once, consecutive pairs adjacent, closes up."""
    if len(seq) != g.n or set(seq) != set(g.vertices):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def backtrack(g: Graph, node_budget: int = 2_000_000) -> OracleResult:
    """Exact search anchored at the smallest vertex.

    Prunes when the unvisited region disconnects from the open path ends, when
    some unvisited vertex has too few usable neighbors left, and accepts each
    cycle in one orientation only (second vertex below the closing vertex).
    """
    if g.n < 3:
        raise ValueError("Hamilton cycles need at least 3 vertices")
    if not is_connected(g):
        raise ValueError("backtrack oracle requires a connected graph")
    if any(g.degree(v) < 2 for v in g.vertices):
        return OracleResult(False, None, 0)

    anchor = g.vertices[0]
    adj = g.adjacency
    path = [anchor]
    visited = {anchor}
    nodes = 0

    def region_ok(endpoint: int) -> bool:
        # unvisited vertices plus both open ends must stay in one piece, and
        # every unvisited vertex needs 2 usable neighbors (1 if beside an end)
        free = [v for v in g.vertices if v not in visited]
        if not free:
            return True
        allowed = set(free)
        allowed.add(endpoint)
        allowed.add(anchor)
        stack = [endpoint]
        seen = {endpoint}
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if not all(v in seen for v in free) or anchor not in seen:
            return False
        for v in free:
            usable = len(adj[v] & seen)
            if usable < 2:
                return False
        return True

    def extend(cur: int) -> tuple[int, ...] | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"expanded more than {node_budget} nodes")
        if len(path) == g.n:
            if anchor in adj[cur] and path[1] < path[-1]:
                return tuple(path)
            return None
        if not region_ok(cur):
            return None
        # a degree-2 unvisited neighbor is forced eventually; try such first
        candidates = sorted(adj[cur] - visited)
        for nxt in candidates:
            path.append(nxt)
            visited.add(nxt)
            found = extend(nxt)
            visited.discard(nxt)
            path.pop()
            if found:
                return found
        return None

    witness = extend(anchor)
    return OracleResult(witness is not None, witness, nodes)


def dp(g: Graph) -> OracleResult:
    """Subset dynamic programming over (visited mask, endpoint) states."""
    if g.n > 20:
        raise TooLarge(f"subset DP capped at 20 vertices, got {g.n}")
    if g.n < 3:
        raise ValueError("Hamilton cycles need at least 3 vertices")
    verts = list(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[pos[u]] |= 1 << pos[v]
        nbr[pos[v]] |= 1 << pos[u]

    full = (1 << g.n) - 1
    # reach[mask] = bitset of endpoints p such that some path 0 -> p visits exactly mask;
    # masks are processed in numeric order, and every predecessor mask is smaller
    reach: dict[int, int] = {1: 1}
    nodes = 0
    for mask in range(1, full + 1, 2):
        ends = reach.get(mask, 0)
        if not ends:
            continue
        e = ends
        while e:
            low = e & -e
            p = low.bit_length() - 1
            e ^= low
            nodes += 1
            nxt = nbr[p] & ~mask
            while nxt:
                nlow = nxt & -nxt
                q = nlow.bit_length() - 1
                nxt ^= nlow
                key = mask | nlow
                reach[key] = reach.get(key, 0) | nlow
    closers = reach.get(full, 0) & nbr[0] & ~1
    if not closers:
        return OracleResult(False, None, nodes)

    # walk one witness back through the table
    end = (closers & -closers).bit_length() - 1
    seq_idx = [end]
    mask = full
    cur = end
    while cur != 0:
        prev_mask = mask ^ (1 << cur)
        cands = reach.get(prev_mask, 0) & nbr[cur]
        assert cands, "DP table lost the predecessor"
        cur = (cands & -cands).bit_length() - 1
        seq_idx.append(cur)
        mask = prev_mask
    seq_idx.reverse()
    witness = tuple(verts[i] for i in seq_idx)
    return OracleResult(True, witness, nodes)
