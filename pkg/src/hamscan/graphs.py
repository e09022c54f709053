"""Simple undirected graphs: validation, edge-list parsing, graph6 I/O, traversal."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Vertices are non-negative ints, edges sorted (u, v) pairs.

    ``labels`` maps internal vertex ids back to the labels found in the
    source file, when the parser relabeled them.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    labels: tuple[int, ...] | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[int] = (),
                   labels: tuple[int, ...] | None = None) -> "Graph":
        """Validate and canonicalize: no self-loops, no duplicates, endpoints known."""
        vset = set(vertices)
        eset: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = norm_edge(u, v)
            if e in eset:
                raise GraphFormatError(f"duplicate edge {e}")
            eset.add(e)
            vset.add(u)
            vset.add(v)
        if not vset:
            raise GraphFormatError("graph has no vertices")
        if any(x < 0 for x in vset):
            raise GraphFormatError("vertex ids must be non-negative")
        return cls(tuple(sorted(vset)), tuple(sorted(eset)), labels)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_index

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def without_edges(self, drop: Iterable[Edge]) -> "Graph":
        """Copy with the given edges removed; the vertex set is kept."""
        gone = {norm_edge(*e) for e in drop}
        missing = gone - set(self.edges)
        if missing:
            raise ValueError(f"edges not in graph: {sorted(missing)}")
        kept = tuple(e for e in self.edges if e not in gone)
        return Graph(self.vertices, kept, self.labels)

    def original_label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]


@dataclass(frozen=True)
class VertexProfile:
    """Degree of a vertex plus the number of its neighbors that have degree 2."""

    vertex: int
    degree: int
    p_value: int


def vertex_profile(g: Graph, v: int) -> VertexProfile:
    if v not in g.adjacency:
        raise ValueError(f"unknown vertex {v}")
    nbrs = g.adjacency[v]
    p = sum(1 for u in nbrs if g.degree(u) == 2)
    return VertexProfile(v, len(nbrs), p)


def max_p_value(g: Graph) -> int:
    """Largest count of degree-2 neighbors over all vertices."""
    deg2 = {v for v in g.vertices if g.degree(v) == 2}
    best = 0
    for v in g.vertices:
        best = max(best, len(g.adjacency[v] & deg2))
    return best


# ---------------------------------------------------------------------------
# Parsing

def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines into a Graph.

    Blank lines and '#' comments are allowed. Vertex labels are arbitrary
    non-negative integers and get relabeled to 0..n-1 (sorted by label);
    the original labels are retained on the graph.
    """
    raw_edges: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: malformed token in {raw!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        e = norm_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        raw_edges.append(e)
    if not raw_edges:
        raise GraphFormatError("no edges found")
    labels = tuple(sorted({x for e in raw_edges for x in e}))
    remap = {lab: i for i, lab in enumerate(labels)}
    edges = [norm_edge(remap[u], remap[v]) for u, v in raw_edges]
    return Graph.from_edges(edges, range(len(labels)), labels)


# ---------------------------------------------------------------------------
# graph6 (single-byte size form, n <= 62)

def _g6_pairs(n: int) -> list[Edge]:
    # column order of the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(line: str) -> Graph:
    """Decode one header-free graph6 record (n <= 62)."""
    s = line.strip()
    if not s:
        raise GraphFormatError("empty graph6 record")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if s.startswith(":") or s.startswith("&"):
        raise GraphFormatError("sparse6/digraph6 records are not supported")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("graph6 record contains non-ASCII bytes") from None
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {pos}: value {b} outside printable range 63..126")
    n = data[0] - 63
    if n == 63:
        raise GraphFormatError("multi-byte size form (n > 62) is not supported")
    if n == 0:
        raise GraphFormatError("graph6 record encodes an empty vertex set")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphFormatError(f"truncated bit stream: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise GraphFormatError(f"trailing bytes after bit stream: {len(body) - nbytes}")
    edges = []
    pairs = _g6_pairs(n)
    for k in range(nbits):
        byte = body[k // 6] - 63
        if (byte >> (5 - k % 6)) & 1:
            edges.append(pairs[k])
    return Graph.from_edges(edges, range(n))


def to_graph6(g: Graph) -> str:
    """Encode a graph with contiguous 0..n-1 vertices as a graph6 record."""
    n = g.n
    if n > 62:
        raise ValueError("graph6 single-byte size form requires n <= 62")
    if g.vertices != tuple(range(n)):
        raise ValueError("graph6 encoding requires vertices 0..n-1")
    bits = 0
    pairs = _g6_pairs(n)
    nbits = len(pairs)
    eset = set(g.edges)
    for k, pair in enumerate(pairs):
        if pair in eset:
            bits |= 1 << (nbits - 1 - k)
    nbytes = (nbits + 5) // 6
    bits <<= nbytes * 6 - nbits  # zero padding on the right
    out = [chr(n + 63)]
    for i in range(nbytes):
        chunk = (bits >> (6 * (nbytes - 1 - i))) & 0x3F
        out.append(chr(chunk + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Traversal

def is_connected(g: Graph) -> bool:
    start = g.vertices[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def find_bridges(g: Graph) -> set[Edge]:
    """Edges whose removal disconnects the graph (iterative lowlink DFS)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[Edge] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        stack: list[tuple[int, int | None, Iterable[int]]] = [(root, None, iter(g.adjacency[root]))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    # one parent edge skipped; simple graphs have no parallels
                    parent = None
                    stack[-1] = (v, None, it)
                    continue
                if u not in disc:
                    disc[u] = low[u] = counter
                    counter += 1
                    stack.append((u, v, iter(g.adjacency[u])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[u])
            if not advanced:
                stack.pop()
                if stack:
                    w = stack[-1][0]
                    low[w] = min(low[w], low[v])
                    if low[v] > disc[w]:
                        bridges.add(norm_edge(w, v))
    return bridges
