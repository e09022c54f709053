"""Small-graph corpora: exhaustive generation up to isomorphism, plus file sources.

Connected graphs on n vertices are grown from the (n-1)-vertex representatives
by attaching a fresh vertex to every nonempty subset; duplicates are filtered
through cheap invariant buckets with an exact isomorphism check inside each
bucket. Deterministic: same spec, same order, every run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from .fixtures import FIXTURE_NAMES, named_fixture
from .graphs import Graph, is_connected, parse_graph6

GENERATOR_MAX_N = 9


def _to_nx(g: Graph) -> "nx.Graph":
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def _fingerprint(g: Graph) -> tuple:
    """Iso-invariant bucket key: degrees, neighbor degrees, triangle counts."""
    deg = {v: g.degree(v) for v in g.vertices}
    local = sorted(
        (deg[v], tuple(sorted(deg[u] for u in g.adjacency[v])))
        for v in g.vertices
    )
    triangles = 0
    for u, v in g.edges:
        triangles += len(g.adjacency[u] & g.adjacency[v])
    return (g.n, g.m, triangles, tuple(local))


_reps_cache: dict[int, list[Graph]] = {}


def connected_reps(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > GENERATOR_MAX_N:
        raise ValueError(f"generator bounded to n <= {GENERATOR_MAX_N}")
    if n in _reps_cache:
        return _reps_cache[n]
    if n == 1:
        reps = [Graph((0,), ())]
    else:
        smaller = connected_reps(n - 1)
        new = n - 1
        reps = []
        buckets: dict[tuple, list[tuple[Graph, "nx.Graph"]]] = {}
        for base in smaller:
            base_edges = list(base.edges)
            for sub in range(1, 1 << (n - 1)):
                extra = [(i, new) for i in range(n - 1) if (sub >> i) & 1]
                cand = Graph(tuple(range(n)), tuple(sorted(base_edges + extra)))
                key = _fingerprint(cand)
                bucket = buckets.setdefault(key, [])
                cand_nx = _to_nx(cand)
                if any(nx.is_isomorphic(cand_nx, rep_nx) for _, rep_nx in bucket):
                    continue
                bucket.append((cand, cand_nx))
                reps.append(cand)
    _reps_cache[n] = reps
    return reps


@dataclass(frozen=True)
class CorpusSpec:
    """What to stream: a source plus structural filters."""

    source: str = "generator"          # "generator", "fixtures", or a graph6 file path
    n_min: int = 4
    n_max: int = 8
    min_degree: int = 2
    require_connected: bool = True
    dedup: bool = True

    def __post_init__(self):
        if self.source == "generator" and self.n_max > GENERATOR_MAX_N:
            raise ValueError(f"generator bounded to n <= {GENERATOR_MAX_N}")
        if self.n_min > self.n_max:
            raise ValueError("empty vertex range")


def _passes(g: Graph, spec: CorpusSpec) -> bool:
    if not spec.n_min <= g.n <= spec.n_max:
        return False
    if any(g.degree(v) < spec.min_degree for v in g.vertices):
        return False
    if spec.require_connected and not is_connected(g):
        return False
    return True


def generate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """Stream the corpus in a stable order; see CorpusSpec for filtering."""
    if spec.source == "generator":
        for n in range(spec.n_min, spec.n_max + 1):
            if spec.dedup:
                for g in connected_reps(n):
                    if _passes(g, spec):
                        yield g
            else:
                yield from _labeled_graphs(n, spec)
    elif spec.source == "fixtures":
        for name in FIXTURE_NAMES:
            g = named_fixture(name)
            if _passes(g, spec):
                yield g
    else:
        with open(spec.source, "r", encoding="ascii") as fh:
            seen: set[tuple] = set()
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                g = parse_graph6(line)
                if not _passes(g, spec):
                    continue
                if spec.dedup:
                    key = (g.vertices, g.edges)
                    if key in seen:
                        continue
                    seen.add(key)
                yield g


def _labeled_graphs(n: int, spec: CorpusSpec) -> Iterator[Graph]:
    """Every labeled graph on n vertices passing the filters. Exponential; n <= 6 is sane."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
        g = Graph(tuple(range(n)), tuple(edges))
        if _passes(g, spec):
            yield g


def find_isomorphic(corpus: Iterable[Graph], target: Graph) -> Graph | None:
    """First corpus member isomorphic to the target, or None."""
    t_nx = _to_nx(target)
    t_key = _fingerprint(target)
    for g in corpus:
        if g.n == target.n and g.m == target.m and _fingerprint(g) == t_key:
            if nx.is_isomorphic(_to_nx(g), t_nx):
                return g
    return None
