"""Canonical small graphs for tests, demos, and the harness."""

from __future__ import annotations

import re

from .combos import chain_fixture
from .cyclespace import Cycle, CycleBasis, cycle_from_vertices, edge_mask
from .graphs import Graph

_CHAIN_RE = re.compile(r"^CHAIN\((\d+),(\d+)\)$")


def _cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def _complete_graph(n: int) -> Graph:
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)])


def _theta(paths: int) -> Graph:
    # two hubs 0, 1 joined by `paths` internally disjoint 2-edge paths
    edges = []
    for t in range(paths):
        mid = 2 + t
        edges += [(0, mid), (1, mid)]
    return Graph.from_edges(edges)


def _wheel(rim: int) -> Graph:
    hub = rim
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, hub) for i in range(rim)]
    return Graph.from_edges(edges)


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]          # outer 5-cycle
    edges += [(i, i + 5) for i in range(5)]               # spokes
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]  # inner pentagram
    return Graph.from_edges(edges)


def _herschel() -> Graph:
    edges = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5),
             (2, 6), (2, 7), (3, 8), (3, 9), (4, 6), (4, 8),
             (5, 7), (5, 9), (6, 10), (7, 10), (8, 10), (9, 10)]
    return Graph.from_edges(edges)


def _bowtie() -> Graph:
    return Graph.from_edges([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def named_fixture(name: str) -> Graph:
    """Look up a canonical construction by name; CHAIN(k,len) builds a cycle chain."""
    key = name.strip().upper()
    m = _CHAIN_RE.match(key)
    if m:
        return chain_fixture(int(m.group(1)), int(m.group(2)))[0]
    builders = {
        "C4": lambda: _cycle_graph(4),
        "C5": lambda: _cycle_graph(5),
        "K4": lambda: _complete_graph(4),
        "K5": lambda: _complete_graph(5),
        "THETA3": lambda: _theta(3),
        "THETA4": lambda: _theta(4),
        "BOWTIE": _bowtie,
        "PETERSEN": _petersen,
        "HERSCHEL": _herschel,
        "WHEEL5": lambda: _wheel(5),
    }
    if key not in builders:
        raise ValueError(f"unknown fixture {name!r}")
    return builders[key]()


FIXTURE_NAMES = ("C4", "C5", "K4", "K5", "THETA3", "THETA4", "BOWTIE",
                 "PETERSEN", "HERSCHEL", "WHEEL5")


# ---------------------------------------------------------------------------
# Hub-pair structure helpers

def hub_paths(cycle: Cycle, x: int, y: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a cycle at two of its vertices into the two arcs joining them.

    Both arcs run from x to y; the lexicographically smaller interior comes
    first so callers get a deterministic pick.
    """
    seq = list(cycle.vertex_sequence())
    if x not in seq or y not in seq:
        raise ValueError("both split vertices must lie on the cycle")
    ix = seq.index(x)
    seq = seq[ix:] + seq[:ix]
    iy = seq.index(y)
    arc1 = tuple(seq[: iy + 1])
    arc2 = tuple([seq[0]] + list(reversed(seq[iy:])))
    if arc2[1:-1] < arc1[1:-1]:
        arc1, arc2 = arc2, arc1
    return arc1, arc2


def _arc_mask(g: Graph, arc: tuple[int, ...]) -> int:
    return edge_mask(g, [(arc[i], arc[i + 1]) for i in range(len(arc) - 1)])


def chain_revealing_basis(g: Graph, chain: tuple[Cycle, ...]) -> CycleBasis:
    """Complete a cycle chain to a basis that keeps the hub-pair structure visible.

    The chain cycles themselves stay in the basis; each junction contributes
    one extra "mix" cycle made of one hub-to-hub arc from each of the two
    cycles meeting there. For a 2-cycle chain on the 4-path theta graph this
    is exactly the basis whose third cycle threads one middle vertex of each
    original cycle.
    """
    cycles = list(chain)
    for j in range(len(chain) - 1):
        left, right = chain[j], chain[j + 1]
        hubs = sorted(left.vertex_set & right.vertex_set)
        if len(hubs) != 2:
            raise ValueError(f"junction {j}: expected exactly 2 shared vertices")
        x, y = hubs
        arc_left = hub_paths(left, x, y)[0]
        arc_right = hub_paths(right, x, y)[0]
        mix = Cycle(g, _arc_mask(g, arc_left) ^ _arc_mask(g, arc_right))
        cycles.append(mix)
    return CycleBasis.build(g, cycles)


def theta4_special_basis() -> tuple[Graph, CycleBasis]:
    """The 4-path theta graph with the basis {top pair, bottom pair, mix}.

    Cycle 0 runs through middles 2 and 3, cycle 1 through 4 and 5, and the mix
    cycle through 2 and 4; the first two share only the hubs.
    """
    g = named_fixture("THETA4")
    top = cycle_from_vertices(g, (0, 2, 1, 3))
    bottom = cycle_from_vertices(g, (0, 4, 1, 5))
    return g, chain_revealing_basis(g, (top, bottom))
