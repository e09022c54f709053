"""Edge-coverage profiles and locked-cycle detection over a basis.

For a fixed basis, count how many basis cycles pass through each edge. Edges
covered once are "boundary" edges; a vertex with exactly two boundary edges is
a boundary vertex, one with only boundary edges is a cut vertex, anything else
is inside. A basis cycle is *locked* when it touches the boundary only through
degree-4 boundary vertices and owns no boundary edge at all: deleting it from
the basis could not free any edge, so it cannot be removed cleanly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cyclespace import CycleBasis
from .graphs import Edge, Graph, max_p_value, vertex_profile
from .grinberg import is_solvable


class VertexClass(str, Enum):
    BOUNDARY = "boundary"
    CUT = "cut"
    INSIDE = "inside"


@dataclass(frozen=True)
class CoverageProfile:
    """Per-edge basis coverage and the vertex classification derived from it."""

    cover: tuple[int, ...]                 # aligned with host.edges
    classes: dict[int, VertexClass]
    deg4_boundary: frozenset[int]          # boundary vertices of degree 4

    def edge_cover(self, g: Graph) -> dict[Edge, int]:
        return {e: self.cover[i] for i, e in enumerate(g.edges)}


@dataclass(frozen=True)
class LockedReport:
    locked: tuple[int, ...]    # basis indices

    @property
    def count(self) -> int:
        return len(self.locked)


@dataclass(frozen=True)
class Removability:
    unique_edges: tuple[Edge, ...]
    removable: bool
    reason: str


class Verdict(str, Enum):
    HAMILTONIAN = "hamiltonian"
    NON_HAMILTONIAN = "non_hamiltonian"
    NOT_SOLVABLE = "not_solvable"


def coverage(g: Graph, basis: CycleBasis) -> CoverageProfile:
    if basis.host != g:
        raise ValueError("basis does not belong to this graph")
    cover = [0] * g.m
    for c in basis.cycles:
        mask = c.mask
        while mask:
            low = mask & -mask
            cover[low.bit_length() - 1] += 1
            mask ^= low
    classes: dict[int, VertexClass] = {}
    deg4: set[int] = set()
    incident_cover: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(g.edges):
        incident_cover[u].append(cover[i])
        incident_cover[v].append(cover[i])
    for v in g.vertices:
        counts = incident_cover[v]
        ones = sum(1 for c in counts if c == 1)
        if ones == 2:
            # a degree-2 vertex with both edges covered once also matches the
            # cut pattern; boundary wins so degree-4 boundary stays well defined
            classes[v] = VertexClass.BOUNDARY
            if len(counts) == 4:
                deg4.add(v)
        elif counts and ones == len(counts):
            classes[v] = VertexClass.CUT
        else:
            classes[v] = VertexClass.INSIDE
    return CoverageProfile(tuple(cover), classes, frozenset(deg4))


def find_locked(g: Graph, basis: CycleBasis, profile: CoverageProfile | None = None) -> LockedReport:
    """Basis cycles whose boundary vertices are all degree-4 and whose edges are all shared.

    A cycle with no boundary vertex at all does not count: without boundary
    contact the pattern is vacuous and dense graphs would qualify everywhere.
    """
    prof = profile if profile is not None else coverage(g, basis)
    locked = []
    for idx, c in enumerate(basis.cycles):
        if any(prof.cover[i] == 1 for i in _bit_indices(c.mask)):
            continue
        on_cycle = c.vertex_set
        boundary = [v for v in on_cycle if prof.classes[v] is VertexClass.BOUNDARY]
        if not boundary:
            continue
        if all(v in prof.deg4_boundary for v in boundary):
            locked.append(idx)
    return LockedReport(tuple(locked))


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_removable(g: Graph, basis: CycleBasis, index: int,
                 profile: CoverageProfile | None = None) -> Removability:
    """A cycle is removable when dropping it deletes exactly its one unshared edge
    and the remaining graph keeps every neighborhood below three degree-2 members."""
    prof = profile if profile is not None else coverage(g, basis)
    cycle = basis.cycles[index]
    unique = tuple(g.edges[i] for i in _bit_indices(cycle.mask) if prof.cover[i] == 1)
    if len(unique) != 1:
        return Removability(unique, False, f"cycle owns {len(unique)} uniquely covered edges, needs exactly 1")
    edge = unique[0]
    pruned = g.without_edges([edge])
    if any(pruned.degree(v) < 1 for v in edge):
        return Removability(unique, False, f"removing {edge} strands one of its endpoints")
    if max_p_value(pruned) >= 3:
        bad = next(v for v in pruned.vertices
                   if vertex_profile(pruned, v).p_value >= 3)
        return Removability(unique, False,
                            f"after removal vertex {bad} has 3+ degree-2 neighbors")
    return Removability(unique, True, "single unique edge, neighborhoods stay sparse")


def cycle_verdict(g: Graph, basis: CycleBasis) -> Verdict:
    """Solvable and no locked cycle reads as Hamiltonian; locked cycles veto it.

    Meant for fully reduced graphs, but callable on any fixture for probing.
    """
    if not is_solvable(basis, g.n):
        return Verdict.NOT_SOLVABLE
    if find_locked(g, basis).count == 0:
        return Verdict.HAMILTONIAN
    return Verdict.NON_HAMILTONIAN


@dataclass(frozen=True)
class P3LockedCheck:
    """Empirical link between crowded neighborhoods and locked cycles."""

    p_ge_3: bool
    locked_nonzero: bool

    @property
    def agree(self) -> bool:
        return self.p_ge_3 == self.locked_nonzero


def p3_locked_check(g: Graph, basis: CycleBasis) -> P3LockedCheck:
    """Record whether "some vertex has >= 3 degree-2 neighbors" tracks "locked cycles exist"."""
    return P3LockedCheck(max_p_value(g) >= 3, find_locked(g, basis).count != 0)
