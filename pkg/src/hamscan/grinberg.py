"""Weight-identity solver over a cycle basis.

A basis subset S is a solution when sum over S of (cycle length - 2) equals
n - 2. That is the classical Grinberg counting identity for the cycles tiling
one side of a Hamilton cycle, evaluated basis-wide: each cycle of length L
contributes L - 2 once its two junction edges are discounted. Solutions are
annotated with what their GF(2) sum actually is and how their members overlap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .combos import SetKind, _classify_members
from .cyclespace import CycleBasis, is_elementary, vertices_of


class BasisTooLarge(ValueError):
    """Exhaustive subset enumeration refused; raise the bound or shrink the basis."""


class SumKind(str, Enum):
    HAMILTON_CYCLE = "hamilton_cycle"
    ELEMENTARY_NOT_SPANNING = "elementary_not_spanning"
    NOT_ELEMENTARY = "not_elementary"


@dataclass(frozen=True)
class SolutionSet:
    members: tuple[int, ...]
    weight_sum: int
    sum_kind: SumKind
    set_class: SetKind


@dataclass(frozen=True)
class CoSolutionSet:
    members: tuple[int, ...]


DEFAULT_BOUND = 24


def _weights(basis: CycleBasis) -> list[int]:
    return [c.length - 2 for c in basis.cycles]


def iter_solution_members(basis: CycleBasis, n: int, bound: int = DEFAULT_BOUND) -> Iterator[tuple[int, ...]]:
    """Yield every basis subset hitting the weight target, heaviest-first DFS.

    Weights are positive, so pruning on the running sum and on the suffix
    total is exact. Subsets come out in a deterministic order.
    """
    if basis.dim > bound:
        raise BasisTooLarge(f"basis size {basis.dim} exceeds enumeration bound {bound}")
    target = n - 2
    weights = _weights(basis)
    order = sorted(range(basis.dim), key=lambda i: (-weights[i], i))
    suffix = [0] * (basis.dim + 1)
    for pos in range(basis.dim - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] + weights[order[pos]]

    chosen: list[int] = []

    def walk(pos: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(sorted(chosen))
            return
        if pos == basis.dim or remaining < 0 or suffix[pos] < remaining:
            return
        w = weights[order[pos]]
        if w <= remaining:
            chosen.append(order[pos])
            yield from walk(pos + 1, remaining - w)
            chosen.pop()
        yield from walk(pos + 1, remaining)

    if target <= 0:
        return
    yield from walk(0, target)


def _annotate(basis: CycleBasis, members: tuple[int, ...]) -> SolutionSet:
    g = basis.host
    mask = 0
    weight = 0
    for i in members:
        mask ^= basis.cycles[i].mask
        weight += basis.cycles[i].length - 2
    if is_elementary(g, mask):
        if vertices_of(g, mask) == frozenset(g.vertices):
            kind = SumKind.HAMILTON_CYCLE
        else:
            kind = SumKind.ELEMENTARY_NOT_SPANNING
    else:
        kind = SumKind.NOT_ELEMENTARY
    cls = _classify_members([basis.cycles[i] for i in members])
    return SolutionSet(members, weight, kind, cls)


def solve(basis: CycleBasis, n: int, bound: int = DEFAULT_BOUND) -> list[SolutionSet]:
    """All annotated solutions, sorted by member indices; empty means not solvable."""
    found = [_annotate(basis, members) for members in iter_solution_members(basis, n, bound)]
    found.sort(key=lambda s: s.members)
    return found


def is_solvable(basis: CycleBasis, n: int, bound: int = DEFAULT_BOUND) -> bool:
    for _ in iter_solution_members(basis, n, bound):
        return True
    return False


def has_hamilton_solution(basis: CycleBasis, n: int, bound: int = DEFAULT_BOUND) -> bool:
    """Whether some solution's GF(2) sum is a spanning elementary cycle."""
    g = basis.host
    full = frozenset(g.vertices)
    for members in iter_solution_members(basis, n, bound):
        mask = 0
        for i in members:
            mask ^= basis.cycles[i].mask
        if is_elementary(g, mask) and vertices_of(g, mask) == full:
            return True
    return False


def co_solution(basis: CycleBasis, s: SolutionSet) -> CoSolutionSet:
    """Basis complement of a solution's members."""
    members = set(s.members)
    if not members <= set(range(basis.dim)):
        raise ValueError("solution set does not belong to this basis")
    return CoSolutionSet(tuple(i for i in range(basis.dim) if i not in members))
