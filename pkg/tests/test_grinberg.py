import itertools

import pytest

from hamscan.combos import SetKind
from hamscan.cyclespace import fundamental_basis, is_elementary, vertices_of
from hamscan.fixtures import named_fixture, theta4_special_basis
from hamscan.grinberg import (
    BasisTooLarge,
    SumKind,
    co_solution,
    has_hamilton_solution,
    is_solvable,
    iter_solution_members,
    solve,
)


def brute_force_members(basis, n):
    """Independent oracle: test every subset of basis indices directly."""
    target = n - 2
    hits = []
    for r in range(1, basis.dim + 1):
        for combo in itertools.combinations(range(basis.dim), r):
            if sum(basis.cycles[i].length - 2 for i in combo) == target:
                hits.append(tuple(combo))
    return sorted(hits)


class TestSolve:
    def test_c5_single_solution(self):
        g = named_fixture("C5")
        basis = fundamental_basis(g)
        sols = solve(basis, g.n)
        assert len(sols) == 1
        s = sols[0]
        assert s.members == (0,)
        assert s.weight_sum == 3 == g.n - 2
        assert s.sum_kind is SumKind.HAMILTON_CYCLE

    def test_k4_all_pairs(self):
        g = named_fixture("K4")
        basis = fundamental_basis(g, tree=[(0, 1), (0, 2), (0, 3)])
        sols = solve(basis, g.n)
        assert [s.members for s in sols] == [(0, 1), (0, 2), (1, 2)]
        for s in sols:
            assert s.weight_sum == 2 == g.n - 2
            assert s.sum_kind is SumKind.HAMILTON_CYCLE
            assert s.set_class is SetKind.EDGE_SHARING_SET

    def test_theta4_special_basis_three_solutions(self):
        g, basis = theta4_special_basis()
        sols = solve(basis, g.n)
        assert [s.members for s in sols] == [(0, 1), (0, 2), (1, 2)]
        by_members = {s.members: s for s in sols}
        hub_pair = by_members[(0, 1)]
        assert hub_pair.sum_kind is SumKind.NOT_ELEMENTARY
        assert hub_pair.set_class is SetKind.TWO_VERTEX_SET
        for members in [(0, 2), (1, 2)]:
            assert by_members[members].sum_kind is SumKind.ELEMENTARY_NOT_SPANNING
            assert by_members[members].set_class is SetKind.EDGE_SHARING_SET

    def test_matches_brute_force(self, unit_corpus):
        for g in unit_corpus[:40]:
            basis = fundamental_basis(g)
            got = [s.members for s in solve(basis, g.n)]
            assert got == brute_force_members(basis, g.n)

    def test_weight_cross_check(self, unit_corpus):
        for g in unit_corpus[:40]:
            basis = fundamental_basis(g)
            for s in solve(basis, g.n):
                direct = sum(basis.cycles[i].length for i in s.members) - 2 * len(s.members)
                assert s.weight_sum == direct == g.n - 2

    def test_sum_kind_recomputable(self, unit_corpus):
        for g in unit_corpus[:40]:
            basis = fundamental_basis(g)
            for s in solve(basis, g.n):
                mask = 0
                for i in s.members:
                    mask ^= basis.cycles[i].mask
                if s.sum_kind is SumKind.HAMILTON_CYCLE:
                    assert is_elementary(g, mask)
                    assert vertices_of(g, mask) == frozenset(g.vertices)
                elif s.sum_kind is SumKind.ELEMENTARY_NOT_SPANNING:
                    assert is_elementary(g, mask)
                    assert vertices_of(g, mask) != frozenset(g.vertices)
                else:
                    assert not is_elementary(g, mask)

    def test_bound_enforced(self):
        g = named_fixture("K4")
        basis = fundamental_basis(g)
        with pytest.raises(BasisTooLarge):
            solve(basis, g.n, bound=2)


class TestSolvability:
    def test_theta4(self):
        _, basis = theta4_special_basis()
        assert is_solvable(basis, 6)

    def test_k4(self):
        g = named_fixture("K4")
        assert is_solvable(fundamental_basis(g), g.n)

    def test_bowtie_not_solvable(self):
        g = named_fixture("BOWTIE")
        basis = fundamental_basis(g)
        # two triangles: weights {1, 1}, target 3, subset sums top out at 2
        assert sorted(c.length for c in basis.cycles) == [3, 3]
        assert not is_solvable(basis, g.n)
        assert solve(basis, g.n) == []

    def test_wheel5_hamilton_solution(self):
        g = named_fixture("WHEEL5")
        basis = fundamental_basis(g, tree=[(i, 5) for i in range(5)])
        sols = solve(basis, g.n)
        # four consecutive hub triangles tile one side of the rim cycle
        assert any(s.weight_sum == 4 and s.sum_kind is SumKind.HAMILTON_CYCLE for s in sols)
        assert has_hamilton_solution(basis, g.n)


class TestCoSolution:
    def test_theta4_complement(self):
        g, basis = theta4_special_basis()
        sols = {s.members: s for s in solve(basis, g.n)}
        assert co_solution(basis, sols[(0, 1)]).members == (2,)

    def test_c5_empty_complement(self):
        g = named_fixture("C5")
        basis = fundamental_basis(g)
        (sol,) = solve(basis, g.n)
        assert co_solution(basis, sol).members == ()

    def test_k4(self):
        g = named_fixture("K4")
        basis = fundamental_basis(g, tree=[(0, 1), (0, 2), (0, 3)])
        sols = {s.members: s for s in solve(basis, g.n)}
        assert co_solution(basis, sols[(0, 1)]).members == (2,)

    def test_involution(self, unit_corpus):
        for g in unit_corpus[:20]:
            basis = fundamental_basis(g)
            for s in solve(basis, g.n):
                co = co_solution(basis, s)
                back = tuple(i for i in range(basis.dim) if i not in set(co.members))
                assert back == s.members

    def test_foreign_solution_rejected(self):
        g, basis = theta4_special_basis()
        sols = solve(basis, g.n)
        big = named_fixture("PETERSEN")
        big_basis = fundamental_basis(big)
        bad = solve(big_basis, big.n)
        foreign = [s for s in bad if max(s.members, default=0) >= basis.dim]
        if foreign:
            with pytest.raises(ValueError):
                co_solution(basis, foreign[0])


class TestIterOrder:
    def test_deterministic(self):
        g = named_fixture("PETERSEN")
        basis = fundamental_basis(g)
        first = list(iter_solution_members(basis, g.n))
        second = list(iter_solution_members(basis, g.n))
        assert first == second
