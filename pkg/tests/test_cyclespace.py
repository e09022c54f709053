import pytest
from hypothesis import given, strategies as st

from hamscan.cyclespace import (
    Cycle,
    CycleBasis,
    NotElementaryError,
    change_basis,
    cycle_from_vertices,
    decompose,
    edge_mask,
    edges_of,
    enumerate_bases,
    fundamental_basis,
    gf2_rank,
    is_elementary,
)
from hamscan.fixtures import named_fixture, theta4_special_basis
from hamscan.graphs import Graph, is_connected

from conftest import small_graphs


def masks(basis):
    return {c.mask for c in basis.cycles}


class TestFundamentalBasis:
    def test_k4_with_given_tree(self):
        g = named_fixture("K4")
        basis = fundamental_basis(g, tree=[(0, 1), (0, 2), (0, 3)])
        expected = {
            edge_mask(g, [(1, 2), (0, 1), (0, 2)]),
            edge_mask(g, [(1, 3), (0, 1), (0, 3)]),
            edge_mask(g, [(2, 3), (0, 2), (0, 3)]),
        }
        assert masks(basis) == expected
        assert basis.dim == 3

    def test_c5_single_cycle(self):
        g = named_fixture("C5")
        basis = fundamental_basis(g)
        assert basis.dim == 1
        assert basis.cycles[0].length == 5

    def test_dimension_and_rank(self, unit_corpus):
        for g in unit_corpus:
            basis = fundamental_basis(g)
            assert basis.dim == g.m - g.n + 1
            assert gf2_rank(list(basis.masks())) == basis.dim

    def test_every_edge_covered_in_bridgeless_host(self, unit_corpus):
        from hamscan.graphs import find_bridges
        for g in unit_corpus:
            if find_bridges(g):
                continue
            basis = fundamental_basis(g)
            union = 0
            for c in basis.cycles:
                union |= c.mask
            assert union == (1 << g.m) - 1

    def test_disconnected_rejected(self):
        g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_connected(g)
        with pytest.raises(ValueError):
            fundamental_basis(g)

    def test_bad_tree_rejected(self):
        g = named_fixture("K4")
        with pytest.raises(ValueError):
            fundamental_basis(g, tree=[(0, 1), (0, 2)])


class TestXor:
    def test_self_inverse(self):
        g, basis = theta4_special_basis()
        a = basis.cycles[0].mask
        assert a ^ a == 0

    def test_k4_pair_gives_hamilton_cycle(self):
        g = named_fixture("K4")
        basis = fundamental_basis(g, tree=[(0, 1), (0, 2), (0, 3)])
        f12, f13, _ = basis.cycles
        combined = f12.mask ^ f13.mask
        assert combined == edge_mask(g, [(1, 2), (0, 2), (1, 3), (0, 3)])
        assert is_elementary(g, combined)

    def test_theta4_pair_sum_covers_everything(self):
        g, basis = theta4_special_basis()
        both = basis.cycles[0].mask ^ basis.cycles[1].mask
        assert both == (1 << g.m) - 1
        assert not is_elementary(g, both)

    @given(small_graphs(min_n=3), st.data())
    def test_group_laws(self, g, data):
        universe = (1 << g.m) - 1
        pick = st.integers(min_value=0, max_value=universe)
        a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
        assert a ^ b == b ^ a
        assert (a ^ b) ^ c == a ^ (b ^ c)
        assert a ^ 0 == a
        assert a ^ a == 0


class TestIsElementary:
    def test_c5(self):
        g = named_fixture("C5")
        assert is_elementary(g, (1 << g.m) - 1)

    def test_empty_set(self):
        g = named_fixture("C5")
        assert not is_elementary(g, 0)

    def test_disjoint_triangles_not_elementary(self):
        g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
        both = edge_mask(g, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_elementary(g, both)

    def test_cycle_constructor_rejects_non_elementary(self):
        g = named_fixture("THETA4")
        with pytest.raises(NotElementaryError):
            Cycle(g, (1 << g.m) - 1)


class TestChangeBasis:
    def test_theta4_fundamental_rewrites_to_special(self):
        g = named_fixture("THETA4")
        fund = fundamental_basis(g, strategy="bfs", root=0)
        special_masks = masks(theta4_special_basis()[1])
        # the canonical BFS basis shares two cycles with the special one; the
        # third rewrites onto it by combining with the mix cycle
        overlap = sorted(masks(fund) & special_masks)
        assert len(overlap) == 2
        (outsider,) = [i for i, c in enumerate(fund.cycles) if c.mask not in special_masks]
        (missing,) = special_masks - masks(fund)
        partner_mask = fund.cycles[outsider].mask ^ missing
        partner = next(i for i, c in enumerate(fund.cycles) if c.mask == partner_mask)
        rewritten = change_basis(fund, outsider, {outsider, partner})
        assert masks(rewritten) == special_masks

    def test_identity_combiner(self):
        g, basis = theta4_special_basis()
        same = change_basis(basis, 0, {0})
        assert masks(same) == masks(basis)

    def test_k4_introduces_hamilton_cycle(self):
        g = named_fixture("K4")
        basis = fundamental_basis(g, tree=[(0, 1), (0, 2), (0, 3)])
        new = change_basis(basis, 0, {0, 1})
        expected = edge_mask(g, [(1, 2), (0, 2), (1, 3), (0, 3)])
        assert new.cycles[0].mask == expected

    def test_rejects_non_elementary_combination(self):
        g, basis = theta4_special_basis()
        with pytest.raises(NotElementaryError):
            change_basis(basis, 0, {0, 1})

    def test_rejects_target_outside_combiner(self):
        g, basis = theta4_special_basis()
        with pytest.raises(ValueError):
            change_basis(basis, 0, {1, 2})


class TestEnumerateBases:
    def test_c5_has_one(self):
        assert len(enumerate_bases(named_fixture("C5"), 100)) == 1

    def test_k4_has_at_least_three(self):
        assert len(enumerate_bases(named_fixture("K4"), 100)) >= 3

    def test_budget_truncates(self):
        assert len(enumerate_bases(named_fixture("K4"), 2)) == 2

    def test_theta4_contains_convertible_basis(self):
        g = named_fixture("THETA4")
        special_masks = masks(theta4_special_basis()[1])
        found = False
        for basis in enumerate_bases(g, 100):
            if len(masks(basis) & special_masks) == 2:
                found = True
        assert found


class TestDecompose:
    def test_unique_decomposition(self, unit_corpus):
        # every span element rebuilds from exactly its own coordinates
        for g in unit_corpus[:20]:
            basis = fundamental_basis(g)
            target = 0
            for i, c in enumerate(basis.cycles):
                if i % 2 == 0:
                    target ^= c.mask
            got = decompose(basis, target)
            assert got == tuple(i for i in range(basis.dim) if i % 2 == 0)

    def test_outside_span(self):
        g = named_fixture("C5")
        basis = fundamental_basis(g)
        single_edge = 1
        assert decompose(basis, single_edge) is None


class TestCycleSequence:
    def test_round_trip(self):
        g = named_fixture("PETERSEN")
        basis = fundamental_basis(g)
        for c in basis.cycles:
            rebuilt = cycle_from_vertices(g, c.vertex_sequence())
            assert rebuilt.mask == c.mask

    def test_basis_build_validates_count(self):
        g, basis = theta4_special_basis()
        with pytest.raises(ValueError):
            CycleBasis.build(g, basis.cycles[:2])
