import pytest
from hypothesis import given

from hamscan.fixtures import named_fixture
from hamscan.graphs import Graph, is_connected
from hamscan.oracle import BudgetExceeded, TooLarge, backtrack, dp, validate_witness

from conftest import small_graphs


class TestBacktrack:
    def test_k4_with_witness(self):
        g = named_fixture("K4")
        res = backtrack(g)
        assert res.hamiltonian
        assert validate_witness(g, res.witness)

    def test_petersen_false(self):
        res = backtrack(named_fixture("PETERSEN"))
        assert not res.hamiltonian and res.witness is None

    def test_theta4_false(self):
        assert not backtrack(named_fixture("THETA4")).hamiltonian

    def test_budget_raises(self):
        with pytest.raises(BudgetExceeded):
            backtrack(named_fixture("PETERSEN"), node_budget=5)

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            backtrack(Graph.from_edges([(0, 1)]))

    def test_disconnected_rejected(self):
        g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        with pytest.raises(ValueError):
            backtrack(g)


class TestDp:
    def test_c5(self):
        g = named_fixture("C5")
        res = dp(g)
        assert res.hamiltonian and validate_witness(g, res.witness)

    def test_herschel_false(self):
        assert not dp(named_fixture("HERSCHEL")).hamiltonian

    def test_bowtie_false(self):
        assert not dp(named_fixture("BOWTIE")).hamiltonian

    def test_too_large(self):
        g = Graph.from_edges([(i, (i + 1) % 21) for i in range(21)])
        with pytest.raises(TooLarge):
            dp(g)
        # backtrack has no such cap and settles the big cycle instantly
        assert backtrack(g).hamiltonian


class TestAgreement:
    FIXTURES = ["C4", "C5", "K4", "K5", "THETA3", "THETA4", "BOWTIE",
                "PETERSEN", "HERSCHEL", "WHEEL5"]

    @pytest.mark.parametrize("name", FIXTURES)
    def test_fixture_agreement(self, name):
        g = named_fixture(name)
        a = backtrack(g)
        b = dp(g)
        assert a.hamiltonian == b.hamiltonian
        for res in (a, b):
            if res.witness is not None:
                assert validate_witness(g, res.witness)

    @given(small_graphs(min_n=3, max_n=7))
    def test_random_graph_agreement(self, g):
        if not is_connected(g):
            return
        assert backtrack(g).hamiltonian == dp(g).hamiltonian

    def test_corpus_agreement(self, unit_corpus):
        for g in unit_corpus:
            a, b = backtrack(g), dp(g)
            assert a.hamiltonian == b.hamiltonian
            if a.witness is not None:
                assert validate_witness(g, a.witness)
            if b.witness is not None:
                assert validate_witness(g, b.witness)


class TestWitnessValidation:
    def test_rejects_short_sequence(self):
        g = named_fixture("K4")
        assert not validate_witness(g, (0, 1, 2))

    def test_rejects_non_adjacent_step(self):
        g = named_fixture("C5")
        assert not validate_witness(g, (0, 2, 4, 1, 3))

    def test_rejects_repeats(self):
        g = named_fixture("K4")
        assert not validate_witness(g, (0, 1, 2, 1))

    def test_accepts_rotations(self):
        g = named_fixture("C5")
        assert validate_witness(g, (2, 3, 4, 0, 1))
