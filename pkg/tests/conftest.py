import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hamscan.graphs import Graph

settings.register_profile(
    "hamscan",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("hamscan")


@st.composite
def small_graphs(draw, min_n=2, max_n=7, require_edges=True):
    """Random labeled graph on up to max_n vertices as an edge-subset pick."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picks = draw(st.lists(st.sampled_from(pairs), unique=True,
                          min_size=1 if require_edges else 0, max_size=len(pairs)))
    vertices = range(n)
    return Graph.from_edges(sorted(picks), vertices)


@pytest.fixture(scope="session")
def unit_corpus():
    """Connected, min-degree-2 graphs with 4..6 vertices: cheap but varied."""
    from hamscan.corpus import CorpusSpec, generate_corpus
    return list(generate_corpus(CorpusSpec(n_min=4, n_max=6)))
