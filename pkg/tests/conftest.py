from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hyperwit import Hypergraph, canonicalize

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, min_n: int = 2, max_n: int = 6, min_edge: int = 1) -> Hypergraph:
    n = draw(st.integers(min_n, max_n))
    edge = st.sets(st.integers(1, n), min_size=min_edge, max_size=n).map(sorted)
    return canonicalize(draw(st.lists(edge, max_size=8)), n)


@st.composite
def nonempty_hypergraphs(draw, min_n: int = 2, max_n: int = 6, min_edge: int = 1) -> Hypergraph:
    h = draw(hypergraphs(min_n=min_n, max_n=max_n, min_edge=min_edge))
    if h.edges:
        return h
    extra = st.sets(st.integers(1, h.n), min_size=max(min_edge, 1), max_size=h.n).map(sorted)
    return canonicalize([draw(extra)], h.n)
