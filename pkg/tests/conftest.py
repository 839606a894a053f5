from fractions import Fraction

from hypothesis import settings, strategies as st

from qpgraph.graph import from_edge_list
from qpgraph.linalg import RationalMatrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def matrices(draw, rows=None, cols=None, elements=small_fracs):
    r = rows if rows is not None else draw(st.integers(1, 5))
    c = cols if cols is not None else draw(st.integers(1, 5))
    ent = draw(st.lists(elements, min_size=r * c, max_size=r * c))
    return RationalMatrix(r, c, tuple(Fraction(x) for x in ent))


@st.composite
def symmetric_matrices(draw, n=None):
    n = n if n is not None else draw(st.integers(1, 5))
    m = draw(matrices(n, n, st.integers(-3, 3)))
    return m + m.T


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    # a random spanning tree plus extra edges
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n)) if pairs else []
    return from_edge_list(n, edges + extra)
