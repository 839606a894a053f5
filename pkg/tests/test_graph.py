import pytest
from hypothesis import given

from conftest import graphs
from qpgraph.graph import (
    DisconnectedGraphError,
    GraphError,
    chordal_ring_12_4,
    circulant,
    complement,
    complete,
    components,
    cycle,
    distance_data,
    format_edge_list,
    from_adjacency,
    from_edge_list,
    from_spec,
    is_connected,
    is_regular,
    kronecker,
    parse_edge_list,
    path,
    petersen,
    read_edge_list,
    triangular,
)
from qpgraph.linalg import RationalMatrix, kron


def test_edge_list_dedup_and_errors():
    g = from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])


@given(graphs())
def test_edge_list_round_trip(g):
    h = parse_edge_list(format_edge_list(g))
    assert h.n == g.n and h.edges == g.edges
    assert from_adjacency(g.adjacency).edges == g.edges


def test_parse_errors():
    for bad in ["", "3", "3 1\n0", "3 2\n0 1", "x y\n", "3 1\n0 a"]:
        with pytest.raises(GraphError):
            parse_edge_list(bad)


def test_parse_comments(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("# triangle\n3 3\n0 1  # first\n1 2\n0 2\n")
    g = read_edge_list(f)
    assert g.name == "tri" and g.m == 3 and is_regular(g) == 2


def test_generators():
    assert complete(5).m == 10 and is_regular(complete(5)) == 4
    assert cycle(6).m == 6 and distance_data(cycle(6)).diameter == 3
    assert is_regular(path(4)) is None
    p = petersen()
    assert p.n == 10 and is_regular(p) == 3 and distance_data(p).diameter == 2
    t = triangular(4)
    assert t.n == 6 and is_regular(t) == 4 and t.m == 12
    r = chordal_ring_12_4()
    assert r.n == 12 and is_regular(r) == 3 and distance_data(r).diameter == 4
    with pytest.raises(GraphError):
        cycle(2)


def test_circulant_symmetrized():
    g = circulant(7, [1, 2])
    assert is_regular(g) == 4
    assert g.notes
    with pytest.raises(GraphError):
        circulant(5, [0])


def test_circulant_rows_are_shifts():
    g = circulant(11, [1, 3])
    A = distance_data(g).matrices
    n = g.n
    for Ai in A:
        for x in range(n):
            assert all(Ai[x, (x + j) % n] == Ai[0, j] for j in range(n))


def test_kronecker_adjacency_is_tensor_product():
    g, h = complete(2), triangular(4)
    assert kronecker(g, h).adjacency == kron(g.adjacency, h.adjacency)


def test_complement():
    g = complement(cycle(5))
    assert is_regular(g) == 2 and is_connected(g)


def test_from_spec():
    g = from_spec("kronecker(complete(2),triangular(4))")
    assert g.n == 12 and is_regular(g) == 4
    assert from_spec("circulant(7,{1,2})").edges == circulant(7, [1, 2]).edges
    assert from_spec("chordal-ring-12-4").edges == chordal_ring_12_4().edges
    assert from_spec("petersen").n == 10
    for bad in ["", "foo(3)", "complete(", "complete(3))", "kronecker(complete(2))"]:
        with pytest.raises(GraphError):
            from_spec(bad)


def test_distances_and_components():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert not is_connected(g)
    assert components(g) == [[0, 1], [2, 3]]
    with pytest.raises(DisconnectedGraphError):
        distance_data(g)


@given(graphs(min_n=2))
def test_distance_matrices_sum_to_J(g):
    if not is_connected(g):
        return
    dd = distance_data(g)
    total = RationalMatrix.zeros(g.n)
    for m in dd.matrices:
        total = total + m
    assert total == RationalMatrix.ones(g.n)
    assert dd.matrices[1] == g.adjacency
