from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import connected_graphs, symmetric_matrices
from qpgraph.errors import PreconditionError
from qpgraph.graph import (
    chordal_ring_12_4,
    circulant,
    complete,
    cycle,
    is_regular,
    kronecker,
    path,
    petersen,
    triangular,
)
from qpgraph.linalg import (
    Polynomial,
    RationalMatrix,
    charpoly,
    combine,
    distinct_root_count,
    poly_eval_matrix,
    trace_inner,
)
from qpgraph.spectral import (
    DrgReason,
    count_distinct_eigenvalues,
    hoffman_polynomial,
    intersection_array,
    is_distance_regular,
    predistance_sequence,
)

# [DERIVED] distinct-eigenvalue counts, cross-checked against charpoly below
KNOWN_COUNTS = [
    (complete(4), 2),
    (cycle(6), 4),
    (petersen(), 3),
    (kronecker(complete(2), triangular(4)), 5),
    (chordal_ring_12_4(), 7),
    (circulant(7, [1, 2]), 4),
]


@pytest.mark.parametrize("g,count", KNOWN_COUNTS, ids=[g.name for g, _ in KNOWN_COUNTS])
def test_known_counts(g, count):
    a = g.adjacency
    assert count_distinct_eigenvalues(a) == count
    assert count_distinct_eigenvalues(a, integer_only=True) == count
    assert distinct_root_count(charpoly(a)) == count


def test_scalar_matrices():
    assert count_distinct_eigenvalues(RationalMatrix.identity(5)) == 1
    assert count_distinct_eigenvalues(RationalMatrix.zeros(3)) == 1
    assert count_distinct_eigenvalues(RationalMatrix.from_rows([[1, 0], [0, 2]])) == 2


def test_rejects_non_symmetric():
    with pytest.raises(ValueError):
        count_distinct_eigenvalues(RationalMatrix.from_rows([[0, 1], [0, 0]]))


@given(symmetric_matrices())
def test_count_matches_charpoly(a):
    oracle = distinct_root_count(charpoly(a))
    assert count_distinct_eigenvalues(a) == oracle
    assert count_distinct_eigenvalues(a, integer_only=True) == oracle


def test_drg_known():
    v = is_distance_regular(petersen())
    assert v.is_drg and v.reason is DrgReason.SUCCESS
    assert v.intersection_array == ((3, 2), (1, 1))
    assert is_distance_regular(cycle(6)).intersection_array == ((2, 1, 1), (1, 1, 2))
    assert is_distance_regular(complete(4)).intersection_array == ((3,), (1,))


@pytest.mark.parametrize("g", [kronecker(complete(2), triangular(4)), chordal_ring_12_4(),
                               circulant(7, [1, 2])], ids=lambda g: g.name)
def test_drg_rejects_non_binary(g):
    for normalize in (True, False):
        v = is_distance_regular(g, normalize=normalize)
        assert not v.is_drg and v.reason is DrgReason.NON_BINARY_MATRIX
        assert v.intersection_array is None


def test_drg_not_regular():
    assert is_distance_regular(path(4)).reason is DrgReason.NOT_REGULAR


def test_drg_matrices_are_distance_matrices():
    from qpgraph.graph import distance_data
    g = petersen()
    assert is_distance_regular(g).matrices == distance_data(g).matrices


@given(connected_graphs())
def test_drg_matches_definition(g):
    v = is_distance_regular(g)
    assert v.is_drg == (intersection_array(g) is not None)
    assert is_distance_regular(g, normalize=False).is_drg == v.is_drg


def test_hoffman():
    assert hoffman_polynomial(complete(5)) == Polynomial([1, 1])
    assert hoffman_polynomial(path(3)) is None
    # [published] sum of the chordal ring's pivot polynomials
    assert hoffman_polynomial(chordal_ring_12_4()) == Polynomial(
        [0, F(1, 5), F(1, 15), F(-1, 4), F(-1, 12), F(1, 20), F(1, 60)])


@given(connected_graphs())
def test_hoffman_evaluates_to_J(g):
    h = hoffman_polynomial(g)
    if is_regular(g) is None:
        assert h is None
    else:
        assert poly_eval_matrix(h, g.adjacency) == RationalMatrix.ones(g.n)


@pytest.mark.parametrize("g", [circulant(7, [1, 2]), chordal_ring_12_4(), cycle(7)],
                         ids=lambda g: g.name)
def test_predistance_sequence(g):
    seq = predistance_sequence(g).matrices
    assert len(seq) == count_distinct_eigenvalues(g.adjacency)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            assert trace_inner(seq[i], seq[j]) == 0
    assert combine([1] * len(seq), seq) == RationalMatrix.ones(g.n)
    assert len(predistance_sequence(g, normalized=False).matrices) == len(seq)


def test_predistance_needs_regular():
    with pytest.raises(PreconditionError):
        predistance_sequence(path(4))
