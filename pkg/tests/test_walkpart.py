from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import connected_graphs
from qpgraph.algebra import is_hadamard_closed
from qpgraph.errors import PreconditionError
from qpgraph.graph import chordal_ring_12_4, circulant, cycle, is_regular, petersen
from qpgraph.linalg import RationalMatrix, combine
from qpgraph.walkpart import (
    distance_matrix_polynomials,
    is_quotient_polynomial,
    quotient_polynomial_orthogonality,
    walk_partition,
    walk_vectors,
)

# [published] echelon form of the chordal ring's walk matrix (nonzero rows)
RING_Z = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, 0],
    [0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]

# [published] first rows of the walk matrix, walks of length 0..6
RING_W7 = [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0],
    [3, 0, 0, 1, 2, 0, 0, 0],
    [0, 6, 7, 0, 0, 2, 3, 0],
    [19, 0, 0, 11, 16, 0, 0, 8],
    [0, 46, 51, 0, 0, 30, 35, 0],
    [143, 0, 0, 111, 132, 0, 0, 100],
]


@pytest.fixture(scope="module")
def ring():
    g = chordal_ring_12_4()
    return g, walk_partition(g)


def test_ring_matrices(ring):
    g, wp = ring
    assert wp.d == 6 and wp.r == 7
    assert wp.W == RationalMatrix.from_rows(RING_W7)
    assert wp.Z == RationalMatrix.from_rows(RING_Z)
    assert wp.extended_W(7).row(7) == (0, 386, 407, 0, 0, 322, 343, 0)
    assert [c.distance for c in wp.classes] == [0, 1, 1, 2, 2, 3, 3, 4]
    assert [len(c.pairs) for c in wp.classes] == [12, 24, 12, 24, 24, 12, 24, 12]


def test_ring_not_quotient_polynomial(ring):
    g, wp = ring
    qp, diag = is_quotient_polynomial(g, wp)
    assert not qp
    assert diag.d == 6 and diag.r == 7 and not diag.Z_is_identity
    assert diag.num_walk_vectors == 8 and not diag.W_independent


def test_ring_distance_polynomials(ring):
    g, wp = ring
    rows = distance_matrix_polynomials(g, wp)
    assert [e.terms for e in rows] == [(0,), (1, 2), (3, 4), (5,), (6,)]
    assert rows[1].polynomial == wp.polys[1] + wp.polys[2]
    assert str(rows[1].polynomial) == "t"


def test_orthogonality_requires_qp(ring):
    g, wp = ring
    with pytest.raises(PreconditionError):
        quotient_polynomial_orthogonality(g, wp)


@pytest.mark.parametrize("g", [circulant(7, [1, 2]), petersen(), cycle(8)],
                         ids=lambda g: g.name)
def test_qp_orthogonality(g):
    rep = quotient_polynomial_orthogonality(g)
    assert rep.orthogonal and rep.sum_is_J
    d1 = walk_partition(g).d + 1
    assert rep.pairs_checked == d1 * (d1 - 1) // 2


def test_walk_vectors_are_symmetric():
    g = circulant(9, [1, 3])
    wv = walk_vectors(g)
    assert all(wv[(y, z)] == wv[(z, y)] for y, z in wv)


@given(connected_graphs())
def test_partition_invariants(g):
    wp = walk_partition(g)
    assert combine([1] * len(wp.M), wp.M) == RationalMatrix.ones(g.n)
    for c, m in zip(wp.classes, wp.M):
        assert m.support() == frozenset(c.pairs)
    for j, c in enumerate(wp.classes):
        assert wp.W.column(j) == tuple(F(x) for x in c.vector)
    qp, _ = is_quotient_polynomial(g, wp)
    if is_regular(g) is not None:
        assert qp == is_hadamard_closed(g)
    else:
        assert not qp
    rows = distance_matrix_polynomials(g, wp)
    if qp:
        assert all(e.polynomial is not None for e in rows)
    assert rows[0].polynomial is not None and rows[1].polynomial is not None
