"""Distinct-eigenvalue counting, predistance matrices and distance-regularity.

The eigenvalue count is the dimension of span{I, A, A^2, ...}, obtained by
Gram-Schmidt under the normalized trace product.  Because ``<A_k A, A_i> =
<A_k, A A_i>`` vanishes for ``i < k - 1``, each step only projects out the
last two matrices (a three-term recurrence), and the process stops at the
first exact zero matrix.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graph import Graph, distance_data, is_regular
from .linalg import (
    Polynomial,
    RationalMatrix,
    integer_content,
    matrix_power_sequence,
    rref_with_transform,
    row_space_coordinates,
    stack_rows,
    trace_inner,
    trace_product,
)


def _orthogonal_sequence(a: RationalMatrix) -> list[RationalMatrix]:
    n = a.rows
    eye = RationalMatrix.identity(n)
    # the three-term shortcut needs A_1 orthogonal to A_0; adjacency matrices already are
    a1 = a - eye.scale(trace_inner(a, eye)) if a.trace() else a
    seq = [eye]
    if a1.is_zero():
        return seq
    seq.append(a1)
    norms = [Fraction(1), trace_inner(a1, a1)]
    while True:
        p = seq[-1] @ a
        nxt = p
        for i in (-2, -1):
            c = trace_inner(p, seq[i]) / norms[i]
            if c:
                nxt = nxt - seq[i].scale(c)
        if nxt.is_zero():
            return seq
        seq.append(nxt)
        norms.append(trace_inner(nxt, nxt))


def _orthogonal_sequence_integral(a: RationalMatrix) -> list[RationalMatrix]:
    """Division-free variant using ``trace(XY)``; entries stay integral.

    Each new matrix is a positive multiple of the rational one, reduced by
    the gcd of its entries to keep the integers small.
    """
    if not a.is_integral:
        raise ValueError("integer-only path needs an integral matrix")
    n = a.rows
    eye = RationalMatrix.identity(n)
    a1 = a.scale(n) - eye.scale(a.trace()) if a.trace() else a
    seq = [eye]
    if a1.is_zero():
        return seq
    seq.append(a1)
    norms = [trace_product(eye, eye), trace_product(a1, a1)]
    while True:
        p = seq[-1] @ a
        n1, n0 = norms[-1], norms[-2]
        nxt = (p.scale(n1 * n0)
               - seq[-1].scale(n0 * trace_product(p, seq[-1]))
               - seq[-2].scale(n1 * trace_product(p, seq[-2])))
        if nxt.is_zero():
            return seq
        g = integer_content(nxt)
        if g > 1:
            nxt = nxt.scale(Fraction(1, g))
        seq.append(nxt)
        norms.append(trace_product(nxt, nxt))


def count_distinct_eigenvalues(a: RationalMatrix, integer_only: bool = False) -> int:
    """Number of distinct eigenvalues of a symmetric rational matrix."""
    if not a.is_square() or not a.is_symmetric():
        raise ValueError("eigenvalue count needs a symmetric matrix")
    seq = _orthogonal_sequence_integral(a) if integer_only else _orthogonal_sequence(a)
    return len(seq)


@dataclass(frozen=True)
class OrthogonalSequence:
    matrices: tuple
    normalized: bool

    @property
    def d_plus_1(self) -> int:
        return len(self.matrices)


def _normalize(m: RationalMatrix) -> RationalMatrix:
    # scale so that ||m||^2 = <m, J>
    nrm = trace_inner(m, m)
    return m.scale(m.entry_sum() / m.rows / nrm)


def predistance_sequence(g: Graph, normalized: bool = True) -> OrthogonalSequence:
    if is_regular(g) is None:
        raise PreconditionError("predistance matrices need a regular graph")
    seq = _orthogonal_sequence(g.adjacency)
    if normalized:
        seq = [_normalize(m) for m in seq]
    return OrthogonalSequence(tuple(seq), normalized)


def hoffman_polynomial(g: Graph) -> Polynomial | None:
    """The polynomial ``H`` with ``H(A) = J``; None unless ``g`` is regular and connected."""
    a = g.adjacency
    d = count_distinct_eigenvalues(a) - 1
    powers = matrix_power_sequence(a, d)
    red = rref_with_transform(stack_rows(p.vec() for p in powers))
    coords = row_space_coordinates(red, RationalMatrix.ones(g.n).vec())
    return None if coords is None else Polynomial(coords)


# --------------------------------------------------------------------------
# Distance-regularity
# --------------------------------------------------------------------------

class DrgReason(enum.Enum):
    NOT_REGULAR = "NotRegular"
    NON_BINARY_MATRIX = "NonBinaryMatrix"
    ZERO_BEFORE_DIAMETER = "ZeroBeforeDiameter"
    ZERO_AFTER_DIAMETER = "ZeroAfterDiameter"
    SUCCESS = "Success"


@dataclass(frozen=True)
class DrgVerdict:
    is_drg: bool
    reason: DrgReason
    k: int | None = None                  # step index the reason refers to
    intersection_array: tuple | None = None   # ((b_0..b_{D-1}), (c_1..c_D))
    matrices: tuple = ()

    def __post_init__(self):
        assert (self.intersection_array is not None) == self.is_drg


def _has_constant_support_value(m: RationalMatrix):
    """The common value of the nonzero entries, or None if they differ."""
    vals = {e for e in m.entries if e}
    return vals.pop() if len(vals) == 1 else None


def is_distance_regular(g: Graph, normalize: bool = True) -> DrgVerdict:
    """Decide distance-regularity with the normalized predistance recurrence.

    Steps, with ``D`` from BFS: build ``A_{k+1}`` by the three-term recurrence,
    normalize it, reject if it is not a 0-1 matrix, reject if it vanishes
    before ``k = D``, accept if it vanishes exactly at ``k = D``.  With
    ``normalize=False`` the matrices are left unscaled and the 0-1 test
    becomes "all nonzero entries equal", followed by rescaling to 0-1.
    """
    if is_regular(g) is None:
        return DrgVerdict(False, DrgReason.NOT_REGULAR)
    D = distance_data(g).diameter
    a = g.adjacency
    n = g.n
    seq = [RationalMatrix.identity(n), a]
    binary = list(seq)   # seq rescaled to 0-1; identical to seq when normalizing
    norms = [Fraction(1), trace_inner(a, a)]
    k = 1
    while True:
        p = seq[k] @ a
        nxt = p
        for i in (k - 1, k):
            c = trace_inner(p, seq[i]) / norms[i]
            if c:
                nxt = nxt - seq[i].scale(c)
        zero = nxt.is_zero()
        scaled = nxt
        if not zero:
            if normalize:
                nxt = scaled = _normalize(nxt)
                if not nxt.is_binary():
                    return DrgVerdict(False, DrgReason.NON_BINARY_MATRIX, k + 1)
            else:
                c = _has_constant_support_value(nxt)
                if c is None:
                    return DrgVerdict(False, DrgReason.NON_BINARY_MATRIX, k + 1)
                scaled = nxt.scale(1 / c)
        if zero and k < D:
            return DrgVerdict(False, DrgReason.ZERO_BEFORE_DIAMETER, k)
        if zero and k == D:
            arr = intersection_array(g)
            # on success the 0-1 matrices are the distance matrices
            assert tuple(binary) == distance_data(g).matrices, "predistance != distance matrices"
            assert arr is not None, "accepted a graph that is not distance-regular"
            return DrgVerdict(True, DrgReason.SUCCESS, k, arr, tuple(seq))
        if zero:
            return DrgVerdict(False, DrgReason.ZERO_AFTER_DIAMETER, k)
        seq.append(nxt)
        binary.append(scaled)
        norms.append(trace_inner(nxt, nxt))
        k += 1


def intersection_array(g: Graph) -> tuple | None:
    """Intersection array counted directly from distances, or None if not distance-regular.

    For every pair (x, y) at distance i, ``c_i = |G_{i-1}(x) n G(y)|`` and
    ``b_i = |G_{i+1}(x) n G(y)|`` must not depend on the pair.
    """
    dd = distance_data(g)
    D = dd.diameter
    b = [None] * (D + 1)
    c = [None] * (D + 1)
    nb = g.neighbors
    for x in range(g.n):
        dx = dd.dist[x]
        for y in range(g.n):
            i = dx[y]
            ci = sum(1 for z in nb[y] if dx[z] == i - 1)
            bi = sum(1 for z in nb[y] if dx[z] == i + 1)
            if c[i] is None:
                c[i], b[i] = ci, bi
            elif (c[i], b[i]) != (ci, bi):
                return None
    return tuple(b[:D]), tuple(c[1:])
