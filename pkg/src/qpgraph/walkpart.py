"""Walk-regular partition of vertex pairs, the matrices [W|t] -> [Z|p(t)],
and which distance matrices are polynomials in A."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graph import Graph, distance_data
from .linalg import (
    Polynomial,
    RationalMatrix,
    combine,
    matrix_power_sequence,
    poly_eval_matrix,
    rref_with_transform,
    trace_inner,
)
from .spectral import count_distinct_eigenvalues


@dataclass(frozen=True)
class WalkClass:
    vector: tuple      # (A^0)_{yz}, ..., (A^d)_{yz}
    distance: int
    pairs: tuple


@dataclass(frozen=True, eq=False)
class WalkPartition:
    graph: Graph
    d: int
    classes: tuple
    M: tuple           # class matrices, same order as classes
    W: RationalMatrix  # (d+1) x (r+1); column j is the walk vector of class j
    Z: RationalMatrix  # echelon form of W, zero rows dropped
    pivots: tuple
    polys: tuple       # p_i(t) for each pivot row

    @property
    def r(self) -> int:
        return len(self.classes) - 1

    @property
    def rank_W(self) -> int:
        return len(self.pivots)

    def extended_W(self, length: int) -> RationalMatrix:
        """W with rows for walks of length 0..length (one representative pair per class)."""
        powers = matrix_power_sequence(self.graph.adjacency, length)
        reps = [c.pairs[0] for c in self.classes]
        return RationalMatrix.from_rows([[p[y, z] for y, z in reps] for p in powers])


def walk_vectors(g: Graph, d: int | None = None) -> dict:
    """Map each ordered pair (y, z) to its walk-count vector of length d+1."""
    a = g.adjacency
    if d is None:
        d = count_distinct_eigenvalues(a) - 1
    powers = matrix_power_sequence(a, d)
    n = g.n
    cols = [tuple(int(x) for x in p.entries) for p in powers]
    return {(y, z): tuple(c[y * n + z] for c in cols) for y in range(n) for z in range(n)}


def walk_partition(g: Graph) -> WalkPartition:
    dd = distance_data(g)
    a = g.adjacency
    d = count_distinct_eigenvalues(a) - 1
    vecs = walk_vectors(g, d)
    groups: dict = {}
    for pair, v in vecs.items():
        groups.setdefault(v, []).append(pair)
    classes = []
    for v, pairs in groups.items():
        dists = {dd.dist[y][z] for y, z in pairs}
        if len(dists) != 1:
            raise AssertionError(f"walk class {v} spans distances {sorted(dists)}")
        classes.append(WalkClass(v, dists.pop(), tuple(sorted(pairs))))
    classes.sort(key=lambda c: (c.distance, c.vector))

    n = g.n
    M = []
    for c in classes:
        ent = [Fraction(0)] * (n * n)
        for y, z in c.pairs:
            ent[y * n + z] = Fraction(1)
        M.append(RationalMatrix(n, n, tuple(ent)))

    W = RationalMatrix.from_rows([[c.vector[l] for c in classes] for l in range(d + 1)])
    red = rref_with_transform(W)
    rk = red.rank
    Z = RationalMatrix(rk, W.cols, red.R.entries[:rk * W.cols])
    polys = tuple(Polynomial(red.T.row(i)) for i in range(rk))
    return WalkPartition(g, d, tuple(classes), tuple(M), W, Z, red.pivots, polys)


@dataclass(frozen=True)
class QuotientPolynomialDiagnostics:
    d: int
    r: int
    Z_is_identity: bool
    num_walk_vectors: int
    W_independent: bool


def is_quotient_polynomial(g: Graph, partition: WalkPartition | None = None):
    """Return ``(verdict, diagnostics)``; all equivalent criteria are evaluated and must agree."""
    wp = partition or walk_partition(g)
    d, r = wp.d, wp.r
    z_id = wp.Z.is_square() and wp.Z == RationalMatrix.identity(wp.Z.rows) and wp.Z.rows == d + 1
    n_vec = len({c.vector for c in wp.classes})
    indep = wp.rank_W == r + 1
    checks = (d == r, z_id, n_vec == d + 1, indep)
    if len(set(checks)) != 1:
        raise AssertionError(f"equivalent criteria disagree: {checks}")
    return checks[0], QuotientPolynomialDiagnostics(d, r, z_id, n_vec, indep)


@dataclass(frozen=True)
class DistancePolynomial:
    distance: int
    terms: tuple | None           # indices i of the p_i summed, None if A_i is not polynomial
    polynomial: Polynomial | None


def distance_matrix_polynomials(g: Graph, partition: WalkPartition | None = None) -> list:
    """For each distance i, express A_i as a sum of the p_j(t) when possible.

    The rows of Z selected for distance i are those whose pivot column is a
    class at distance i; A_i is polynomial in A exactly when those rows add up
    to the 0-1 indicator of the distance-i classes.
    """
    wp = partition or walk_partition(g)
    dd = distance_data(g)
    a = g.adjacency
    out = []
    for i in range(dd.diameter + 1):
        cols = {j for j, c in enumerate(wp.classes) if c.distance == i}
        rows = tuple(k for k, pc in enumerate(wp.pivots) if pc in cols)
        total = [Fraction(0)] * wp.Z.cols
        for k in rows:
            for j, x in enumerate(wp.Z.row(k)):
                total[j] += x
        ok = rows and all(x in (0, 1) for x in total) and \
            {j for j, x in enumerate(total) if x} == cols
        if not ok:
            out.append(DistancePolynomial(i, None, None))
            continue
        q = sum((wp.polys[k] for k in rows), Polynomial())
        if poly_eval_matrix(q, a) != dd.matrices[i]:
            raise AssertionError(f"q(A) != A_{i}")
        out.append(DistancePolynomial(i, rows, q))
    return out


@dataclass(frozen=True)
class OrthogonalityReport:
    pairs_checked: int
    orthogonal: bool
    sum_is_J: bool


def quotient_polynomial_orthogonality(g: Graph, partition: WalkPartition | None = None):
    wp = partition or walk_partition(g)
    qp, _ = is_quotient_polynomial(g, wp)
    if not qp:
        raise PreconditionError("graph is not quotient-polynomial")
    a = g.adjacency
    mats = [poly_eval_matrix(p, a) for p in wp.polys]
    pairs = 0
    orth = True
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            pairs += 1
            if trace_inner(mats[i], mats[j]) != 0:
                orth = False
    total = combine([1] * len(mats), mats)
    return OrthogonalityReport(pairs, orth, total == RationalMatrix.ones(g.n))
