"""Standard 0-1 basis of the adjacency algebra and Hadamard closure.

The powers I, A, ..., A^d are vectorized row-major into the rows of a
(d+1) x n^2 matrix.  When span{I, ..., A^d} is closed under the Hadamard
product its reduced row echelon form consists exactly of the disjoint 0-1
basis matrices, so closure is decided by inspecting the echelon rows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import PreconditionError
from .graph import Graph, distance_data, is_connected, is_regular
from .linalg import (
    Polynomial,
    RationalMatrix,
    hadamard,
    matrix_power_sequence,
    rref_with_transform,
    row_space_coordinates,
    stack_rows,
)
from .spectral import count_distinct_eigenvalues


@dataclass(frozen=True)
class NonBinaryEntry:
    index: int
    row: int
    col: int
    value: Fraction


@dataclass(frozen=True)
class ProductOutsideSpan:
    i: int
    j: int


@dataclass(frozen=True)
class ClosureFailure:
    witness: NonBinaryEntry | ProductOutsideSpan
    echelon: tuple = field(default=(), repr=False)   # rows that failed to form a 0-1 basis


@dataclass(frozen=True, eq=False)
class StandardBasis:
    graph: Graph
    F: tuple                     # F_0..F_d in echelon (pivot) order
    identity_index: int
    intersection_numbers: tuple  # p[h][i][j] with F_i F_j = sum_h p[h][i][j] F_h
    polynomials: tuple           # F_i = polynomials[i](A)

    @property
    def d(self) -> int:
        return len(self.F) - 1

    def p(self, h: int, i: int, j: int) -> Fraction:
        return self.intersection_numbers[h][i][j]

    def sizes(self) -> list[int]:
        """Row sums |P_i(x)|, constant over x."""
        return [int(sum(f.row(0))) for f in self.F]

    def distances(self) -> list[int]:
        dist = distance_data(self.graph).dist
        out = []
        for f in self.F:
            x, y = min(f.support())
            out.append(dist[x][y])
        return out

    def distance_order(self) -> list[int]:
        """Basis indices sorted by (distance, cell size, echelon index)."""
        dist, size = self.distances(), self.sizes()
        return sorted(range(len(self.F)), key=lambda i: (dist[i], size[i], i))


def _check_regular_connected(g: Graph):
    if not is_connected(g):
        raise PreconditionError(f"{g.name or 'graph'} is not connected")
    if is_regular(g) is None:
        raise PreconditionError(f"{g.name or 'graph'} is not regular")


def _matrix_from_vec(n: int, row) -> RationalMatrix:
    return RationalMatrix(n, n, tuple(row))


def standard_basis(g: Graph) -> StandardBasis | ClosureFailure:
    _check_regular_connected(g)
    a = g.adjacency
    n = g.n
    d = count_distinct_eigenvalues(a) - 1
    powers = matrix_power_sequence(a, d)
    red = rref_with_transform(stack_rows(p.vec() for p in powers))
    assert red.rank == d + 1
    F = [_matrix_from_vec(n, red.R.row(i)) for i in range(d + 1)]

    for i, f in enumerate(F):
        for k, e in enumerate(f.entries):
            if e != 0 and e != 1:
                return ClosureFailure(NonBinaryEntry(i, k // n, k % n, e), tuple(F))

    if any(f.support() & h.support() for f, h in combinations(F, 2)):
        # echelon rows overlap, so the span is not Hadamard closed; find a product outside it
        for i, j in combinations(range(d + 1), 2):
            if row_space_coordinates(red, hadamard(F[i], F[j]).vec()) is None:
                return ClosureFailure(ProductOutsideSpan(i, j), tuple(F))
        raise AssertionError("overlapping 0-1 rows with a Hadamard-closed span")

    eye = RationalMatrix.identity(n)
    m = next(i for i, f in enumerate(F) if f == eye)
    polys = tuple(Polynomial(red.T.row(i)) for i in range(d + 1))

    # p^h_ij read off at one position of F_h; the rebuild below verifies it
    anchors = [min(f.support()) for f in F]
    p = [[[Fraction(0)] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(d + 1):
            prod = F[i] @ F[j]
            rebuilt = [Fraction(0)] * (n * n)
            for h, (x, y) in enumerate(anchors):
                c = prod[x, y]
                p[h][i][j] = c
                if c:
                    for k, e in enumerate(F[h].entries):
                        if e:
                            rebuilt[k] = c
            if tuple(rebuilt) != prod.entries:
                raise AssertionError(f"F_{i} F_{j} is not a combination of the basis")
    p = tuple(tuple(tuple(row) for row in mat) for mat in p)
    return StandardBasis(g, tuple(F), m, p, polys)


def is_hadamard_closed(g: Graph) -> bool:
    return isinstance(standard_basis(g), StandardBasis)


def distinct_entries_reject(g: Graph) -> int | None:
    """Least i <= d with more than d+1 distinct entries in A^i (a non-closure certificate)."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    a = g.adjacency
    d = count_distinct_eigenvalues(a) - 1
    for i, p in enumerate(matrix_power_sequence(a, d)):
        if len(p.distinct_entries()) > d + 1:
            return i
    return None


def krylov_rank(f: RationalMatrix, k: int) -> int:
    """Rank of the vectorized powers I, f, ..., f^k."""
    return rref_with_transform(stack_rows(p.vec() for p in matrix_power_sequence(f, k))).rank


def idempotent_generates(basis: StandardBasis, i: int, d: int | None = None) -> bool:
    """Whether ``F_i`` alone generates the algebra, i.e. has d+1 distinct eigenvalues."""
    d = basis.d if d is None else d
    f = basis.F[i]
    by_count = count_distinct_eigenvalues(f) == d + 1
    by_rank = krylov_rank(f, d) == d + 1
    if by_count != by_rank:
        raise AssertionError(f"eigenvalue count and Krylov rank disagree for F_{i}")
    return by_count


@dataclass(frozen=True)
class BasisPartitions:
    cells: tuple        # cells[x][i] = P_i(x) = {z : (F_i)_{xz} = 1}
    parameters: tuple   # c[i][h] with A F_i = sum_h c[i][h] F_h
    sizes: tuple

    def quotient(self) -> tuple:
        """Quotient matrix: entry [j][i] = neighbours in P_i(x) of any vertex of P_j(x)."""
        c = self.parameters
        return tuple(tuple(c[i][j] for i in range(len(c))) for j in range(len(c)))


def vertex_partitions(basis: StandardBasis) -> BasisPartitions:
    g = basis.graph
    a = g.adjacency
    F = basis.F
    r = len(F)
    anchors = [min(f.support()) for f in F]
    c = []
    for f in F:
        af = a @ f
        c.append(tuple(int(af[x, y]) for x, y in anchors))
    cells = tuple(
        tuple(frozenset(z for z in range(g.n) if f[x, z]) for f in F) for x in range(g.n)
    )
    sizes = tuple(len(s) for s in cells[0])
    nb = g.neighbors
    for x in range(g.n):
        if tuple(len(s) for s in cells[x]) != sizes:
            raise AssertionError(f"cell sizes around vertex {x} differ")
        for j in range(r):
            for y in cells[x][j]:
                for i in range(r):
                    if sum(1 for z in nb[y] if z in cells[x][i]) != c[i][j]:
                        raise AssertionError(f"partition around {x} is not equitable")
    return BasisPartitions(cells, tuple(c), sizes)
