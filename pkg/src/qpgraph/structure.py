"""Equitable partitions, intersection diagrams and walk counts from quotients."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .algebra import is_hadamard_closed
from .graph import Graph, distance_data, is_connected, is_regular
from .linalg import RationalMatrix, matrix_power_sequence, rank
from .spectral import count_distinct_eigenvalues
from .walkpart import walk_vectors


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class EquitablePartition:
    cells: tuple       # tuple of sorted vertex tuples
    quotient: tuple    # quotient[i][j] = neighbours in cell j of any vertex of cell i

    def matrix(self) -> RationalMatrix:
        return RationalMatrix.from_rows(self.quotient)


def _check_partition(g: Graph, cells) -> list[tuple]:
    cells = [tuple(sorted(c)) for c in cells]
    flat = [v for c in cells for v in c]
    if any(not c for c in cells) or sorted(flat) != list(range(g.n)):
        raise PartitionError("cells do not partition the vertex set")
    return cells


def equitable_counterexample(g: Graph, cells):
    """``(vertex, i, j, expected, found)`` witnessing non-equitability, or None."""
    cells = _check_partition(g, cells)
    where = {v: i for i, c in enumerate(cells) for v in c}
    nb = g.neighbors
    for i, c in enumerate(cells):
        ref = Counter(where[u] for u in nb[c[0]])
        for v in c[1:]:
            cnt = Counter(where[u] for u in nb[v])
            if cnt != ref:
                j = next(j for j in range(len(cells)) if cnt[j] != ref[j])
                return v, i, j, ref[j], cnt[j]
    return None


def verify_equitable(g: Graph, cells) -> EquitablePartition | None:
    cells = _check_partition(g, cells)
    if equitable_counterexample(g, cells) is not None:
        return None
    where = {v: i for i, c in enumerate(cells) for v in c}
    q = []
    for c in cells:
        cnt = Counter(where[u] for u in g.neighbors[c[0]])
        q.append(tuple(cnt[j] for j in range(len(cells))))
    return EquitablePartition(tuple(cells), tuple(q))


def quotient_walk_counts(quotient, ell: int, base: int = 0) -> list[int]:
    """Number of ell-walks from any vertex of cell j to the base vertex, for every j.

    The base cell must be the singleton ``{x}``; the count is ``(B^ell)[j][base]``.
    """
    b = quotient.matrix() if isinstance(quotient, EquitablePartition) else \
        RationalMatrix.from_rows(quotient)
    bl = matrix_power_sequence(b, ell)[-1]
    return [int(bl[j, base]) for j in range(b.rows)]


# --------------------------------------------------------------------------
# Diagrams around a vertex
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagramSignature:
    sizes: tuple
    distances: tuple
    walk_vectors: tuple
    quotient: tuple


def _refine(g: Graph, colors: list) -> list:
    """Colour refinement to the coarsest equitable partition finer than ``colors``.

    Labels are ranks of sorted signatures, so they depend only on the
    colour structure and not on vertex names.
    """
    nb = g.neighbors
    labels = {c: i for i, c in enumerate(sorted(set(colors)))}
    cur = [labels[c] for c in colors]
    while True:
        sigs = [(cur[v], tuple(sorted(Counter(cur[u] for u in nb[v]).items())))
                for v in range(g.n)]
        labels = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = [labels[s] for s in sigs]
        if len(labels) == len(set(cur)):
            return nxt
        cur = nxt


@dataclass(frozen=True)
class RootedDiagram:
    base: int
    cells: tuple               # in canonical order; cells[0] == (base,)
    partition: EquitablePartition
    signature: DiagramSignature
    refined: bool              # walk-vector cells had to be split to become equitable


def rooted_diagram(g: Graph, x: int, cells, wv: dict, dist,
                   refined: bool = False) -> RootedDiagram | None:
    """Canonically ordered diagram of an equitable partition around ``x``.

    Cells are ordered by (distance from x, size, walk vector w(x, z)); ties
    keep the order in which ``cells`` were given.  Returns None if the
    partition is not equitable or some cell mixes distances or walk vectors.
    """
    cells = [tuple(sorted(c)) for c in cells]
    keys = []
    for c in cells:
        ds = {dist[x][z] for z in c}
        ws = {wv[(x, z)] for z in c}
        if len(ds) != 1 or len(ws) != 1:
            return None
        keys.append((ds.pop(), len(c), ws.pop(), c))
    keys.sort(key=lambda k: k[:3])
    ordered = [k[3] for k in keys]
    ep = verify_equitable(g, ordered)
    if ep is None:
        return None
    sig = DiagramSignature(tuple(k[1] for k in keys), tuple(k[0] for k in keys),
                           tuple(k[2] for k in keys), ep.quotient)
    return RootedDiagram(x, tuple(ordered), ep, sig, refined)


def _walk_cells(g: Graph, x: int, wv: dict, dist) -> tuple[list, bool]:
    colors = [(dist[x][z], wv[(x, z)]) for z in range(g.n)]
    refined = _refine(g, colors)
    before = len(set(colors))
    groups: dict = {}
    for z, c in enumerate(refined):
        groups.setdefault(c, []).append(z)
    return [groups[k] for k in sorted(groups)], len(groups) != before


@dataclass(frozen=True)
class FaithfulDiagramReport:
    common: bool
    r_plus_1: int | None
    P: RationalMatrix | None
    rank_P: int | None
    d_plus_1: int
    concluded_qp: bool | None
    diagram: RootedDiagram | None
    construction: str


def vertex_diagrams(g: Graph, d: int | None = None) -> tuple[list, bool]:
    """Diagram around every vertex from the cells of w(x, .) with walks of length <= d.

    Returns the diagrams (None where no valid diagram arises) and whether
    colour refinement had to split any cell.
    """
    dd = distance_data(g)
    if d is None:
        d = count_distinct_eigenvalues(g.adjacency) - 1
    wv = walk_vectors(g, d)
    diagrams = []
    any_refined = False
    for x in range(g.n):
        cells, refined = _walk_cells(g, x, wv, dd.dist)
        any_refined |= refined
        diagrams.append(rooted_diagram(g, x, cells, wv, dd.dist, refined))
    return diagrams, any_refined


def faithful_diagram_analysis(g: Graph) -> FaithfulDiagramReport:
    """Test for a common distance-faithful diagram and compute rank(P).

    The diagram around x is the partition of the vertices by their walk
    vectors w(x, .), refined to an equitable partition by colour refinement
    when needed.  When every vertex yields the same signature, ``P`` is the
    (r+1) x (r+1) matrix of walk counts of length 0..r read off the quotient.
    """
    d1 = count_distinct_eigenvalues(g.adjacency)
    diagrams, any_refined = vertex_diagrams(g, d1 - 1)
    construction = ("cells of w(x, .) with walks of length <= d"
                    + (", refined by colour refinement" if any_refined else ", already equitable"))
    first = diagrams[0]
    common = first is not None and all(
        dg is not None and dg.signature == first.signature for dg in diagrams)
    if not common:
        return FaithfulDiagramReport(False, None, None, None, d1, None, None, construction)
    r1 = len(first.cells)
    b = first.partition.matrix()
    P_rows = [[bl[j, 0] for j in range(r1)] for bl in matrix_power_sequence(b, r1 - 1)]
    P = RationalMatrix.from_rows(P_rows)
    rk = rank(P)
    return FaithfulDiagramReport(True, r1, P, rk, d1, True if rk == r1 else None, first,
                                 construction)


# --------------------------------------------------------------------------
# Diameter 2, four eigenvalues
# --------------------------------------------------------------------------

class Diameter2Class(enum.Enum):
    CASE_I = "CaseI"          # non-adjacent constant, adjacent two-valued
    CASE_II = "CaseII"        # adjacent constant, non-adjacent two-valued
    BOTH = "Both"
    NEITHER = "Neither"
    NOT_APPLICABLE = "NotApplicable"


def common_neighbour_values(g: Graph) -> tuple[set, set]:
    """Sets of |G(x) n G(y)| over adjacent and over distinct non-adjacent pairs."""
    nb = [set(s) for s in g.neighbors]
    adj, non = set(), set()
    for x in range(g.n):
        for y in range(x + 1, g.n):
            (adj if y in nb[x] else non).add(len(nb[x] & nb[y]))
    return adj, non


def diameter2_four_ev_check(g: Graph) -> Diameter2Class:
    if not is_connected(g) or is_regular(g) is None:
        return Diameter2Class.NOT_APPLICABLE
    if distance_data(g).diameter != 2 or count_distinct_eigenvalues(g.adjacency) != 4:
        return Diameter2Class.NOT_APPLICABLE
    adj, non = common_neighbour_values(g)
    case1 = len(non) == 1 and len(adj) == 2
    case2 = len(adj) == 1 and len(non) == 2
    if case1 and case2:
        return Diameter2Class.BOTH
    if case1:
        return Diameter2Class.CASE_I
    if case2:
        return Diameter2Class.CASE_II
    return Diameter2Class.NEITHER


def diameter2_consistent(g: Graph) -> bool | None:
    """Whether the classification agrees with Hadamard closure (None if not applicable)."""
    cls = diameter2_four_ev_check(g)
    if cls is Diameter2Class.NOT_APPLICABLE:
        return None
    return (cls is not Diameter2Class.NEITHER) == is_hadamard_closed(g)


def basis_diagram_signatures(basis, g: Graph | None = None) -> list[DiagramSignature | None]:
    """Signature of the basis-induced partition around each vertex."""
    from .algebra import vertex_partitions

    g = g or basis.graph
    dd = distance_data(g)
    wv = walk_vectors(g, basis.d)
    parts = vertex_partitions(basis)
    out = []
    for x in range(g.n):
        dg = rooted_diagram(g, x, parts.cells[x], wv, dd.dist)
        out.append(None if dg is None else dg.signature)
    return out
