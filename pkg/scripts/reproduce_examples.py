"""Recompute the worked examples: K2 x T4, the chordal ring and Cay(Z7; {1,2})."""
from qpgraph.algebra import StandardBasis, standard_basis
from qpgraph.cli import format_matrix, sub
from qpgraph.graph import chordal_ring_12_4, circulant, complete, kronecker, triangular
from qpgraph.structure import diameter2_four_ev_check, faithful_diagram_analysis
from qpgraph.walkpart import distance_matrix_polynomials, is_quotient_polynomial, walk_partition


def kronecker_example():
    g = kronecker(complete(2), triangular(4))
    b = standard_basis(g)
    assert isinstance(b, StandardBasis)
    print(f"{g.name}: d+1 = {b.d + 1}")
    for k, i in enumerate(b.distance_order()):
        print(f"  p{sub(k)}(t) = {b.polynomials[i]}")


def chordal_ring_example():
    g = chordal_ring_12_4()
    wp = walk_partition(g)
    qp, _ = is_quotient_polynomial(g, wp)
    print(f"\n{g.name}: d = {wp.d}, r = {wp.r}, quotient-polynomial: {qp}")
    print("W (walks of length 0..7) =")
    print(format_matrix(wp.extended_W(7).tolist()))
    print("Z =")
    print(format_matrix(wp.Z.tolist()))
    for i, p in enumerate(wp.polys):
        print(f"  p{sub(i)}(t) = {p}")
    for e in distance_matrix_polynomials(g, wp):
        terms = " + ".join(f"p{sub(k)}" for k in e.terms) if e.terms else "-"
        print(f"  A{sub(e.distance)} = {terms}")


def cayley_example():
    g = circulant(7, (1, 2))
    rep = faithful_diagram_analysis(g)
    sig = rep.diagram.signature
    print(f"\n{g.name}: cells {rep.diagram.cells}, sizes {sig.sizes}")
    print("quotient =")
    print(format_matrix(sig.quotient))
    print(f"rank(P) = {rep.rank_P} of {rep.r_plus_1}; diameter-2 case: "
          f"{diameter2_four_ev_check(g).value}")


if __name__ == "__main__":
    kronecker_example()
    chordal_ring_example()
    cayley_example()
