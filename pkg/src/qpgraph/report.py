"""Full analysis of one graph as a JSON-serializable report."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import algebra, spectral, structure, walkpart
from .graph import Graph, distance_data, is_connected, is_regular
from .linalg import Polynomial, RationalMatrix

SCHEMA = "1"


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def poly_json(p: Polynomial | None):
    if p is None:
        return None
    return {"coefficients": [rat(c) for c in p.coeffs], "text": str(p)}


def poly_from_json(obj) -> Polynomial | None:
    return None if obj is None else Polynomial(parse_rat(c) for c in obj["coefficients"])


def matrix_json(m: RationalMatrix) -> list:
    return [[rat(x) for x in m.row(i)] for i in range(m.rows)]


def bitmap(m: RationalMatrix) -> list[str]:
    return ["".join("1" if x else "0" for x in m.row(i)) for i in range(m.rows)]


@dataclass
class AnalysisReport:
    graph: dict
    eigenvalue_count: int | None
    drg: dict | None
    quotient_polynomial: dict | None
    standard_basis: dict | None
    walk_partition: dict | None
    distance_polynomials: list | None
    hoffman: dict | None
    diagram: dict | None
    diameter2_four_eigenvalues: str | None
    notes: list = field(default_factory=list)
    schema: str = SCHEMA

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, obj: dict) -> "AnalysisReport":
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
        return cls(**obj)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def consistency_errors(self) -> list[str]:
        errs = []
        qp = self.quotient_polynomial and self.quotient_polynomial["value"]
        if self.drg and self.drg["is_drg"] and not qp:
            errs.append("distance-regular but not quotient-polynomial")
        if qp and self.distance_polynomials is not None and \
                any(e["polynomial"] is None for e in self.distance_polynomials):
            errs.append("quotient-polynomial but some A_i is not polynomial in A")
        sb = self.standard_basis
        if sb is not None and sb.get("applicable") and bool(sb["closed"]) != bool(qp):
            errs.append("Hadamard closure disagrees with quotient-polynomiality")
        return errs


def _witness_json(w) -> dict:
    if isinstance(w, algebra.NonBinaryEntry):
        return {"kind": "NonBinaryEntry", "index": w.index, "row": w.row, "col": w.col,
                "value": rat(w.value)}
    return {"kind": "ProductOutsideSpan", "i": w.i, "j": w.j}


def drg_json(v: spectral.DrgVerdict) -> dict:
    arr = None
    if v.intersection_array is not None:
        arr = {"b": list(v.intersection_array[0]), "c": list(v.intersection_array[1])}
    return {"is_drg": v.is_drg, "reason": v.reason.value, "step": v.k,
            "intersection_array": arr}


def basis_json(res) -> dict:
    if isinstance(res, algebra.ClosureFailure):
        return {"applicable": True, "closed": False, "witness": _witness_json(res.witness)}
    return {
        "applicable": True,
        "closed": True,
        "d": res.d,
        "identity_index": res.identity_index,
        "sizes": res.sizes(),
        "distances": res.distances(),
        "distance_order": res.distance_order(),
        "polynomials": [poly_json(p) for p in res.polynomials],
        "matrices": [bitmap(f) for f in res.F],
        "intersection_numbers": [[[rat(x) for x in row] for row in mat]
                                 for mat in res.intersection_numbers],
    }


def walkpart_json(wp: walkpart.WalkPartition) -> dict:
    return {
        "d": wp.d,
        "r": wp.r,
        "classes": [{"distance": c.distance, "vector": list(c.vector), "size": len(c.pairs)}
                    for c in wp.classes],
        "W": matrix_json(wp.W),
        "Z": matrix_json(wp.Z),
        "pivots": list(wp.pivots),
        "polynomials": [poly_json(p) for p in wp.polys],
    }


def distpoly_json(rows) -> list:
    return [{"distance": e.distance,
             "terms": None if e.terms is None else list(e.terms),
             "polynomial": poly_json(e.polynomial)} for e in rows]


def diagram_json(rep: structure.FaithfulDiagramReport) -> dict:
    out = {"common": rep.common, "r_plus_1": rep.r_plus_1, "rank_P": rep.rank_P,
           "d_plus_1": rep.d_plus_1, "concluded_qp": rep.concluded_qp,
           "construction": rep.construction}
    if rep.common:
        sig = rep.diagram.signature
        out.update(sizes=list(sig.sizes), distances=list(sig.distances),
                   quotient=[list(r) for r in sig.quotient], P=matrix_json(rep.P))
    return out


def analyze(g: Graph) -> AnalysisReport:
    notes = list(g.notes)
    regular_k = is_regular(g)
    connected = is_connected(g)
    meta = {"name": g.name, "n": g.n, "m": g.m, "regular_k": regular_k,
            "connected": connected,
            "diameter": distance_data(g).diameter if connected else None}
    a = g.adjacency
    d1 = spectral.count_distinct_eigenvalues(a)
    if not connected:
        notes.append("graph is disconnected; only the eigenvalue count is reported")
        return AnalysisReport(meta, d1, None, None, None, None, None, None, None, None, notes)

    drg = drg_json(spectral.is_distance_regular(g))
    wp = walkpart.walk_partition(g)
    qp, diag = walkpart.is_quotient_polynomial(g, wp)
    qp_json = {"value": qp, **asdict(diag)}
    if regular_k is not None:
        basis = basis_json(algebra.standard_basis(g))
    else:
        basis = {"applicable": False, "closed": False, "reason": "graph is not regular"}
    dp = distpoly_json(walkpart.distance_matrix_polynomials(g, wp))
    hoff = poly_json(spectral.hoffman_polynomial(g))
    diagram = diagram_json(structure.faithful_diagram_analysis(g))
    d2 = structure.diameter2_four_ev_check(g).value
    return AnalysisReport(meta, d1, drg, qp_json, basis, walkpart_json(wp), dp, hoff,
                          diagram, d2, notes)
