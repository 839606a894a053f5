"""Simple undirected graphs, generators, edge-list I/O and BFS distances."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .linalg import RationalMatrix


class GraphError(ValueError):
    """Invalid graph data (loops, bad vertex labels, malformed files)."""


class DisconnectedGraphError(GraphError):
    def __init__(self, components):
        self.components = components
        super().__init__(f"graph is disconnected ({len(components)} components)")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple
    name: str = ""
    notes: tuple = ()

    @cached_property
    def neighbors(self) -> tuple:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adjacency(self) -> RationalMatrix:
        one, zero = Fraction(1), Fraction(0)
        rows = [[zero] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            rows[u][v] = rows[v][u] = one
        return RationalMatrix(self.n, self.n, tuple(x for r in rows for x in r))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbors]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    @cached_property
    def _distance_data(self):
        return _bfs_distance_data(self)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"Graph{label}(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable, name: str = "", notes: tuple = ()) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    seen = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        seen.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(seen)), name, tuple(notes))


def from_adjacency(a: RationalMatrix, name: str = "") -> Graph:
    if not a.is_square() or not a.is_symmetric() or not a.is_binary():
        raise GraphError("adjacency must be a symmetric 0-1 matrix")
    edges = [(i, j) for i in range(a.rows) for j in range(i + 1, a.cols) if a[i, j]]
    if any(a[i, i] for i in range(a.rows)):
        raise GraphError("adjacency has a nonzero diagonal")
    return from_edge_list(a.rows, edges, name)


# --------------------------------------------------------------------------
# Edge-list files: "n m" then m lines "u v"; '#' starts a comment
# --------------------------------------------------------------------------

def parse_edge_list(text: str, name: str = "") -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in lines[0].split()]
    except ValueError:
        raise GraphError(f"bad header line {lines[0]!r}") from None
    if len(header) != 2:
        raise GraphError(f"header must be 'n m', got {lines[0]!r}")
    n, m = header
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line {line!r}") from None
    return from_edge_list(n, edges, name)


def read_edge_list(path) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(), name=path.stem)


def format_edge_list(g: Graph) -> str:
    out = []
    if g.name:
        out.append(f"# {g.name}")
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# Generators
# --------------------------------------------------------------------------

def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2), f"complete({n})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"path({n})")


def circulant(n: int, connection: Iterable[int]) -> Graph:
    """Cayley graph of Z_n: ``i ~ j`` iff ``(i - j) mod n`` lies in the connection set.

    A connection set that is not closed under negation is symmetrized; the
    graph's ``notes`` record it.
    """
    conn = {c % n for c in connection}
    if 0 in conn:
        raise GraphError("0 in connection set would create loops")
    sym = conn | {(-c) % n for c in conn}
    notes = ()
    if sym != conn:
        notes = (f"connection set {sorted(conn)} symmetrized to {sorted(sym)}",)
    edges = [(i, (i + c) % n) for i in range(n) for c in sym]
    return from_edge_list(n, edges, f"circulant({n},{{{','.join(map(str, sorted(sym)))}}})", notes)


def triangular(m: int) -> Graph:
    """Line graph of K_m; vertices are the 2-subsets of range(m) in lexicographic order."""
    if m < 2:
        raise GraphError("triangular graph needs m >= 2")
    pairs = list(combinations(range(m), 2))
    edges = [(i, j) for i, j in combinations(range(len(pairs)), 2)
             if set(pairs[i]) & set(pairs[j])]
    return from_edge_list(len(pairs), edges, f"triangular({m})")


def kronecker(g: Graph, h: Graph) -> Graph:
    """Tensor product: adjacency ``A(g) (x) A(h)``; vertex (a, b) is ``a * h.n + b``."""
    edges = []
    for a1, a2 in g.edges:
        for b1, b2 in h.edges:
            edges.append((a1 * h.n + b1, a2 * h.n + b2))
            edges.append((a1 * h.n + b2, a2 * h.n + b1))
    return from_edge_list(g.n * h.n, edges, f"kronecker({g.name},{h.name})")


def petersen() -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
             (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return from_edge_list(10, edges, "petersen")


def chordal_ring_12_4() -> Graph:
    """12-cycle plus the chords ``{2k, 2k + 3}``: 3-regular, diameter 4."""
    edges = [(i, (i + 1) % 12) for i in range(12)]
    edges += [(2 * k, (2 * k + 3) % 12) for k in range(6)]
    return from_edge_list(12, edges, "chordal-ring-12-4")


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    return from_edge_list(g.n, edges, f"complement({g.name})")


# generator specs: "kronecker(complete(2),triangular(4))", "circulant(7,{1,2})", "petersen"
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][\w\-]*)|(.))")


def _tokenize(spec: str):
    pos = 0
    out = []
    spec = spec.strip()
    while pos < len(spec):
        m = _TOKEN.match(spec, pos)
        if not m or m.end() == pos:
            break
        num, word, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif word is not None:
            out.append(("name", word))
        elif sym is not None and not sym.isspace():
            out.append(("sym", sym))
        pos = m.end()
    return out


def _parse_expr(tokens, i):
    kind, val = tokens[i]
    if kind == "int":
        return val, i + 1
    if kind == "sym" and val in "{[":
        close = "}" if val == "{" else "]"
        items, i = [], i + 1
        while tokens[i] != ("sym", close):
            item, i = _parse_expr(tokens, i)
            items.append(item)
            if tokens[i] == ("sym", ","):
                i += 1
        return items, i + 1
    if kind == "name":
        name, i = val, i + 1
        args = []
        if i < len(tokens) and tokens[i] == ("sym", "("):
            i += 1
            while tokens[i] != ("sym", ")"):
                arg, i = _parse_expr(tokens, i)
                args.append(arg)
                if tokens[i] == ("sym", ","):
                    i += 1
            i += 1
        return _build(name, args), i
    raise GraphError(f"unexpected token {val!r}")


def _flat_ints(args) -> list[int]:
    out = []
    for a in args:
        if isinstance(a, list):
            out.extend(_flat_ints(a))
        elif isinstance(a, int):
            out.append(a)
        else:
            raise GraphError("expected integers")
    return out


def _build(name: str, args) -> Graph:
    key = name.lower().replace("_", "-")

    def ints(k):
        if len(args) != k or not all(isinstance(a, int) for a in args):
            raise GraphError(f"{name} takes {k} integer argument(s)")
        return args

    if key == "complete":
        return complete(*ints(1))
    if key == "cycle":
        return cycle(*ints(1))
    if key == "path":
        return path(*ints(1))
    if key == "triangular":
        return triangular(*ints(1))
    if key == "petersen":
        ints(0)
        return petersen()
    if key in ("chordal-ring-12-4", "chordal-ring"):
        ints(0)
        return chordal_ring_12_4()
    if key == "circulant":
        if not args or not isinstance(args[0], int):
            raise GraphError("circulant(n, {s1, s2, ...})")
        return circulant(args[0], _flat_ints(args[1:]))
    if key == "kronecker":
        if len(args) != 2 or not all(isinstance(a, Graph) for a in args):
            raise GraphError("kronecker takes two graphs")
        return kronecker(*args)
    if key == "complement":
        if len(args) != 1 or not isinstance(args[0], Graph):
            raise GraphError("complement takes one graph")
        return complement(args[0])
    raise GraphError(f"unknown graph family {name!r}")


FAMILIES = ("complete", "cycle", "path", "circulant", "triangular", "kronecker",
            "petersen", "chordal-ring-12-4", "complement")


def from_spec(spec: str) -> Graph:
    """Build a graph from a generator expression such as ``kronecker(complete(2),triangular(4))``."""
    tokens = _tokenize(spec)
    if not tokens:
        raise GraphError("empty generator spec")
    try:
        g, i = _parse_expr(tokens, 0)
    except IndexError:
        raise GraphError(f"truncated generator spec {spec!r}") from None
    if i != len(tokens) or not isinstance(g, Graph):
        raise GraphError(f"malformed generator spec {spec!r}")
    return g


# --------------------------------------------------------------------------
# Distances
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceData:
    dist: tuple            # dist[x][y], hop counts
    diameter: int
    matrices: tuple = field(repr=False)   # A_0 .. A_D


def bfs(g: Graph, source: int) -> list:
    """Hop distances from ``source``; unreachable vertices get None."""
    d = [None] * g.n
    d[source] = 0
    q = deque([source])
    nb = g.neighbors
    while q:
        u = q.popleft()
        for v in nb[u]:
            if d[v] is None:
                d[v] = d[u] + 1
                q.append(v)
    return d


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, dv in enumerate(bfs(g, s)) if dv is not None]
        for v in comp:
            seen[v] = True
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and all(d is not None for d in bfs(g, 0))


def is_regular(g: Graph) -> int | None:
    """Common valency, or None when degrees differ."""
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def _bfs_distance_data(g: Graph) -> DistanceData:
    if not is_connected(g):
        raise DisconnectedGraphError(components(g))
    dist = tuple(tuple(bfs(g, x)) for x in range(g.n))
    diameter = max(max(row) for row in dist)
    one, zero = Fraction(1), Fraction(0)
    mats = tuple(
        RationalMatrix(g.n, g.n, tuple(one if dist[x][y] == i else zero
                                       for x in range(g.n) for y in range(g.n)))
        for i in range(diameter + 1)
    )
    return DistanceData(dist, diameter, mats)


def distance_data(g: Graph) -> DistanceData:
    """BFS from every vertex; raises :class:`DisconnectedGraphError` if ``g`` is disconnected."""
    return g._distance_data
