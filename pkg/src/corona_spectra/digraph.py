"""Simple digraphs: construction, families, operations, predicates and matrices.

Vertices are ``0..n-1``. Arcs are kept in lexicographic (tail, head) order,
which fixes the column order of incidence matrices and the copy order of
arc coronas.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional

from .algebra import Matrix

FamilyKind = Literal["path", "cycle", "empty", "complete"]
MatrixName = Literal["A", "L", "Q", "antiA", "Dout", "Din"]
IncidenceName = Literal["B_in", "B_out", "B_underlying", "N_oriented"]


class DigraphError(ValueError):
    """Invalid digraph data or an operation outside its domain."""


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise DigraphError(f"vertex count must be a non-negative integer, got {self.n!r}")
        arcs = sorted((int(u), int(v)) for u, v in self.arcs)
        for k, (u, v) in enumerate(arcs):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DigraphError(f"arc ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            if k and arcs[k - 1] == (u, v):
                raise DigraphError(f"duplicate arc ({u}, {v})")
        object.__setattr__(self, "arcs", tuple(arcs))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def out_neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].append(v)
        return adj

    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    def __str__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


@dataclass(frozen=True)
class UnderlyingGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self) -> bool:
        if self.n == 0:
            raise DigraphError("connectivity of the empty vertex set is undefined")
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def adjacency(self) -> Matrix:
        return _sym_adj(self)

    def signless_laplacian(self) -> Matrix:
        return Matrix.diag(self.degrees()) + _sym_adj(self)

    def laplacian(self) -> Matrix:
        return Matrix.diag(self.degrees()) - _sym_adj(self)

    def degree_matrix(self) -> Matrix:
        return Matrix.diag(self.degrees())


def _sym_adj(g: UnderlyingGraph) -> Matrix:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] = a[v][u] = 1
    return Matrix(a, g.n)


@dataclass(frozen=True)
class DegreeProfile:
    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]


@dataclass(frozen=True)
class StructuralFlags:
    is_symmetric: bool
    is_tournament: bool
    out_regular: Optional[int]
    is_bipartite: bool
    degree_profile: DegreeProfile = field(repr=False)


# -- families ---------------------------------------------------------


def make_family(kind: FamilyKind, n: int) -> Digraph:
    """Directed path, directed cycle, empty or complete digraph on n vertices."""
    if not isinstance(n, int) or n < 1:
        raise DigraphError(f"{kind} needs n >= 1, got {n!r}")
    if kind == "path":
        return Digraph(n, tuple((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n < 2:
            raise DigraphError("a directed cycle needs n >= 2")
        return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if kind == "empty":
        return Digraph(n)
    if kind == "complete":
        return Digraph(n, tuple((u, v) for u in range(n) for v in range(n) if u != v))
    raise DigraphError(f"unknown family {kind!r}")


def path(n: int) -> Digraph:
    return make_family("path", n)


def cycle(n: int) -> Digraph:
    return make_family("cycle", n)


def empty(n: int) -> Digraph:
    return make_family("empty", n)


def complete(n: int) -> Digraph:
    return make_family("complete", n)


# -- unary and binary operations --------------------------------------


def transpose(d: Digraph) -> Digraph:
    return Digraph(d.n, tuple((v, u) for u, v in d.arcs))


def complement(d: Digraph) -> Digraph:
    present = d.arc_set()
    return Digraph(d.n, tuple((u, v) for u in range(d.n) for v in range(d.n) if u != v and (u, v) not in present))


def underlying_graph(d: Digraph) -> UnderlyingGraph:
    edges = sorted({(min(u, v), max(u, v)) for u, v in d.arcs})
    return UnderlyingGraph(d.n, tuple(edges))


def disjoint_union(d1: Digraph, d2: Digraph) -> Digraph:
    s = d1.n
    return Digraph(d1.n + d2.n, d1.arcs + tuple((u + s, v + s) for u, v in d2.arcs))


def join(d1: Digraph, d2: Digraph) -> Digraph:
    s = d1.n
    cross = []
    for u in range(d1.n):
        for v in range(s, s + d2.n):
            cross.append((u, v))
            cross.append((v, u))
    return Digraph(d1.n + d2.n, disjoint_union(d1, d2).arcs + tuple(cross))


def line_digraph(d: Digraph) -> Digraph:
    by_tail: dict[int, list[int]] = {}
    for j, (u, _) in enumerate(d.arcs):
        by_tail.setdefault(u, []).append(j)
    arcs = [(i, j) for i, (_, v) in enumerate(d.arcs) for j in by_tail.get(v, ())]
    return Digraph(d.m, tuple(arcs))


# -- predicates -------------------------------------------------------


def strongly_connected_components(d: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative to avoid recursion limits."""
    adj = d.out_neighbours()
    index = [-1] * d.n
    low = [0] * d.n
    on_stack = [False] * d.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(d.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for k in range(i, len(adj[v])):
                w = adj[v][k]
                if index[w] == -1:
                    work.append((v, k + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def is_strongly_connected(d: Digraph) -> bool:
    if d.n == 0:
        raise DigraphError("strong connectivity of the empty vertex set is undefined")
    return len(strongly_connected_components(d)) == 1


def degree_profile(d: Digraph) -> DegreeProfile:
    out = [0] * d.n
    inn = [0] * d.n
    for u, v in d.arcs:
        out[u] += 1
        inn[v] += 1
    return DegreeProfile(tuple(out), tuple(inn))


def out_regularity(d: Digraph) -> Optional[int]:
    """The common out-degree r, or None when out-degrees differ."""
    out = degree_profile(d).out_degrees
    if not out or any(x != out[0] for x in out):
        return None
    return out[0]


def is_symmetric(d: Digraph) -> bool:
    arcs = d.arc_set()
    return all((v, u) in arcs for u, v in arcs)


def is_tournament(d: Digraph) -> bool:
    arcs = d.arc_set()
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if ((u, v) in arcs) == ((v, u) in arcs):
                return False
    return True


def is_bipartite(d: Digraph) -> bool:
    g = underlying_graph(d)
    adj: list[list[int]] = [[] for _ in range(d.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    colour = [-1] * d.n
    for s in range(d.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def structural_predicates(d: Digraph) -> StructuralFlags:
    return StructuralFlags(
        is_symmetric=is_symmetric(d),
        is_tournament=is_tournament(d),
        out_regular=out_regularity(d),
        is_bipartite=is_bipartite(d),
        degree_profile=degree_profile(d),
    )


# -- matrices ---------------------------------------------------------


def adjacency(d: Digraph) -> Matrix:
    a = [[0] * d.n for _ in range(d.n)]
    for u, v in d.arcs:
        a[u][v] = 1
    return Matrix(a, d.n)


def matrix_of(d: Digraph, kind: MatrixName = "A") -> Matrix:
    """A, L = Dout - A, Q = Dout + A, antiA = J - A, Dout or Din."""
    prof = degree_profile(d)
    if kind == "A":
        return adjacency(d)
    if kind == "L":
        return Matrix.diag(prof.out_degrees) - adjacency(d)
    if kind == "Q":
        return Matrix.diag(prof.out_degrees) + adjacency(d)
    if kind == "antiA":
        return Matrix.all_ones(d.n) - adjacency(d)
    if kind == "Dout":
        return Matrix.diag(prof.out_degrees)
    if kind == "Din":
        return Matrix.diag(prof.in_degrees)
    raise DigraphError(f"unknown matrix kind {kind!r}")


def incidence_of(d: Digraph, kind: IncidenceName) -> Matrix:
    """Incidence matrices; arc columns in canonical order, edge columns in U(D) order."""
    if kind in ("B_in", "B_out"):
        b = [[0] * d.m for _ in range(d.n)]
        for j, (u, v) in enumerate(d.arcs):
            b[v if kind == "B_in" else u][j] = 1
        return Matrix(b, d.m)
    if kind in ("B_underlying", "N_oriented"):
        g = underlying_graph(d)
        b = [[0] * g.m for _ in range(d.n)]
        for j, (u, v) in enumerate(g.edges):
            # N orients each edge from the smaller to the larger index
            b[u][j] = 1
            b[v][j] = 1 if kind == "B_underlying" else -1
        return Matrix(b, g.m)
    raise DigraphError(f"unknown incidence kind {kind!r}")


def from_adjacency(rows: Iterable[Iterable[int]]) -> Digraph:
    rows = [list(r) for r in rows]
    return Digraph(len(rows), tuple((i, j) for i, r in enumerate(rows) for j, x in enumerate(r) if x))
