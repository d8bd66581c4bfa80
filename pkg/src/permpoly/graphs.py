"""Simple undirected graphs, the structured families, and their matrices.

A Graph is an immutable adjacency structure on vertices 0..n-1.  Family
generators produce the graphs this project revolves around: paths, cycles,
complete and complete bipartite graphs, lollipops (cycle plus pendant path
attached by an edge), dumbbells (two cycles joined by a path), and theta
graphs (two hubs joined by three internally disjoint paths).

Labeling conventions (fixtures depend on these):
  * Path/Cycle: vertices 0..n-1 in order along the path/cycle.
  * Lollipop(r, n): cycle vertices 0..r-1, path vertices r..n-1 in order;
    the joining edge is (0, r); vertex n-1 is the free end of the path.
  * Dumbbell(p, q, r): first cycle 0..p-1, second cycle p..p+q-1, bridge
    path p+q..p+q+r-1.  The degree-3 vertices are 0 and p, joined through
    the r bridge vertices (directly adjacent when r = 0).  r counts the
    vertices strictly between the two degree-3 vertices, so n = p + q + r.
  * Theta(p, q, r): hubs 0 and 1; the three paths have p, q, r interior
    vertices labeled consecutively from 2, so n = p + q + r + 2.  A zero
    entry means that path is a direct hub-hub edge; at most one may be zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Union


class InvalidFamilyParams(ValueError):
    """Family parameters violate the family's constraints."""


class MatrixKind(Enum):
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless"
    ADJACENCY = "adjacency"
    DEGREE_DIAGONAL = "degree"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count and sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in adj))

    def validate(self) -> None:
        """Check the structural invariants; raises ValueError on breakage."""
        if self.n != len(self.adjacency):
            raise ValueError("adjacency length differs from n")
        for i, nbrs in enumerate(self.adjacency):
            if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
                raise ValueError(f"adjacency[{i}] not strictly increasing")
            for j in nbrs:
                if j == i:
                    raise ValueError(f"loop at {i}")
                if i not in self.adjacency[j]:
                    raise ValueError(f"asymmetric edge ({i},{j})")

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.adjacency[i] if i < j]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                u = queue.pop()
                for w in self.adjacency[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})

    @staticmethod
    def from_json(text: str) -> "Graph":
        data = json.loads(text)
        g = Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
        g.validate()
        return g


# ---------------------------------------------------------------------------
# Family specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int


@dataclass(frozen=True)
class Lollipop:
    """Cycle of length r with a pendant path, n vertices in total."""

    r: int
    n: int


@dataclass(frozen=True)
class Dumbbell:
    """Cycles of lengths p and q joined by a path with r interior vertices."""

    p: int
    q: int
    r: int


@dataclass(frozen=True)
class Theta:
    """Two hubs joined by three disjoint paths with p, q, r interior vertices."""

    p: int
    q: int
    r: int


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple["FamilySpec", ...]


FamilySpec = Union[
    Path, Cycle, Complete, CompleteBipartite, Lollipop, Dumbbell, Theta, DisjointUnion
]


def spec_vertex_count(spec: FamilySpec) -> int:
    if isinstance(spec, (Path, Cycle, Complete, Lollipop)):
        return spec.n
    if isinstance(spec, CompleteBipartite):
        return spec.a + spec.b
    if isinstance(spec, Dumbbell):
        return spec.p + spec.q + spec.r
    if isinstance(spec, Theta):
        return spec.p + spec.q + spec.r + 2
    if isinstance(spec, DisjointUnion):
        return sum(spec_vertex_count(part) for part in spec.parts)
    raise TypeError(f"not a FamilySpec: {spec!r}")


def spec_label(spec: FamilySpec) -> str:
    """Stable human-readable label, used in catalogs and reports."""
    if isinstance(spec, Path):
        return f"path({spec.n})"
    if isinstance(spec, Cycle):
        return f"cycle({spec.n})"
    if isinstance(spec, Complete):
        return f"complete({spec.n})"
    if isinstance(spec, CompleteBipartite):
        return f"bipartite({spec.a},{spec.b})"
    if isinstance(spec, Lollipop):
        return f"lollipop({spec.r},{spec.n})"
    if isinstance(spec, Dumbbell):
        return f"dumbbell({spec.p},{spec.q},{spec.r})"
    if isinstance(spec, Theta):
        return f"theta({spec.p},{spec.q},{spec.r})"
    if isinstance(spec, DisjointUnion):
        return "+".join(spec_label(part) for part in spec.parts)
    raise TypeError(f"not a FamilySpec: {spec!r}")


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidFamilyParams(msg)


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical labeled graph for a family specification."""
    if isinstance(spec, Path):
        _check(spec.n >= 1, f"path needs n >= 1, got {spec.n}")
        return Graph.from_edges(spec.n, [(i, i + 1) for i in range(spec.n - 1)])

    if isinstance(spec, Cycle):
        _check(spec.n >= 3, f"cycle needs n >= 3, got {spec.n}")
        edges = [(i, i + 1) for i in range(spec.n - 1)] + [(0, spec.n - 1)]
        return Graph.from_edges(spec.n, edges)

    if isinstance(spec, Complete):
        _check(spec.n >= 1, f"complete graph needs n >= 1, got {spec.n}")
        edges = [(i, j) for i in range(spec.n) for j in range(i + 1, spec.n)]
        return Graph.from_edges(spec.n, edges)

    if isinstance(spec, CompleteBipartite):
        _check(spec.a >= 1 and spec.b >= 1, f"bipartite sides must be >= 1, got {spec}")
        edges = [(i, spec.a + j) for i in range(spec.a) for j in range(spec.b)]
        return Graph.from_edges(spec.a + spec.b, edges)

    if isinstance(spec, Lollipop):
        _check(spec.n >= 4, f"lollipop needs n >= 4, got n={spec.n}")
        _check(3 <= spec.r <= spec.n - 1, f"lollipop needs 3 <= r <= n-1, got {spec}")
        edges = [(i, (i + 1) % spec.r) for i in range(spec.r)]
        edges += [(i, i + 1) for i in range(spec.r, spec.n - 1)]
        edges.append((0, spec.r))
        return Graph.from_edges(spec.n, edges)

    if isinstance(spec, Dumbbell):
        p, q, r = spec.p, spec.q, spec.r
        _check(p >= 3 and q >= 3 and r >= 0, f"dumbbell needs p,q >= 3 and r >= 0, got {spec}")
        edges = [(i, (i + 1) % p) for i in range(p)]
        edges += [(p + i, p + (i + 1) % q) for i in range(q)]
        bridge = [0] + list(range(p + q, p + q + r)) + [p]
        edges += list(zip(bridge, bridge[1:]))
        return Graph.from_edges(p + q + r, edges)

    if isinstance(spec, Theta):
        p, q, r = spec.p, spec.q, spec.r
        _check(p >= 0 and q >= 0 and r >= 0, f"theta needs nonnegative lengths, got {spec}")
        _check(sum(1 for t in (p, q, r) if t == 0) <= 1, f"theta allows at most one zero, got {spec}")
        edges = []
        next_label = 2
        for length in (p, q, r):
            chain = [0] + list(range(next_label, next_label + length)) + [1]
            next_label += length
            edges += list(zip(chain, chain[1:]))
        return Graph.from_edges(p + q + r + 2, edges)

    if isinstance(spec, DisjointUnion):
        _check(len(spec.parts) >= 1, "union of nothing")
        g = generate(spec.parts[0])
        for part in spec.parts[1:]:
            g = disjoint_union(g, generate(part))
        return g

    raise TypeError(f"not a FamilySpec: {spec!r}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place h next to g, shifting h's labels by g.n."""
    shifted = tuple(tuple(j + g.n for j in nbrs) for nbrs in h.adjacency)
    return Graph(g.n + h.n, g.adjacency + shifted)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

IntMatrix = tuple[tuple[int, ...], ...]


def build_matrix(g: Graph, kind: MatrixKind) -> IntMatrix:
    """The n x n integer matrix of the requested kind for g."""
    n = g.n
    rows = []
    for i in range(n):
        row = [0] * n
        if kind in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN, MatrixKind.DEGREE_DIAGONAL):
            row[i] = g.degree(i)
        if kind is not MatrixKind.DEGREE_DIAGONAL:
            off = -1 if kind is MatrixKind.LAPLACIAN else 1
            for j in g.adjacency[i]:
                row[j] = off
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# Degree and small-cycle statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeStats:
    degree_sequence: tuple[int, ...]  # sorted descending
    m: int
    sum_d2: int
    sum_d3: int
    sum_d4: int
    sum_edge_products: int  # sum of d(u)*d(v) over edges (u,v)


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees()
    return DegreeStats(
        degree_sequence=tuple(sorted(degs, reverse=True)),
        m=sum(degs) // 2,
        sum_d2=sum(d * d for d in degs),
        sum_d3=sum(d**3 for d in degs),
        sum_d4=sum(d**4 for d in degs),
        sum_edge_products=sum(degs[u] * degs[v] for u, v in g.edges()),
    )


def count_triangles(g: Graph) -> int:
    """Triangles, counted as 3-vertex subsets."""
    count = 0
    for u in range(g.n):
        for v in g.adjacency[u]:
            if v <= u:
                continue
            for w in g.adjacency[v]:
                if w > v and g.has_edge(u, w):
                    count += 1
    return count


def count_quadrilaterals(g: Graph) -> int:
    """4-cycles, counted as subgraphs (a 4-clique contains three)."""
    # Count paths u-w-v of length 2 for each unordered pair (u, v); each
    # 4-cycle contributes two such pairs with two midpoints each.
    pair_paths: dict[tuple[int, int], int] = {}
    for w in range(g.n):
        nbrs = g.adjacency[w]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                key = (nbrs[i], nbrs[j])
                pair_paths[key] = pair_paths.get(key, 0) + 1
    total = sum(k * (k - 1) // 2 for k in pair_paths.values())
    return total // 2


def count_triangles_through_vertex(g: Graph, v: int) -> int:
    """Triangles containing v.  Summed over all v this is 3x the total."""
    if not (0 <= v < g.n):
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    nbrs = g.adjacency[v]
    count = 0
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            if g.has_edge(nbrs[i], nbrs[j]):
                count += 1
    return count


# ---------------------------------------------------------------------------
# Sweeps over the structured families
# ---------------------------------------------------------------------------

def bicyclic_specs(n: int, include_r0: bool = True) -> list[FamilySpec]:
    """Canonical dumbbell and theta specs with exactly n vertices.

    These are precisely the connected graphs with degree sequence
    (3, 3, 2, ..., 2): dumbbells (p <= q, r >= 0) and thetas (p <= q <= r,
    at most one zero).  r = 0 dumbbells have adjacent degree-3 vertices;
    pass include_r0=False to drop them.
    """
    out: list[FamilySpec] = []
    for p in range(3, n + 1):
        for q in range(p, n + 1):
            r = n - p - q
            if r < 0 or (r == 0 and not include_r0):
                continue
            out.append(Dumbbell(p, q, r))
    s = n - 2
    for p in range(0, s + 1):
        for q in range(max(p, 1), s + 1):
            r = s - p - q
            if r < q:
                continue
            out.append(Theta(p, q, r))
    return out


def family_sweep(max_n: int, min_n: int = 1) -> Iterator[FamilySpec]:
    """All canonical path/cycle/lollipop/dumbbell/theta specs with
    min_n <= vertex count <= max_n.

    This is the sweep the verification suites run over; every member has at
    most three cycles through any vertex, which keeps the cycle-enumeration
    and cover-enumeration routes cheap.
    """
    for n in range(min_n, max_n + 1):
        yield Path(n)
        if n >= 3:
            yield Cycle(n)
        for r in range(3, n):
            yield Lollipop(r, n)
        yield from bicyclic_specs(n)


def dense_family_sweep(max_n: int) -> Iterator[FamilySpec]:
    """Complete and complete bipartite specs with vertex count <= max_n."""
    for n in range(1, max_n + 1):
        yield Complete(n)
        for a in range(1, n // 2 + 1):
            yield CompleteBipartite(a, n - a)
