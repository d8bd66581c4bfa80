"""Recursive routes to the permanental polynomial.

Two reduction rules give an independent way to compute pi for structured
graphs: expansion at a vertex (degree term, one term per incident edge, and
a doubled term per cycle through the vertex) and the three-term coalescence
rule for graphs glued at a single shared vertex.  Both work on principal
submatrices of the ambient L/Q matrix, never on Laplacians of the deleted
subgraph, so degrees keep their original values.

The tridiagonal auxiliary matrices built here are the path matrix with one
end removed (tag B) and with both ends removed (tag U); their polynomials
drive the cycle and bicyclic closed forms checked in closed_forms.
"""

from __future__ import annotations

from .algebra import IntPoly
from .graphs import (
    Cycle,
    Dumbbell,
    FamilySpec,
    Graph,
    IntMatrix,
    Lollipop,
    MatrixKind,
    Path,
    build_matrix,
    generate,
)
from .permanent import perm_poly_matrix

CYCLE_ENUM_CAP = 10_000


class InvalidN(ValueError):
    """Auxiliary matrix order out of range."""


class CycleLimitExceeded(RuntimeError):
    """More simple cycles through a vertex than the enumeration cap."""


def build_aux(tag: str, n: int, kind: MatrixKind) -> IntMatrix:
    """Order-n tridiagonal principal submatrix of a path matrix.

    tag "B": path matrix on n+1 vertices with one end row/column deleted,
    so the diagonal is (2, ..., 2, 1).  tag "U": path matrix on n+2
    vertices with both end rows/columns deleted, all-2 diagonal.
    Off-diagonal entries are -1 for the Laplacian kind, +1 for signless.
    """
    if tag not in ("B", "U"):
        raise ValueError(f"tag must be 'B' or 'U', got {tag!r}")
    if n < 1:
        raise InvalidN(f"auxiliary matrix needs n >= 1, got {n}")
    if kind not in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN):
        raise ValueError(f"auxiliary matrices exist for L and Q kinds only, got {kind}")
    off = -1 if kind is MatrixKind.LAPLACIAN else 1
    diag = [2] * n
    if tag == "B":
        diag[-1] = 1
    return tuple(
        tuple(diag[i] if i == j else (off if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


def aux_poly(tag: str, n: int, kind: MatrixKind) -> IntPoly:
    """pi of the auxiliary matrix, extended to the degenerate small orders.

    The three-term recurrence pi_n = (x-2) pi_{n-1} + pi_{n-2} runs the
    U family backwards to pi(U_0) = 1 and pi(U_{-1}) = 0, the values the
    glued-family formulas need at boundary parameters.
    """
    if tag == "U":
        if n == -1:
            return IntPoly.zero()
        if n == 0:
            return IntPoly.one()
    elif tag == "B":
        if n == 0:
            return IntPoly.one()
    return perm_poly_matrix(build_aux(tag, n, kind))


def cycles_through_vertex(g: Graph, v: int) -> list[tuple[int, ...]]:
    """All simple cycles containing v, as sorted vertex tuples.

    Depth-first path enumeration; each cycle is reported once by requiring
    the first step off v to be smaller than the last.  Raises
    CycleLimitExceeded past the enumeration cap, which no in-scope graph
    reaches (at most three cycles meet any vertex of the structured
    families).
    """
    if not (0 <= v < g.n):
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    cycles: list[tuple[int, ...]] = []
    on_path = [False] * g.n
    on_path[v] = True
    path = [v]

    def extend(u: int) -> None:
        for w in g.adjacency[u]:
            if w == v and len(path) >= 3 and path[1] < u:
                cycles.append(tuple(sorted(path)))
                if len(cycles) > CYCLE_ENUM_CAP:
                    raise CycleLimitExceeded(f"more than {CYCLE_ENUM_CAP} cycles through vertex {v}")
            elif not on_path[w]:
                on_path[w] = True
                path.append(w)
                extend(w)
                path.pop()
                on_path[w] = False

    extend(v)
    cycles.sort()
    return cycles


def _principal_submatrix(m: IntMatrix, deleted: frozenset[int]) -> IntMatrix:
    keep = [i for i in range(len(m)) if i not in deleted]
    return tuple(tuple(m[i][j] for j in keep) for i in keep)


def perm_poly_vertex_expansion(g: Graph, v: int, kind: MatrixKind) -> IntPoly:
    """pi of g's kind-matrix, expanded at vertex v.

    (x - d(v)) pi(M_v) + sum over neighbors u of pi(M_uv) plus twice the
    cycle sum, where each cycle through v contributes pi of the matrix with
    the whole cycle deleted; for the signless kind the cycle term carries
    (-1)^(cycle length).  Subscripts are principal submatrix deletions.
    """
    if not (0 <= v < g.n):
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    if kind not in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN):
        raise ValueError(f"vertex expansion applies to L and Q kinds, got {kind}")
    m = build_matrix(g, kind)
    sub_cache: dict[frozenset[int], IntPoly] = {}

    def sub_poly(deleted: frozenset[int]) -> IntPoly:
        if deleted not in sub_cache:
            sub_cache[deleted] = perm_poly_matrix(_principal_submatrix(m, deleted))
        return sub_cache[deleted]

    total = IntPoly([-g.degree(v), 1]) * sub_poly(frozenset([v]))
    for u in g.adjacency[v]:
        total = total + sub_poly(frozenset([u, v]))
    for cyc in cycles_through_vertex(g, v):
        term = 2 * sub_poly(frozenset(cyc))
        if kind is MatrixKind.SIGNLESS_LAPLACIAN and len(cyc) % 2 == 1:
            term = -term
        total = total + term
    return total


def coalesce(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Graph obtained by identifying vertex u of g with vertex v of h."""
    if not (0 <= u < g.n):
        raise IndexError(f"vertex {u} out of range for n={g.n}")
    if not (0 <= v < h.n):
        raise IndexError(f"vertex {v} out of range for n={h.n}")

    def relabel(w: int) -> int:
        if w == v:
            return u
        return g.n + w - (1 if w > v else 0)

    edges = g.edges() + [(relabel(a), relabel(b)) for a, b in h.edges()]
    return Graph.from_edges(g.n + h.n - 1, edges)


def perm_poly_coalescence(g: Graph, u: int, h: Graph, v: int, kind: MatrixKind) -> IntPoly:
    """pi of the coalescence of g (at u) and h (at v).

    pi(G.H) = pi(G) pi(H_v) + pi(H) pi(G_u) - x pi(G_u) pi(H_v), with the
    deleted-vertex factors taken as principal submatrices of the original
    matrices.
    """
    if not (0 <= u < g.n):
        raise IndexError(f"vertex {u} out of range for n={g.n}")
    if not (0 <= v < h.n):
        raise IndexError(f"vertex {v} out of range for n={h.n}")
    mg = build_matrix(g, kind)
    mh = build_matrix(h, kind)
    pg = perm_poly_matrix(mg)
    ph = perm_poly_matrix(mh)
    pg_u = perm_poly_matrix(_principal_submatrix(mg, frozenset([u])))
    ph_v = perm_poly_matrix(_principal_submatrix(mh, frozenset([v])))
    return pg * ph_v + ph * pg_u - IntPoly.x() * pg_u * ph_v


def spec_coalescence_poly(spec: FamilySpec, kind: MatrixKind) -> IntPoly:
    """Coalescence-route polynomial for the specs that split naturally.

    A lollipop is a cycle glued to the end of a path; a dumbbell is a cycle
    glued to the free end of a lollipop.  Other specs have no canonical
    two-block split.
    """
    if isinstance(spec, Lollipop):
        cyc = generate(Cycle(spec.r))
        tail = generate(Path(spec.n - spec.r + 1))
        return perm_poly_coalescence(cyc, 0, tail, 0, kind)
    if isinstance(spec, Dumbbell):
        cyc = generate(Cycle(spec.p))
        rest = generate(Lollipop(spec.q, spec.q + spec.r + 1))
        return perm_poly_coalescence(cyc, 0, rest, rest.n - 1, kind)
    raise ValueError(f"no canonical coalescence split for {spec!r}")
