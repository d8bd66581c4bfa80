"""Combinatorial evaluation of per(L(G)) and per(Q(G)) over subgraph covers.

A cover picks a vertex subset K and a spanning subgraph of G[K] whose
components are single edges and cycles.  Summing sign * 2^(number of cycle
components) * product of the original degrees of the vertices outside K
gives the permanent of the Laplacian (sign = (-1)^|K|) or the signless
Laplacian (all signs +).  This is a fourth, fully independent oracle for
the constant-term permanents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, MatrixKind
from .permanent import TooLarge

COVER_MAX_N = 16


@dataclass(frozen=True)
class Cover:
    """One edge-and-cycle cover: covered vertices, components, cycle count."""

    vertices: frozenset[int]
    components: tuple[tuple, ...]  # ("edge", u, v) or ("cycle", (v0, v1, ...))
    cycle_count: int


def enumerate_covers(g: Graph) -> Iterator[Cover]:
    """Stream every cover exactly once, the empty cover included.

    Recursion on the lowest-indexed undecided vertex: leave it uncovered,
    match it to an undecided neighbor, or route a cycle through it (it is
    that cycle's minimum, so no cycle is produced twice).
    """
    if g.n > COVER_MAX_N:
        raise TooLarge(f"cover enumeration limited to n <= {COVER_MAX_N}, got {g.n}")
    undecided = [True] * g.n
    components: list[tuple] = []

    def cycles_from(v: int) -> list[tuple[int, ...]]:
        # Simple cycles through v inside the undecided set, v the minimum;
        # each counted once by ordering the two neighbors of v on the cycle.
        # Materialized up front: the caller mutates the shared undecided
        # flags while working through the result.
        found: list[tuple[int, ...]] = []
        path = [v]
        undecided[v] = False

        def extend(u: int) -> None:
            for w in g.adjacency[u]:
                if w == v and len(path) >= 3 and path[1] < u:
                    found.append(tuple(path))
                elif w > v and undecided[w]:
                    undecided[w] = False
                    path.append(w)
                    extend(w)
                    path.pop()
                    undecided[w] = True

        extend(v)
        undecided[v] = True
        return found

    def recurse(start: int) -> Iterator[Cover]:
        v = start
        while v < g.n and not undecided[v]:
            v += 1
        if v == g.n:
            covered = frozenset(i for i in range(g.n) if not undecided[i])
            yield Cover(covered, tuple(components),
                        sum(1 for c in components if c[0] == "cycle"))
            return
        # v stays uncovered
        undecided[v] = False
        yield from recurse(v + 1)
        undecided[v] = True
        # v matched along an edge to an undecided neighbor
        for u in g.adjacency[v]:
            if undecided[u]:
                undecided[v] = undecided[u] = False
                components.append(("edge", v, u))
                yield from recurse(v + 1)
                components.pop()
                undecided[v] = undecided[u] = True
        # v on a cycle of which it is the minimum vertex
        for cyc in cycles_from(v):
            for w in cyc:
                undecided[w] = False
            components.append(("cycle", cyc))
            yield from recurse(v + 1)
            components.pop()
            for w in cyc:
                undecided[w] = True

    yield from recurse(0)


def permanent_by_expansion(g: Graph, kind: MatrixKind) -> int:
    """per of the kind-matrix of g via the cover sum."""
    if kind not in (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN):
        raise ValueError(f"cover expansion applies to L and Q kinds, got {kind}")
    degs = g.degrees()
    signed = kind is MatrixKind.LAPLACIAN
    total = 0
    for cover in enumerate_covers(g):
        term = 1 << cover.cycle_count
        for i in range(g.n):
            if i not in cover.vertices:
                term *= degs[i]
        if signed and len(cover.vertices) % 2 == 1:
            term = -term
        total += term
    return total
