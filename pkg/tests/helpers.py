"""Shared test utilities: brute-force isomorphism and degree-class search.

The enumerator here deliberately ignores the package's family generators:
it grows adjacency structures edge by edge under a fixed degree target and
dedupes by permutation search, so it can serve as an independent oracle for
the census candidate set.
"""

from __future__ import annotations

from itertools import permutations

from permpoly.graphs import Graph


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search with degree-partition pruning; fine for n <= 10."""
    if g.n != h.n or g.m != h.m:
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    # Only map vertices to same-degree vertices: permute within degree classes.
    classes: dict[int, tuple[list[int], list[int]]] = {}
    for v in range(g.n):
        classes.setdefault(dg[v], ([], []))[0].append(v)
    for v in range(h.n):
        entry = classes.get(dh[v])
        if entry is None:
            return False
        entry[1].append(v)
    degs = sorted(classes)
    g_edges = {(min(u, v), max(u, v)) for u, v in g.edges()}

    def assign(idx: int, mapping: dict[int, int]) -> bool:
        if idx == len(degs):
            for u, v in h.edges():
                a, b = mapping[u], mapping[v]
                if (min(a, b), max(a, b)) not in g_edges:
                    return False
            return True
        g_side, h_side = classes[degs[idx]]
        for perm in permutations(g_side):
            mapping.update(zip(h_side, perm))
            if assign(idx + 1, mapping):
                return True
        return False

    return assign(0, {})


def graphs_with_two_cubic_rest_quadratic(n: int) -> list[Graph]:
    """All graphs on n vertices with degree sequence (3, 3, 2, ..., 2), up to
    isomorphism, loops and parallel edges excluded.

    Vertices 0 and 1 carry degree 3 (any such graph relabels to this), the
    rest degree 2.  Partial structures are extended at the lowest vertex
    with missing edges; isomorphic duplicates are rejected naively.
    """
    from itertools import combinations

    target = [3, 3] + [2] * (n - 2)
    buckets: dict[tuple, list[Graph]] = {}

    def invariant(g: Graph) -> tuple:
        # Cheap isomorphism invariant to keep the pairwise checks local:
        # per-vertex (degree, neighbor degrees, triangles at v), plus
        # component sizes.
        degs = g.degrees()
        profile = sorted(
            (degs[v], tuple(sorted(degs[u] for u in g.adjacency[v])),
             sum(1 for a in g.adjacency[v] for b in g.adjacency[v] if a < b and g.has_edge(a, b)))
            for v in range(g.n)
        )
        seen = [False] * g.n
        sizes = []
        for start in range(g.n):
            if seen[start]:
                continue
            stack, size = [start], 0
            seen[start] = True
            while stack:
                u = stack.pop()
                size += 1
                for w in g.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            sizes.append(size)
        return (tuple(profile), tuple(sorted(sizes)))

    def extend(adj: list[set[int]]) -> None:
        v = next((i for i in range(n) if len(adj[i]) < target[i]), None)
        if v is None:
            g = Graph(n, tuple(tuple(sorted(s)) for s in adj))
            bucket = buckets.setdefault(invariant(g), [])
            if not any(are_isomorphic(g, other) for other in bucket):
                bucket.append(g)
            return
        # Complete v's neighborhood in one step so every labeled graph is
        # produced along exactly one search path.  All u < v are already
        # full, so new neighbors only lie above v.
        missing = target[v] - len(adj[v])
        candidates = [u for u in range(v + 1, n) if u not in adj[v] and len(adj[u]) < target[u]]
        for combo in combinations(candidates, missing):
            for u in combo:
                adj[v].add(u)
                adj[u].add(v)
            extend(adj)
            for u in combo:
                adj[v].discard(u)
                adj[u].discard(v)

    extend([set() for _ in range(n)])
    return [g for bucket in buckets.values() for g in bucket]
