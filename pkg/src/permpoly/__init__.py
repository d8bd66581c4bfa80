"""Exact permanental polynomials of graph Laplacians.

Computes per(xI - L(G)) and per(xI - Q(G)) by several independent exact
routes, checks the closed-form identities those polynomials satisfy on
structured graph families, and runs an exhaustive copermanental census over
the graphs with degree sequence (3, 3, 2, ..., 2).
"""

from .algebra import IntPoly, LaurentPoly, lagrange_interpolate, substitute_xy
from .graphs import (
    Complete,
    CompleteBipartite,
    Cycle,
    DisjointUnion,
    Dumbbell,
    Graph,
    Lollipop,
    MatrixKind,
    Path,
    Theta,
    build_matrix,
    degree_stats,
    disjoint_union,
    generate,
)
from .permanent import perm_poly, perm_poly_matrix, permanent_naive, permanent_ryser

__all__ = [
    "IntPoly",
    "LaurentPoly",
    "lagrange_interpolate",
    "substitute_xy",
    "Graph",
    "MatrixKind",
    "Path",
    "Cycle",
    "Complete",
    "CompleteBipartite",
    "Lollipop",
    "Dumbbell",
    "Theta",
    "DisjointUnion",
    "generate",
    "build_matrix",
    "degree_stats",
    "disjoint_union",
    "perm_poly",
    "perm_poly_matrix",
    "permanent_naive",
    "permanent_ryser",
]
