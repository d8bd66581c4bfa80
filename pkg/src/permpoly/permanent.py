"""Exact matrix permanents and permanental polynomials.

Three permanent evaluators live here:

  * permanent_naive: the defining sum over all permutations (n <= 9 guard).
  * permanent_ryser: inclusion-exclusion over column subsets in binary
    reflected Gray order, per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S}
    a_ij, one column add/subtract per step (n <= 30 guard).
  * _permanent_half: the half-length variant that folds the last column into
    the start vector and walks subsets of the first n-1 columns only.  Twice
    as fast; used internally by the interpolation route and cross-validated
    against the other two in the test suite.

perm_poly computes pi(M; x) = per(xI - M) either by evaluating integer
permanents at x = 0..n and interpolating (route "interpolation", the
default) or by running Ryser directly with polynomial entries (route
"ryser-poly", kept as an independent cross-check).
"""

from __future__ import annotations

from functools import lru_cache
from math import prod

from .algebra import IntPoly, lagrange_interpolate
from .graphs import Graph, IntMatrix, MatrixKind, build_matrix

NAIVE_MAX_N = 9
RYSER_MAX_N = 30
INTERP_MAX_N = 22
POLY_RYSER_MAX_N = 12


class TooLarge(ValueError):
    """Matrix order exceeds the guard for the requested algorithm."""


def _require_square(m: IntMatrix) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def permanent_naive(m: IntMatrix) -> int:
    """Permutation-sum definition; factorial time, guarded at n <= 9."""
    from itertools import permutations

    n = _require_square(m)
    if n > NAIVE_MAX_N:
        raise TooLarge(f"naive permanent limited to n <= {NAIVE_MAX_N}, got {n}")
    if n == 0:
        return 1
    return sum(prod(m[i][sigma[i]] for i in range(n)) for sigma in permutations(range(n)))


def permanent_ryser(m: IntMatrix) -> int:
    """Inclusion-exclusion permanent with Gray-code row-sum updates."""
    n = _require_square(m)
    if n > RYSER_MAX_N:
        raise TooLarge(f"Ryser permanent limited to n <= {RYSER_MAX_N}, got {n}")
    if n == 0:
        return 1
    # Nonzero entries of each column, for sparse incremental updates.
    cols = [[(i, m[i][j]) for i in range(n) if m[i][j]] for j in range(n)]
    sums = [0] * n
    total = 0
    gray = 0
    for step in range(1, 1 << n):
        j = (step & -step).bit_length() - 1
        mask = 1 << j
        gray ^= mask
        if gray & mask:
            for i, a in cols[j]:
                sums[i] += a
        else:
            for i, a in cols[j]:
                sums[i] -= a
        # One bit flips per step, so |S| parity tracks the step parity.
        if step & 1:
            total -= prod(sums)
        else:
            total += prod(sums)
    return total if n % 2 == 0 else -total


def _permanent_half(m: IntMatrix) -> int:
    """Half-subset permanent (folds the last column into the start vector).

    Works in doubled units so everything stays integral: with
    v_i = 2*a_{i,n-1} - sum_j a_ij + 2*sum_{j in S} a_ij the permanent is
    (-1)^(n-1) * sum_S (-1)^|S| prod_i v_i / 2^(n-1).
    """
    n = _require_square(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    cols = [[(i, 2 * m[i][j]) for i in range(n) if m[i][j]] for j in range(n - 1)]
    v = [2 * row[n - 1] - sum(row) for row in m]
    total = prod(v)
    gray = 0
    for step in range(1, 1 << (n - 1)):
        j = (step & -step).bit_length() - 1
        mask = 1 << j
        gray ^= mask
        if gray & mask:
            for i, a in cols[j]:
                v[i] += a
        else:
            for i, a in cols[j]:
                v[i] -= a
        if step & 1:
            total -= prod(v)
        else:
            total += prod(v)
    signed = -total if n % 2 == 0 else total
    q, rem = divmod(signed, 1 << (n - 1))
    assert rem == 0, "half-subset permanent accumulator not divisible"
    return q


def characteristic_shift(m: IntMatrix, k: int) -> IntMatrix:
    """k*I - m."""
    n = len(m)
    return tuple(
        tuple((k if i == j else 0) - m[i][j] for j in range(n)) for i in range(n)
    )


def perm_poly_matrix(m: IntMatrix, route: str = "interpolation") -> IntPoly:
    """pi(m; x) = per(xI - m) as an exact integer polynomial."""
    n = _require_square(m)
    if route == "interpolation":
        if n > INTERP_MAX_N:
            raise TooLarge(f"interpolation route limited to n <= {INTERP_MAX_N}, got {n}")
        points = [(k, _permanent_half(characteristic_shift(m, k))) for k in range(n + 1)]
        poly = lagrange_interpolate(points)
        assert poly.degree == n and poly.is_monic(), "permanental polynomial must be monic of degree n"
        return poly
    if route == "ryser-poly":
        return _perm_poly_ryser(m)
    raise ValueError(f"unknown route {route!r}")


def _perm_poly_ryser(m: IntMatrix) -> IntPoly:
    """Ryser's formula run with IntPoly entries of xI - m."""
    n = _require_square(m)
    if n > POLY_RYSER_MAX_N:
        raise TooLarge(f"polynomial Ryser route limited to n <= {POLY_RYSER_MAX_N}, got {n}")
    if n == 0:
        return IntPoly.one()
    x = IntPoly.x()
    entry = [[x - IntPoly([m[i][j]]) if i == j else IntPoly([-m[i][j]]) for j in range(n)] for i in range(n)]
    cols = [[(i, entry[i][j]) for i in range(n) if entry[i][j]] for j in range(n)]
    sums = [IntPoly.zero()] * n
    total = IntPoly.zero()
    gray = 0
    for step in range(1, 1 << n):
        j = (step & -step).bit_length() - 1
        mask = 1 << j
        gray ^= mask
        if gray & mask:
            for i, a in cols[j]:
                sums[i] = sums[i] + a
        else:
            for i, a in cols[j]:
                sums[i] = sums[i] - a
        term = IntPoly.one()
        for s in sums:
            term = term * s
        total = total - term if step & 1 else total + term
    return -total if n % 2 else total


@lru_cache(maxsize=None)
def _perm_poly_cached(g: Graph, kind: MatrixKind) -> IntPoly:
    return perm_poly_matrix(build_matrix(g, kind), "interpolation")


def perm_poly(g: Graph, kind: MatrixKind, route: str = "interpolation") -> IntPoly:
    """Permanental polynomial of the kind-matrix of g.

    The default interpolation route is cached per (graph, kind); explicit
    alternative routes always recompute.
    """
    if route == "interpolation":
        return _perm_poly_cached(g, kind)
    if route == "ryser-poly":
        return perm_poly_matrix(build_matrix(g, kind), "ryser-poly")
    if route == "vertex-expansion":
        # Implemented in decomposition.py; imported lazily to avoid a cycle.
        from . import decomposition

        return decomposition.perm_poly_vertex_expansion(g, 0, kind)
    raise ValueError(f"unknown route {route!r}")


def permanent_of_graph(g: Graph, kind: MatrixKind) -> int:
    """per of the kind-matrix of g, via Ryser."""
    return permanent_ryser(build_matrix(g, kind))
