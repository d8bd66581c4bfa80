"""Closed-form identities the permanental polynomials satisfy, as oracles.

Four groups of checks:

  * Coefficient formulas: the first five coefficients of pi(L(G); x) and
    pi(Q(G); x) in terms of edge count, degree power sums, triangle and
    quadrilateral counts.  The degree-weighted triangle term counts
    triangles THROUGH each vertex; the alternative reading (triangles of
    G - v) fails the brute-force oracle and is rejected.
  * Inversions: vertex count, edge count, degree-square sum, and the
    combination sum(d^3) -+ 6*(triangles) recovered back from a polynomial.
  * Substituted closed forms: after x -> y + 2 - 1/y, paths, cycles and the
    B/U auxiliary matrices have short exact Laurent expressions, and their
    y = 1 specializations (x = 2) are tiny constants; dumbbells and thetas
    have parity-only x = 2 values.
  * Remainders: clearing denominators of the substituted bicyclic
    polynomial and subtracting a fixed family series f(y) leaves a finite
    remainder whose value at y = 1 reconstructs the x = 2 closed form and
    whose top terms identify the family parameters.

Two coefficients of the published theta family series are corrected here
(y^(2n+6) and y^(2n+2)); with the printed values the remainder keeps a
parameter-independent term above all parameter-identifying ones, which
contradicts the leading-term case analysis the identification argument
performs.  The corrections are forced by that analysis and confirmed
computationally across the whole sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import IntPoly, LaurentPoly, substitute_xy
from .decomposition import aux_poly
from .graphs import (
    Cycle,
    Dumbbell,
    FamilySpec,
    Graph,
    MatrixKind,
    Path,
    Theta,
    bicyclic_specs,
    count_quadrilaterals,
    count_triangles,
    count_triangles_through_vertex,
    degree_stats,
    generate,
)
from .permanent import perm_poly

L = MatrixKind.LAPLACIAN
Q = MatrixKind.SIGNLESS_LAPLACIAN


class InvalidN(ValueError):
    pass


class UnsupportedFamily(ValueError):
    pass


class NonIntegralInversion(ArithmeticError):
    """Polynomial coefficients are not realizable by any graph."""


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegralInversion(f"{what} = {x} is not an integer")
    return x.numerator


# ---------------------------------------------------------------------------
# Coefficient formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientReport:
    kind: MatrixKind
    n: int
    formula: tuple[int, ...]   # predicted top coefficients, index i -> x^(n-i)
    computed: tuple[int, ...]  # the polynomial's actual top coefficients
    match: tuple[bool, ...]

    @property
    def all_match(self) -> bool:
        return all(self.match)


def coefficient_formulas(g: Graph, kind: MatrixKind) -> list[int]:
    """Predicted coefficients of x^(n-i) for i = 0..min(4, n)."""
    st = degree_stats(g)
    m, d2, d3, d4 = st.m, st.sum_d2, st.sum_d3, st.sum_d4
    c3, c4 = count_triangles(g), count_quadrilaterals(g)
    degs = g.degrees()
    mixed = sum(degs[v] * count_triangles_through_vertex(g, v) for v in range(g.n))
    sign = 1 if kind is L else -1  # sign of the triangle terms
    out = [Fraction(1), Fraction(-2 * m), 2 * m * m + m - Fraction(d2, 2)]
    out.append(
        -Fraction(d3, 3) + (m + 1) * d2 - Fraction(4, 3) * m**3 - 2 * m * m + sign * 2 * c3
    )
    out.append(
        -Fraction(d4, 4)
        + (Fraction(2, 3) * m + 1) * d3
        - Fraction(2 * m * m + 5 * m + 1, 2) * d2
        + Fraction(d2 * d2, 8)
        + st.sum_edge_products
        + sign * 2 * mixed
        + 2 * c4
        - sign * 4 * m * c3
        + Fraction(2, 3) * m**4
        + 2 * m**3
        + Fraction(m * m + m, 2)
    )
    return [_as_int(v, f"coefficient formula {i}") for i, v in enumerate(out[: g.n + 1])]


def coeff_formulas(g: Graph, kind: MatrixKind) -> CoefficientReport:
    """Compare the coefficient formulas against the computed polynomial."""
    predicted = coefficient_formulas(g, kind)
    poly = perm_poly(g, kind)
    computed = [poly.coeff(g.n - i) for i in range(len(predicted))]
    return CoefficientReport(
        kind=kind,
        n=g.n,
        formula=tuple(predicted),
        computed=tuple(computed),
        match=tuple(p == c for p, c in zip(predicted, computed)),
    )


# ---------------------------------------------------------------------------
# Invariants recovered from a polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecoveredInvariants:
    n: int
    m: int
    sum_d2: int | None
    degree_cube_triangle_mix: int | None  # sum d^3 - 6c3 (L) or + 6c3 (Q)


def recoverable_invariants(poly: IntPoly, kind: MatrixKind) -> RecoveredInvariants:
    """Invert the coefficient formulas for n, m, sum(d^2) and the mix term."""
    n = poly.degree
    if n < 1 or not poly.is_monic():
        raise ValueError("expected a monic polynomial of degree >= 1")
    m = _as_int(Fraction(-poly.coeff(n - 1), 2), "edge count")
    if m < 0:
        raise NonIntegralInversion(f"negative edge count {m}")
    d2 = mix = None
    if n >= 2:
        d2 = 2 * (2 * m * m + m) - 2 * poly.coeff(n - 2)
    if n >= 3:
        mix = 3 * (m + 1) * d2 - 4 * m**3 - 6 * m * m - 3 * poly.coeff(n - 3)
    return RecoveredInvariants(n=n, m=m, sum_d2=d2, degree_cube_triangle_mix=mix)


# ---------------------------------------------------------------------------
# Substituted closed forms for paths, cycles and auxiliary matrices
# ---------------------------------------------------------------------------

def _mono(c: int, e: int) -> LaurentPoly:
    return LaurentPoly.monomial(c, e)

Y2P1 = LaurentPoly({2: 1, 0: 1})  # y^2 + 1


def pathlike_rhs(tag: str, kind: MatrixKind, n: int) -> LaurentPoly:
    """The cleared right-hand side of the substituted closed form.

    For tags P/B/U this is y^n (y^2+1) pi~; for C it is y^n pi~.
    """
    s = _sgn(n)
    if tag == "P":
        return _mono(1, 2 * n + 2) + _mono(2, 2 * n + 1) + _mono(1, 2 * n) + _mono(s, 2) + _mono(-2 * s, 1) + _mono(s, 0)
    if tag == "B":
        return _mono(1, 2 * n + 2) + _mono(1, 2 * n + 1) + _mono(-s, 1) + _mono(s, 0)
    if tag == "U":
        return _mono(1, 2 * n + 2) + _mono(s, 0)
    if tag == "C":
        c = 2 if kind is L else 2 * s
        return _mono(1, 2 * n) + _mono(c, n) + _mono(s, 0)
    raise ValueError(f"unknown tag {tag!r}")


def verify_pathlike_closed_form(tag: str, kind: MatrixKind, n: int) -> bool:
    """Exact Laurent comparison of both sides of the substituted form."""
    if tag == "C":
        if n < 3:
            raise InvalidN(f"cycle form needs n >= 3, got {n}")
        pi = perm_poly(generate(Cycle(n)), kind)
        lhs = substitute_xy(pi).shift(n)
    elif tag == "P":
        if n < 1:
            raise InvalidN(f"path form needs n >= 1, got {n}")
        pi = perm_poly(generate(Path(n)), kind)
        lhs = substitute_xy(pi).shift(n) * Y2P1
    elif tag in ("B", "U"):
        if n < 1:
            raise InvalidN(f"{tag} form needs n >= 1, got {n}")
        pi = aux_poly(tag, n, kind)
        lhs = substitute_xy(pi).shift(n) * Y2P1
    else:
        raise ValueError(f"unknown tag {tag!r}")
    return lhs == pathlike_rhs(tag, kind, n)


# ---------------------------------------------------------------------------
# x = 2 (equivalently y = 1) closed values
# ---------------------------------------------------------------------------

def y1_value(spec: FamilySpec, kind: MatrixKind) -> int:
    """Closed-form value of pi at x = 2 for paths, cycles, dumbbells, thetas."""
    if kind not in (L, Q):
        raise ValueError(f"closed y=1 values exist for L and Q kinds, got {kind}")
    F = Fraction
    if isinstance(spec, Path):
        return 2
    if isinstance(spec, Cycle):
        return _sgn(spec.n) + 3 if kind is L else 3 * _sgn(spec.n) + 1
    if isinstance(spec, Dumbbell):
        p, q, r = spec.p, spec.q, spec.r
        if kind is L:
            v = (F(9, 2) + F(3 * _sgn(p), 2) + F(3 * _sgn(q), 2) + F(_sgn(p + q), 2)
                 + 2 * _sgn(q + r) + 2 * _sgn(r) + 2 * _sgn(p + r) + 2 * _sgn(p + q + r))
        else:
            v = F(1, 2) + F(3 * _sgn(p), 2) + F(3 * _sgn(q), 2) + F(9 * _sgn(p + q), 2) + 8 * _sgn(p + q + r)
        return _as_int(v, "dumbbell y=1 value")
    if isinstance(spec, Theta):
        p, q, r = spec.p, spec.q, spec.r
        if kind is L:
            v = (F(7, 2) + F(_sgn(p + r), 2) + F(_sgn(p + q), 2) + F(_sgn(r + q), 2)
                 + _sgn(q) + _sgn(r) + _sgn(p) + 2 * _sgn(p + q + r))
        else:
            v = F(1, 2) + F(3 * _sgn(p + r), 2) + F(3 * _sgn(p + q), 2) + F(3 * _sgn(r + q), 2) + 5 * _sgn(p + q + r)
        return _as_int(v, "theta y=1 value")
    raise UnsupportedFamily(f"no closed y=1 value for {spec!r}")


def aux_y1_value(tag: str, n: int) -> int:
    """x = 2 value of the auxiliary matrix polynomials (kind-independent)."""
    if tag == "B":
        return 1
    if tag == "U":
        return (1 + _sgn(n)) // 2
    raise ValueError(f"unknown tag {tag!r}")


# ---------------------------------------------------------------------------
# Remainder identities for dumbbells and thetas
# ---------------------------------------------------------------------------

def base_series(family: str, n: int) -> LaurentPoly:
    """The parameter-free series f(y) subtracted from the cleared polynomial.

    Depends only on the vertex count (and family), not on the matrix kind.
    The theta series carries the two corrected coefficients discussed in
    the module docstring.
    """
    s = _sgn(n)
    low = _mono(s, 0) + _mono(2 * s, 1) + _mono(5 * s, 2) + _mono(4 * s, 3) + _mono(4 * s, 4)
    high = (_mono(1, 2 * n + 6) + _mono(-2, 2 * n + 5) + _mono(5, 2 * n + 4)
            + _mono(-4, 2 * n + 3) + _mono(4, 2 * n + 2))
    if family == "theta":
        high = high + _mono(1, 2 * n)
    elif family != "dumbbell":
        raise ValueError(f"unknown family {family!r}")
    return low + high


def leading_candidates(family: str, kind: MatrixKind, p: int, q: int, r: int) -> dict[int, int]:
    """The parameter-identifying top monomials of the remainder.

    Dumbbell: 2 y^(2s-p+6) and 2 y^(2s-q+6) (signless kind signs them by
    (-1)^p resp. (-1)^q) together with (-1)^r y^(2p+2q+2).  Theta: for each
    path t of the triple, 2 y^(t+s+8) (signless sign (-1)^(s-t)) and
    (-1)^t y^(2(s-t)+6).  Candidates at a common exponent accumulate.
    """
    out: dict[int, int] = {}

    def add(e: int, c: int) -> None:
        tot = out.get(e, 0) + c
        if tot:
            out[e] = tot
        else:
            out.pop(e, None)

    s = p + q + r
    if family == "dumbbell":
        for t in (p, q):
            add(2 * s - t + 6, 2 if kind is L else 2 * _sgn(t))
        add(2 * p + 2 * q + 2, _sgn(r))
    elif family == "theta":
        for t in (p, q, r):
            add(t + s + 8, 2 if kind is L else 2 * _sgn(s - t))
            add(2 * (s - t) + 6, _sgn(t))
    else:
        raise ValueError(f"unknown family {family!r}")
    return out


@dataclass(frozen=True)
class ResidualReport:
    family: str
    params: tuple[int, int, int]
    kind: MatrixKind
    n: int
    remainder: LaurentPoly
    remainder_at_one: int
    value_at_one: int          # (remainder(1) + f(1)) / 8, the x = 2 value
    leading_term: tuple[int, int]
    candidates: tuple[tuple[int, int], ...]
    structure_ok: bool


def _structure_ok(family: str, p: int, q: int, r: int,
                  remainder: LaurentPoly, cands: dict[int, int]) -> bool:
    """Do the remainder's top terms match the identifying monomials?

    Dumbbells match at the very top everywhere.  Thetas with all paths
    nonempty match term-for-term above exponent 2(p+q+r)+4, below which
    the published table is not reliable; thetas with an empty path only
    pin the top term (the hub edge perturbs the generic expansion).
    """
    top = max(cands)
    if family == "dumbbell" or min(p, q, r) == 0:
        return remainder.leading_term() == (top, cands[top])
    zone = 2 * (p + q + r) + 4
    above = {e: c for e, c in remainder.terms.items() if e > zone}
    return above == {e: c for e, c in cands.items() if e > zone}


def residual(spec: FamilySpec, kind: MatrixKind) -> ResidualReport:
    """Clear denominators, subtract the family series, analyze what is left."""
    if isinstance(spec, Dumbbell):
        family, n = "dumbbell", spec.p + spec.q + spec.r
    elif isinstance(spec, Theta):
        family, n = "theta", spec.p + spec.q + spec.r + 2
    else:
        raise UnsupportedFamily(f"remainder identities exist for dumbbells and thetas, got {spec!r}")
    p, q, r = spec.p, spec.q, spec.r
    pi = perm_poly(generate(spec), kind)
    cleared = substitute_xy(pi).shift(n) * Y2P1 * Y2P1 * Y2P1
    f = base_series(family, n)
    rem = cleared - f
    rem_at_one = rem.eval_at_one()
    value = Fraction(rem_at_one + f.eval_at_one(), 8)
    cands = leading_candidates(family, kind, p, q, r)
    return ResidualReport(
        family=family,
        params=(p, q, r),
        kind=kind,
        n=n,
        remainder=rem,
        remainder_at_one=rem_at_one,
        value_at_one=_as_int(value, "reconstructed y=1 value"),
        leading_term=rem.leading_term(),
        candidates=tuple(sorted(cands.items(), reverse=True)),
        structure_ok=_structure_ok(family, p, q, r, rem, cands),
    )


# ---------------------------------------------------------------------------
# Within-family injectivity
# ---------------------------------------------------------------------------

def family_injectivity_check(family: str, n: int, kind: MatrixKind) -> bool:
    """No two distinct canonical parameter tuples of the family at vertex
    count n share a polynomial."""
    if family == "dumbbell":
        specs = [s for s in bicyclic_specs(n) if isinstance(s, Dumbbell)]
    elif family == "theta":
        specs = [s for s in bicyclic_specs(n) if isinstance(s, Theta)]
    else:
        raise UnsupportedFamily(f"unknown family {family!r}")
    seen: dict[tuple, FamilySpec] = {}
    for spec in specs:
        key = perm_poly(generate(spec), kind).coeffs
        if key in seen:
            return False
        seen[key] = spec
    return True
