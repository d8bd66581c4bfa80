"""Exact univariate polynomial arithmetic over the integers.

Two polynomial types live here.  IntPoly is a dense polynomial in x with
arbitrary-precision integer coefficients; it holds permanental polynomials,
which are monic of degree n for an n x n matrix.  LaurentPoly is a sparse
polynomial in y allowing negative exponents; it holds the images of IntPoly
under the substitution x = (y^2 + 2y - 1)/y and the remainders built from
them.

Everything is exact: plain Python ints for coefficients, fractions.Fraction
for evaluation at rational points.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class DuplicateNode(ValueError):
    """Two interpolation nodes coincide."""


class NonIntegralCoefficient(ArithmeticError):
    """Interpolation produced a non-integer coefficient.

    For data of the form per(k*I - M) at integer k this cannot happen, so it
    signals a wrong evaluation upstream.
    """


class IntPoly:
    """Dense integer polynomial, coefficient of x^i at index i.

    Immutable; trailing zero coefficients are trimmed on construction.  The
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, power: int) -> int:
        """Coefficient of x^power (0 for powers outside the stored range)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = f"{abs(c)}" if (i == 0 or abs(c) != 1) else ""
            if i == 1:
                term += "x"
            elif i > 1:
                term += f"x^{i}"
            parts.append(("-" if c < 0 else "+") + term)
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s.replace("- ", "-", 1) if s.startswith("-") else s

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly([1])

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly([0, 1])

    @staticmethod
    def monomial(c: int, power: int) -> "IntPoly":
        return IntPoly([0] * power + [c])

    def to_decimal_strings(self) -> list[str]:
        """Constant-first decimal strings, the serialization wire format."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_decimal_strings(items: Iterable[str]) -> "IntPoly":
        return IntPoly([int(s) for s in items])


def lagrange_interpolate(points: Iterable[tuple[int, int]]) -> IntPoly:
    """Interpolate integer-valued data on distinct integer nodes.

    Uses the Newton divided-difference form with exact rationals and converts
    back to integers at the end.  Raises DuplicateNode for repeated nodes and
    NonIntegralCoefficient if the interpolant is not an integer polynomial.
    """
    pts = list(points)
    nodes = [x for x, _ in pts]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNode(f"repeated node in {nodes}")
    if not pts:
        return IntPoly()
    # Divided-difference coefficients c_k = f[x_0 .. x_k].
    diffs = [Fraction(y) for _, y in pts]
    coeffs = [diffs[0]]
    for level in range(1, len(pts)):
        for i in range(len(pts) - level):
            diffs[i] = (diffs[i + 1] - diffs[i]) / (nodes[i + level] - nodes[i])
        coeffs.append(diffs[0])
    # Horner assembly: p = c_{k} then p = p*(x - x_{k-1}) + c_{k-1}.
    acc = [coeffs[-1]]
    for k in range(len(pts) - 2, -1, -1):
        shifted = [Fraction(0)] + acc
        for i, c in enumerate(acc):
            shifted[i] -= c * nodes[k]
        shifted[0] += coeffs[k]
        acc = shifted
    out = []
    for c in acc:
        if c.denominator != 1:
            raise NonIntegralCoefficient(f"coefficient {c} is not an integer")
        out.append(c.numerator)
    return IntPoly(out)


class LaurentPoly:
    """Sparse integer Laurent polynomial in y.

    Stored as a mapping exponent -> nonzero coefficient; exponents may be
    negative.  Immutable value type.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
                if acc[e] == 0:
                    del acc[e]
        object.__setattr__(self, "terms", dict(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def coeff(self, exponent: int) -> int:
        return self.terms.get(exponent, 0)

    @property
    def min_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no exponents")
        return next(iter(self.terms))

    @property
    def max_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no exponents")
        return next(reversed(self.terms))

    def leading_term(self) -> tuple[int, int]:
        """(max exponent, its coefficient)."""
        e = self.max_exponent
        return e, self.terms[e]

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by y^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    def __call__(self, y):
        """Exact evaluation; y may be int or Fraction, nonzero if negative
        exponents are present."""
        acc = Fraction(0)
        for e, c in self.terms.items():
            acc += c * Fraction(y) ** e
        return acc

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = abs(c)
            body = "" if (mag == 1 and e != 0) else str(mag)
            if e == 1:
                body += "y"
            elif e != 0:
                body += f"y^{e}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def monomial(c: int, exponent: int) -> "LaurentPoly":
        return LaurentPoly({exponent: c})

    @staticmethod
    def from_intpoly(p: IntPoly) -> "LaurentPoly":
        return LaurentPoly({i: c for i, c in enumerate(p.coeffs)})


# x written in terms of y: the root relation y^2 - (x-2)y - 1 = 0 gives
# x = (y^2 + 2y - 1)/y = y + 2 - 1/y.
X_OF_Y = LaurentPoly({1: 1, 0: 2, -1: -1})


def substitute_xy(p: IntPoly) -> LaurentPoly:
    """Image of p(x) under x -> y + 2 - 1/y, as an exact Laurent polynomial.

    Exponents stay within [-deg(p), deg(p)]; evaluating the result at y = 1
    equals p(2).
    """
    acc = LaurentPoly()
    for c in reversed(p.coeffs):
        acc = acc * X_OF_Y + LaurentPoly.monomial(c, 0)
    return acc
