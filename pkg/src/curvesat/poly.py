"""Homogeneous polynomials in Q[x, y, z] with exact coefficients.

A degree-k slice of the ring is identified with Q^((k+1)(k+2)/2) through
the graded lexicographic monomial order with x > y > z: monomials of
equal degree are listed by decreasing x-exponent, then decreasing
y-exponent.  All matrices built here index rows and columns against
those slice bases, so every downstream computation is coordinatized the
same way.

A polynomial carries an explicit degree tag so that the zero polynomial
of each degree is a distinct, well-typed element of its slice.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import NamedTuple, Sequence, Union

from .errors import WrongShapeError
from .exactla import QMatrix

Coeff = Union[int, Fraction]


class Monomial(NamedTuple):
    ex: int
    ey: int
    ez: int

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.ex + other.ex, self.ey + other.ey,
                        self.ez + other.ez)

    def __str__(self) -> str:
        parts = []
        for name, e in (("x", self.ex), ("y", self.ey), ("z", self.ez)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def slice_dim(k: int) -> int:
    """Dimension (k+1)(k+2)/2 of the degree-k slice; 0 for negative k."""
    return (k + 1) * (k + 2) // 2 if k >= 0 else 0


@lru_cache(maxsize=None)
def monomial_basis(k: int) -> tuple[Monomial, ...]:
    """Degree-k monomials in graded lex order (x > y > z)."""
    if k < 0:
        return ()
    return tuple(Monomial(a, b, k - a - b)
                 for a in range(k, -1, -1)
                 for b in range(k - a, -1, -1))


def monomial_index(m: Monomial) -> int:
    """Position of m in monomial_basis(m.degree)."""
    n = m.ey + m.ez
    return n * (n + 1) // 2 + m.ez


@lru_cache(maxsize=None)
def shift_maps(k: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Index maps of multiplication by x, y, z from slice k to slice k+1.

    Multiplication by a variable permutes monomials into the larger
    basis, so these maps turn vector shifts into pure re-indexing.
    """
    xs, ys, zs = [], [], []
    for m in monomial_basis(k):
        n = m.ey + m.ez
        base = n * (n + 1) // 2
        xs.append(base + m.ez)
        ys.append(base + n + 1 + m.ez)
        zs.append(base + n + 1 + m.ez + 1)
    return tuple(xs), tuple(ys), tuple(zs)


class HomogeneousPoly:
    """Homogeneous polynomial with a degree tag and Fraction coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        if degree < 0:
            raise WrongShapeError("negative degree")
        self.degree = degree
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in (terms.items() if isinstance(terms, dict)
                                else terms):
                if not isinstance(mono, Monomial):
                    mono = Monomial(*mono)
                if mono.degree != degree:
                    raise WrongShapeError(
                        f"term of degree {mono.degree} in a degree-{degree} "
                        "polynomial")
                c = Fraction(coeff)
                if c:
                    prev = clean.get(mono)
                    c = c if prev is None else prev + c
                    if c:
                        clean[mono] = c
                    else:
                        del clean[mono]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "HomogeneousPoly":
        return cls(degree)

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Coeff = 1) -> "HomogeneousPoly":
        return cls(mono.degree, [(mono, coeff)])

    @classmethod
    def from_vector(cls, degree: int, coords: Sequence[Coeff]) -> "HomogeneousPoly":
        basis = monomial_basis(degree)
        if len(coords) != len(basis):
            raise WrongShapeError("coordinate vector has the wrong length")
        return cls(degree, zip(basis, coords))

    # -- basic queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def to_vector(self) -> list[Fraction]:
        vec = [Fraction(0)] * slice_dim(self.degree)
        for mono, coeff in self.terms.items():
            vec[monomial_index(mono)] = coeff
        return vec

    def int_vector(self) -> list[int]:
        """Coordinate vector for integer-coefficient polynomials."""
        vec = [0] * slice_dim(self.degree)
        for mono, coeff in self.terms.items():
            if coeff.denominator != 1:
                raise WrongShapeError("polynomial has non-integer coefficients")
            vec[monomial_index(mono)] = int(coeff)
        return vec

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(),
                      key=lambda t: monomial_index(t[0]))

    # -- arithmetic -----------------------------------------------------

    def _check_degree(self, other: "HomogeneousPoly"):
        if self.degree != other.degree:
            raise WrongShapeError(
                f"degree {self.degree} vs {other.degree} in graded addition")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_degree(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return HomogeneousPoly(self.degree, terms)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree,
                               {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def __mul__(self, other) -> "HomogeneousPoly":
        if isinstance(other, HomogeneousPoly):
            terms: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 * m2
                    terms[m] = terms.get(m, Fraction(0)) + c1 * c2
            return HomogeneousPoly(self.degree + other.degree, terms)
        return self.scale(other)

    def __rmul__(self, other) -> "HomogeneousPoly":
        return self.scale(other)

    def scale(self, c: Coeff) -> "HomogeneousPoly":
        c = Fraction(c)
        return HomogeneousPoly(self.degree,
                               {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "HomogeneousPoly":
        if n < 0:
            raise WrongShapeError("negative power")
        out = HomogeneousPoly(0, [(Monomial(0, 0, 0), 1)])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomogeneousPoly)
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    # -- calculus and evaluation ---------------------------------------

    def partial(self, var: int) -> "HomogeneousPoly":
        """d/dx, d/dy or d/dz for var 0, 1, 2."""
        terms = {}
        for mono, coeff in self.terms.items():
            e = mono[var]
            if e:
                lowered = list(mono)
                lowered[var] = e - 1
                terms[Monomial(*lowered)] = coeff * e
        return HomogeneousPoly(max(self.degree - 1, 0), terms)

    def evaluate(self, point: Sequence[Coeff]) -> Fraction:
        px, py, pz = (Fraction(v) for v in point)
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            total += coeff * px**mono.ex * py**mono.ey * pz**mono.ez
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            mtxt = str(mono)
            if mtxt == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mtxt
            else:
                body = f"{abs(coeff)}*{mtxt}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self.degree}, {str(self)!r})"


X = HomogeneousPoly(1, [(Monomial(1, 0, 0), 1)])
Y = HomogeneousPoly(1, [(Monomial(0, 1, 0), 1)])
Z = HomogeneousPoly(1, [(Monomial(0, 0, 1), 1)])


def partials(f: HomogeneousPoly) -> tuple[HomogeneousPoly, HomogeneousPoly,
                                          HomogeneousPoly]:
    return f.partial(0), f.partial(1), f.partial(2)


def primitivize(f: HomogeneousPoly) -> HomogeneousPoly:
    """Canonical integer representative of the line Q*f.

    Denominators cleared, content removed, leading (graded lex)
    coefficient positive.  Every invariant computed downstream depends
    on f only through this representative.
    """
    if not f.terms:
        return f
    den = 1
    for c in f.terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in f.terms.values():
        num = gcd(num, abs(int(c * den)))
    scale = Fraction(den, num)
    lead = min(f.terms, key=monomial_index)
    if f.terms[lead] < 0:
        scale = -scale
    return f.scale(scale)


def mult_map_matrix(g: HomogeneousPoly, k: int) -> QMatrix:
    """Matrix of multiplication by g from slice k to slice k + deg g.

    Columns follow monomial_basis(k); rows monomial_basis(k + deg g).
    """
    rows = slice_dim(k + g.degree)
    cols = []
    for mono in monomial_basis(k):
        col = [Fraction(0)] * rows
        for m2, c in g.terms.items():
            col[monomial_index(mono * m2)] = c
        cols.append(col)
    return QMatrix.from_rows(cols).transpose()


def jacobian_map_matrix(f: HomogeneousPoly, m: int) -> QMatrix:
    """Matrix of (a, b, c) -> a f_x + b f_y + c f_z on degree-m triples.

    Columns come in three blocks (the f_x block, then f_y, then f_z),
    each ordered by monomial_basis(m); rows by monomial_basis(m + d - 1).
    """
    fx, fy, fz = partials(f)
    nrows = slice_dim(m + max(f.degree - 1, 0))
    cols = []
    for g in (fx, fy, fz):
        for mono in monomial_basis(m):
            col = [Fraction(0)] * nrows
            for m2, c in g.terms.items():
                col[monomial_index(mono * m2)] = c
            cols.append(col)
    return QMatrix.from_rows(cols).transpose()


def poly_columns_int(g: HomogeneousPoly, m: int) -> list[list[int]]:
    """Integer coordinate vectors of mono*g over monomial_basis(m).

    Fast path used by the graded engines; g must have integer
    coefficients.
    """
    target = slice_dim(m + g.degree)
    for c in g.terms.values():
        if c.denominator != 1:
            raise WrongShapeError("integer coefficients required")
    gterms = [(mono, int(c)) for mono, c in g.terms.items()]
    out = []
    for mono in monomial_basis(m):
        col = [0] * target
        for m2, c in gterms:
            col[monomial_index(mono * m2)] = c
        out.append(col)
    return out
