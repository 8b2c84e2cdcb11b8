"""Transfer matrices of twist words.

Rows and columns are indexed by the vertices in lexicographic order; column
``v`` of a matrix is the image of ``L_v``. Three kinds exist:

``unsigned``
    counts of components; equals the count matrix of the rewriting.
``signed(n)``
    the action on the classes ``[L_v]``, using ``[X[k]] = (-1)^k [X]``.
``weighted(t, n)``
    entry sums of ``exp(t * shift)``, kept symbolically as a multiset of
    shifts and evaluated only on request.

A word multiplies later-applied letters on the left.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import DimensionRequired, IterationLimit, NegativePower, WeightedUnsupported
from .plumbing import PlumbingSpec
from .polynomial import IntPolynomial, char_poly as _char_poly
from .polynomial import largest_real_root, max_root_modulus
from .radius import RadiusEnclosure, collatz_wielandt
from .shift import ShiftExpr
from .word import TwistWord

CHARPOLY_MAX_SIZE = 12


@dataclass(frozen=True)
class MatrixKind:
    name: str
    n: int | None = None
    t: float | None = None

    @classmethod
    def unsigned(cls) -> "MatrixKind":
        return cls("unsigned")

    @classmethod
    def signed(cls, n: int) -> "MatrixKind":
        return cls("signed", n=n)

    @classmethod
    def weighted(cls, t: float, n: int) -> "MatrixKind":
        return cls("weighted", n=n, t=t)

    def __str__(self):
        if self.name == "signed":
            return f"signed(n={self.n})"
        if self.name == "weighted":
            return f"weighted(t={self.t}, n={self.n})"
        return self.name


@dataclass(frozen=True)
class WeightSum:
    """A formal sum ``sum count * exp(t * shift)`` keyed by symbolic shift."""

    terms: Mapping[ShiftExpr, int]

    def __init__(self, terms=()):
        counts = Counter(dict(terms) if isinstance(terms, Mapping) else terms)
        object.__setattr__(
            self, "terms", MappingProxyType({k: v for k, v in sorted(counts.items()) if v})
        )

    @classmethod
    def single(cls, shift: ShiftExpr) -> "WeightSum":
        return cls({shift: 1})

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        out = Counter(self.terms)
        out.update(other.terms)
        return WeightSum(out)

    __radd__ = __add__

    def __mul__(self, other: "WeightSum") -> "WeightSum":
        out: Counter = Counter()
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                out[s1 + s2] += c1 * c2
        return WeightSum(out)

    def __eq__(self, other):
        if isinstance(other, WeightSum):
            return dict(self.terms) == dict(other.terms)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def count(self) -> int:
        return sum(self.terms.values())

    def evaluate(self, t: float, n: int):
        """Exact integer at ``t == 0``; otherwise a ``Fraction`` of float exps."""
        if t == 0:
            return self.count()
        return sum(
            (c * Fraction(math.exp(t * s.evaluate(n))) for s, c in self.terms.items()),
            Fraction(0),
        )


WEIGHT_ZERO = WeightSum()
WEIGHT_ONE = WeightSum.single(ShiftExpr())


@dataclass(frozen=True)
class TransferMatrix:
    kind: MatrixKind
    vertices: tuple[str, ...]
    rows: tuple[tuple, ...]

    def __init__(self, kind: MatrixKind, vertices: Sequence[str], rows):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def entry(self, w: str, v: str):
        return self.rows[self.vertices.index(w)][self.vertices.index(v)]

    def _zero(self):
        return WEIGHT_ZERO if self.kind.name == "weighted" else 0

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        if self.kind != other.kind or self.vertices != other.vertices:
            raise ValueError("cannot multiply matrices of different kinds or shapes")
        d = self.size
        cols = list(zip(*other.rows))
        zero = self._zero()
        rows = [[sum((a * b for a, b in zip(self.rows[i], cols[j])), zero) for j in range(d)]
                for i in range(d)]
        return TransferMatrix(self.kind, self.vertices, rows)

    def integer_rows(self) -> list[list[int]]:
        """Integer entries; weighted matrices must be at ``t = 0``."""
        if self.kind.name == "weighted":
            if self.kind.t != 0:
                raise WeightedUnsupported("weighted entries are integers only at t = 0")
            return [[e.count() for e in r] for r in self.rows]
        return [list(r) for r in self.rows]

    def evaluated(self) -> list[list]:
        if self.kind.name != "weighted":
            return [list(r) for r in self.rows]
        return [[e.evaluate(self.kind.t, self.kind.n) for e in r] for r in self.rows]

    def total(self):
        return sum(sum(r) for r in self.evaluated())


def identity(kind: MatrixKind, vertices: Sequence[str]) -> TransferMatrix:
    one, zero = (WEIGHT_ONE, WEIGHT_ZERO) if kind.name == "weighted" else (1, 0)
    d = len(vertices)
    return TransferMatrix(kind, vertices, [[one if i == j else zero for j in range(d)]
                                           for i in range(d)])


def _column_shifts(u: str, sign: int, spec: PlumbingSpec) -> list[tuple[str, ShiftExpr]]:
    """Shifts of the pieces of ``t_u^sign(L_u)``, self piece first."""
    if sign > 0:
        out = [(u, ShiftExpr(1, -1))]
        out += [(x, spec.s_expr(u, x) + ShiftExpr(1, -1)) for x in spec.neighbors(u)]
    else:
        out = [(u, ShiftExpr(-1, 1))]
        out += [(x, spec.s_expr(u, x) + ShiftExpr(-1, 0)) for x in spec.neighbors(u)]
    return out


def elementary_matrix(u: str, sign: int, kind: MatrixKind, spec: PlumbingSpec) -> TransferMatrix:
    spec.check_vertex(u)
    if kind.name in ("signed", "weighted") and kind.n is None:
        raise DimensionRequired(f"{kind.name} matrices need a concrete dimension n")
    m = identity(kind, spec.vertices)
    rows = [list(r) for r in m.rows]
    col = spec.index(u)
    for x, shift in _column_shifts(u, sign, spec):
        i = spec.index(x)
        if kind.name == "unsigned":
            rows[i][col] = 1
        elif kind.name == "signed":
            rows[i][col] = -1 if shift.evaluate(kind.n) % 2 else 1
        else:
            rows[i][col] = WeightSum.single(shift)
    return TransferMatrix(kind, spec.vertices, rows)


def matrix_power(matrix: TransferMatrix, m: int) -> TransferMatrix:
    """Exact ``matrix**m`` by repeated squaring."""
    if m < 0:
        raise NegativePower(f"power must be >= 0, got {m}")
    result = identity(matrix.kind, matrix.vertices)
    base = matrix
    while m:
        if m & 1:
            result = base @ result
        m >>= 1
        if m:
            base = base @ base
    return result


def word_matrix(word: TwistWord, m: int, kind: MatrixKind, spec: PlumbingSpec) -> TransferMatrix:
    if m < 0:
        raise NegativePower(f"power must be >= 0, got {m}")
    product = identity(kind, spec.vertices)
    for letter in word:
        product = elementary_matrix(letter.vertex, letter.sign, kind, spec) @ product
    return matrix_power(product, m)


def char_poly(matrix: TransferMatrix) -> IntPolynomial:
    if matrix.kind.name == "weighted":
        raise WeightedUnsupported("characteristic polynomials need integer entries")
    return _char_poly(matrix.rows)


def _rational_to_integer_rows(rows) -> tuple[list[list[int]], int]:
    den = 1
    for r in rows:
        for x in r:
            den = math.lcm(den, Fraction(x).denominator)
    return [[int(Fraction(x) * den) for x in r] for r in rows], den


def spectral_radius(matrix: TransferMatrix, tol=1e-9, method: str | None = None) -> RadiusEnclosure:
    """Certified enclosure of the largest eigenvalue modulus.

    ``method`` is ``"charpoly"`` or ``"collatz_wielandt"``. By default
    nonnegative matrices up to ``CHARPOLY_MAX_SIZE`` vertices use the
    characteristic polynomial with Sturm bisection, larger ones use
    Collatz-Wielandt iteration, signed matrices always use the characteristic
    polynomial (Schur-Cohn bisection on the root modulus), and weighted
    matrices always use Collatz-Wielandt on their evaluated entries.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    inner = tol / 2  # leave room for outward rounding
    kind = matrix.kind.name
    if method is None:
        if kind == "weighted":
            method = "collatz_wielandt"
        elif kind == "signed" or matrix.size <= CHARPOLY_MAX_SIZE:
            method = "charpoly"
        else:
            method = "collatz_wielandt"

    if method == "charpoly":
        poly = char_poly(matrix)
        if kind == "unsigned":
            # Perron-Frobenius: the radius is itself a (real, nonnegative) root
            lo, hi = largest_real_root(poly, inner)
            lo = max(lo, Fraction(0))
        else:
            lo, hi = max_root_modulus(poly, inner)
        if hi - lo > inner:
            raise IterationLimit(
                "root isolation did not reach the tolerance",
                RadiusEnclosure.outward(lo, hi, method),
            )
        return RadiusEnclosure.outward(lo, hi, method)

    if method == "collatz_wielandt":
        if kind == "signed":
            raise ValueError("Collatz-Wielandt bounds need a nonnegative matrix")
        if kind == "weighted" and matrix.kind.t != 0:
            int_rows, den = _rational_to_integer_rows(matrix.evaluated())
        else:
            int_rows, den = matrix.integer_rows(), 1
        try:
            lo, hi = collatz_wielandt(int_rows, inner * den)
        except IterationLimit as exc:
            enc = exc.enclosure
            raise IterationLimit(
                str(exc), RadiusEnclosure.outward(enc.lo / den, enc.hi / den, method)
            ) from None
        return RadiusEnclosure.outward(lo / den, hi / den, method)

    raise ValueError(f"unknown method {method!r}")
