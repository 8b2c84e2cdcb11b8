"""Certified enclosures of spectral radii."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import networkx as nx

from .errors import IterationLimit

# enclosure endpoints are rounded outward onto this decimal grid so that they
# print as exact, finite decimal strings
GRID = Fraction(1, 10**30)


def _floor_grid(x: Fraction) -> Fraction:
    return Fraction((x / GRID).__floor__()) * GRID


def _ceil_grid(x: Fraction) -> Fraction:
    return Fraction((x / GRID).__ceil__()) * GRID


def fraction_to_decimal(x: Fraction) -> str:
    """Exact decimal string of a fraction whose denominator divides 10**k."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    digits = 0
    while (x * 10**digits).denominator != 1:
        digits += 1
        if digits > 200:
            raise ValueError(f"{x} has no finite decimal expansion")
    scaled = int(x * 10**digits)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @classmethod
    def outward(cls, lo, hi, *args) -> "Interval":
        return cls(_floor_grid(Fraction(lo)), _ceil_grid(Fraction(hi)), *args)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self):
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


@dataclass(frozen=True)
class RadiusEnclosure(Interval):
    method: str = "charpoly"


def _cw_irreducible(block: list[list[int]], tol: Fraction, max_iter: int):
    """Collatz-Wielandt bounds for an irreducible nonnegative block.

    Iterates on ``B = A + I``, which is primitive and has Perron root
    ``rho(A) + 1``. For any positive vector ``y``,
    ``min (By)_i/y_i <= rho(B) <= max (By)_i/y_i``, so the iterate can be
    rescaled and rounded freely without losing validity.
    """
    k = len(block)
    b = [[block[i][j] + (1 if i == j else 0) for j in range(k)] for i in range(k)]
    y = [1] * k
    lo, hi = Fraction(0), None
    for _ in range(max_iter):
        z = [sum(b[i][j] * y[j] for j in range(k)) for i in range(k)]
        ratios = [Fraction(z[i], y[i]) for i in range(k)]
        lo = max(lo, min(ratios))
        hi = max(ratios) if hi is None else min(hi, max(ratios))
        if hi - lo <= tol:
            return lo - 1, hi - 1
        bits = max(v.bit_length() for v in z)
        if bits > 320:
            shift = bits - 192
            z = [max(v >> shift, 1) for v in z]
        y = z
    raise IterationLimit(
        "Collatz-Wielandt iteration did not converge",
        RadiusEnclosure.outward(lo - 1, hi - 1, "collatz_wielandt"),
    )


def collatz_wielandt(rows: Sequence[Sequence[int]], tol, max_iter: int = 100_000):
    """Enclose the Perron root of a nonnegative integer matrix.

    The matrix is split into strongly connected components; its spectral
    radius is the largest radius among the diagonal blocks.
    """
    tol = Fraction(tol)
    d = len(rows)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(d))
    graph.add_edges_from((i, j) for i in range(d) for j in range(d) if i != j and rows[i][j])
    lo = hi = Fraction(0)
    for comp in nx.strongly_connected_components(graph):
        idx = sorted(comp)
        if len(idx) == 1:
            c_lo = c_hi = Fraction(rows[idx[0]][idx[0]])
        else:
            block = [[rows[i][j] for j in idx] for i in idx]
            c_lo, c_hi = _cw_irreducible(block, tol, max_iter)
        lo, hi = max(lo, c_lo), max(hi, c_hi)
    return lo, hi
