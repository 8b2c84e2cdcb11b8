"""Rewriting cocore complexes under Dehn twists.

A twist ``t_u`` leaves every ``L_w[d]`` with ``w != u`` alone and replaces each
``L_u[d]`` by ``L_u[d + 1 - n]`` together with ``L_x[d + 1 - n + s(u,x)]`` for
every neighbor ``x`` of ``u``. The inverse twist uses ``d + n - 1`` and
``d + s(u,x) - 1`` instead. Only the components and their shifts are tracked;
the connecting morphisms are not modeled, and no cancellation ever happens.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .plumbing import PlumbingSpec
from .shift import ShiftExpr
from .word import TwistWord, repeat_word


ZERO = ShiftExpr()
ONE_MINUS_N = ShiftExpr(1, -1)
N_MINUS_ONE = ShiftExpr(-1, 1)


class Term(NamedTuple):
    """A component ``L_vertex[shift]``.

    ``trace`` lists, for every twist that created this component from its
    predecessor, the pair ``(created vertex, 1-based position in the
    expanded word)``.
    """

    vertex: str
    shift: ShiftExpr = ZERO
    trace: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class CocoreComplex:
    source: str
    terms: tuple[Term, ...]
    # number of letters applied so far; the next letter has position applied + 1
    applied: int = 0

    @classmethod
    def cocore(cls, v: str) -> "CocoreComplex":
        return cls(v, (Term(v),), 0)

    def __len__(self):
        return len(self.terms)

    def path(self, term: Term) -> str:
        """Creation path of ``term``, last vertex first, e.g. ``[2,3,3]``."""
        verts = [self.source] + [x for x, _ in term.trace]
        return "[" + ",".join(reversed(verts)) + "]"

    def components(self) -> Counter:
        """Multiset of ``(vertex, shift)`` pairs."""
        return Counter((t.vertex, t.shift) for t in self.terms)


def _replacements(spec: PlumbingSpec, u: str, sign: int) -> list[tuple[str, ShiftExpr]]:
    """Pieces replacing ``L_u[0]``, in ascending vertex order (self included)."""
    if sign > 0:
        out = [(u, ONE_MINUS_N)]
        out += [(x, ONE_MINUS_N + spec.s_expr(u, x)) for x in spec.neighbors(u)]
    else:
        out = [(u, N_MINUS_ONE)]
        out += [(x, spec.s_expr(u, x) + ShiftExpr(-1)) for x in spec.neighbors(u)]
    return sorted(out, key=lambda piece: piece[0])


def apply_twist(complex_: CocoreComplex, u: str, sign: int, spec: PlumbingSpec) -> CocoreComplex:
    spec.check_vertex(u)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    position = complex_.applied + 1
    pieces = _replacements(spec, u, sign)
    terms: list[Term] = []
    for term in complex_.terms:
        if term.vertex != u:
            terms.append(term)
            continue
        for x, inc in pieces:
            terms.append(Term(x, term.shift + inc, term.trace + ((x, position),)))
    return CocoreComplex(complex_.source, tuple(terms), position)


def apply_letters(complex_: CocoreComplex, word: TwistWord, spec: PlumbingSpec) -> CocoreComplex:
    for letter in word:
        complex_ = apply_twist(complex_, letter.vertex, letter.sign, spec)
    return complex_


def apply_word(word: TwistWord, v: str, m: int, spec: PlumbingSpec) -> CocoreComplex:
    """The complex for ``phi^m(L_v)``, starting from ``L_v[0]``."""
    spec.check_vertex(v)
    return apply_letters(CocoreComplex.cocore(v), repeat_word(word, m), spec)


def rewrite_components(word: TwistWord, v: str, m: int, spec: PlumbingSpec) -> Counter:
    """``apply_word(...).components()`` without building individual terms.

    Equal components are rewritten together, so the cost grows with the
    number of distinct ``(vertex, shift)`` pairs rather than with the number
    of components.
    """
    spec.check_vertex(v)
    current = Counter({(v, ZERO): 1})
    for letter in repeat_word(word, m):
        pieces = _replacements(spec, letter.vertex, letter.sign)
        nxt: Counter = Counter()
        for (x, shift), count in current.items():
            if x != letter.vertex:
                nxt[(x, shift)] += count
                continue
            for y, inc in pieces:
                nxt[(y, shift + inc)] += count
        current = nxt
    return current


def count_vector(complex_: CocoreComplex) -> Counter:
    return Counter(t.vertex for t in complex_.terms)


def count_matrix(word: TwistWord, m: int, spec: PlumbingSpec, workers: int | None = None):
    """Entry ``(w, v)`` counts the ``L_w`` components of ``phi^m(L_v)``.

    Columns are independent; ``workers`` > 1 computes them on a thread pool.
    """
    from .transfer import MatrixKind, TransferMatrix

    repeat_word(word, m)  # validates m
    verts = spec.vertices

    def column(v):
        counts: Counter = Counter()
        for (w, _), c in rewrite_components(word, v, m, spec).items():
            counts[w] += c
        return [counts[w] for w in verts]

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cols = list(pool.map(column, verts))
    else:
        cols = [column(v) for v in verts]
    rows = [[cols[j][i] for j in range(len(verts))] for i in range(len(verts))]
    return TransferMatrix(MatrixKind.unsigned(), verts, rows)


def weighted_length(complex_: CocoreComplex, t: float, n: int) -> float:
    """Sum of ``exp(t * shift)`` over the components, at dimension ``n``."""
    if t == 0:
        return float(len(complex_.terms))
    return math.fsum(math.exp(t * term.shift.evaluate(n)) for term in complex_.terms)


def shift_spectrum(complex_: CocoreComplex, w: str, n: int) -> Counter:
    """Multiset of evaluated shifts of the ``L_w`` components."""
    return Counter(t.shift.evaluate(n) for t in complex_.terms if t.vertex == w)

