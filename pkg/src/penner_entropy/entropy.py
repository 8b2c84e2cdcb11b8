"""Categorical entropy of Penner-type twist words.

For a Penner-type word the entropy is the growth rate of the total number of
components of ``phi^m(L_v)`` over all cocores, which equals the natural log of
the spectral radius of the unsigned transfer matrix. The unsigned matrix does
not depend on the dimension ``n``, and neither does the entropy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational

from .errors import NotPennerType
from .plumbing import PlumbingSpec
from .radius import Interval, RadiusEnclosure
from .transfer import MatrixKind, identity, spectral_radius, word_matrix
from .word import PennerReport, TwistWord, validate_penner

DEFAULT_M_MAX = 30
DEFAULT_TOL = 1e-9

# private context so the working precision never leaks into mpmath.iv
_iv = MPIntervalContext()
_iv.prec = 160

NOTE_TOPOLOGICAL = (
    "h_cat is a lower bound for the topological entropy of phi: h_cat <= h_top"
)
NOTE_CATEGORIES = (
    "compact and wrapped Fukaya categories give the same categorical entropy"
)
NOTE_NON_PENNER = (
    "word is not of Penner type: log spectral radius is only a heuristic upper route"
)
NOTE_WEIGHTED = (
    "EXPLORATORY: t-weighted values are growth rates of len_t of the rewritten "
    "complexes, not a claimed value of h_t"
)


def _bounds(x) -> tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    return Fraction(*to_rational(lo)), Fraction(*to_rational(hi))


def log_interval(enc: Interval) -> Interval:
    """Rigorous natural-log enclosure of a positive interval."""
    if enc.lo == enc.hi == 1:
        return Interval(Fraction(0), Fraction(0))
    if enc.lo <= 0:
        raise ValueError("log enclosure needs a positive lower endpoint")
    lo = _iv.log(_iv.mpf(enc.lo.numerator) / _iv.mpf(enc.lo.denominator))
    hi = _iv.log(_iv.mpf(enc.hi.numerator) / _iv.mpf(enc.hi.denominator))
    return Interval.outward(_bounds(lo)[0], _bounds(hi)[1])


def _log_radius(matrix, tol: float) -> tuple[RadiusEnclosure, Interval]:
    target = Fraction(tol)
    radius_tol = target
    for _ in range(60):
        rad = spectral_radius(matrix, radius_tol)
        logged = log_interval(rad)
        if logged.width <= target:
            return rad, logged
        radius_tol /= 4
    return rad, logged


def empirical_entropy_sequence(word: TwistWord, spec: PlumbingSpec, m_max: int) -> list[tuple[int, float]]:
    """``(m, log(sum of count_matrix entries) / m)`` for ``m = 1..m_max``."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    step = word_matrix(word, 1, MatrixKind.unsigned(), spec)
    power = identity(step.kind, step.vertices)
    out = []
    for m in range(1, m_max + 1):
        power = step @ power
        out.append((m, math.log(power.total()) / m))
    return out


def exact_entropy(word: TwistWord, spec: PlumbingSpec, tol: float = DEFAULT_TOL,
                  allow_non_penner: bool = False) -> Interval:
    """Enclosure of ``log rho`` of the unsigned word matrix, width at most ``tol``."""
    if not allow_non_penner and not validate_penner(word, spec).is_penner:
        raise NotPennerType("word is not of Penner type; pass allow_non_penner to override")
    return _log_radius(word_matrix(word, 1, MatrixKind.unsigned(), spec), tol)[1]


def representative_dimensions(n: int) -> tuple[int, int]:
    """An odd and an even dimension, each ``n`` or ``n + 1``."""
    return (n, n + 1) if n % 2 else (n + 1, n)


@dataclass(frozen=True)
class EntropyReport:
    word: TwistWord
    penner: PennerReport
    empirical: tuple[tuple[int, float], ...]
    radius: RadiusEnclosure
    exact: Interval
    odd_n: int
    even_n: int
    signed_odd_radius: RadiusEnclosure
    signed_even_radius: RadiusEnclosure
    notes: tuple[str, ...] = ()
    t_weighted: tuple[tuple[float, Interval], ...] = field(default=())


def entropy_report(spec: PlumbingSpec, word: TwistWord, m_max: int = DEFAULT_M_MAX,
                   tol: float = DEFAULT_TOL, t_values=(), allow_non_penner: bool = False
                   ) -> EntropyReport:
    penner = validate_penner(word, spec)
    if not penner.is_penner and not allow_non_penner:
        raise NotPennerType("word is not of Penner type; pass allow_non_penner to override")
    radius, exact = _log_radius(word_matrix(word, 1, MatrixKind.unsigned(), spec), tol)

    odd_n, even_n = representative_dimensions(spec.n)
    signed_odd = spectral_radius(word_matrix(word, 1, MatrixKind.signed(odd_n), spec), tol)
    signed_even = spectral_radius(word_matrix(word, 1, MatrixKind.signed(even_n), spec), tol)

    notes = []
    if penner.is_penner:
        notes += [NOTE_TOPOLOGICAL, NOTE_CATEGORIES]
    else:
        notes.append(NOTE_NON_PENNER)

    weighted = []
    for t in t_values:
        matrix = word_matrix(word, 1, MatrixKind.weighted(float(t), spec.n), spec)
        weighted.append((float(t), _log_radius(matrix, tol)[1]))
    if weighted:
        notes.append(NOTE_WEIGHTED)

    return EntropyReport(
        word=word,
        penner=penner,
        empirical=tuple(empirical_entropy_sequence(word, spec, m_max)),
        radius=radius,
        exact=exact,
        odd_n=odd_n,
        even_n=even_n,
        signed_odd_radius=signed_odd,
        signed_even_radius=signed_even,
        notes=tuple(notes),
        t_weighted=tuple(weighted),
    )
