"""Exact integer polynomials: characteristic polynomials and root bounds.

All arithmetic is over ``int`` and ``Fraction``; nothing here touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


@dataclass(frozen=True)
class IntPolynomial:
    """Integer coefficients in ascending degree order."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int]):
        coeffs = [int(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs) or (0,))

    @property
    def degree(self) -> int:
        return -1 if self.coefficients == (0,) else len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __str__(self):
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if k == 1 else f"x^{k}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def char_poly(rows: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(x*I - A)`` by the Faddeev-LeVerrier recurrence.

    The divisions by ``k`` are exact over the integers, so every intermediate
    stays integral.
    """
    d = len(rows)
    a = [list(map(int, r)) for r in rows]
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    m = [[0] * d for _ in range(d)]
    for k in range(1, d + 1):
        c_prev = coeffs[d - k + 1]
        # M_k = A M_{k-1} + c_{d-k+1} I
        m = [
            [sum(a[i][t] * m[t][j] for t in range(d)) + (c_prev if i == j else 0)
             for j in range(d)]
            for i in range(d)
        ]
        trace = sum(a[i][t] * m[t][i] for i in range(d) for t in range(d))
        q, r = divmod(-trace, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[d - k] = q
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# helpers on Fraction coefficient lists (ascending)


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _divmod(num: list, den: list) -> tuple[list, list]:
    num = [Fraction(c) for c in num]
    den = _trim([Fraction(c) for c in den])
    if len(num) < len(den):
        return [Fraction(0)], _trim(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        coef = num[k + len(den) - 1] / lead
        q[k] = coef
        if coef:
            for i, c in enumerate(den):
                num[k + i] -= coef * c
    return _trim(q), _trim(num[: len(den) - 1] or [Fraction(0)])


def _derivative(p: list) -> list:
    return _trim([i * c for i, c in enumerate(p)][1:] or [0])


def _is_zero(p: list) -> bool:
    return all(c == 0 for c in p)


def _gcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while not _is_zero(b):
        a, b = b, _divmod(a, b)[1]
    return a


def squarefree_part(poly: IntPolynomial) -> list:
    p = [Fraction(c) for c in poly.coefficients]
    g = _gcd(p, _derivative(p))
    if len(g) == 1:
        return p
    return _divmod(p, g)[0]


def sturm_sequence(p: list) -> list[list[int]]:
    """Sturm chain of ``p``; members are scaled by positive constants to
    coprime integers, which leaves every sign count unchanged."""
    seq = [_int_poly(p), _int_poly(_derivative(p))]
    while not _is_zero(seq[-1]) and len(seq[-1]) > 1:
        r = _divmod(seq[-2], seq[-1])[1]
        if _is_zero(r):
            break
        seq.append(_int_poly([-c for c in r]))
    return seq


def _int_poly(p: list) -> list[int]:
    """Positive multiple of ``p`` with coprime integer coefficients."""
    return _primitive([Fraction(c) for c in p])


def _eval_sign(p: list[int], num: int, den: int) -> int:
    """Sign of ``p(num/den)`` for ``den > 0``, computed over the integers."""
    d = len(p) - 1
    acc = 0
    scale = 1
    for k in range(d, -1, -1):
        acc = acc * num + p[k] * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def _sign_changes(seq: list[list], x) -> int:
    x = Fraction(x)
    signs = [v for v in (_eval_sign(p, x.numerator, x.denominator) for p in seq) if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[list], lo, hi) -> int:
    """Distinct real roots in ``(lo, hi]`` of the square-free head of ``seq``."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(poly: IntPolynomial) -> Fraction:
    """Power of two strictly above every root modulus (Cauchy bound)."""
    c = poly.coefficients
    lead = abs(c[-1])
    cauchy = 1 + max((Fraction(abs(x), lead) for x in c[:-1]), default=Fraction(0))
    bound = Fraction(1)
    while bound <= cauchy:
        bound *= 2
    return bound


def largest_real_root(poly: IntPolynomial, tol: Fraction, max_steps: int = 10_000):
    """Enclose the largest real root of ``poly`` as ``(lo, hi)``.

    Bisection on Sturm counts. Returns ``None`` when there is no real root.
    ``lo == hi`` means the root was hit exactly.
    """
    if poly.degree < 1:
        return None
    seq = sturm_sequence(squarefree_part(poly))
    p = seq[0]
    hi = root_bound(poly)
    lo = -hi
    if count_roots(seq, lo, hi) == 0:
        return None
    for _ in range(max_steps):
        if _eval_sign(p, hi.numerator, hi.denominator) == 0:
            return hi, hi
        if hi - lo <= tol:
            return lo, hi
        mid = (lo + hi) / 2
        if count_roots(seq, mid, hi) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _primitive(coeffs) -> list[int]:
    """Positive multiple of ``coeffs`` with coprime integer entries."""
    den = 1
    for c in coeffs:
        if not isinstance(c, int):
            den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs] if den > 1 else [int(c) for c in coeffs]
    g = gcd(*ints)
    return [c // g for c in ints] if g > 1 else ints


def schur_stable(coeffs: Sequence) -> bool:
    """True iff every root lies strictly inside the unit circle.

    Schur-Cohn reduction: with ``p*`` the reversed polynomial, ``p`` is stable
    iff ``|p(0)| < |lead|`` and ``(lead*p - p(0)*p*) / x`` is stable.
    """
    p = _primitive(_trim(list(coeffs)))
    while len(p) > 1:
        a0, ad = p[0], p[-1]
        if abs(a0) >= abs(ad):
            return False
        d = len(p) - 1
        p = _primitive(_trim([ad * p[k] - a0 * p[d - k] for k in range(1, d + 1)]))
    return p[0] != 0


def roots_within(poly: IntPolynomial, r: Fraction) -> bool:
    """All roots satisfy ``|z| < r`` (``r > 0``)."""
    r = Fraction(r)
    num, den = r.numerator, r.denominator
    d = len(poly.coefficients) - 1
    # p(r z) scaled by den**d stays integral
    return schur_stable([c * num**k * den ** (d - k) for k, c in enumerate(poly.coefficients)])


def max_root_modulus(poly: IntPolynomial, tol: Fraction, max_steps: int = 10_000):
    """Enclose ``max |root|`` as ``(lo, hi)`` by bisection on ``roots_within``."""
    if poly.degree < 1:
        return Fraction(0), Fraction(0)
    lo, hi = Fraction(0), root_bound(poly)
    # the largest real root magnitude is a valid lower bound
    for q in (poly, IntPolynomial([c * (-1) ** k for k, c in enumerate(poly.coefficients)])):
        enc = largest_real_root(q, tol)
        if enc is not None and enc[0] > lo:
            lo = min(enc[0], hi)
    for _ in range(max_steps):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if roots_within(poly, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi
