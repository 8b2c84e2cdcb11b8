import math
from fractions import Fraction

import sympy
import pytest

from penner_entropy import (NotPennerType, TwistWord, empirical_entropy_sequence,
                            entropy_report, exact_entropy, invert_word, log_interval)
from penner_entropy.entropy import NOTE_NON_PENNER, NOTE_TOPOLOGICAL, NOTE_WEIGHTED
from penner_entropy.radius import Interval

from conftest import a3

LOG_2_PLUS_SQRT3 = Fraction(str(sympy.N(sympy.log(2 + sympy.sqrt(3)), 40)))


def test_exact_entropy_of_phi(phi):
    for n in (3, 4, 5, 6):
        h = exact_entropy(phi, a3(n), 1e-9)
        assert h.contains(LOG_2_PLUS_SQRT3)
        assert h.width <= Fraction(1e-9)
        assert h == exact_entropy(phi, a3(3), 1e-9)


def test_inverse_has_same_entropy(spec3, phi4):
    h = exact_entropy(phi4, spec3)
    h_inv = exact_entropy(invert_word(phi4), spec3)
    assert abs(h.mid - h_inv.mid) <= Fraction(2e-9)


def test_trivial_words(spec3):
    assert exact_entropy(TwistWord(), spec3) == Interval(Fraction(0), Fraction(0))
    for v in spec3.vertices:
        for sign in (1, -1):
            assert exact_entropy(TwistWord([(v, sign)]), spec3) == Interval(Fraction(0),
                                                                             Fraction(0))


def test_non_penner_needs_override(spec3):
    word = TwistWord([("1", 1), ("2", 1)])
    with pytest.raises(NotPennerType):
        exact_entropy(word, spec3)
    with pytest.raises(NotPennerType):
        entropy_report(spec3, word)
    report = entropy_report(spec3, word, m_max=3, allow_non_penner=True)
    assert report.notes == (NOTE_NON_PENNER,)


def test_empirical_sequence(spec3, phi):
    seq = empirical_entropy_sequence(phi, spec3, 100)
    assert seq[0] == (1, math.log(11))
    assert abs(seq[-1][1] - float(LOG_2_PLUS_SQRT3)) <= 0.05
    # gap bound from submultiplicativity
    for m, value in seq:
        assert abs(value - float(LOG_2_PLUS_SQRT3)) <= math.log(11) / m + 1e-9
    assert empirical_entropy_sequence(TwistWord(), spec3, 2) == [(1, math.log(3)),
                                                                   (2, math.log(3) / 2)]
    with pytest.raises(ValueError):
        empirical_entropy_sequence(phi, spec3, 0)


def test_report(spec3, phi):
    report = entropy_report(spec3, phi, m_max=10, t_values=[0.0, 0.3])
    assert report.exact.contains(LOG_2_PLUS_SQRT3)
    assert report.exact.lo >= 0
    assert (report.odd_n, report.even_n) == (3, 4)
    assert report.signed_odd_radius.contains(Fraction(2) + Fraction(math.sqrt(3)))
    assert report.signed_even_radius.contains(1)
    assert report.signed_even_radius.hi < report.radius.lo
    assert NOTE_TOPOLOGICAL in report.notes and NOTE_WEIGHTED in report.notes
    t0 = report.t_weighted[0][1]
    assert abs(t0.mid - report.exact.mid) <= Fraction(1e-9)
    assert len(report.empirical) == 10


def test_report_even_spec(phi):
    report = entropy_report(a3(4), phi, m_max=2)
    assert (report.odd_n, report.even_n) == (5, 4)


def test_empty_word_report(spec3):
    report = entropy_report(spec3, TwistWord(), m_max=2)
    assert report.exact == Interval(Fraction(0), Fraction(0))
    assert report.signed_odd_radius.contains(1) and report.signed_even_radius.contains(1)


def test_log_interval():
    enc = log_interval(Interval(Fraction(2), Fraction(3)))
    log2 = Fraction(str(sympy.N(sympy.log(2), 40)))
    log3 = Fraction(str(sympy.N(sympy.log(3), 40)))
    assert enc.lo <= log2 - Fraction(1, 10**35) and enc.hi >= log3 + Fraction(1, 10**35)
    with pytest.raises(ValueError):
        log_interval(Interval(Fraction(0), Fraction(1)))
