import pytest

from penner_entropy import (NegativePower, Polarity, TwistWord, UnknownVertex, invert_word,
                            repeat_word, validate_penner)
from penner_entropy.word import Letter


def test_orders(phi4):
    assert str(phi4) == "[(3,+),(2,-),(1,+),(3,+)]"
    assert [str(x) for x in phi4.composition_order()] == ["(3,+)", "(1,+)", "(2,-)", "(3,+)"]
    assert TwistWord.from_composition_order(phi4.composition_order()) == phi4


def test_letter_sign_checked():
    with pytest.raises(ValueError):
        Letter("1", 0)


def test_penner_standard(spec3, phi):
    report = validate_penner(phi, spec3)
    assert report.is_penner and report.polarity is Polarity.STANDARD
    assert report.covers_all_vertices
    assert report.violations == ()


def test_penner_inverted(spec3, phi):
    report = validate_penner(invert_word(phi), spec3)
    assert report.is_penner and report.polarity is Polarity.INVERTED


def test_not_penner(spec3):
    word = TwistWord([("1", 1), ("2", 1), ("3", 1)])
    report = validate_penner(word, spec3)
    assert not report.is_penner and report.polarity is Polarity.NONE
    assert [i for i, _ in report.violations] == [1]


def test_empty_word_is_penner(spec3):
    report = validate_penner(TwistWord(), spec3)
    assert report.is_penner and not report.covers_all_vertices


def test_unknown_vertex(spec3):
    with pytest.raises(UnknownVertex):
        validate_penner(TwistWord([("7", 1)]), spec3)


def test_invert_and_repeat(phi):
    inv = invert_word(phi)
    assert str(inv) == "[(1,-),(2,+),(3,-)]"
    assert invert_word(inv) == phi
    assert len(repeat_word(phi, 3)) == 9
    assert repeat_word(phi, 0) == TwistWord()
    with pytest.raises(NegativePower):
        repeat_word(phi, -1)
