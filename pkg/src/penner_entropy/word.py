"""Dehn-twist words.

A :class:`TwistWord` stores its letters in application order: ``letters[0]``
is the first twist applied. The composition ``t_3 o t_1 o t_2^-1 o t_3`` is
therefore stored as ``[(3,+), (2,-), (1,+), (3,+)]``. Use
:meth:`TwistWord.from_composition_order` / :meth:`TwistWord.composition_order` to convert
from and to the written composition order (last-applied first).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NegativePower, UnknownVertex
from .plumbing import PlumbingSpec


@dataclass(frozen=True)
class Letter:
    vertex: str
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> "Letter":
        return Letter(self.vertex, -self.sign)

    def __str__(self):
        return f"({self.vertex},{'+' if self.sign > 0 else '-'})"


def _coerce_letter(item) -> Letter:
    if isinstance(item, Letter):
        return item
    vertex, sign = item
    if sign in ("+", "+1"):
        sign = 1
    elif sign in ("-", "-1"):
        sign = -1
    return Letter(str(vertex), int(sign))


@dataclass(frozen=True, init=False)
class TwistWord:
    letters: tuple[Letter, ...] = ()

    def __init__(self, letters: Iterable = ()):
        object.__setattr__(self, "letters", tuple(_coerce_letter(x) for x in letters))

    @classmethod
    def from_composition_order(cls, letters: Iterable) -> "TwistWord":
        return cls(list(letters)[::-1])

    def composition_order(self) -> list[Letter]:
        return list(self.letters[::-1])

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.letters) + "]"

    def vertices(self) -> set[str]:
        return {x.vertex for x in self.letters}


class Polarity(str, enum.Enum):
    STANDARD = "standard"
    INVERTED = "inverted"
    NONE = "none"


@dataclass(frozen=True)
class PennerReport:
    is_penner: bool
    polarity: Polarity
    violations: tuple[tuple[int, str], ...]
    # every vertex of the tree is twisted at least once (informational only)
    covers_all_vertices: bool


def _check_vertices(word: TwistWord, spec: PlumbingSpec) -> None:
    for i, x in enumerate(word):
        if x.vertex not in spec.tree:
            raise UnknownVertex(f"letter {i} uses unknown vertex {x.vertex!r}")


def validate_penner(word: TwistWord, spec: PlumbingSpec) -> PennerReport:
    """Check that the signs factor through the bipartition.

    Standard polarity means sign +1 on ``plus`` vertices and -1 on ``minus``
    vertices; inverted is the global opposite. When neither fits, violations
    are reported against whichever polarity fits more letters (standard on a
    tie). Indices are 0-based.
    """
    _check_vertices(word, spec)
    covers = word.vertices() >= set(spec.vertices)

    def mismatches(polarity: int):
        out = []
        for i, x in enumerate(word):
            want = polarity * spec.sigma(x.vertex)
            if x.sign != want:
                side = "plus" if spec.sigma(x.vertex) > 0 else "minus"
                out.append(
                    (i, f"vertex {x.vertex} is in the {side} class but has sign "
                        f"{'+' if x.sign > 0 else '-'}")
                )
        return out

    std = mismatches(1)
    if not std:
        return PennerReport(True, Polarity.STANDARD, (), covers)
    inv = mismatches(-1)
    if not inv:
        return PennerReport(True, Polarity.INVERTED, (), covers)
    closest = std if len(std) <= len(inv) else inv
    return PennerReport(False, Polarity.NONE, tuple(closest), covers)


def invert_word(word: TwistWord) -> TwistWord:
    return TwistWord(x.inverse() for x in reversed(word.letters))


def repeat_word(word: TwistWord, m: int) -> TwistWord:
    if m < 0:
        raise NegativePower(f"power must be >= 0, got {m}")
    return TwistWord(word.letters * m)
