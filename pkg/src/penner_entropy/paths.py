"""Trace paths: which twists created each component of ``phi^m(L_v)``.

A component is created from ``L_v`` by a chain of twists. Its trace records
the visited vertices ``w_1 = v, w_2, ..., w_k`` in creation order and the
positions ``j_1 < ... < j_{k-1}`` (1-based, in the expanded word, application
order) of the twists that produced each step. The chain is determined by:

* ``j_1`` is the first occurrence of ``v``;
* after a step lands on ``w_{i+1}`` at position ``j_i``, the next step happens
  at the first later occurrence of ``w_{i+1}``, and ``w_{i+2}`` is either
  ``w_{i+1}`` (a constant loop) or one of its neighbors;
* the chain stops when its last vertex is never twisted again.

Written the other way round (last vertex first) this is the usual
``[w_k, ..., w_1]`` display. The literal textbook formulation of the stopping
rule tests the second-to-last vertex instead of the last one and would admit
extra paths such as ``[3,2,3]`` for ``J = [3,1,2,3]``; the rule above is the
one consistent with rewriting.

Everything here is computed path by path and serves as an independent check
on :mod:`penner_entropy.twist`.
"""
from __future__ import annotations

import operator
from bisect import bisect_right
from collections import defaultdict
from dataclasses import dataclass

from .errors import InconsistentTrace
from .plumbing import PlumbingSpec, geometric_path
from .shift import ShiftExpr
from .word import Polarity, TwistWord, repeat_word


@dataclass(frozen=True)
class TracePath:
    vertices: tuple[str, ...]
    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != len(self.vertices) - 1:
            raise InconsistentTrace("a path of k vertices needs k-1 positions")
        if not all(map(operator.lt, self.indices, self.indices[1:])):
            raise InconsistentTrace("positions must be strictly increasing")

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def terminal(self) -> str:
        return self.vertices[-1]

    def display(self) -> str:
        """Last-created vertex first, e.g. ``[2,3,2,3]``."""
        return "[" + ",".join(self.vertices[::-1]) + "]"

    def __str__(self):
        return self.display()


def enumerate_traces(word: TwistWord, m: int, v: str, spec: PlumbingSpec) -> list[TracePath]:
    """All trace paths of ``phi^m(L_v)``.

    Sorted by creation-order vertex sequence, which is also the order in which
    rewriting emits the corresponding components.
    """
    spec.check_vertex(v)
    letters = repeat_word(word, m).letters
    occurrences: dict[str, list[int]] = defaultdict(list)
    for pos, letter in enumerate(letters, start=1):
        occurrences[letter.vertex].append(pos)

    def next_twist(x: str, after: int):
        occ = occurrences.get(x, ())
        i = bisect_right(occ, after)
        return occ[i] if i < len(occ) else None

    found: list[TracePath] = []
    stack = [((v,), ())]
    while stack:
        verts, idx = stack.pop()
        last = verts[-1]
        j = next_twist(last, idx[-1] if idx else 0)
        if j is None:
            found.append(TracePath(verts, idx))
            continue
        for x in (last,) + spec.neighbors(last):
            stack.append((verts + (x,), idx + (j,)))
    found.sort(key=lambda p: p.vertices)
    return found


def _step_shift(spec: PlumbingSpec, a: str, b: str, sign: int) -> ShiftExpr:
    if a == b:
        return ShiftExpr(1, -1) if sign > 0 else ShiftExpr(-1, 1)
    s = spec.s_expr(a, b)
    return s + ShiftExpr(1, -1) if sign > 0 else s + ShiftExpr(-1, 0)


def _trace_shift(trace: TracePath, letters, spec: PlumbingSpec, cache=None) -> ShiftExpr:
    # cache maps (position, a, b) to the integer pair of an already validated step
    cache = {} if cache is None else cache
    a_sum = b_sum = 0
    verts = trace.vertices
    for key in zip(trace.indices, verts, verts[1:]):
        step = cache.get(key)
        if step is None:
            step = cache[key] = _validated_step(key, letters, spec)
        a_sum += step[0]
        b_sum += step[1]
    return ShiftExpr(a_sum, b_sum)


def _validated_step(key, letters, spec: PlumbingSpec) -> tuple[int, int]:
    pos, a, b = key
    if not 1 <= pos <= len(letters):
        raise InconsistentTrace(f"position {pos} outside the word")
    letter = letters[pos - 1]
    if letter.vertex != a:
        raise InconsistentTrace(f"position {pos} twists {letter.vertex}, but the trace is at {a}")
    if a != b and not spec.tree.adjacent(a, b):
        raise InconsistentTrace(f"{a} -> {b} is neither a loop nor an edge")
    shift = _step_shift(spec, a, b, letter.sign)
    return shift.a, shift.b


def shift_of_trace(trace: TracePath, word: TwistWord, spec: PlumbingSpec, m: int = 1) -> ShiftExpr:
    """Total shift accumulated along ``trace``; ``word`` is expanded to ``m`` copies."""
    return _trace_shift(trace, repeat_word(word, m).letters, spec)


def trace_shifts(traces, word: TwistWord, spec: PlumbingSpec, m: int = 1) -> list[ShiftExpr]:
    """:func:`shift_of_trace` for many traces, expanding the word once."""
    letters = repeat_word(word, m).letters
    cache: dict = {}
    return [_trace_shift(p, letters, spec, cache) for p in traces]


def geometric_shift(
    spec: PlumbingSpec, v: str, w: str, polarity: Polarity = Polarity.STANDARD
) -> ShiftExpr:
    """Shift picked up along the shortest tree path from ``v`` to ``w``.

    Each step ``a -> b`` is twisted with the Penner sign of ``a`` (negated for
    inverted polarity). Every ``L_w`` component of ``phi^m(L_v)`` has a shift
    congruent to this value modulo ``n - 1``.
    """
    flip = -1 if polarity == Polarity.INVERTED else 1
    path = geometric_path(spec, v, w)
    total = ShiftExpr()
    for a, b in zip(path, path[1:]):
        total = total + _step_shift(spec, a, b, flip * spec.sigma(a))
    return total
