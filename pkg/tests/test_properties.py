import random
from collections import Counter

from hypothesis import given, settings, strategies as st

from penner_entropy import (MatrixKind, apply_word, count_matrix, enumerate_traces,
                            exact_entropy, geometric_path, geometric_shift, spectral_radius,
                            word_matrix)
from penner_entropy.shift import ShiftExpr
from penner_entropy.verify import (CHECKS, check_counts_vs_matrix, check_entropy_symmetries,
                                   check_loop_shifts, check_residues, check_rewriting_vs_traces,
                                   check_sign_coherence, random_case, run_suite)

cases = st.integers(0, 2**32).map(lambda seed: random_case(random.Random(seed)))


@settings(max_examples=60, deadline=None)
@given(cases)
def test_rewriting_equals_traces(case):
    assert check_rewriting_vs_traces(case) is None


@settings(max_examples=60, deadline=None)
@given(cases)
def test_counts_equal_matrix_power(case):
    assert check_counts_vs_matrix(case) is None


@settings(max_examples=60, deadline=None)
@given(cases)
def test_sign_coherence(case):
    assert check_sign_coherence(case) is None


@settings(max_examples=60, deadline=None)
@given(cases)
def test_loop_shifts_and_residues(case):
    assert check_loop_shifts(case) is None
    assert check_residues(case) is None


@settings(max_examples=40, deadline=None)
@given(cases, st.integers(0, 100))
def test_entropy_symmetries(case, seed):
    assert check_entropy_symmetries(case, seed=seed) is None


@settings(max_examples=40, deadline=None)
@given(cases)
def test_deterministic(case):
    v = case.spec.vertices[0]
    assert apply_word(case.word, v, case.m, case.spec) == apply_word(case.word, v, case.m,
                                                                      case.spec)
    assert enumerate_traces(case.word, case.m, v, case.spec) == \
        enumerate_traces(case.word, case.m, v, case.spec)


@settings(max_examples=40, deadline=None)
@given(cases)
def test_count_conservation(case):
    # each letter on u replaces one L_u by deg(u) + 1 pieces
    spec = case.spec
    for v in spec.vertices:
        cx = apply_word(case.word, v, 1, spec)
        total = 1
        counts = Counter({v: 1})
        for letter in case.word:
            k = counts[letter.vertex]
            total += k * spec.tree.degree(letter.vertex)
            for x in spec.neighbors(letter.vertex):
                counts[x] += k
        assert len(cx) == total


@settings(max_examples=40, deadline=None)
@given(cases)
def test_factorization(case):
    spec, word = case.spec, case.word
    for kind in (MatrixKind.unsigned(), MatrixKind.signed(5), MatrixKind.weighted(0.0, 5)):
        whole = word_matrix(word, 1, kind, spec)
        split = len(word) // 2
        left = word_matrix(type(word)(word.letters[split:]), 1, kind, spec)
        right = word_matrix(type(word)(word.letters[:split]), 1, kind, spec)
        assert left @ right == whole


@settings(max_examples=40, deadline=None)
@given(cases)
def test_entropy_independent_of_n(case):
    # anchored degrees stay valid for any larger n
    h = exact_entropy(case.word, case.spec)
    for n in (case.spec.n + 1, case.spec.n + 2, case.spec.n + 5):
        assert exact_entropy(case.word, case.spec.with_n(n)) == h


@settings(max_examples=40, deadline=None)
@given(cases)
def test_signed_radius_bounded_by_unsigned(case):
    spec, word = case.spec, case.word
    unsigned = spectral_radius(word_matrix(word, 1, MatrixKind.unsigned(), spec))
    for n in (3, 4):
        signed = spectral_radius(word_matrix(word, 1, MatrixKind.signed(n), spec))
        assert signed.lo <= unsigned.hi
        if n % 2:
            assert signed.intersects(unsigned)


def test_suite_is_deterministic_and_green():
    first = run_suite(seed=11, cases=15)
    assert [(r.name, r.passed, r.failures) for r in first] == \
        [(r.name, r.passed, r.failures) for r in run_suite(seed=11, cases=15, workers=3)]
    assert all(r.ok and r.passed == 15 for r in first)
    assert len(first) == len(CHECKS)


def test_count_matrix_workers_agree():
    case = random_case(random.Random(5))
    assert count_matrix(case.word, 3, case.spec, workers=4) == count_matrix(case.word, 3,
                                                                             case.spec)


@settings(max_examples=40, deadline=None)
@given(cases)
def test_trace_count_is_column_sum(case):
    counts = count_matrix(case.word, case.m, case.spec)
    for j, v in enumerate(case.spec.vertices):
        column = sum(row[j] for row in counts.rows)
        assert len(enumerate_traces(case.word, case.m, v, case.spec)) == column


@settings(max_examples=40, deadline=None)
@given(cases)
def test_geometric_paths(case):
    spec = case.spec
    for v in spec.vertices:
        assert geometric_shift(spec, v, v) == ShiftExpr()
        for w in spec.vertices:
            path = geometric_path(spec, v, w)
            assert path[::-1] == geometric_path(spec, w, v)
            assert len(set(path)) == len(path)
            assert all(spec.tree.adjacent(a, b) for a, b in zip(path, path[1:]))
