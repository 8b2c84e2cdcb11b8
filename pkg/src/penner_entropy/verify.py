"""Randomized cross-checks between rewriting, trace paths and transfer matrices.

Every check is an exact equality (symbolic shifts, Python integers), except
the entropy comparisons, which compare certified enclosures.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .entropy import exact_entropy
from .paths import enumerate_traces, geometric_shift, trace_shifts
from .plumbing import PlumbingSpec, build_plumbing
from .transfer import MatrixKind, TransferMatrix, spectral_radius, word_matrix
from .twist import apply_word, count_matrix
from .word import TwistWord, invert_word, validate_penner

MAX_VERTICES = 7
MAX_WORD = 6
MAX_POWER = 4
DIMENSIONS = (3, 4, 5)


@dataclass(frozen=True)
class Case:
    spec: PlumbingSpec
    word: TwistWord
    m: int

    def complex(self, v: str):
        return _memo(self, ("complex", v), lambda: apply_word(self.word, v, self.m, self.spec))

    def traces(self, v: str):
        return _memo(self, ("traces", v),
                     lambda: enumerate_traces(self.word, self.m, v, self.spec))

    def trace_shifts(self, v: str):
        return _memo(self, ("shifts", v),
                     lambda: trace_shifts(self.traces(v), self.word, self.spec, self.m))


def _memo(case: Case, key, compute):
    # per-case cache shared by the checks; Case stays frozen and comparable
    store = case.__dict__.setdefault("_cache", {})
    if key not in store:
        store[key] = compute()
    return store[key]


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def random_case(rng: random.Random) -> Case:
    k = rng.randint(1, MAX_VERTICES)
    labels = [str(i) for i in range(1, k + 1)]
    rng.shuffle(labels)
    edges = [(labels[i], labels[rng.randrange(i)]) for i in range(1, k)]
    n = rng.choice(DIMENSIONS)
    overrides = [((a, b), rng.randint(1, n - 1)) for a, b in edges if rng.random() < 0.5]
    spec = build_plumbing(labels, edges, n, overrides)
    polarity = rng.choice((1, -1))
    length = rng.randint(1, MAX_WORD)
    verts = [rng.choice(spec.vertices) for _ in range(length)]
    word = TwistWord((v, polarity * spec.sigma(v)) for v in verts)
    return Case(spec, word, rng.randint(1, MAX_POWER))


def random_cases(seed: int, count: int) -> list[Case]:
    rng = random.Random(seed)
    return [random_case(rng) for _ in range(count)]


def iter_cases(seed: int, count: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_case(rng)


def _describe(case: Case) -> str:
    return (f"tree={case.spec.tree.sorted_edges()} n={case.spec.n} "
            f"word={case.word} m={case.m}")


def check_rewriting_vs_traces(case: Case) -> str | None:
    for v in case.spec.vertices:
        traces = case.traces(v)
        from_traces = [(p.terminal, s) for p, s in zip(traces, case.trace_shifts(v))]
        from_rewrite = [(t.vertex, t.shift) for t in case.complex(v).terms]
        if Counter(from_traces) != Counter(from_rewrite):
            return f"term multisets differ for L_{v}"
        if from_traces != from_rewrite:
            return f"emission order differs for L_{v}"
    return None


def check_counts_vs_matrix(case: Case, workers: int | None = None) -> str | None:
    counts = count_matrix(case.word, case.m, case.spec, workers)
    power = word_matrix(case.word, case.m, MatrixKind.unsigned(), case.spec)
    if counts.rows != power.rows:
        return "count matrix differs from the unsigned matrix power"
    return None


def check_sign_coherence(case: Case) -> str | None:
    spec, word, m = case.spec, case.word, case.m
    odd_n = spec.n if spec.n % 2 else spec.n + 1
    polarity = validate_penner(word, spec).polarity
    counts = word_matrix(word, m, MatrixKind.unsigned(), spec)
    signed = word_matrix(word, m, MatrixKind.signed(odd_n), spec)
    for v in spec.vertices:
        for w in spec.vertices:
            c = geometric_shift(spec, v, w, polarity).evaluate(odd_n)
            want = (-1) ** (c % 2) * counts.entry(w, v)
            if signed.entry(w, v) != want:
                return f"signed entry ({w},{v}) = {signed.entry(w, v)}, expected {want}"
    return None


def check_loop_shifts(case: Case) -> str | None:
    for v in case.spec.vertices:
        for p, s in zip(case.traces(v), case.trace_shifts(v)):
            if p.terminal != v:
                continue
            # a multiple of (1 - n) for every n: a + b*n with a = -b
            if s.a != -s.b:
                return f"loop trace {p.display()} has shift {s}"
    return None


def check_residues(case: Case) -> str | None:
    spec, word = case.spec, case.word
    polarity = validate_penner(word, spec).polarity
    n = spec.n
    for v in spec.vertices:
        geo = {w: geometric_shift(spec, v, w, polarity).evaluate(n) for w in spec.vertices}
        for t in case.complex(v).terms:
            if (t.shift.evaluate(n) - geo[t.vertex]) % (n - 1):
                c = geometric_shift(spec, v, t.vertex, polarity)
                return f"L_{t.vertex}[{t.shift}] in phi^m(L_{v}) not congruent to {c}"
    return None


def _relabeled(case: Case, rng: random.Random) -> tuple[PlumbingSpec, TwistWord]:
    spec = case.spec
    new = [f"v{i}" for i in range(len(spec.vertices))]
    rng.shuffle(new)
    rename = dict(zip(spec.vertices, new))
    edges = [(rename[a], rename[b]) for a, b in spec.tree.sorted_edges()]
    overrides = [((rename[a], rename[b]), spec.s(a, b)) for a, b in spec.grading.anchored]
    spec2 = build_plumbing(new, edges, spec.n, overrides)
    word2 = TwistWord((rename[x.vertex], x.sign) for x in case.word)
    return spec2, word2


def check_entropy_symmetries(case: Case, tol: float = 1e-9, seed: int = 0) -> str | None:
    spec, word = case.spec, case.word
    h = exact_entropy(word, spec, tol)
    h_inv = exact_entropy(invert_word(word), spec, tol)
    if abs(h.mid - h_inv.mid) > 2 * tol or not h.intersects(h_inv):
        return f"inverse word entropy {h_inv} differs from {h}"

    rng = random.Random(seed)
    spec2, word2 = _relabeled(case, rng)
    h_rel = exact_entropy(word2, spec2, tol)
    if abs(h.mid - h_rel.mid) > 2 * tol:
        return f"relabeled entropy {h_rel} differs from {h}"

    odd_n = spec.n if spec.n % 2 else spec.n + 1
    signed = word_matrix(word, 1, MatrixKind.signed(odd_n), spec)
    d = [rng.choice((1, -1)) for _ in spec.vertices]
    conj = TransferMatrix(signed.kind, signed.vertices,
                          [[d[i] * x * d[j] for j, x in enumerate(r)]
                           for i, r in enumerate(signed.rows)])
    r1 = spectral_radius(signed, tol)
    r2 = spectral_radius(conj, tol)
    if abs(r1.mid - r2.mid) > 2 * tol:
        return f"diagonal conjugation changed the signed radius: {r1} vs {r2}"
    return None


CHECKS = {
    "rewriting = trace paths": check_rewriting_vs_traces,
    "count matrix = unsigned power": check_counts_vs_matrix,
    "signed = sign x counts (odd n)": check_sign_coherence,
    "loop shifts in (1-n)Z": check_loop_shifts,
    "shifts = geometric shift mod (n-1)": check_residues,
    "entropy symmetries": check_entropy_symmetries,
}


def run_suite(seed: int = 0, cases: int = 200, workers: int | None = None,
              checks=None) -> list[CheckResult]:
    """Run the checks named in ``checks`` (default: all) on ``cases`` random
    cases; deterministic in ``seed``.

    ``workers`` only parallelizes count-matrix columns and never changes results.
    """
    selected = {name: CHECKS[name] for name in (checks or CHECKS)}
    results = {name: CheckResult(name) for name in selected}
    for case in iter_cases(seed, cases):
        for name, check in selected.items():
            if check is check_counts_vs_matrix:
                problem = check(case, workers)
            else:
                problem = check(case)
            if problem is None:
                results[name].passed += 1
            else:
                results[name].failures.append(f"{problem} [{_describe(case)}]")
    return list(results.values())
