"""Command line interface.

Exit codes: 0 success, 1 domain error (invalid tree, grading, word, ...),
2 usage error (bad arguments, unreadable spec file).
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import io
from .entropy import DEFAULT_M_MAX, DEFAULT_TOL, entropy_report
from .errors import DimensionTooSmall, DomainError
from .paths import enumerate_traces, trace_shifts
from .transfer import MatrixKind, word_matrix
from .twist import apply_word
from .verify import run_suite
from .word import validate_penner

THREADS_ENV = "PENNER_ENTROPY_THREADS"


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str = ""
    stderr: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def print_help(self, file=None):
        # keep --help inside CommandResult instead of writing to stdout
        raise _HelpExit(self.format_help())


class _HelpExit(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--spec", metavar="FILE", help="problem spec (JSON)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = _Parser(prog="penner-entropy",
                     description="Categorical entropy of Penner-type twist words on tree plumbings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("check", parents=[common], help="validate the problem file and the Penner condition")

    p = sub.add_parser("complex", parents=[common], help="components of phi^M(L_V)")
    p.add_argument("--cocore", required=True, metavar="V")
    p.add_argument("--power", type=_nonnegative_int, default=1, metavar="M")
    p.add_argument("--eval-n", type=int, metavar="N", help="print integer shifts at dimension N")

    p = sub.add_parser("paths", parents=[common], help="trace paths of phi^M(L_V)")
    p.add_argument("--cocore", required=True, metavar="V")
    p.add_argument("--power", type=_nonnegative_int, default=1, metavar="M")

    p = sub.add_parser("matrix", parents=[common], help="transfer matrix of the word")
    p.add_argument("--kind", choices=("unsigned", "signed", "weighted"), default="unsigned")
    p.add_argument("--n", type=int, metavar="N", help="dimension (default: n from the problem file)")
    p.add_argument("--t", type=float, default=0.0, metavar="T", help="weight for --kind weighted")
    p.add_argument("--power", type=_nonnegative_int, default=1, metavar="M")

    p = sub.add_parser("entropy", parents=[common], help="entropy report")
    p.add_argument("--m-max", type=_positive_int, default=DEFAULT_M_MAX, metavar="M")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, metavar="E")
    p.add_argument("--t", type=float, action="append", default=[], metavar="T",
                   help="exploratory t-weighted radius (repeatable)")
    p.add_argument("--allow-non-penner", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="randomized cross-checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=_positive_int, default=200, metavar="K")
    return parser


def _threads() -> int | None:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def _load(args) -> io.ProblemSpec:
    if not args.spec:
        raise UsageError(f"{args.command}: --spec FILE is required")
    try:
        with open(args.spec, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read spec file: {exc}") from None
    return io.parse_spec_file(data)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_check(args):
    problem = _load(args)
    spec, word = problem.plumbing, problem.word
    penner = validate_penner(word, spec)
    if args.json:
        return io.dump_json({
            "spec": io.spec_to_json(problem),
            "bipartition": {"plus": sorted(spec.bipartition.plus),
                            "minus": sorted(spec.bipartition.minus)},
            "penner": io.penner_to_json(penner),
        })
    lines = [
        f"vertices: {' '.join(spec.vertices)}",
        f"edges: {' '.join(f'{a}-{b}' for a, b in spec.tree.sorted_edges())}",
        f"n: {spec.n}",
        f"plus class: {' '.join(sorted(spec.bipartition.plus))}",
        f"minus class: {' '.join(sorted(spec.bipartition.minus))}",
        "grading: " + " ".join(f"s({a},{b})={spec.s(a, b)}" for a, b in sorted(spec.grading.s)),
        f"word (applied first): {word}",
        f"penner type: {_yes(penner.is_penner)} ({penner.polarity.value})",
        f"covers all vertices: {_yes(penner.covers_all_vertices)}",
    ]
    lines += [f"violation at letter {i}: {reason}" for i, reason in penner.violations]
    return "\n".join(lines) + "\n"


def _cmd_complex(args):
    problem = _load(args)
    spec = problem.plumbing
    cx = apply_word(problem.word, args.cocore, args.power, spec)
    if args.json:
        return io.emit_json(io.complex_to_json(cx, eval_n=args.eval_n))
    rows = []
    for term in cx.terms:
        shift = str(term.shift) if args.eval_n is None else str(term.shift.evaluate(args.eval_n))
        rows.append(f"{term.vertex}\t{shift}\t{cx.path(term)}")
    return "".join(r + "\n" for r in rows)


def _cmd_paths(args):
    problem = _load(args)
    spec, word = problem.plumbing, problem.word
    traces = enumerate_traces(word, args.power, args.cocore, spec)
    if args.json:
        shifts = trace_shifts(traces, word, spec, args.power)
        return io.emit_json(io.paths_to_json(args.cocore, args.power, traces, shifts))
    return "".join(p.display() + "\n" for p in traces)


def _cmd_matrix(args):
    problem = _load(args)
    spec = problem.plumbing
    n = spec.n if args.n is None else args.n
    if n < 3:
        raise DimensionTooSmall(f"dimension n={n} < 3")
    if args.kind == "unsigned":
        kind = MatrixKind.unsigned()
    elif args.kind == "signed":
        kind = MatrixKind.signed(n)
    else:
        kind = MatrixKind.weighted(args.t, n)
    matrix = word_matrix(problem.word, args.power, kind, spec)
    if args.json:
        out = io.matrix_to_json(matrix)
        out["power"] = str(args.power)
        return io.emit_json(out)
    if kind.name == "weighted":
        cells = [[f"{float(x):.12g}" for x in r] for r in matrix.evaluated()]
    else:
        cells = [[str(x) for x in r] for r in matrix.rows]
    width = max([len(c) for r in cells for c in r] + [len(v) for v in matrix.vertices])
    lines = [f"{kind} power={args.power}",
             " " * (width + 1) + " ".join(v.rjust(width) for v in matrix.vertices)]
    for v, r in zip(matrix.vertices, cells):
        lines.append(v.rjust(width) + " " + " ".join(c.rjust(width) for c in r))
    return "\n".join(lines) + "\n"


def _cmd_entropy(args):
    problem = _load(args)
    report = entropy_report(problem.plumbing, problem.word, m_max=args.m_max, tol=args.tol,
                            t_values=args.t, allow_non_penner=args.allow_non_penner)
    if args.json:
        return io.emit_json(report)
    m, value = report.empirical[-1]
    lines = [
        f"word (applied first): {report.word}",
        f"penner type: {_yes(report.penner.is_penner)} ({report.penner.polarity.value})",
        f"spectral radius: {report.radius} ({report.radius.method})",
        f"exact entropy: {report.exact}",
        f"signed radius n={report.odd_n}: {report.signed_odd_radius}",
        f"signed radius n={report.even_n}: {report.signed_even_radius}",
        f"empirical m={m}: {value:.12g}",
    ]
    lines += [f"t={t:g} log radius: {enc}" for t, enc in report.t_weighted]
    lines += [f"note: {note}" for note in report.notes]
    return "\n".join(lines) + "\n"


def _cmd_verify(args):
    if args.spec:
        _load(args)  # validate only; the suite is self-contained
    results = run_suite(args.seed, args.cases, workers=_threads())
    ok = all(r.ok for r in results)
    if args.json:
        payload = {
            "seed": str(args.seed),
            "cases": str(args.cases),
            "ok": ok,
            "checks": [{"name": r.name, "passed": str(r.passed),
                        "failed": str(len(r.failures)), "failures": r.failures}
                       for r in results],
        }
        return io.emit_json(payload), ok
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.name}: {r.passed}/{r.passed + len(r.failures)}")
        lines += [f"  {f}" for f in r.failures[:5]]
    return "\n".join(lines) + "\n", ok


COMMANDS = {
    "check": _cmd_check,
    "complex": _cmd_complex,
    "paths": _cmd_paths,
    "matrix": _cmd_matrix,
    "entropy": _cmd_entropy,
    "verify": _cmd_verify,
}


def run_command(argv) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
        _threads()
        out = COMMANDS[args.command](args)
    except _HelpExit as exc:
        return CommandResult(0, str(exc))
    except UsageError as exc:
        return CommandResult(2, "", f"usage error: {exc}\n")
    except DomainError as exc:
        return CommandResult(1, "", f"error: {type(exc).__name__}: {exc}\n")
    code = 0
    if isinstance(out, tuple):
        out, ok = out
        code = 0 if ok else 1
    if isinstance(out, bytes):
        out = out.decode("utf-8")
    return CommandResult(code, out)


def main(argv=None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
