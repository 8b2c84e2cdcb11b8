"""Spec files and JSON emission.

Spec file schema::

    {
      "tree": {"vertices": [str, ...], "edges": [[str, str], ...]},
      "n": int,
      "grading": [{"edge": [v, w], "s": int}, ...],          # optional
      "word_applied_first": [{"vertex": str, "sign": "+"|"-"}, ...]
        or "word_paper_order": [...],                         # exactly one
      "metadata": {...}                                       # optional
    }

``word_paper_order`` lists the composition as written, last-applied twist
first; it is reversed on load.

Emitted JSON has a fixed key order, writes integers and interval endpoints as
decimal strings, and omits empty fields instead of writing ``null``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .entropy import EntropyReport
from .errors import ParseError, SchemaError, UnknownVertex
from .paths import TracePath
from .plumbing import PlumbingSpec, build_plumbing
from .radius import Interval, RadiusEnclosure, fraction_to_decimal
from .shift import ShiftExpr
from .transfer import MatrixKind, TransferMatrix, WeightSum
from .twist import CocoreComplex
from .word import PennerReport, Polarity, TwistWord

WORD_KEYS = ("word_applied_first", "word_paper_order")
SPEC_KEYS = {"tree", "n", "grading", "metadata", *WORD_KEYS}


@dataclass(frozen=True)
class ProblemSpec:
    plumbing: PlumbingSpec
    word: TwistWord
    metadata: dict = field(default_factory=dict, hash=False)


def _no_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise SchemaError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _loads(data) -> Any:
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        return json.loads(data, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise SchemaError(message)


def _check_keys(obj, allowed: set, required: set, where: str) -> None:
    _expect(isinstance(obj, dict), f"{where} must be an object")
    unknown = set(obj) - allowed
    _expect(not unknown, f"unknown keys in {where}: {sorted(unknown)}")
    missing = required - set(obj)
    _expect(not missing, f"missing keys in {where}: {sorted(missing)}")


def _parse_word(items, where: str) -> list[tuple[str, int]]:
    _expect(isinstance(items, list), f"{where} must be a list")
    letters = []
    for i, item in enumerate(items):
        _check_keys(item, {"vertex", "sign"}, {"vertex", "sign"}, f"{where}[{i}]")
        _expect(isinstance(item["vertex"], str), f"{where}[{i}].vertex must be a string")
        _expect(item["sign"] in ("+", "-"), f"{where}[{i}].sign must be '+' or '-'")
        letters.append((item["vertex"], 1 if item["sign"] == "+" else -1))
    return letters


def parse_spec_file(data) -> ProblemSpec:
    raw = _loads(data)
    _check_keys(raw, SPEC_KEYS, {"tree", "n"}, "spec")
    present = [k for k in WORD_KEYS if k in raw]
    _expect(len(present) == 1, f"exactly one of {WORD_KEYS} is required, got {present}")

    tree = raw["tree"]
    _check_keys(tree, {"vertices", "edges"}, {"vertices", "edges"}, "tree")
    _expect(isinstance(tree["vertices"], list)
            and all(isinstance(v, str) for v in tree["vertices"]),
            "tree.vertices must be a list of strings")
    _expect(isinstance(tree["edges"], list)
            and all(isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)
                    for e in tree["edges"]),
            "tree.edges must be a list of [str, str] pairs")
    n = raw["n"]
    _expect(isinstance(n, int) and not isinstance(n, bool), "n must be an integer")

    overrides = []
    _expect(isinstance(raw.get("grading", []), list), "grading must be a list")
    for i, g in enumerate(raw.get("grading", [])):
        _check_keys(g, {"edge", "s"}, {"edge", "s"}, f"grading[{i}]")
        _expect(isinstance(g["edge"], list) and len(g["edge"]) == 2
                and all(isinstance(x, str) for x in g["edge"]),
                f"grading[{i}].edge must be [str, str]")
        _expect(isinstance(g["s"], int) and not isinstance(g["s"], bool),
                f"grading[{i}].s must be an integer")
        overrides.append((tuple(g["edge"]), g["s"]))
    metadata = raw.get("metadata", {})
    _expect(isinstance(metadata, dict) and all(isinstance(v, str) for v in metadata.values()),
            "metadata must be an object with string values")

    plumbing = build_plumbing(tree["vertices"], tree["edges"], n, overrides)
    key = present[0]
    letters = _parse_word(raw[key], key)
    word = TwistWord(letters) if key == "word_applied_first" else TwistWord.from_composition_order(letters)
    for i, (vertex, _) in enumerate(letters):
        if vertex not in plumbing.tree:
            raise UnknownVertex(f"{key}[{i}] uses unknown vertex {vertex!r}")
    return ProblemSpec(plumbing, word, metadata)


# ---------------------------------------------------------------------------
# conversion to JSON-ready structures


def _int(x: int) -> str:
    return str(int(x))


def _letters(word: TwistWord) -> list:
    return [{"vertex": x.vertex, "sign": "+" if x.sign > 0 else "-"} for x in word]


def _interval(enc: Interval) -> dict:
    out = {"lo": fraction_to_decimal(enc.lo), "hi": fraction_to_decimal(enc.hi)}
    if isinstance(enc, RadiusEnclosure):
        out["method"] = enc.method
    return out


def _prune(obj: dict) -> dict:
    return {k: v for k, v in obj.items() if v is not None and v != [] and v != {}}


def spec_to_json(problem: ProblemSpec) -> dict:
    p = problem.plumbing
    grading = [{"edge": list(pair), "s": p.s(*pair)} for pair in sorted(p.grading.anchored)]
    return _prune({
        "tree": {"vertices": list(p.vertices), "edges": [list(e) for e in p.tree.sorted_edges()]},
        "n": p.n,
        "grading": grading,
        "word_applied_first": _letters(problem.word),
        "metadata": dict(problem.metadata),
    })


def penner_to_json(report: PennerReport) -> dict:
    return _prune({
        "is_penner": report.is_penner,
        "polarity": report.polarity.value,
        "covers_all_vertices": report.covers_all_vertices,
        "violations": [{"index": _int(i), "reason": r} for i, r in report.violations],
    })


def report_to_json(report: EntropyReport) -> dict:
    return _prune({
        "word_applied_first": _letters(report.word),
        "penner": penner_to_json(report.penner),
        "exact_entropy": _interval(report.exact),
        "spectral_radius": _interval(report.radius),
        "odd_n": _int(report.odd_n),
        "even_n": _int(report.even_n),
        "signed_odd_radius": _interval(report.signed_odd_radius),
        "signed_even_radius": _interval(report.signed_even_radius),
        "empirical": [{"m": _int(m), "value": repr(v)} for m, v in report.empirical],
        "t_weighted": [{"t": repr(t), "log_radius": _interval(e)} for t, e in report.t_weighted],
        "notes": list(report.notes),
    })


def _weight_entry(entry: WeightSum, kind: MatrixKind) -> dict:
    return {
        "terms": [{"shift": str(s), "count": _int(c)} for s, c in entry.terms.items()],
        "value": repr(float(entry.evaluate(kind.t, kind.n))),
    }


def matrix_to_json(matrix: TransferMatrix) -> dict:
    kind = matrix.kind
    if kind.name == "weighted":
        rows = [[_weight_entry(e, kind) for e in r] for r in matrix.rows]
    else:
        rows = [[_int(e) for e in r] for r in matrix.rows]
    return _prune({
        "kind": kind.name,
        "n": None if kind.n is None else _int(kind.n),
        "t": None if kind.t is None else repr(kind.t),
        "vertices": list(matrix.vertices),
        "rows": rows,
    })


def complex_to_json(complex_: CocoreComplex, eval_n: int | None = None) -> dict:
    terms = []
    for term in complex_.terms:
        shift = str(term.shift) if eval_n is None else _int(term.shift.evaluate(eval_n))
        terms.append({"vertex": term.vertex, "shift": shift, "path": complex_.path(term)})
    return _prune({
        "source": complex_.source,
        "letters_applied": _int(complex_.applied),
        "n": None if eval_n is None else _int(eval_n),
        "terms": terms,
    })


def paths_to_json(source: str, power: int, traces: list[TracePath], shifts) -> dict:
    return {
        "source": source,
        "power": _int(power),
        "paths": [
            {"display": p.display(), "vertices": list(p.vertices),
             "positions": [_int(j) for j in p.indices], "shift": str(s)}
            for p, s in zip(traces, shifts)
        ],
    }


def to_jsonable(value) -> Any:
    if isinstance(value, EntropyReport):
        return report_to_json(value)
    if isinstance(value, TransferMatrix):
        return matrix_to_json(value)
    if isinstance(value, CocoreComplex):
        return complex_to_json(value)
    if isinstance(value, ProblemSpec):
        return spec_to_json(value)
    if isinstance(value, PennerReport):
        return penner_to_json(value)
    if isinstance(value, Interval):
        return _interval(value)
    if isinstance(value, ShiftExpr):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return _int(value)
    if isinstance(value, Fraction):
        return fraction_to_decimal(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, dict):
        return _prune({str(k): to_jsonable(v) for k, v in value.items()})
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dump_json(payload) -> bytes:
    """Compact UTF-8 JSON of an already JSON-ready structure."""
    return (json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


def emit_json(value) -> bytes:
    return dump_json(to_jsonable(value))


# ---------------------------------------------------------------------------
# parsing emitted documents back


def _parse_interval(obj, cls=Interval):
    if cls is RadiusEnclosure:
        return RadiusEnclosure(Fraction(obj["lo"]), Fraction(obj["hi"]), obj["method"])
    return Interval(Fraction(obj["lo"]), Fraction(obj["hi"]))


def report_from_json(data) -> EntropyReport:
    raw = _loads(data)
    penner = raw["penner"]
    return EntropyReport(
        word=TwistWord(_parse_word(raw.get("word_applied_first", []), "word_applied_first")),
        penner=PennerReport(
            is_penner=penner["is_penner"],
            polarity=Polarity(penner["polarity"]),
            violations=tuple((int(v["index"]), v["reason"]) for v in penner.get("violations", [])),
            covers_all_vertices=penner["covers_all_vertices"],
        ),
        empirical=tuple((int(e["m"]), float(e["value"])) for e in raw.get("empirical", [])),
        radius=_parse_interval(raw["spectral_radius"], RadiusEnclosure),
        exact=_parse_interval(raw["exact_entropy"]),
        odd_n=int(raw["odd_n"]),
        even_n=int(raw["even_n"]),
        signed_odd_radius=_parse_interval(raw["signed_odd_radius"], RadiusEnclosure),
        signed_even_radius=_parse_interval(raw["signed_even_radius"], RadiusEnclosure),
        notes=tuple(raw.get("notes", [])),
        t_weighted=tuple((float(x["t"]), _parse_interval(x["log_radius"]))
                         for x in raw.get("t_weighted", [])),
    )


def matrix_from_json(data) -> TransferMatrix:
    raw = _loads(data) if isinstance(data, (str, bytes, bytearray)) else data
    kind = MatrixKind(raw["kind"],
                      n=int(raw["n"]) if "n" in raw else None,
                      t=float(raw["t"]) if "t" in raw else None)
    if kind.name == "weighted":
        rows = [[WeightSum({ShiftExpr.parse(x["shift"]): int(x["count"]) for x in e.get("terms", [])})
                 for e in r] for r in raw["rows"]]
    else:
        rows = [[int(e) for e in r] for r in raw["rows"]]
    return TransferMatrix(kind, raw["vertices"], rows)
