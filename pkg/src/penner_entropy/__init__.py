"""Categorical entropy of Penner-type twist words on tree plumbings.

The pipeline: a :class:`PlumbingSpec` (tree, dimension, grading) and a
:class:`TwistWord` are rewritten into cocore complexes, enumerated as trace
paths, or turned into transfer matrices; :func:`entropy_report` ties the three
routes together.
"""
from .entropy import (EntropyReport, empirical_entropy_sequence, entropy_report,
                      exact_entropy, log_interval)
from .errors import (BadGrading, DimensionRequired, DimensionTooSmall, DomainError,
                     InconsistentTrace, IterationLimit, NegativePower, NotATree,
                     NotPennerType, ParseError, SchemaError, UnknownVertex,
                     WeightedUnsupported)
from .io import ProblemSpec, emit_json, parse_spec_file, report_from_json
from .paths import TracePath, enumerate_traces, geometric_shift, shift_of_trace, trace_shifts
from .plumbing import (Bipartition, PlumbingSpec, Tree, bipartition, build_plumbing,
                       geometric_path)
from .radius import Interval, RadiusEnclosure, collatz_wielandt
from .shift import ShiftExpr
from .transfer import (MatrixKind, TransferMatrix, WeightSum, char_poly, elementary_matrix,
                       matrix_power, spectral_radius, word_matrix)
from .twist import (CocoreComplex, Term, apply_twist, apply_word, count_matrix, count_vector,
                    rewrite_components, shift_spectrum, weighted_length)
from .word import (Letter, PennerReport, Polarity, TwistWord, invert_word, repeat_word,
                   validate_penner)

__version__ = "0.1.0"
