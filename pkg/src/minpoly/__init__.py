"""Minimal polynomials and linear-complexity profiles of finite sequences.

Exact arithmetic over GF(p) (p prime, p < 2**31) and the rationals; an
iterative synthesis engine with per-step state access, a brute-force
oracle for verification, LFSR generation utilities, and a CLI
(``minpoly``).
"""

from .engine import (
    EngineRun,
    EngineState,
    InitVariant,
    ProfileEntry,
    Sequence,
    TraceRecord,
    complexity_profile,
    discrepancy,
    initial_state,
    is_characteristic,
    iter_states,
    massey_form,
    minimal_polynomial,
    naive_construct,
    run,
    step,
    trace_records,
)
from .errors import (
    BudgetExceededError,
    DegreeUnderflowError,
    EmptySequenceError,
    FieldMismatchError,
    InfiniteFieldError,
    MinpolyError,
    NotMonicError,
    ParityError,
    ParseError,
    ZeroPolynomialError,
)
from .field import GF2, QQ, Field, PrimeField, RationalField, Scalar, parse_field
from .lfsr import Recurrence, extend, feedback_to_characteristic
from .oracle import (
    DEFAULT_BUDGET,
    OracleResult,
    brute_force_min_degree,
    enumerate_minimal_polys,
)
from .poly import NEG_INF, Degree, Poly, linear_combine, parse_poly, render_poly

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "Degree",
    "DegreeUnderflowError",
    "EmptySequenceError",
    "EngineRun",
    "EngineState",
    "Field",
    "FieldMismatchError",
    "GF2",
    "InfiniteFieldError",
    "InitVariant",
    "MinpolyError",
    "NEG_INF",
    "NotMonicError",
    "OracleResult",
    "ParityError",
    "ParseError",
    "Poly",
    "PrimeField",
    "ProfileEntry",
    "QQ",
    "RationalField",
    "Recurrence",
    "Scalar",
    "Sequence",
    "TraceRecord",
    "ZeroPolynomialError",
    "__version__",
    "brute_force_min_degree",
    "complexity_profile",
    "discrepancy",
    "enumerate_minimal_polys",
    "extend",
    "feedback_to_characteristic",
    "initial_state",
    "is_characteristic",
    "iter_states",
    "linear_combine",
    "massey_form",
    "minimal_polynomial",
    "naive_construct",
    "parse_field",
    "parse_poly",
    "render_poly",
    "run",
    "step",
    "trace_records",
]
