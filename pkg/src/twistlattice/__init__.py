"""Exact Jones-Kauffman computations on long virtual knots and twist lattices."""

from .algebra import (
    LaurentPoly,
    RationalPoly,
    TruncatedRationalSeries,
    exp_substitute,
    factorial_power,
    format_laurent,
    lagrange_interpolate,
)
from .bracket import (
    StateLimitError,
    evaluate_linear,
    jones_kauffman,
    kauffman_bracket,
    state_limit,
    vk,
    vk_series,
)
from .calculus import MultiIndex, derivative, poly_degree_evidence, power_series_eval, step_derivative
from .experiments import EXPERIMENTS, ExperimentReport
from .gauss import (
    CHORD,
    CLASSICAL,
    DASHED,
    Arrow,
    FormalSum,
    GaussCodeError,
    LongGaussDiagram,
    crossing_change,
    expand_marks,
    insert_kink,
    insert_r2_pair,
    parse_gauss_code,
    reverse_arrow,
    serialize,
    writhe,
)
from .gpv import gpv_derivative_scan, kauffman_type_report, map_I, map_I_inverse
from .twist import (
    FRACTIONAL_TYPES,
    REGULAR_TYPES,
    TwistAxisType,
    TwistLattice,
    fractional_family,
    integrate_chords,
    integrate_dashed,
    lattice_eval,
    parse_lattice,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "CHORD",
    "CLASSICAL",
    "crossing_change",
    "DASHED",
    "derivative",
    "evaluate_linear",
    "exp_substitute",
    "expand_marks",
    "ExperimentReport",
    "EXPERIMENTS",
    "factorial_power",
    "fractional_family",
    "FormalSum",
    "format_laurent",
    "FRACTIONAL_TYPES",
    "GaussCodeError",
    "gpv_derivative_scan",
    "insert_kink",
    "insert_r2_pair",
    "integrate_chords",
    "integrate_dashed",
    "jones_kauffman",
    "kauffman_bracket",
    "kauffman_type_report",
    "lagrange_interpolate",
    "lattice_eval",
    "LaurentPoly",
    "LongGaussDiagram",
    "map_I",
    "map_I_inverse",
    "MultiIndex",
    "parse_gauss_code",
    "parse_lattice",
    "poly_degree_evidence",
    "power_series_eval",
    "RationalPoly",
    "REGULAR_TYPES",
    "reverse_arrow",
    "serialize",
    "state_limit",
    "StateLimitError",
    "step_derivative",
    "TruncatedRationalSeries",
    "TwistAxisType",
    "TwistLattice",
    "vk",
    "vk_series",
    "writhe",
]
