"""Exact categorical entropy of autoequivalences of curves via SL(2, Z)."""

from .entropy import (
    EntropyValue,
    StandardDescriptor,
    TypeMCertificate,
    entropy_of_curve_autoeq,
    entropy_of_matrix,
    entropy_of_word,
    type_m_representative,
    verify_type_m,
)
from .kgroup import KClass, act, euler_form, graded_complexity, growth_sequence, quadrant_trace
from .lls import (
    LLSPeriod,
    brute_force_conjugate,
    cf_eval,
    cf_odd,
    cyclic_equal,
    find_conjugator,
    is_conjugate,
    lls_of_reduced,
    lls_period,
    reduce_hyperbolic,
)
from .sl2z import (
    DeterminantError,
    Mat2Z,
    NotHyperbolicError,
    SpectralRadius,
    compose,
    conjugate,
    inverse,
    is_reduced,
    power,
    spectral_radius,
)
from .words import Token, Word, evaluate, parse_word, simplify, type_m_word

__version__ = "0.1.0"
