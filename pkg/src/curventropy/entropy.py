"""Categorical entropy at t = 0 of autoequivalences of curves.

For an elliptic curve the entropy of F equals log of the spectral radius of
the induced matrix [F] in SL(2, Z); for every other smooth projective curve
all autoequivalences are standard and have entropy zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Sequence

from .lls import cf_eval, is_conjugate, lls_of_reduced, lls_period
from .sl2z import (
    IDENTITY,
    Mat2Z,
    S_MATRIX,
    T_MATRIX,
    NotHyperbolicError,
    SpectralRadius,
    compose,
    power,
    spectral_radius,
)
from .words import Kind, Token, Word, evaluate, type_m_word, validate_type_m


@total_ordering
class EntropyValue:
    """log of an exact spectral radius; zero exactly when the radius is 1."""

    __slots__ = ("radius",)

    def __init__(self, radius: SpectralRadius):
        self.radius = radius

    @classmethod
    def zero(cls) -> "EntropyValue":
        return cls(SpectralRadius(2))

    @property
    def is_zero(self) -> bool:
        return self.radius.is_one

    @property
    def trace(self) -> int:
        return abs(self.radius.trace)

    @property
    def discriminant(self) -> int:
        return self.radius.discriminant

    @property
    def value(self) -> float:
        return self.radius.log_value

    def __float__(self) -> float:
        return self.value

    def __eq__(self, other):
        if not isinstance(other, EntropyValue):
            return NotImplemented
        return self.radius == other.radius

    def __lt__(self, other):
        if not isinstance(other, EntropyValue):
            return NotImplemented
        return self.radius < other.radius

    def __hash__(self):
        return hash(("EntropyValue", self.radius))

    def __rmul__(self, m: int) -> "EntropyValue":
        """m * h(F) = h(F^m), exact through the trace of the m-th power."""
        if not isinstance(m, int) or m < 0:
            return NotImplemented
        if m == 0 or self.is_zero:
            return EntropyValue.zero()
        return EntropyValue(self.radius.power(m))

    def __repr__(self):
        if self.is_zero:
            return "EntropyValue(0)"
        return f"EntropyValue(log(({self.trace} + sqrt({self.discriminant}))/2) ~ {self.value:.12g})"

    def to_dict(self) -> dict:
        if self.is_zero:
            return {"exact": "zero", "trace": str(self.radius.trace), "float": 0.0}
        return {
            "exact": "log_surd",
            "trace": str(self.trace),
            "discriminant": str(self.discriminant),
            "float": float(f"{self.value:.12g}"),
        }


def entropy_of_matrix(A: Mat2Z) -> EntropyValue:
    # h(S^2 F) = h(F) and [S^2 F] = -[F], so the sign of the trace is irrelevant
    return EntropyValue(spectral_radius(A))


def entropy_of_word(w: Sequence[Token]) -> EntropyValue:
    return entropy_of_matrix(evaluate(w))


@dataclass(frozen=True)
class StandardDescriptor:
    """f^*(- (x) L)[n] on a curve of genus g, with deg L = degree."""

    genus: int
    degree: int = 0
    shift: int = 0
    automorphism: bool = False

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")

    def matrix(self) -> Mat2Z:
        sign = -1 if self.shift % 2 else 1
        return Mat2Z(sign, 0, sign * self.degree, sign)

    def word(self) -> Word:
        """Genus-1 word with the same action: T^k, a shift, and AUT if present."""
        tokens = []
        if self.degree:
            tokens.append(Token(Kind.T, self.degree))
        if self.shift:
            tokens.append(Token(Kind.SHIFT, self.shift))
        if self.automorphism:
            tokens.append(Token(Kind.AUTO))
        return Word(tokens)


def entropy_of_curve_autoeq(desc: StandardDescriptor) -> tuple[EntropyValue, Mat2Z]:
    """Standard autoequivalences have entropy zero on every curve."""
    mat = desc.matrix()
    value = entropy_of_matrix(mat)
    # matrix has trace +-2, so this is the zero value
    assert value.is_zero
    return value, mat


def type_m_representative(A: Mat2Z) -> tuple[int, ...]:
    """m with [F_m] conjugate to A (trace > 2), in canonical even rotation."""
    if A.trace <= 2:
        raise NotHyperbolicError(f"type-m representative needs trace > 2, got {A.trace}")
    m = lls_period(A).canonical
    if not is_conjugate(A, evaluate(type_m_word(m))):
        raise AssertionError(f"type-m word for {m} is not conjugate to {A}")
    return m


@dataclass(frozen=True)
class PrefixCheck:
    n: int
    matrix: Mat2Z
    alpha: int
    beta: int
    expansion: Fraction
    verdicts: tuple[bool, bool, bool, bool, bool]

    @property
    def passed(self) -> bool:
        return all(self.verdicts)


@dataclass(frozen=True)
class TypeMCertificate:
    m: tuple[int, ...]
    prefixes: tuple[PrefixCheck, ...]
    final_matrix: Mat2Z
    matches_word: bool
    lls_matches: bool
    failures: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.matches_word and self.lls_matches and all(p.passed for p in self.prefixes)


def _block(upper: int, lower: int) -> Mat2Z:
    """-[T^upper S][T^-lower S], which should be ((1, lower), (upper, lower*upper + 1))."""
    return -compose(
        compose(power(T_MATRIX, upper), S_MATRIX),
        compose(power(T_MATRIX, -lower), S_MATRIX),
    )


def verify_type_m(m: Sequence[int]) -> TypeMCertificate:
    """Check the five inductive properties of [F_m] on every prefix.

    Prefix n is the product of the n rightmost blocks with the S^2 sign
    absorbed, i.e. the matrix of the type-(m_2n, ..., m_1) word.
    """
    m = validate_type_m(m)
    asc = m[::-1]  # asc[i] = m_{i+1}
    m1 = asc[0]
    prefixes = []
    failures = []
    current = IDENTITY
    for n in range(1, len(m) // 2 + 1):
        current = compose(_block(asc[2 * n - 1], asc[2 * n - 2]), current)
        a, b, c, d = current.entries()
        alpha = b - m1 * a
        beta = d - m1 * c
        expansion = cf_eval(asc[2 * n - 1:0:-1])  # [m_2n; m_2n-1, ..., m_2]
        verdicts = (
            0 < a,
            a <= c,
            Fraction(c, a) == expansion if a else False,
            0 <= alpha < a,
            0 < beta <= c,
        )
        for label, ok in zip(("i", "ii", "iii", "iv", "v"), verdicts):
            if not ok:
                failures.append(f"prefix {n}: property ({label})")
        prefixes.append(PrefixCheck(n, current, alpha, beta, expansion, verdicts))
    matches_word = evaluate(type_m_word(m)) == current
    try:
        lls_matches = lls_of_reduced(current).terms == m
    except ValueError:
        lls_matches = False
    if not matches_word:
        failures.append("block product differs from the type-m word")
    if not lls_matches:
        failures.append("LLS-period differs from m")
    return TypeMCertificate(m, tuple(prefixes), current, matches_word, lls_matches, tuple(failures))
