"""Exact arithmetic in SL(2, Z).

Matrices are immutable and hold Python integers, so entries never overflow.
The spectral radius of a hyperbolic element is kept as the quadratic surd
(|t| + sqrt(t^2 - 4)) / 2, identified by its trace t.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering


class DeterminantError(ValueError):
    """Raised when a matrix would leave SL(2, Z)."""


class NotHyperbolicError(ValueError):
    """Raised when an operation needs |trace| > 2 (or trace > 2)."""


@dataclass(frozen=True)
class Mat2Z:
    """Row-major 2x2 integer matrix ((a, b), (c, d)) with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise TypeError(f"entry {name} must be an int, got {getattr(self, name)!r}")
        det = self.a * self.d - self.b * self.c
        if det != 1:
            raise DeterminantError(f"determinant of {self.rows()} is {det}, expected 1")

    @classmethod
    def from_rows(cls, rows) -> "Mat2Z":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "Mat2Z") -> "Mat2Z":
        return compose(self, other)

    def __neg__(self) -> "Mat2Z":
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> "Mat2Z":
        return power(self, n)

    def __str__(self) -> str:
        return format_matrix(self)


IDENTITY = Mat2Z(1, 0, 0, 1)
MINUS_IDENTITY = Mat2Z(-1, 0, 0, -1)
# induced actions of the Fourier-Mukai transform and of twisting by O(x0)
S_MATRIX = Mat2Z(0, 1, -1, 0)
T_MATRIX = Mat2Z(1, 0, 1, 1)
# positive monoid generators; L coincides with T_MATRIX
L_MATRIX = T_MATRIX
R_MATRIX = Mat2Z(1, 1, 0, 1)


def compose(A: Mat2Z, B: Mat2Z) -> Mat2Z:
    """Matrix product A @ B."""
    return Mat2Z(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def inverse(A: Mat2Z) -> Mat2Z:
    return Mat2Z(A.d, -A.b, -A.c, A.a)


def power(A: Mat2Z, n: int) -> Mat2Z:
    """A**n by binary exponentiation; negative n goes through the inverse."""
    if n < 0:
        A, n = inverse(A), -n
    result = IDENTITY
    base = A
    while n:
        if n & 1:
            result = compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def conjugate(A: Mat2Z, M: Mat2Z) -> Mat2Z:
    """Return M A M^-1."""
    return compose(compose(M, A), inverse(M))


def trace(A: Mat2Z) -> int:
    return A.a + A.d


def is_reduced(A: Mat2Z) -> bool:
    """True iff 0 < a <= c < d."""
    return 0 < A.a <= A.c < A.d


def classify(A: Mat2Z) -> str:
    """'elliptic', 'parabolic' or 'hyperbolic' according to |trace|."""
    t = abs(A.trace)
    if t < 2:
        return "elliptic"
    if t == 2:
        return "parabolic"
    return "hyperbolic"


@total_ordering
class SpectralRadius:
    """Exact spectral radius of an element of SL(2, Z).

    The value is 1 when |t| <= 2 and the larger root of x^2 - |t| x + 1
    otherwise. Two radii compare by max(|t|, 2), which is exact.
    """

    __slots__ = ("trace",)

    def __init__(self, trace: int):
        self.trace = trace

    @property
    def is_one(self) -> bool:
        return abs(self.trace) <= 2

    @property
    def discriminant(self) -> int:
        """t^2 - 4 for hyperbolic traces, 0 when the radius is 1."""
        return 0 if self.is_one else self.trace * self.trace - 4

    def _key(self) -> int:
        return max(abs(self.trace), 2)

    def __eq__(self, other):
        if not isinstance(other, SpectralRadius):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, SpectralRadius):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(("SpectralRadius", self._key()))

    def __repr__(self):
        if self.is_one:
            return "SpectralRadius(1)"
        return f"SpectralRadius(({abs(self.trace)} + sqrt({self.discriminant}))/2)"

    @property
    def value(self) -> float:
        if self.is_one:
            return 1.0
        t = abs(self.trace)
        # int -> float raises OverflowError past ~1e308; use log_value there
        return (t + math.sqrt(self.discriminant)) / 2

    @property
    def inverse_value(self) -> float:
        """The other eigenvalue (|t| - sqrt(t^2 - 4)) / 2, computed without cancellation."""
        if self.is_one:
            return 1.0
        t = abs(self.trace)
        return 2 / (t + math.sqrt(self.discriminant))

    @property
    def log_value(self) -> float:
        """log of the radius; finite for every trace size."""
        if self.is_one:
            return 0.0
        t = abs(self.trace)
        if t < 1 << 500:
            return math.log((t + math.sqrt(t * t - 4)) / 2)
        return math.log(t) + math.log1p(-(1 - math.sqrt(1 - 4 / (t * t))) / 2)

    def power(self, m: int) -> "SpectralRadius":
        """Radius of A**m, given only the trace of A (m >= 0)."""
        if m < 0:
            raise ValueError("m must be non-negative")
        return SpectralRadius(chebyshev_trace(abs(self.trace), m))


def chebyshev_trace(t: int, m: int) -> int:
    """Trace of A**m for A in SL(2, Z) with trace t."""
    prev, cur = 2, t
    if m == 0:
        return 2
    for _ in range(m - 1):
        prev, cur = cur, t * cur - prev
    return cur


def spectral_radius(A: Mat2Z) -> SpectralRadius:
    return SpectralRadius(A.trace)


_INT = r"\s*([+-]?\d+)\s*"
_MATRIX_RE = re.compile(rf"^{_INT},{_INT},{_INT},{_INT}$")


def parse_matrix(text: str) -> Mat2Z:
    """Parse 'a,b,c,d' (row-major, optional whitespace and signs)."""
    match = _MATRIX_RE.match(text)
    if not match:
        raise ValueError(f"malformed matrix {text!r}; expected 'a,b,c,d'")
    return Mat2Z(*(int(g) for g in match.groups()))


def format_matrix(A: Mat2Z) -> str:
    return f"{A.a},{A.b},{A.c},{A.d}"
