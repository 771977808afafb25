"""Conjugacy classification of hyperbolic elements of SL(2, Z).

A matrix ((a, b), (c, d)) is *reduced* when 0 < a <= c < d. Every element
with trace > 2 is conjugate to a reduced one, and the LLS-period read off a
reduced matrix (odd continued fraction of c/a followed by floor((d-1)/c))
is a complete invariant up to rotation by an even offset.

Reduced matrices are exactly the positive words
L^m_2n R^m_2n-1 ... L^m_2 R^m_1 with L = ((1,0),(1,1)), R = ((1,1),(0,1)).
:func:`reduce_hyperbolic` uses that: Gauss reduction of the fixed-point
form makes the matrix positive, the positive matrix is factored into L/R
runs, and the runs are rotated so the word starts with L and ends with R.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .sl2z import (
    IDENTITY,
    L_MATRIX,
    R_MATRIX,
    S_MATRIX,
    T_MATRIX,
    Mat2Z,
    NotHyperbolicError,
    compose,
    conjugate,
    inverse,
    is_reduced,
    power,
)

ContinuedFraction = tuple  # tuple[int, ...] of odd length, entries >= 1


class NotReducedError(ValueError):
    pass


class ReductionError(RuntimeError):
    """Reduction did not finish inside its iteration bound (a bug, not mathematics)."""


def _canonical_rotation(terms: tuple[int, ...]) -> tuple[int, ...]:
    return min(terms[i:] + terms[:i] for i in range(0, len(terms), 2))


@dataclass(frozen=True)
class LLSPeriod:
    """Even-length cyclic sequence of positive integers.

    ``terms`` keeps the order in which the period was read off a reduced
    matrix; ``canonical`` is the lexicographically least even rotation and
    is what ``str`` prints and :func:`cyclic_equal` compares.
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) < 2 or len(terms) % 2:
            raise ValueError(f"LLS-period must have even length >= 2, got {terms}")
        if any(x < 1 for x in terms):
            raise ValueError(f"LLS-period entries must be positive, got {terms}")

    @property
    def canonical(self) -> tuple[int, ...]:
        return _canonical_rotation(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        return ",".join(map(str, self.canonical))

    @classmethod
    def parse(cls, text: str) -> "LLSPeriod":
        return cls(tuple(int(x) for x in text.split(",")))


def cf_odd(p: int, q: int) -> ContinuedFraction:
    """Odd-length continued fraction of p/q (p >= q > 0).

    The Euclidean expansion is used as is when its length is odd; otherwise
    its last term a_k >= 2 is split into (a_k - 1, 1).
    """
    if p <= 0 or q <= 0:
        raise ValueError(f"cf_odd needs positive arguments, got {p}, {q}")
    if p < q:
        raise ValueError(f"cf_odd needs p >= q, got {p}/{q}")
    g = math.gcd(p, q)
    p, q = p // g, q // g
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    if len(terms) % 2 == 0:
        # even Euclidean length >= 2 always ends in a term >= 2
        terms[-1] -= 1
        terms.append(1)
    return tuple(terms)


def cf_eval(cf: Sequence[int]) -> Fraction:
    if not cf:
        raise ValueError("empty continued fraction")
    value = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        value = a + 1 / value
    return value


def lls_of_reduced(A: Mat2Z) -> LLSPeriod:
    if A.trace <= 2:
        raise NotHyperbolicError(f"LLS-period needs trace > 2, got {A.trace}")
    if not is_reduced(A):
        raise NotReducedError(f"{A} is not reduced (need 0 < a <= c < d)")
    terms = cf_odd(A.c, A.a) + ((A.d - 1) // A.c,)
    return LLSPeriod(terms)


# -- reduction ---------------------------------------------------------------

def _normalize_shift(p: int, q: int, disc: int, root: int) -> int:
    """Integer s such that q + 2 s p lies in the normal window for the form (p, q, *)."""
    ap = abs(p)
    if ap > root:
        # window (-|p|, |p|]
        target = (q + ap - 1) % (2 * ap) - ap + 1
    else:
        # window (sqrt(D) - 2|p|, sqrt(D)); sqrt(D) is irrational
        target = root - (root - q) % (2 * ap)
    return (target - q) // (2 * p)


def _make_positive(A: Mat2Z, max_steps: int) -> tuple[Mat2Z, Mat2Z]:
    """Conjugate A (trace > 2) to a matrix with b, c > 0 (hence all entries > 0).

    The fixed-point form f(x, y) = c x^2 + (d - a) x y - b y^2 satisfies
    f_{M A M^-1}(v) = f_A(M^-1 v), so Gauss reduction steps on the form are
    conjugations of A. A reduced indefinite form has first and last
    coefficients of opposite sign.
    """
    disc = A.trace * A.trace - 4
    root = math.isqrt(disc)
    X, M = A, IDENTITY
    steps = 0
    while X.b * X.c <= 0:
        if steps >= max_steps:
            raise ReductionError(f"Gauss reduction of {A} exceeded {max_steps} steps")
        steps += 1
        # rho: (p, q, r) -> (r, -q, p) via conjugation by S, then normalize
        X, M = conjugate(X, S_MATRIX), compose(S_MATRIX, M)
        s = _normalize_shift(X.c, X.d - X.a, disc, root)
        if s:
            shear = power(R_MATRIX, -s)
            X, M = conjugate(X, shear), compose(shear, M)
    if X.c < 0:
        X, M = conjugate(X, S_MATRIX), compose(S_MATRIX, M)
    return X, M


def positive_factorization(P: Mat2Z) -> list[tuple[str, int]]:
    """Factor a non-negative matrix into maximal runs of L and R, leftmost first."""
    if min(P.entries()) < 0:
        raise ValueError(f"{P} has a negative entry")
    runs: list[tuple[str, int]] = []
    a, b, c, d = P.entries()
    while (a, b, c, d) != (1, 0, 0, 1):
        if c >= a and d >= b:
            k = min(c // a if a else math.inf, d // b if b else math.inf)
            c, d = c - k * a, d - k * b
            runs.append(("L", k))
        else:
            k = min(a // c if c else math.inf, b // d if d else math.inf)
            a, b = a - k * c, b - k * d
            runs.append(("R", k))
    return runs


def _run_matrix(run: tuple[str, int]) -> Mat2Z:
    letter, k = run
    return power(L_MATRIX if letter == "L" else R_MATRIX, k)


def _bound_for(A: Mat2Z) -> int:
    size = max(abs(x) for x in A.entries()).bit_length()
    return 16 + 8 * size


def reduce_hyperbolic(A: Mat2Z, max_steps: Optional[int] = None) -> tuple[Mat2Z, Mat2Z]:
    """Return (A', M) with A' reduced and A' = M A M^-1 (checked before returning).

    Already-reduced input comes back unchanged with M = I.
    """
    if A.trace <= 2:
        raise NotHyperbolicError(f"reduction needs trace > 2, got {A.trace}")
    if is_reduced(A):
        return A, IDENTITY
    if (A.a, A.b, A.c) == (0, -1, 1):
        # ((0,-1),(1,d)) = R^-1 ((1,d-2),(1,d-1)) R
        M = R_MATRIX
    else:
        if max_steps is None:
            max_steps = _bound_for(A)
        X, M = _make_positive(A, max_steps)
        runs = positive_factorization(X)
        # rotate the cyclic word to start with L and end with R
        if runs[0][0] == "R":
            first = runs.pop(0)
            M = compose(inverse(_run_matrix(first)), M)
            if runs[-1][0] == "R":
                runs[-1] = ("R", runs[-1][1] + first[1])
            else:
                runs.append(first)
        if runs[-1][0] == "L":
            last = runs.pop()
            M = compose(_run_matrix(last), M)
            runs[0] = ("L", runs[0][1] + last[1])
    reduced = conjugate(A, M)
    if not is_reduced(reduced):
        raise ReductionError(f"reduction of {A} produced non-reduced {reduced}")
    return reduced, M


def lls_period(A: Mat2Z) -> LLSPeriod:
    """LLS-period of the conjugacy class of A; trace < -2 uses -A."""
    t = A.trace
    if abs(t) <= 2:
        raise NotHyperbolicError(f"LLS-period is undefined for |trace| <= 2, got {t}")
    if t < 0:
        A = -A
    reduced, _ = reduce_hyperbolic(A)
    return lls_of_reduced(reduced)


def cyclic_equal(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff q is a rotation of p by an even offset."""
    p, q = tuple(p), tuple(q)
    if len(p) != len(q):
        return False
    return any(p[i:] + p[:i] == q for i in range(0, len(p), 2))


def is_conjugate(A: Mat2Z, B: Mat2Z) -> bool:
    if A.trace <= 2 or B.trace <= 2:
        raise NotHyperbolicError(
            f"conjugacy test needs traces > 2, got {A.trace} and {B.trace}"
        )
    if A.trace != B.trace:
        return False
    return cyclic_equal(lls_period(A), lls_period(B))


def find_conjugator(A: Mat2Z, B: Mat2Z) -> Optional[Mat2Z]:
    """M with M A M^-1 = B for traces > 2, or None when A and B are not conjugate.

    A reduced matrix is the product of blocks L^x R^y read off its period;
    rotating the period by 2k conjugates by the inverse of the first k blocks.
    """
    if A.trace <= 2 or B.trace <= 2:
        raise NotHyperbolicError(
            f"conjugacy test needs traces > 2, got {A.trace} and {B.trace}"
        )
    if A.trace != B.trace:
        return None
    ra, ma = reduce_hyperbolic(A)
    rb, mb = reduce_hyperbolic(B)
    pa, pb = lls_of_reduced(ra).terms, lls_of_reduced(rb).terms
    if len(pa) != len(pb):
        return None
    for i in range(0, len(pa), 2):
        if pa[i:] + pa[:i] == pb:
            head = IDENTITY
            for j in range(0, i, 2):
                head = compose(head, compose(power(L_MATRIX, pa[j]), power(R_MATRIX, pa[j + 1])))
            M = compose(compose(inverse(mb), inverse(head)), ma)
            if conjugate(A, M) != B:
                raise ReductionError(f"rotation conjugator failed for {A} and {B}")
            return M
    return None


# -- brute-force oracle --------------------------------------------------------

_GENERATORS = (S_MATRIX, T_MATRIX, inverse(T_MATRIX))


def conjugacy_ball(A: Mat2Z, depth: int) -> dict[Mat2Z, Mat2Z]:
    """All M A M^-1 with M a word of length <= depth in {S, T, T^-1}.

    Maps each conjugate to one conjugator reaching it. States are
    deduplicated by the conjugated matrix, which reaches the same set as
    deduplicating by M.
    """
    seen = {A: IDENTITY}
    frontier = [A]
    for _ in range(depth):
        nxt = []
        for X in frontier:
            M = seen[X]
            for g in _GENERATORS:
                Y = conjugate(X, g)
                if Y not in seen:
                    seen[Y] = compose(g, M)
                    nxt.append(Y)
        frontier = nxt
        if not frontier:
            break
    return seen


def brute_force_conjugate(A: Mat2Z, B: Mat2Z, bound: int) -> Optional[Mat2Z]:
    """Search for M of word length <= bound in {S, T, T^-1} with M A M^-1 = B.

    Meets in the middle: a length-bound word splits as M2^-1 M1 with both
    halves of length <= ceil(bound / 2), and conjugation by S^-1 equals
    conjugation by S, so inverting a half keeps its length.
    """
    if A == B:
        return IDENTITY
    if A.trace != B.trace:
        return None
    left = conjugacy_ball(A, (bound + 1) // 2)
    right = conjugacy_ball(B, bound // 2)
    if len(right) < len(left):
        common = next((X for X in right if X in left), None)
    else:
        common = next((X for X in left if X in right), None)
    if common is None:
        return None
    M = compose(inverse(right[common]), left[common])
    assert conjugate(A, M) == B
    return M


def reduced_matrices(max_trace: int) -> list[Mat2Z]:
    """Every reduced matrix with trace <= max_trace, by direct enumeration."""
    out = []
    for a in range(1, max_trace):
        for c in range(a, max_trace):
            for d in range(c + 1, max_trace - a + 1):
                num = a * d - 1
                if num % c == 0:
                    out.append(Mat2Z(a, num // c, c, d))
    return out
