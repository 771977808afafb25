"""Words in the autoequivalence generators of D^b(E) and their action on N(E).

Grammar (whitespace separated, left to right)::

    token := "S" | "T" | "[" int "]" | "L0" | "AUT"     (S and T take "^" int)

A word ``A B`` applies ``B`` first; its induced matrix is ``[A] @ [B]``.
``[n]`` is the shift, ``L0`` tensoring by a degree-0 line bundle and ``AUT``
a pullback along a curve automorphism. The last two act trivially on N(E).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .sl2z import IDENTITY, MINUS_IDENTITY, S_MATRIX, T_MATRIX, Mat2Z, compose, power


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Kind(Enum):
    S = "S"
    T = "T"
    SHIFT = "Shift"
    TWIST0 = "Twist0"
    AUTO = "Auto"


@dataclass(frozen=True)
class Token:
    kind: Kind
    exponent: int = 1

    def __post_init__(self):
        if self.kind in (Kind.S, Kind.T) and self.exponent == 0:
            raise ValueError(f"{self.kind.value} exponent must be nonzero")

    def matrix(self) -> Mat2Z:
        if self.kind is Kind.S:
            return power(S_MATRIX, self.exponent)
        if self.kind is Kind.T:
            return power(T_MATRIX, self.exponent)
        if self.kind is Kind.SHIFT:
            return MINUS_IDENTITY if self.exponent % 2 else IDENTITY
        return IDENTITY

    def __str__(self) -> str:
        if self.kind is Kind.SHIFT:
            return f"[{self.exponent}]"
        if self.kind is Kind.TWIST0:
            return "L0"
        if self.kind is Kind.AUTO:
            return "AUT"
        if self.exponent == 1:
            return self.kind.value
        return f"{self.kind.value}^{self.exponent}"


class Word(tuple):
    """Immutable sequence of tokens, leftmost applied last."""

    def __new__(cls, tokens: Iterable[Token] = ()):
        return super().__new__(cls, tokens)

    def __add__(self, other) -> "Word":
        return Word(tuple(self) + tuple(other))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


_TOKEN_RE = re.compile(
    r"""
    (?P<st>[ST])(?:\^(?P<exp>[+-]?\d+))?
    | \[(?P<shift>[+-]?\d+)\]
    | (?P<l0>L0)
    | (?P<aut>AUT)
    """,
    re.VERBOSE,
)


def parse_word(text: str) -> Word:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected {text[pos:pos + 8]!r}", pos)
        if m.group("st"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            if exp == 0:
                raise WordSyntaxError("zero exponent", m.start("exp"))
            tokens.append(Token(Kind(m.group("st")), exp))
        elif m.group("shift") is not None:
            tokens.append(Token(Kind.SHIFT, int(m.group("shift"))))
        elif m.group("l0"):
            tokens.append(Token(Kind.TWIST0))
        else:
            tokens.append(Token(Kind.AUTO))
        pos = m.end()
        if pos < n and not text[pos].isspace():
            raise WordSyntaxError(f"expected whitespace, found {text[pos]!r}", pos)
    return Word(tokens)


def format_word(w: Sequence[Token]) -> str:
    return " ".join(str(tok) for tok in w)


def evaluate(w: Sequence[Token]) -> Mat2Z:
    """Induced matrix on N(E) in the basis ([O_E], [O_x0])."""
    result = IDENTITY
    for tok in w:
        result = compose(result, tok.matrix())
    return result


def validate_type_m(m: Sequence[int]) -> tuple[int, ...]:
    m = tuple(m)
    if len(m) < 2 or len(m) % 2:
        raise ValueError(f"type-m sequence must have even length >= 2, got {len(m)}")
    if any(not isinstance(x, int) or x < 1 for x in m):
        raise ValueError(f"type-m entries must be positive integers, got {m}")
    return m


def type_m_word(m: Sequence[int]) -> Word:
    """The word S^2 T^m_2n S T^-m_2n-1 S ... T^m_2 S T^-m_1 S.

    ``m`` is given as (m_2n, ..., m_1). The leading S^2 is present exactly
    when n = len(m) / 2 is odd.
    """
    m = validate_type_m(m)
    n = len(m) // 2
    tokens = [Token(Kind.S, 2)] if n % 2 else []
    for i, exp in enumerate(m):
        tokens.append(Token(Kind.T, exp if i % 2 == 0 else -exp))
        tokens.append(Token(Kind.S))
    return Word(tokens)


def simplify(w: Sequence[Token]) -> Word:
    """Shorten a word without changing its matrix.

    Only valid modulo the kernel of Auteq -> SL(2, Z): L0 and AUT tokens are
    dropped, S exponents reduced mod 4 and shifts mod 2.
    """
    out: list[Token] = []
    for tok in w:
        if tok.kind in (Kind.TWIST0, Kind.AUTO):
            continue
        if out and out[-1].kind is tok.kind:
            exp = out.pop().exponent + tok.exponent
        else:
            exp = tok.exponent
        if tok.kind is Kind.S:
            exp %= 4
        elif tok.kind is Kind.SHIFT:
            exp %= 2
        if exp:
            out.append(Token(tok.kind, exp))
    return Word(out)
