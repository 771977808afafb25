import random

import pytest
from hypothesis import given, strategies as st

from curventropy.sl2z import IDENTITY, MINUS_IDENTITY, Mat2Z, compose, power
from curventropy.words import (
    Kind,
    Token,
    Word,
    WordSyntaxError,
    evaluate,
    format_word,
    parse_word,
    simplify,
    type_m_word,
)

from conftest import type_m


def test_parse_examples():
    w = parse_word("S^2 T^2 S T^-3 S")
    assert list(w) == [
        Token(Kind.S, 2),
        Token(Kind.T, 2),
        Token(Kind.S, 1),
        Token(Kind.T, -3),
        Token(Kind.S, 1),
    ]
    assert parse_word("") == Word()
    assert parse_word("   ") == Word()
    assert list(parse_word("[1] L0 AUT T^+2 [-3]")) == [
        Token(Kind.SHIFT, 1),
        Token(Kind.TWIST0),
        Token(Kind.AUTO),
        Token(Kind.T, 2),
        Token(Kind.SHIFT, -3),
    ]


@pytest.mark.parametrize(
    "text,pos",
    [("T^0", 2), ("S^-0", 2), ("X", 0), ("S T^", 3), ("ST", 1), ("S [1", 2), ("L1", 0), ("S^2x", 3)],
)
def test_parse_errors(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.position == pos


def test_round_trip_printer():
    text = "S^2 T^2 S T^-3 S [1] L0 AUT"
    assert format_word(parse_word(text)) == text
    assert format_word(parse_word("S^1  T^1")) == "S T"


def test_evaluate_examples():
    assert evaluate(parse_word("S")) == Mat2Z(0, 1, -1, 0)
    assert evaluate(parse_word("T")) == Mat2Z(1, 0, 1, 1)
    assert evaluate(parse_word("[1]")) == MINUS_IDENTITY
    assert evaluate(parse_word("S^2 T^2 S T^-3 S")) == Mat2Z(1, 3, 2, 7)
    assert evaluate(Word()) == IDENTITY
    assert evaluate(parse_word("L0 AUT")) == IDENTITY


def test_relations():
    S, T = evaluate(parse_word("S")), evaluate(parse_word("T"))
    assert power(S, 2) == MINUS_IDENTITY
    assert power(compose(T, S), 3) == MINUS_IDENTITY
    # S^2 = (-1)^*[-1] on N(E)
    assert evaluate(parse_word("S^2")) == evaluate(parse_word("AUT [-1]"))


def test_type_m_word_examples():
    assert format_word(type_m_word((2, 3))) == "S^2 T^2 S T^-3 S"
    assert format_word(type_m_word((1, 1, 1, 1))) == "T S T^-1 S T S T^-1 S"
    for bad in [(1, 1, 1), (), (1, 0), (2, -1), (1,)]:
        with pytest.raises(ValueError):
            type_m_word(bad)


def test_type_m_base_case_grid():
    for m2 in range(1, 11):
        for m1 in range(1, 11):
            assert evaluate(type_m_word((m2, m1))) == Mat2Z(1, m1, m2, m1 * m2 + 1)


def test_simplify_examples():
    assert simplify(parse_word("T^2 T^-2")) == Word()
    assert format_word(simplify(parse_word("S^5"))) == "S"
    assert simplify(parse_word("[2]")) == Word()
    assert format_word(simplify(parse_word("T S^4 T L0 [3] [1]"))) == "T^2"


tokens = st.one_of(
    st.builds(Token, st.just(Kind.S), st.integers(-6, 6).filter(bool)),
    st.builds(Token, st.just(Kind.T), st.integers(-6, 6).filter(bool)),
    st.builds(Token, st.just(Kind.SHIFT), st.integers(-4, 4)),
    st.just(Token(Kind.TWIST0)),
    st.just(Token(Kind.AUTO)),
)
words = st.lists(tokens, max_size=15).map(Word)


@given(words, words)
def test_evaluate_is_multiplicative(w1, w2):
    assert evaluate(w1 + w2) == compose(evaluate(w1), evaluate(w2))


@given(words)
def test_simplify_preserves_evaluation(w):
    s = simplify(w)
    assert evaluate(s) == evaluate(w)
    assert len(s) <= len(w)
    assert all(t.kind not in (Kind.TWIST0, Kind.AUTO) for t in s)
    assert simplify(s) == s


@given(words)
def test_printer_round_trip(w):
    assert parse_word(format_word(w)) == w


@given(st.integers(1, 50), st.integers(1, 50))
def test_type_m_n1_closed_form(m2, m1):
    assert evaluate(type_m_word((m2, m1))) == Mat2Z(1, m1, m2, m1 * m2 + 1)


def test_type_m_entries_positive():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = tuple(rng.randint(1, 6) for _ in range(2 * n))
        assert min(evaluate(type_m_word(m)).entries()) > 0


@given(type_m)
def test_type_m_sign_convention(m):
    # leading S^2 exactly for odd n
    w = type_m_word(m)
    assert (w[0] == Token(Kind.S, 2)) == ((len(m) // 2) % 2 == 1)
