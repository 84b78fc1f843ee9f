import pytest

from beauville.permgrp import Permutation
from beauville.words import ParseError, evaluate_word, parse_word


def cyc(n, *cycles):
    return Permutation.from_cycles(n, list(cycles))


def test_parse_and_evaluate_simple():
    a = cyc(11, (2, 10), (4, 11), (5, 7), (8, 9))
    b = cyc(11, (1, 4, 3, 8), (2, 5, 6, 9))
    assert evaluate_word((a, b), "ab^2") == a * b * b
    assert evaluate_word((a, b), "a") == a
    assert evaluate_word((a, b), "b^-1") == b.inverse()
    assert evaluate_word((a, b), "(ab)^3(ba)^2b^3") == (a * b) ** 3 * (b * a) ** 2 * b ** 3
    assert evaluate_word((a, b), "(ab^2a)^2") == (a * b * b * a) ** 2


def test_parse_structure():
    w = parse_word("ab^2")
    assert str(w) == "ab^2"
    nested = parse_word("(ab)^3b")
    assert str(nested) == "(ab)^3b"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_word("b^")
    assert err.value.position == 2 and "exponent" in err.value.expected
    with pytest.raises(ParseError) as err:
        parse_word("abc")
    assert err.value.position == 2
    with pytest.raises(ParseError) as err:
        parse_word("(ab")
    assert err.value.expected == "')'"
    with pytest.raises(ParseError) as err:
        parse_word("a^0")
    assert "nonzero" in err.value.expected
    with pytest.raises(ParseError):
        parse_word("")
    with pytest.raises(ParseError):
        parse_word("a^-")


def test_evaluation_is_homomorphic():
    a = cyc(5, (1, 2, 3, 4, 5))
    b = cyc(5, (1, 2, 3))
    for text in ("ab", "a^2b^-2", "(ab)^4", "b(ab)^2a^-1"):
        w = parse_word(text)
        direct = evaluate_word((a, b), w)
        swapped = evaluate_word((b, a), w)  # evaluation depends on the slot
        assert direct.degree == 5 and swapped.degree == 5
    assert evaluate_word((a, b), "a^5").is_identity()
