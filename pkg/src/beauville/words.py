"""Parser/evaluator for generator words like "ab^2" or "(ab)^3(ba)^2b^3".

Grammar:  W := term+ ; term := atom ['^' exponent] ;
          atom := 'a' | 'b' | '(' W ')' ; exponent := nonzero integer.
Juxtaposition is the group product; conjugation is applied by callers, not
by the grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union


class ParseError(ValueError):
    """Carries the 0-based position and a description of what was expected."""

    def __init__(self, position: int, expected: str):
        super().__init__(f"position {position}: expected {expected}")
        self.position = position
        self.expected = expected


Atom = Union[str, "WordExpr"]


@dataclass(frozen=True)
class WordExpr:
    terms: Tuple[Tuple[Atom, int], ...]

    def __str__(self) -> str:
        out = []
        for atom, exp in self.terms:
            text = atom if isinstance(atom, str) else f"({atom})"
            out.append(text if exp == 1 else f"{text}^{exp}")
        return "".join(out)


def parse_word(text: str) -> WordExpr:
    expr, pos = _parse_sequence(text, 0)
    if pos != len(text):
        raise ParseError(pos, "'a', 'b', '(' or end of input")
    return expr


def _parse_sequence(text: str, pos: int) -> Tuple[WordExpr, int]:
    terms: List[Tuple[Atom, int]] = []
    while pos < len(text) and text[pos] not in ")":
        atom, pos = _parse_atom(text, pos)
        exp = 1
        if pos < len(text) and text[pos] == "^":
            exp, pos = _parse_exponent(text, pos + 1)
        terms.append((atom, exp))
    if not terms:
        raise ParseError(pos, "'a', 'b' or '('")
    return WordExpr(tuple(terms)), pos


def _parse_atom(text: str, pos: int) -> Tuple[Atom, int]:
    ch = text[pos]
    if ch in "ab":
        return ch, pos + 1
    if ch == "(":
        inner, pos = _parse_sequence(text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise ParseError(pos, "')'")
        return inner, pos + 1
    raise ParseError(pos, "'a', 'b' or '('")


def _parse_exponent(text: str, pos: int) -> Tuple[int, int]:
    start = pos
    if pos < len(text) and text[pos] == "-":
        pos += 1
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start or (text[start] == "-" and pos == start + 1):
        raise ParseError(start, "exponent")
    value = int(text[start:pos])
    if value == 0:
        raise ParseError(start, "nonzero exponent")
    return value, pos


def evaluate_word(gens: Tuple[object, object], word: Union[str, WordExpr]):
    """Homomorphic image of the word at (a, b); elements need * and **."""
    if isinstance(word, str):
        word = parse_word(word)
    a, b = gens
    result = None
    for atom, exp in word.terms:
        value = {"a": a, "b": b}[atom] if isinstance(atom, str) else evaluate_word(gens, atom)
        value = value ** exp
        result = value if result is None else result * value
    return result
