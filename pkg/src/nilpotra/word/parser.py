"""Grammar for group words and generator substitutions.

Words are written over ``x1, x2, ...``; ``^`` raises the preceding atom to an
integer power, ``(...)`` groups and ``[u,v,...]`` is a left-normed commutator
expanded with ``[u,v] = u v u^-1 v^-1``. Substitutions are semicolon separated
``xi -> word`` clauses.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Tuple, Union

import pyparsing as pp

from nilpotra.errors import GeneratorRangeError, ResourceLimitError, WordSyntaxError
from nilpotra.parameters import DEFAULT_MAX_WORD_LEN
from nilpotra.word.word import Word, left_normed_word

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Generator:
    index: int
    loc: int


@dataclass(frozen=True)
class _Power:
    base: "_Node"
    exp: int


@dataclass(frozen=True)
class _Bracket:
    entries: Tuple["_Sequence", ...]


@dataclass(frozen=True)
class _Sequence:
    terms: Tuple["_Node", ...]


_Node = Union[_Generator, _Power, _Bracket, _Sequence]


def _generator_action(s: str, loc: int, toks: pp.ParseResults) -> _Generator:
    return _Generator(int(toks[0][1:]), loc)


def _term_action(toks: pp.ParseResults) -> Any:
    if len(toks) == 2:
        return _Power(toks[0], int(toks[1]))
    return toks[0]


@lru_cache(maxsize=None)
def _grammar() -> Tuple[pp.ParserElement, pp.ParserElement]:
    integer = pp.Regex(r"-?\d+")
    generator = pp.Regex(r"x\d+").set_parse_action(_generator_action)
    word = pp.Forward()
    bracket = (
        pp.Suppress("[")
        + word
        + pp.OneOrMore(pp.Suppress(",") + word)
        + pp.Suppress("]")
    ).set_parse_action(lambda toks: _Bracket(tuple(toks)))
    paren = pp.Suppress("(") + word + pp.Suppress(")")
    atom = generator | bracket | paren
    term = (atom + pp.Optional(pp.Suppress("^") + integer)).set_parse_action(
        _term_action
    )
    word <<= pp.ZeroOrMore(term).set_parse_action(
        lambda toks: _Sequence(tuple(toks))
    )
    clause = pp.Group(generator + pp.Suppress("->") + word)
    substitution = pp.Optional(clause) + pp.ZeroOrMore(
        pp.Suppress(";") + pp.Optional(clause)
    )
    return word, substitution


class _Evaluator:
    """Expands a parse tree into a freely reduced word."""

    def __init__(self, rank: int, max_len: int) -> None:
        self.rank = rank
        self.max_len = max_len

    def __call__(self, node: _Node) -> Word:
        if isinstance(node, _Generator):
            return Word.generator(self.generator_index(node))
        if isinstance(node, _Sequence):
            result = Word()
            for term in node.terms:
                result = result * self(term)
            return result
        if isinstance(node, _Bracket):
            return self._bounded(left_normed_word(*(self(e) for e in node.entries)))
        base = node.base
        if isinstance(base, _Generator):
            return Word.generator(self.generator_index(base), node.exp)
        word = self(base)
        if len(word) * abs(node.exp) > self.max_len:
            raise ResourceLimitError(
                "max_word_len", self.max_len, len(word) * abs(node.exp)
            )
        return self._bounded(word**node.exp)

    def generator_index(self, node: _Generator) -> int:
        if node.index < 1 or node.index > self.rank:
            raise GeneratorRangeError(node.index, self.rank)
        return node.index

    def _bounded(self, word: Word) -> Word:
        if len(word) > self.max_len:
            raise ResourceLimitError("max_word_len", self.max_len, len(word))
        return word


def _parse(element: pp.ParserElement, text: str) -> pp.ParseResults:
    try:
        return element.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise WordSyntaxError(str(exc.msg), exc.loc, exc.lineno, exc.col) from None


def parse_word(text: str, rank: int, max_len: int = DEFAULT_MAX_WORD_LEN) -> Word:
    """Parse ``text`` into the free reduction of the word it denotes.

    Raises:
        WordSyntaxError: the text does not follow the grammar
        GeneratorRangeError: a generator index is outside 1..rank
        ResourceLimitError: the expansion would exceed ``max_len`` syllables
    """
    word, _ = _grammar()
    result = _parse(word, text)
    if not result:
        return Word()
    return _Evaluator(rank, max_len)(result[0])


def parse_substitution(
    text: str, rank: int, max_len: int = DEFAULT_MAX_WORD_LEN
) -> Dict[int, Word]:
    """Parse ``x1 -> word; x2 -> word`` into a generator to word mapping.

    Generators that are not mentioned are absent from the result.
    """
    _, substitution = _grammar()
    evaluate = _Evaluator(rank, max_len)
    mapping: Dict[int, Word] = {}
    for clause in _parse(substitution, text):
        target, image = clause[0], clause[1]
        index = evaluate.generator_index(target)
        if index in mapping:
            raise WordSyntaxError(f"x{index} is mapped twice", target.loc)
        mapping[index] = evaluate(image)
    log.debug(f"parsed substitution of {len(mapping)} generator(s)")
    return mapping
