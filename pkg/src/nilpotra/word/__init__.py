"""Group words: reduction, printing and parsing."""

from typing import List

from nilpotra.word.parser import parse_substitution, parse_word
from nilpotra.word.word import (
    Letter,
    Word,
    commutator_word,
    format_word,
    free_reduce,
    left_normed_word,
)

__all__: List[str] = [
    "Letter",
    "Word",
    "commutator_word",
    "format_word",
    "free_reduce",
    "left_normed_word",
    "parse_substitution",
    "parse_word",
]
