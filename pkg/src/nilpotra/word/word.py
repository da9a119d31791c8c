"""Freely reduced group words over indexed generators x1, x2, ..."""

from typing import Iterable, Iterator, List, Tuple, Union

from nilpotra.errors import GeneratorRangeError, WordOverflowError

Letter = Tuple[int, int]

EXPONENT_MIN = -(2**63)
EXPONENT_MAX = 2**63 - 1


def _check_exponent(exp: int) -> int:
    if exp < EXPONENT_MIN or exp > EXPONENT_MAX:
        raise WordOverflowError(f"word exponent {exp} exceeds the 64-bit range")
    return exp


class Word:
    """An immutable freely reduced word.

    Letters are ``(generator, exponent)`` pairs with 1-based generator indices.
    Adjacent letters never share a generator and no exponent is zero; the
    constructor reduces whatever it is given.
    """

    __slots__ = ("_letters",)

    _letters: Tuple[Letter, ...]

    def __init__(self, letters: Iterable[Letter] = ()) -> None:
        stack: List[List[int]] = []
        for gen, exp in letters:
            if not isinstance(gen, int) or gen < 1:
                raise GeneratorRangeError(gen)
            _check_exponent(exp)
            if exp == 0:
                continue
            if stack and stack[-1][0] == gen:
                merged = _check_exponent(stack[-1][1] + exp)
                if merged == 0:
                    stack.pop()
                else:
                    stack[-1][1] = merged
            else:
                stack.append([gen, exp])
        self._letters = tuple((g, e) for g, e in stack)

    # constructors

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def generator(cls, index: int, exp: int = 1) -> "Word":
        return cls([(index, exp)])

    # accessors

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return self._letters

    def is_identity(self) -> bool:
        return not self._letters

    def letter_count(self) -> int:
        """Total number of generator occurrences, sum of |exp|."""
        return sum(abs(exp) for _, exp in self._letters)

    def max_generator(self) -> int:
        """Highest generator index used, 0 for the empty word."""
        return max((gen for gen, _ in self._letters), default=0)

    # group operations

    def inverse(self) -> "Word":
        return Word((gen, -exp) for gen, exp in reversed(self._letters))

    def __invert__(self) -> "Word":
        return self.inverse()

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._letters + other._letters)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Word()
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # python protocol

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self._letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def free_reduce(letters: Union[Word, Iterable[Letter]]) -> Word:
    """Freely reduce a raw letter sequence."""
    if isinstance(letters, Word):
        return letters
    return Word(letters)


def format_word(word: Word) -> str:
    """Print a word in the parser grammar; exponent 1 is omitted."""
    return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in word.letters)


def commutator_word(u: Word, v: Word) -> Word:
    """The commutator [u,v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()


def left_normed_word(*words: Word) -> Word:
    """The left-normed commutator [w1,...,ws] = [[w1,...,w(s-1)],ws]."""
    if len(words) < 2:
        raise ValueError("a commutator needs at least two entries")
    result = words[0]
    for w in words[1:]:
        result = commutator_word(result, w)
    return result
