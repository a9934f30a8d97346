"""
Generator words over the letters of the Party-Hecke algebra.

Text syntax: letters separated by whitespace, each written ``G(1)``,
``Ginv(2)``, ``F(1,3)`` or the short form ``G1``. Indices may be variable
names (``G(i)``) resolved through a binding when the word is parsed.
"""

import re
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from errors import IndexRangeError, ParseError

SINGLE_LETTERS = ('G', 'Ginv', 'F', 'H', 'Hinv', 'T', 'E', 'V')
PAIR_LETTERS = ('F', 'G')

_LETTER_RE = re.compile(r'^(Ginv|Hinv|G|F|H|T|E|V)\(?(\w+?)(?:,\s*(\w+))?\)?$')


@dataclass(frozen=True)
class Letter:
    """One generator: name plus one index (adjacent generator) or two (dual generator)."""
    name: str
    indices: Tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.name}({','.join(str(i) for i in self.indices)})"

    def validate(self, n: int) -> None:
        """
        Raises:
            IndexRangeError: index outside 1..n-1, or pair not 1 <= i < j <= n
        """
        if len(self.indices) == 1:
            i = self.indices[0]
            if not 1 <= i < n:
                raise IndexRangeError(f"{self} is not defined for n={n}", details={'n': n})
            return
        if self.name not in PAIR_LETTERS:
            raise IndexRangeError(f"{self.name} takes a single index", details={'letter': str(self)})
        i, j = self.indices
        if not 1 <= i < j <= n:
            raise IndexRangeError(f"{self} is not defined for n={n}", details={'n': n})


@dataclass(frozen=True)
class GeneratorWord:
    """Product of letters read left to right."""
    n: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            letter.validate(self.n)

    def __str__(self) -> str:
        return ' '.join(str(letter) for letter in self.letters) or '1'

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def parse(cls, text: str, n: int, binding: Optional[Dict[str, int]] = None) -> 'GeneratorWord':
        """
        Parse a word; '' and '1' give the empty word.

        Raises:
            ParseError: unknown letter or unbound variable
            IndexRangeError: index out of range for n
        """
        letters = []
        for token in text.split():
            if token == '1':
                continue
            letters.append(_parse_letter(token, binding or {}))
        return cls(n, tuple(letters))


def _resolve(token: str, binding: Dict[str, int], source: str) -> int:
    if token.isdigit():
        return int(token)
    if token in binding:
        return binding[token]
    raise ParseError(f"Unbound index {token!r} in {source!r}")


def _parse_letter(token: str, binding: Dict[str, int]) -> Letter:
    match = _LETTER_RE.match(token)
    if not match:
        raise ParseError(f"Unknown generator letter: {token!r}")
    name, first, second = match.groups()
    indices = (_resolve(first, binding, token),)
    if second is not None:
        indices += (_resolve(second, binding, token),)
    return Letter(name, indices)
