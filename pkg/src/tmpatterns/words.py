"""Finite nonempty words over small declared alphabets.

Words are immutable values backed by a plain ``str``; every other module
does its heavy lifting on the raw text and only wraps results in
:class:`Word` at the API boundary.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .errors import AlphabetMismatchError, EmptyWordError

_LOWER = frozenset(string.ascii_lowercase)
_SWAP = str.maketrans("ab", "ba")


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct lowercase ASCII letters.

    The declared order is the one used for lexicographic comparisons.
    """

    letters: str

    def __post_init__(self):
        if not 1 <= len(self.letters) <= 26:
            raise AlphabetMismatchError(f"alphabet size must be 1..26, got {self.letters!r}")
        if not set(self.letters) <= _LOWER:
            raise AlphabetMismatchError(f"alphabet letters must be lowercase ASCII: {self.letters!r}")
        if len(set(self.letters)) != len(self.letters):
            raise AlphabetMismatchError(f"duplicate letters in alphabet {self.letters!r}")

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        return cls(text.strip())

    def index(self, letter: str) -> int:
        return self.letters.index(letter)

    def __contains__(self, letter: object) -> bool:
        return isinstance(letter, str) and len(letter) == 1 and letter in self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.letters


BINARY = Alphabet("ab")


def infer_alphabet(text: str) -> Alphabet:
    """Binary if ``text`` only uses a and b, otherwise its sorted letters."""
    if set(text) <= {"a", "b"}:
        return BINARY
    return Alphabet("".join(sorted(set(text))))


@dataclass(frozen=True)
class Word:
    """A nonempty word; equality compares the letters and the alphabet."""

    text: str
    alphabet: Alphabet = BINARY

    def __post_init__(self):
        if not self.text:
            raise EmptyWordError("words are nonempty")
        stray = set(self.text) - set(self.alphabet.letters)
        if stray:
            raise AlphabetMismatchError(
                f"letters {''.join(sorted(stray))!r} not in alphabet {self.alphabet.letters!r}"
            )

    @classmethod
    def parse(cls, text: str, alphabet: Union[Alphabet, str, None] = None) -> "Word":
        text = text.strip()
        if isinstance(alphabet, str):
            alphabet = Alphabet(alphabet)
        return cls(text, alphabet or infer_alphabet(text))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(self.alphabet.letters.index(c) for c in self.text)

    @property
    def is_binary(self) -> bool:
        return self.alphabet == BINARY

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Length first, then lexicographic in alphabet order."""
        return (len(self.text), self.indices)

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[str]:
        return iter(self.text)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.text[item], self.alphabet)
        return self.text[item]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError("cannot concatenate words over different alphabets")
        return Word(self.text + other.text, self.alphabet)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        if self.alphabet == BINARY:
            return f"Word({self.text!r})"
        return f"Word({self.text!r}, {self.alphabet.letters!r})"


WordLike = Union[Word, str]


def as_word(w: WordLike, alphabet: Optional[Alphabet] = None) -> Word:
    if isinstance(w, Word):
        return w
    return Word.parse(w, alphabet)


def binary_text(w: WordLike) -> str:
    """Raw text of ``w``, insisting that it is a word over {a,b}."""
    if isinstance(w, Word):
        if w.alphabet != BINARY:
            raise AlphabetMismatchError(f"expected a word over 'ab', got alphabet {w.alphabet.letters!r}")
        return w.text
    if not w:
        raise EmptyWordError("words are nonempty")
    if not set(w) <= {"a", "b"}:
        raise AlphabetMismatchError(f"expected a word over 'ab', got {w!r}")
    return w


def length_lex_key(w: WordLike):
    if isinstance(w, Word):
        return w.sort_key()
    return (len(w), w)


def all_words(length: int, alphabet: Alphabet = BINARY) -> Iterator[str]:
    """Every word of the given length, in lexicographic (alphabet) order."""
    for letters in itertools.product(alphabet.letters, repeat=length):
        yield "".join(letters)


def words_up_to(max_length: int, alphabet: Alphabet = BINARY) -> Iterator[str]:
    for n in range(1, max_length + 1):
        yield from all_words(n, alphabet)


def last_letter(w: WordLike) -> str:
    return as_word(w).text[-1]


def exchange(w: WordLike) -> Word:
    """Swap a and b letterwise."""
    return Word(binary_text(w).translate(_SWAP))


def reverse(w: WordLike) -> Word:
    w = as_word(w)
    return Word(w.text[::-1], w.alphabet)


def variants(w: WordLike) -> frozenset[Word]:
    """The word, its reversal, its exchange and the exchange of its reversal."""
    text = binary_text(w)
    rev = text[::-1]
    return frozenset(Word(v) for v in (text, rev, text.translate(_SWAP), rev.translate(_SWAP)))


def contains_factor(w: WordLike, u: WordLike) -> Optional[int]:
    """Smallest start index of ``u`` inside ``w``, or None."""
    w, u = as_word(w), as_word(u)
    if w.alphabet != u.alphabet:
        raise AlphabetMismatchError("factor search needs both words over the same alphabet")
    pos = w.text.find(u.text)
    return None if pos < 0 else pos


def _has_periodic_run(text: str, needed) -> bool:
    # A factor of length p + needed(p) with period p is a run of `needed`
    # consecutive positions i where text[i] == text[i + p].  Any such run
    # covers a multiple of `needed`, so only those positions are probed.
    n = len(text)
    p = 1
    while p + needed(p) <= n:
        need = needed(p)
        last = n - p - 1
        for k in range(0, last + 1, need):
            if text[k] != text[k + p]:
                continue
            lo = k
            floor = max(0, k - need + 1)
            while lo > floor and text[lo - 1] == text[lo - 1 + p]:
                lo -= 1
            hi = k
            ceil = min(last, lo + need - 1)
            while hi < ceil and text[hi + 1] == text[hi + 1 + p]:
                hi += 1
            if hi - lo + 1 >= need:
                return True
        p += 1
    return False


def has_cube(w: WordLike) -> bool:
    """True iff some nonempty ``u`` has ``uuu`` as a factor of ``w``."""
    return _has_periodic_run(as_word(w).text, lambda p: 2 * p)


def has_overlap(w: WordLike) -> bool:
    """True iff ``w`` has a factor ``cvcvc`` with ``c`` a letter (``v`` may be empty)."""
    return _has_periodic_run(as_word(w).text, lambda p: p + 1)


def sorted_words(words: Iterable[WordLike]) -> list:
    return sorted(words, key=length_lex_key)
