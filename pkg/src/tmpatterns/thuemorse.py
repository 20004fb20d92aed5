"""The Thue-Morse word t = abbabaabbaababba... and its finite segments.

Everything here is driven by one append-only prefix cache that is grown by
applying MU to the current power-of-two prefix.  Membership of a word of
length k in the factor language of t is decided by looking for it in the
prefix of length 2**min_generation(k), which is exact.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import InternalConsistencyError, OutOfRangeError
from .morphisms import MU, mu_power
from .words import Word, WordLike, binary_text

MAX_PREFIX = int(os.environ.get("TMPATTERNS_MAX_PREFIX", str(2**25)))


class _PrefixCache:
    """Holds MU^g(a) for the largest generation g requested so far."""

    def __init__(self):
        self._lock = threading.Lock()
        self._text = "a"

    def get(self, length: int) -> str:
        text = self._text
        if len(text) >= length:
            return text
        with self._lock:
            while len(self._text) < length:
                # one MU step doubles the prefix; readers keep the old string
                self._text = MU.apply_text(self._text)
            return self._text


_CACHE = _PrefixCache()


def _generation_for(length: int) -> int:
    return (length - 1).bit_length()


def prefix_text(length: int) -> str:
    """The first ``length`` letters of t as a plain string."""
    if not 1 <= length <= MAX_PREFIX:
        raise OutOfRangeError(f"prefix length must be in 1..{MAX_PREFIX}, got {length}")
    text = _CACHE.get(length)
    return text if len(text) == length else text[:length]


def tm_letter(i: int) -> str:
    """Letter of t at 0-based position ``i``, from the parity of the binary digits of i."""
    return "a" if bin(i).count("1") % 2 == 0 else "b"


@dataclass(frozen=True)
class TmPrefix:
    length: int
    letters: Word
    generation: int

    def __str__(self) -> str:
        return self.letters.text


def tm_prefix(n: int) -> TmPrefix:
    text = prefix_text(n)
    return TmPrefix(n, Word(text), _generation_for(n))


def min_generation(k: int) -> int:
    """Least n such that every segment of length k is a factor of MU^n(a)."""
    if k < 1:
        raise OutOfRangeError("word length must be >= 1")
    if k == 1:
        return 1
    if k == 2:
        return 3
    return 2 + (k - 2).bit_length()  # 2 + ceil(log2(k - 1))


def is_segment_text(text: str) -> bool:
    """Segment test on a raw string already known to be over {a,b}."""
    return text in prefix_text(1 << min_generation(len(text)))


def is_segment(w: WordLike) -> bool:
    """True iff ``w`` is a factor of t."""
    return is_segment_text(binary_text(w))


def first_occurrence(w: WordLike) -> Optional[int]:
    """Position of the first occurrence of ``w`` in t, or None if it is not a segment."""
    text = binary_text(w)
    pos = prefix_text(1 << min_generation(len(text))).find(text)
    return None if pos < 0 else pos


def minimality_witness(n: int) -> Word:
    """A segment of length 2**(n-3) + 2 that is not a factor of MU^(n-1)(a).

    Built as last_letter(MU^(n-3)(b)) + MU^(n-3)(a) + b.
    """
    if n < 3:
        raise OutOfRangeError("minimality witness needs n >= 3")
    img_a, img_b = mu_power(n - 3).images
    return Word(img_b[-1] + img_a + "b")


@lru_cache(maxsize=None)
def segment_texts(k: int) -> tuple[str, ...]:
    if k < 1:
        raise OutOfRangeError("segment length must be >= 1")
    text = prefix_text(1 << min_generation(k))
    return tuple(sorted({text[i:i + k] for i in range(len(text) - k + 1)}))


def segments_of_length(k: int) -> list[Word]:
    """All segments of t of length k, sorted lexicographically."""
    return [Word(s) for s in segment_texts(k)]


def segments_up_to(max_len: int) -> list[str]:
    """Segment texts of every length 1..max_len, length-then-lex."""
    return [s for k in range(1, max_len + 1) for s in segment_texts(k)]


def is_special(u: WordLike) -> bool:
    """True iff both ``ua`` and ``ub`` are segments."""
    text = binary_text(u)
    return is_segment_text(text + "a") and is_segment_text(text + "b")


class SquareRoot(NamedTuple):
    base: Word
    n: int


def classify_square_root(u: WordLike) -> Optional[SquareRoot]:
    """If ``uu`` is a segment, the (x, n) with x in {a, b, aba, bab} and u = MU^n(x)."""
    text = binary_text(u)
    if not is_segment_text(text + text):
        return None
    size = len(text)
    n = (size & -size).bit_length() - 1
    odd = size >> n
    if odd == 1:
        bases = ("a", "b")
    elif odd == 3:
        bases = ("aba", "bab")
    else:
        bases = ()
    for x in bases:
        if _mu_power_text(x, n) == text:
            return SquareRoot(Word(x), n)
    raise InternalConsistencyError(f"{text}{text} is a segment but {text} is not MU^n of a, b, aba or bab")


def _mu_power_text(x: str, n: int) -> str:
    return mu_power(n).apply_text(x)


def mu_preimage(w: WordLike) -> Optional[Word]:
    """The unique v with MU(v) = w, if w splits into blocks ab / ba."""
    text = binary_text(w)
    if len(text) % 2:
        return None
    out = []
    for i in range(0, len(text), 2):
        block = text[i:i + 2]
        if block == "ab":
            out.append("a")
        elif block == "ba":
            out.append("b")
        else:
            return None
    return Word("".join(out))


def aligned_occurrences(n: int, x: str, prefix_len: int) -> list[int]:
    """Start positions of MU^(n+1)(x) in the prefix of t of length ``prefix_len``.

    Every occurrence must start at a multiple of 2**n; a misaligned one
    raises InternalConsistencyError instead of being dropped.
    """
    if n < 0:
        raise OutOfRangeError("n must be >= 0")
    if x not in ("a", "b"):
        raise OutOfRangeError(f"x must be a letter of 'ab', got {x!r}")
    block = 1 << (n + 1)
    if block > prefix_len:
        raise OutOfRangeError(f"MU^{n + 1}({x}) has length {block} > prefix length {prefix_len}")
    needle = _mu_power_text(x, n + 1)
    hay = prefix_text(prefix_len)
    found = []
    pos = hay.find(needle)
    while pos >= 0:
        if pos % (1 << n):
            raise InternalConsistencyError(f"MU^{n + 1}({x}) occurs at {pos}, not a multiple of {1 << n}")
        found.append(pos)
        pos = hay.find(needle, pos + 1)
    return found


def recurrence_window(k: int) -> int:
    """Least l such that every segment of length l contains every segment of length k.

    l = 9 * 2**r + k - 1 where 2**r + 2 <= k <= 2**(r+1) + 1.
    """
    if k < 3:
        raise OutOfRangeError("recurrence window is defined for k >= 3")
    r = (k - 2).bit_length() - 1
    return 9 * (1 << r) + k - 1

