"""Patterns of the Thue-Morse word and the words it avoids.

A word ``p`` over any alphabet is a pattern of t when some nonerasing
morphism maps it onto a segment of t; otherwise t avoids it.  For binary
words two independent routes decide this:

* :func:`is_unavoidable_binary` -- the closed form: segments of t plus the
  two exceptional words aabaa and bbabb;
* :func:`is_avoided_via_ideal` -- membership in the fully invariant ideal
  spanned by an explicit generating set, by matching morphic images of generators
  inside the word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import OutOfRangeError
from .morphisms import Morphism, candidate_images, mu_power
from .thuemorse import is_segment_text, first_occurrence, prefix_text
from .words import BINARY, Word, WordLike, as_word, binary_text, length_lex_key

FIXED_GENERATORS = ("aaa", "ababa", "aabaab", "abbabb")
EXCEPTIONAL_WORDS = ("aabaa", "bbabb")


def family_k_generator(k: int) -> Word:
    """last_letter(MU^k(a)) + MU^k(aba) + a, for k >= 1."""
    if k < 1:
        raise OutOfRangeError("k-family starts at k = 1")
    mu = mu_power(k)
    return Word(mu.images[0][-1] + mu.apply_text("aba") + "a")


def family_m_generator(m: int) -> Word:
    """last_letter(MU^m(a)) + MU^m(bab) + a, for m >= 2."""
    if m < 2:
        raise OutOfRangeError("m-family starts at m = 2")
    mu = mu_power(m)
    return Word(mu.images[0][-1] + mu.apply_text("bab") + "a")


@dataclass(frozen=True)
class GeneratorSet:
    fixed: tuple[Word, ...]
    family_k: tuple[tuple[int, Word], ...]
    family_m: tuple[tuple[int, Word], ...]
    cutoff_len: int

    def all(self) -> list[Word]:
        words = list(self.fixed) + [g for _, g in self.family_k] + [g for _, g in self.family_m]
        return sorted(words, key=length_lex_key)

    def __iter__(self):
        return iter(self.all())

    def __len__(self) -> int:
        return len(self.fixed) + len(self.family_k) + len(self.family_m)


def shur_generators(max_len: int) -> GeneratorSet:
    """Every generator of the avoided-word ideal with length <= max_len.

    The k- and m-family members have length 3 * 2**k + 2.
    """
    if max_len < 3:
        raise OutOfRangeError("max_len must be >= 3")
    fixed = tuple(Word(g) for g in FIXED_GENERATORS if len(g) <= max_len)
    fam_k = []
    k = 1
    while 3 * (1 << k) + 2 <= max_len:
        fam_k.append((k, family_k_generator(k)))
        k += 1
    fam_m = []
    m = 2
    while 3 * (1 << m) + 2 <= max_len:
        fam_m.append((m, family_m_generator(m)))
        m += 1
    return GeneratorSet(fixed, tuple(fam_k), tuple(fam_m), max_len)


def _match_at(w: str, p: str, start: int) -> Optional[dict[str, str]]:
    # Left-to-right backtracking over image lengths.  rest[j][x] counts the
    # occurrences of x in p[j:], which bounds how long a fresh image can be.
    n = len(w)
    letters = sorted(set(p))
    rest = [dict.fromkeys(letters, 0) for _ in range(len(p) + 1)]
    for j in range(len(p) - 1, -1, -1):
        rest[j].update(rest[j + 1])
        rest[j][p[j]] += 1
    assign: dict[str, str] = {}

    def solve(j: int, pos: int) -> bool:
        if j == len(p):
            return True
        x = p[j]
        img = assign.get(x)
        if img is not None:
            return w.startswith(img, pos) and solve(j + 1, pos + len(img))
        counts = rest[j]
        base = sum(c * (len(assign[y]) if y in assign else 1) for y, c in counts.items())
        longest = (n - pos - base) // counts[x] + 1
        for size in range(1, longest + 1):
            assign[x] = w[pos:pos + size]
            if solve(j + 1, pos + size):
                return True
        del assign[x]
        return False

    return dict(assign) if solve(0, start) else None


def find_instance(w: str, p: str) -> Optional[tuple[dict[str, str], int]]:
    """First (images, start) with the morphic image of ``p`` occurring in ``w`` at ``start``."""
    for start in range(len(w) - len(p) + 1):
        images = _match_at(w, p, start)
        if images is not None:
            return images, start
    return None


def contains_pattern_instance(w: WordLike, p: WordLike) -> Optional[Morphism]:
    """A nonerasing morphism mapping ``p`` onto a factor of ``w``, if any.

    The search is exhaustive.  Letters of p's alphabet that do not occur in
    ``p`` are sent to the first letter of the target alphabet.
    """
    w = as_word(w)
    p = as_word(p)
    found = find_instance(w.text, p.text)
    if found is None:
        return None
    images, _ = found
    filler = w.alphabet.letters[0]
    return Morphism(p.alphabet, w.alphabet, tuple(images.get(x, filler) for x in p.alphabet.letters))


class IdealInstance(NamedTuple):
    generator: Word
    morphism: Morphism
    position: int


def find_ideal_instance(w: WordLike, generators: Optional[Iterable[WordLike]] = None) -> Optional[IdealInstance]:
    """First generator (length-lex) having a morphic image inside ``w``.

    Nonerasing morphisms never shorten a word, so only generators no longer
    than ``w`` can occur, and the default generator set is cut off at |w|.
    """
    text = binary_text(w)
    if generators is None:
        gens = [g.text for g in shur_generators(max(3, len(text))).all()]
    else:
        gens = sorted((binary_text(g) for g in generators), key=length_lex_key)
    for g in gens:
        if len(g) > len(text):
            break
        found = find_instance(text, g)
        if found is not None:
            images, pos = found
            filler = "a"
            phi = Morphism(BINARY, BINARY, (images.get("a", filler), images.get("b", filler)))
            return IdealInstance(Word(g), phi, pos)
    return None


def is_avoided_via_ideal(w: WordLike, generators: Optional[Iterable[WordLike]] = None) -> bool:
    return find_ideal_instance(w, generators) is not None


def is_unavoidable_binary(w: WordLike) -> bool:
    """True iff ``w`` is aabaa, bbabb or a segment of t."""
    text = binary_text(w)
    return text in EXCEPTIONAL_WORDS or is_segment_text(text)


def unavoidability_reason(w: WordLike) -> str:
    """One of ``exception-word``, ``segment`` or ``avoided``."""
    text = binary_text(w)
    if text in EXCEPTIONAL_WORDS:
        return "exception-word"
    if is_segment_text(text):
        return "segment"
    return "avoided"


@dataclass(frozen=True)
class Witness:
    morphism: Morphism
    image: Word
    position: int


def _pools(pattern: str, source_letters: str, max_image_len: int) -> list[tuple[str, ...]]:
    # The image of every letter occurring in the pattern is a factor of the
    # image, so it must itself be a segment.  Filtering keeps the order.
    pool = candidate_images(max_image_len)
    seg_pool = tuple(s for s in pool if is_segment_text(s))
    used = set(pattern)
    return [seg_pool if x in used else pool for x in source_letters]


def find_witness(p: WordLike, max_image_len: int, prefix_len: int = 1 << 15) -> Optional[Witness]:
    """First morphism (enumeration order) sending ``p`` onto a segment of t.

    A bounded search: None only means no witness with images of length
    <= max_image_len exists.  The reported position is the first
    occurrence of the image in t, located in a prefix of length at least
    ``prefix_len``.
    """
    if max_image_len < 1:
        raise OutOfRangeError("max_image_len must be >= 1")
    p = as_word(p)
    source = p.alphabet
    hay = prefix_text(prefix_len)
    for images in itertools.product(*_pools(p.text, source.letters, max_image_len)):
        table = {ord(x): img for x, img in zip(source.letters, images)}
        image = p.text.translate(table)
        if is_segment_text(image):
            pos = hay.find(image)
            if pos < 0:
                pos = first_occurrence(image)
            return Witness(Morphism(source, BINARY, images), Word(image), pos)
    return None


def suffix_divergence(i: int, j: int, horizon: int) -> Optional[int]:
    """Least d < horizon with t[i+d] != exchange(t)[j+d], or None within the horizon.

    Works on finite windows only; None never claims the suffixes agree forever.
    """
    if i < 0 or j < 0:
        raise OutOfRangeError("shifts must be >= 0")
    if horizon < 1:
        raise OutOfRangeError("horizon must be >= 1")
    t = prefix_text(max(i, j) + horizon)
    # exchange(t)[j+d] differs from t[i+d] exactly when t[j+d] == t[i+d]
    for d in range(horizon):
        if t[i + d] == t[j + d]:
            return d
    return None
