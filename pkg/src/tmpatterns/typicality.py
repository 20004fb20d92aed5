"""Typical and atypical segments of the Thue-Morse word.

A segment w is atypical when some endomorphism outside {MU^n, XI o MU^n}
still maps it onto a segment.  Up to variants, the atypical words are the
factors of aabab, abaaba and aabbaab.  Adding a zero to that finite set
gives a semigroup (products leaving the set collapse to zero) whose
factor order is exported as a Graphviz diagram.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

from .errors import AlphabetMismatchError, InternalConsistencyError, NotASegmentError
from .morphisms import Morphism, candidate_images, in_mu_xi_monoid
from .thuemorse import is_segment_text, segments_up_to
from .words import BINARY, Word, WordLike, binary_text, length_lex_key

MAXIMAL_ATYPICAL = ("aabab", "abaaba", "aabbaab")
CRITERION_REQUIRED = ("aab", "abb", "bba", "baa")
CRITERION_ONE_OF = ("aba", "bab")

_SWAP = str.maketrans("ab", "ba")

_VARIANT_MAPS = (
    ("identity", lambda s: s),
    ("reverse", lambda s: s[::-1]),
    ("exchange", lambda s: s.translate(_SWAP)),
    ("exchange-reverse", lambda s: s[::-1].translate(_SWAP)),
)


def _factors(text: str) -> set[str]:
    return {text[i:j] for i in range(len(text)) for j in range(i + 1, len(text) + 1)}


@lru_cache(maxsize=None)
def atypical_texts() -> frozenset[str]:
    words = set()
    for m in MAXIMAL_ATYPICAL:
        for _, f in _VARIANT_MAPS:
            words |= _factors(f(m))
    return frozenset(words)


def atypical_words() -> frozenset[Word]:
    """All atypical words: factors of the three maximal ones, closed under variants."""
    return frozenset(Word(s) for s in atypical_texts())


def is_atypical(w: WordLike) -> bool:
    return binary_text(w) in atypical_texts()


def satisfies_length3_criterion(w: WordLike) -> bool:
    """Contains aab, abb, bba, baa and at least one of aba, bab."""
    text = binary_text(w)
    return all(f in text for f in CRITERION_REQUIRED) and any(f in text for f in CRITERION_ONE_OF)


class Verdict(str, enum.Enum):
    TYPICAL = "typical"
    ATYPICAL = "atypical"
    NOT_A_SEGMENT = "not-a-segment"


@dataclass(frozen=True)
class TypicalityVerdict:
    word: Word
    verdict: Verdict
    evidence: dict = field(default_factory=dict, compare=False)


def membership_certificate(text: str) -> Optional[dict]:
    """Locate ``text`` as a factor of a variant of one of the maximal atypical words."""
    for m in MAXIMAL_ATYPICAL:
        for name, f in _VARIANT_MAPS:
            v = f(m)
            pos = v.find(text)
            if pos >= 0:
                return {"maximal": m, "variant": name, "variant_word": v, "position": pos}
    return None


def classify(w: WordLike) -> TypicalityVerdict:
    """Typical / atypical / not-a-segment, decided by the closed-form list.

    The length-3 criterion is only a sufficient condition for typicality and
    is used here as a cross-check.
    """
    text = binary_text(w)
    word = Word(text)
    if not is_segment_text(text):
        return TypicalityVerdict(word, Verdict.NOT_A_SEGMENT, {})
    criterion = satisfies_length3_criterion(text)
    if text in atypical_texts():
        if criterion:
            raise InternalConsistencyError(f"{text} satisfies the typicality criterion but is listed atypical")
        return TypicalityVerdict(word, Verdict.ATYPICAL, membership_certificate(text))
    found = [f for f in CRITERION_REQUIRED + CRITERION_ONE_OF if f in text]
    return TypicalityVerdict(word, Verdict.TYPICAL, {"criterion": criterion, "length3_found": found})


def brute_force_atypical_check(w: WordLike, max_image_len: int) -> Optional[Morphism]:
    """First endomorphism outside <XI, MU> with images <= max_image_len mapping w to a segment.

    Only a positive answer certifies anything; None is relative to the bound.
    Enumeration order is that of ``enumerate_morphisms``; images of letters
    occurring in ``w`` are restricted to segments up front since they are
    factors of the image of ``w``.
    """
    text = binary_text(w)
    if not is_segment_text(text):
        raise NotASegmentError(f"{text} is not a segment of the Thue-Morse word")
    pool = candidate_images(max_image_len)
    seg_pool = tuple(s for s in pool if is_segment_text(s))
    pools = [seg_pool if x in text else pool for x in "ab"]
    for img_a, img_b in itertools.product(*pools):
        image = text.translate({97: img_a, 98: img_b})
        if not is_segment_text(image):
            continue
        phi = Morphism(BINARY, BINARY, (img_a, img_b))
        if in_mu_xi_monoid(phi) is None:
            return phi
    return None


class _Zero:
    def __repr__(self) -> str:
        return "0"

    __str__ = __repr__


ZERO = _Zero()
Element = Union[Word, _Zero]


@dataclass(frozen=True)
class AtypicalSemigroup:
    """The atypical words plus an absorbing zero.

    ``u * v`` is the concatenation when it is still atypical and zero
    otherwise.  In the order drawn for it, ``u`` lies above ``v`` iff ``u``
    is a factor of ``v``; zero lies below everything.
    """

    words: tuple[Word, ...]

    @property
    def elements(self) -> tuple[Element, ...]:
        return self.words + (ZERO,)

    def __len__(self) -> int:
        return len(self.words) + 1

    def __contains__(self, item) -> bool:
        return item is ZERO or item in self.words

    def product(self, u: Element, v: Element) -> Element:
        if u is ZERO or v is ZERO:
            return ZERO
        uv = Word(u.text + v.text)
        return uv if uv.text in atypical_texts() else ZERO

    def above(self, u: Element, v: Element) -> bool:
        """J-order: ``u`` is a factor of ``v`` (reflexive)."""
        if v is ZERO:
            return True
        if u is ZERO:
            return False
        return u.text in v.text

    def maximal_words(self) -> list[Word]:
        """Words that are not a proper factor of any other atypical word."""
        return [
            v for v in self.words
            if not any(len(x) > len(v) and v.text in x.text for x in self.words)
        ]

    def hasse_edges(self) -> list[tuple[Element, Element]]:
        """Covering pairs (factor, extension), including each maximal word -> zero."""
        edges = []
        for v in self.words:
            proper = [u for u in self.words if len(u) < len(v) and u.text in v.text]
            for u in proper:
                if not any(len(x) > len(u) and u.text in x.text for x in proper):
                    edges.append((u, v))
        edges.extend((v, ZERO) for v in self.maximal_words())
        return edges


def build_s0() -> AtypicalSemigroup:
    return AtypicalSemigroup(tuple(sorted(atypical_words(), key=length_lex_key)))


def is_variant_minimum(text: str) -> bool:
    return text == min(f(text) for _, f in _VARIANT_MAPS)


def export_jorder_dot(s: AtypicalSemigroup) -> str:
    """Graphviz source for the Hasse diagram of the factor order on S0.

    Bold nodes are the lexicographic minima among their variants; the three
    maximal words shown atypical directly get a double border.
    """
    lines = ["digraph S0 {", "  node [shape=box, fontname=\"monospace\"];"]
    for w in s.words:
        attrs = []
        if is_variant_minimum(w.text):
            attrs.append("style=bold")
        if w.text in MAXIMAL_ATYPICAL:
            attrs.append("peripheries=2")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{w.text}"{suffix};')
    lines.append('  "0" [shape=circle];')
    for u, v in s.hasse_edges():
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def segment_preservation_check(phi: Morphism, max_len: int) -> Optional[Word]:
    """First segment (length-lex) of length <= max_len whose image is not a segment."""
    if not phi.is_binary_endomorphism:
        raise AlphabetMismatchError("segment preservation is defined for endomorphisms of {a,b}+")
    for s in segments_up_to(max_len):
        if not is_segment_text(phi.apply_text(s)):
            return Word(s)
    return None
