"""Nonerasing homomorphisms between free semigroups.

The two distinguished binary endomorphisms are ``MU`` (a->ab, b->ba), whose
fixed point is the Thue-Morse word, and ``XI`` (a->b, b->a).  Since XI is
an involution commuting with MU, the monoid they generate is exactly
{MU^n, XI o MU^n : n >= 0}, which is what :func:`in_mu_xi_monoid` decides.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple, Optional

from .errors import AlphabetMismatchError, EmptyWordError, OutOfRangeError
from .words import BINARY, Alphabet, Word, WordLike, all_words, as_word

MAX_MU_POWER = int(os.environ.get("TMPATTERNS_MAX_MU_POWER", "30"))


@dataclass(frozen=True)
class Morphism:
    """A homomorphism ``source+ -> target+`` given by one image per source letter.

    ``images[i]`` is the image of ``source.letters[i]``.
    """

    source: Alphabet
    target: Alphabet
    images: tuple[str, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise AlphabetMismatchError(
                f"need one image per source letter ({len(self.source)}), got {len(self.images)}"
            )
        allowed = set(self.target.letters)
        for letter, img in zip(self.source.letters, self.images):
            if not img:
                raise EmptyWordError(f"image of {letter!r} is empty; morphisms are nonerasing")
            if not set(img) <= allowed:
                raise AlphabetMismatchError(f"image {img!r} of {letter!r} leaves target {self.target.letters!r}")

    @classmethod
    def from_images(cls, images: dict, source: Optional[Alphabet] = None,
                    target: Alphabet = BINARY) -> "Morphism":
        if source is None:
            source = Alphabet("".join(sorted(images)))
        missing = [x for x in source.letters if x not in images]
        if missing or len(images) != len(source):
            raise AlphabetMismatchError(f"images must cover exactly the letters {source.letters!r}")
        return cls(source, target, tuple(str(images[x]) for x in source.letters))

    @classmethod
    def parse(cls, text: str, source: Optional[Alphabet] = None,
              target: Alphabet = BINARY) -> "Morphism":
        """Parse the ``a->ab,b->ba`` literal format."""
        images = {}
        for part in text.strip().split(","):
            letter, sep, image = part.strip().partition("->")
            letter, image = letter.strip(), image.strip()
            if not sep or len(letter) != 1:
                raise ValueError(f"malformed morphism pair {part!r}; expected 'x->word'")
            if letter in images:
                raise ValueError(f"letter {letter!r} given twice")
            if not image:
                raise EmptyWordError(f"image of {letter!r} is empty; morphisms are nonerasing")
            images[letter] = image
        if source is not None:
            unknown = set(images) - set(source.letters)
            if unknown:
                raise AlphabetMismatchError(f"unknown source letters {''.join(sorted(unknown))!r}")
        return cls.from_images(images, source, target)

    @cached_property
    def _table(self) -> dict[int, str]:
        return {ord(x): img for x, img in zip(self.source.letters, self.images)}

    def image(self, letter: str) -> Word:
        return Word(self.images[self.source.index(letter)], self.target)

    def as_dict(self) -> dict[str, str]:
        return dict(zip(self.source.letters, self.images))

    @property
    def is_binary_endomorphism(self) -> bool:
        return self.source == BINARY and self.target == BINARY

    def apply_text(self, text: str) -> str:
        """Image of a raw string; the caller guarantees it is over ``source``."""
        return text.translate(self._table)

    def __call__(self, w: WordLike) -> Word:
        return apply(self, w)

    def __str__(self) -> str:
        return ",".join(f"{x}->{img}" for x, img in zip(self.source.letters, self.images))


def apply(phi: Morphism, w: WordLike) -> Word:
    """Concatenate the images of the letters of ``w``."""
    w = as_word(w, phi.source)
    if w.alphabet != phi.source:
        raise AlphabetMismatchError(
            f"word alphabet {w.alphabet.letters!r} differs from morphism source {phi.source.letters!r}"
        )
    return Word(phi.apply_text(w.text), phi.target)


def compose(phi: Morphism, psi: Morphism) -> Morphism:
    """``phi o psi``: first ``psi``, then ``phi``."""
    if psi.target != phi.source:
        raise AlphabetMismatchError("target of the inner morphism must be the source of the outer one")
    return Morphism(psi.source, phi.target, tuple(phi.apply_text(img) for img in psi.images))


IDENTITY = Morphism(BINARY, BINARY, ("a", "b"))
MU = Morphism(BINARY, BINARY, ("ab", "ba"))
XI = Morphism(BINARY, BINARY, ("b", "a"))


@lru_cache(maxsize=64)
def mu_power(n: int) -> Morphism:
    """MU iterated ``n`` times; both images have length 2**n."""
    if n < 0 or n > MAX_MU_POWER:
        raise OutOfRangeError(f"mu power must be in 0..{MAX_MU_POWER}, got {n}")
    if n == 0:
        return IDENTITY
    return compose(MU, mu_power(n - 1))


class MonoidMember(NamedTuple):
    n: int
    uses_exchange: bool


def in_mu_xi_monoid(phi: Morphism) -> Optional[MonoidMember]:
    """Decide whether ``phi`` is MU^n or XI o MU^n.

    Both images must have the same power-of-two length 2**n, and then they
    are compared with MU^n(a), MU^n(b) directly.
    """
    if not phi.is_binary_endomorphism:
        return None
    img_a, img_b = phi.images
    size = len(img_a)
    if size != len(img_b) or size & (size - 1):
        return None
    n = size.bit_length() - 1
    if n > MAX_MU_POWER:
        return None
    mu_a, mu_b = mu_power(n).images
    if (img_a, img_b) == (mu_a, mu_b):
        return MonoidMember(n, False)
    if (img_a, img_b) == (mu_b, mu_a):
        return MonoidMember(n, True)
    return None


@lru_cache(maxsize=None)
def candidate_images(max_image_len: int, target: Alphabet = BINARY) -> tuple[str, ...]:
    """Nonempty words of length <= max_image_len, length-then-lex."""
    return tuple(w for n in range(1, max_image_len + 1) for w in all_words(n, target))


def enumerate_morphisms(source: Alphabet, max_image_len: int,
                        target: Alphabet = BINARY) -> Iterator[Morphism]:
    """All morphisms ``source -> target`` with images of length <= max_image_len.

    Order: lexicographic over image tuples, the first source letter being
    most significant, each image ranging over nonempty words in
    length-then-lex order.  For a binary target this yields
    ``(2**(L+1) - 2)**len(source)`` morphisms.
    """
    if max_image_len < 1:
        raise OutOfRangeError("max_image_len must be >= 1")
    pool = candidate_images(max_image_len, target)
    for images in itertools.product(pool, repeat=len(source)):
        yield Morphism(source, target, images)

