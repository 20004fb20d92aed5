"""Named empirical checks of the structural properties of t.

Each suite takes an optional size bound (its meaning is given per suite)
and returns a :class:`SuiteResult`.  The defaults reproduce the full
desk-scale checks; smaller bounds give a quick smoke run.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .avoidance import (
    EXCEPTIONAL_WORDS,
    family_k_generator,
    family_m_generator,
    find_witness,
    is_avoided_via_ideal,
    is_unavoidable_binary,
    shur_generators,
    suffix_divergence,
)
from .errors import InternalConsistencyError
from .morphisms import MU, Morphism, candidate_images, in_mu_xi_monoid, mu_power
from .thuemorse import (
    aligned_occurrences,
    classify_square_root,
    is_segment_text,
    is_special,
    minimality_witness,
    prefix_text,
    recurrence_window,
    segment_texts,
    segments_up_to,
    tm_letter,
)
from .typicality import (
    atypical_texts,
    brute_force_atypical_check,
    satisfies_length3_criterion,
    segment_preservation_check,
)
from .words import BINARY, Word, all_words, has_cube, has_overlap, words_up_to


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.failures) < 20:
            self.failures.append(message)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


def window_table(text: str, k: int) -> np.ndarray:
    """Boolean table over the 2**k binary codes (a=0, b=1) of the length-k windows of ``text``."""
    bits = np.frombuffer(text.encode("ascii"), dtype=np.uint8) == ord("b")
    count = len(text) - k + 1
    codes = np.zeros(count, dtype=np.int64)
    for j in range(k):
        codes = (codes << 1) | bits[j:j + count]
    present = np.zeros(1 << k, dtype=bool)
    present[codes] = True
    return present


def word_code(text: str) -> int:
    return int(text.translate(str.maketrans("ab", "01")), 2)


def segment_oracle(res: SuiteResult, max_len: Optional[int]) -> None:
    """Every binary word of length <= max_len (16): segment test vs windows of a 2**20 prefix."""
    max_len = max_len or 16
    big = prefix_text(1 << 20)
    for n in range(0, 21, 4):
        head = prefix_text(1 << n)
        res.cases += 1
        if head != "".join(tm_letter(i) for i in range(1 << n)):
            res.fail(f"prefix of length 2**{n} differs from the parity definition")
    for k in range(1, max_len + 1):
        table = window_table(big, k)
        for w in all_words(k):
            res.cases += 1
            if is_segment_text(w) != bool(table[word_code(w)]):
                res.fail(f"segment test disagrees with prefix search on {w}")


def minimality(res: SuiteResult, max_len: Optional[int]) -> None:
    """Generations 3..max_len (12)."""
    for n in range(3, (max_len or 12) + 1):
        w = minimality_witness(n).text
        res.cases += 1
        if len(w) != (1 << (n - 3)) + 2 or not is_segment_text(w) or w in mu_power(n - 1).images[0]:
            res.fail(f"minimality witness for n={n} ({w}) misbehaves")


def unavoidability(res: SuiteResult, max_len: Optional[int]) -> None:
    """All binary words of length <= max_len (14)."""
    odd = set()
    for w in words_up_to(max_len or 14):
        res.cases += 1
        unavoidable = is_unavoidable_binary(w)
        if unavoidable == is_avoided_via_ideal(w):
            res.fail(f"closed form and generator ideal disagree on {w}")
        if unavoidable and not is_segment_text(w):
            odd.add(w)
    expected = {w for w in EXCEPTIONAL_WORDS if len(w) <= (max_len or 14)}
    if odd != expected:
        res.fail(f"non-segment unavoidable words {sorted(odd)} != {sorted(expected)}")


def generators(res: SuiteResult, max_len: Optional[int]) -> None:
    """Generators of length <= max_len (200)."""
    expected = {
        "k=1": (family_k_generator(1).text, "babbaaba"),
        "k=2": (family_k_generator(2).text, "aabbabaababbaa"),
        "m=2": (family_m_generator(2).text, "abaababbabaaba"),
    }
    for label, (got, want) in expected.items():
        res.cases += 1
        if got != want:
            res.fail(f"generator {label} is {got}, expected {want}")
    for g in shur_generators(max_len or 200):
        res.cases += 1
        if is_segment_text(g.text):
            res.fail(f"generator {g} is a segment")
        if not is_avoided_via_ideal(g):
            res.fail(f"generator {g} is not in its own ideal")
        if find_witness(g, 3, 1 << 18) is not None:
            res.fail(f"generator {g} has a witness")


def special_propagation(res: SuiteResult, max_len: Optional[int]) -> None:
    """Special segments of length <= max_len (32)."""
    for u in segments_up_to(max_len or 32):
        if is_special(u):
            res.cases += 1
            if not is_special(MU.apply_text(u)):
                res.fail(f"{u} is special but its MU-image is not")


def squares(res: SuiteResult, max_len: Optional[int]) -> None:
    """Roots of length <= max_len (24).

    Exhaustive over all words up to length 14; beyond that only segments
    are examined, since a square whose root is not a segment cannot be one.
    """
    max_len = max_len or 24
    shapes = {
        mu_power(n).apply_text(x): (x, n)
        for n in range(0, max_len.bit_length() + 1)
        for x in ("a", "b", "aba", "bab")
        if (len(x) << n) <= max_len
    }
    candidates = itertools.chain(
        words_up_to(min(max_len, 14)),
        (s for k in range(15, max_len + 1) for s in segment_texts(k)),
    )
    for u in candidates:
        res.cases += 1
        root = classify_square_root(u)
        if (root is not None) != is_segment_text(u + u) or (root is not None) != (u in shapes):
            res.fail(f"square classification wrong for {u}")
        elif root is not None and (root.base.text, root.n) != shapes[u]:
            res.fail(f"{u} classified as {root}, expected {shapes[u]}")


def synchronization(res: SuiteResult, max_len: Optional[int]) -> None:
    """n = 0..max_len (6, at most 14), occurrences in the prefix of length 2**15."""
    for n in range(0, min(max_len or 6, 14) + 1):
        for x in "ab":
            res.cases += 1
            try:
                aligned_occurrences(n, x, 1 << 15)
            except InternalConsistencyError as exc:
                res.fail(f"n={n}, x={x}: {exc}")


def recurrence(res: SuiteResult, max_len: Optional[int]) -> None:
    """Segment lengths k = 3..max_len (17)."""
    for k in range(3, (max_len or 17) + 1):
        res.cases += 1
        ell = recurrence_window(k)
        short = set(segment_texts(k))

        def covers(window: str) -> bool:
            return {window[i:i + k] for i in range(len(window) - k + 1)} >= short

        if not all(covers(s) for s in segment_texts(ell)):
            res.fail(f"k={k}: some segment of length {ell} misses a length-{k} segment")
        if all(covers(s) for s in segment_texts(ell - 1)):
            res.fail(f"k={k}: window {ell} is not tight")


def criterion(res: SuiteResult, max_len: Optional[int]) -> None:
    """Saturation at length 10, soundness for segments of length <= max_len (12), image bound 6."""
    for s in segment_texts(10):
        res.cases += 1
        if not satisfies_length3_criterion(s):
            res.fail(f"length-10 segment {s} fails the criterion")
    for s in segments_up_to(max_len or 12):
        if satisfies_length3_criterion(s):
            res.cases += 1
            if s in atypical_texts():
                res.fail(f"{s} satisfies the criterion but is listed atypical")
            phi = brute_force_atypical_check(s, 6)
            if phi is not None:
                res.fail(f"{s} satisfies the criterion but {phi} maps it to a segment")


KNOWN_WITNESSES = (
    ("aabab", "a->a,b->bbabaab"),
    ("abaaba", "a->a,b->bb"),
    ("aabbaab", "a->a,b->bab"),
)
SMALL_TYPICAL = ("aababb", "aabbab", "abbaabba", "ababba")


def atypical(res: SuiteResult, max_len: Optional[int]) -> None:
    """Segments of length <= max_len (8), image bound 8."""
    atyp = atypical_texts()
    for s in segments_up_to(max_len or 8):
        res.cases += 1
        if (brute_force_atypical_check(s, 8) is not None) != (s in atyp):
            res.fail(f"bounded search and atypical list disagree on {s}")
    for w, literal in KNOWN_WITNESSES:
        res.cases += 1
        phi = Morphism.parse(literal)
        if in_mu_xi_monoid(phi) is not None or not is_segment_text(phi.apply_text(w)):
            res.fail(f"{literal} is not a valid atypicality witness for {w}")
    for w in SMALL_TYPICAL:
        res.cases += 1
        if brute_force_atypical_check(w, 8) is not None:
            res.fail(f"{w} has an atypicality witness")


def monoid(res: SuiteResult, max_len: Optional[int]) -> None:
    """Endomorphisms with images of length <= 4 against segments of length <= max_len (12)."""
    pool = candidate_images(4)
    for images in itertools.product(pool, repeat=2):
        phi = Morphism(BINARY, BINARY, images)
        res.cases += 1
        preserves = segment_preservation_check(phi, max_len or 12) is None
        if preserves != (in_mu_xi_monoid(phi) is not None):
            res.fail(f"{phi}: preserves segments={preserves}")


def suffixes(res: SuiteResult, max_len: Optional[int]) -> None:
    """Shifts 0..max_len (64), horizon 4096."""
    for i in range((max_len or 64) + 1):
        for j in range((max_len or 64) + 1):
            res.cases += 1
            if suffix_divergence(i, j, 4096) is None:
                res.fail(f"t[{i}:] and exchange(t)[{j}:] agree for 4096 letters")


def repetitions(res: SuiteResult, max_len: Optional[int]) -> None:
    """Prefix of length 2**max_len (2**16)."""
    text = prefix_text(1 << (max_len or 16))
    res.cases += 2
    if has_cube(Word(text)):
        res.fail("prefix contains a cube")
    if has_overlap(Word(text)):
        res.fail("prefix contains an overlap")


SUITES: dict[str, Callable[[SuiteResult, Optional[int]], None]] = {
    "segment-oracle": segment_oracle,
    "minimality": minimality,
    "unavoidability": unavoidability,
    "generators": generators,
    "special-propagation": special_propagation,
    "squares": squares,
    "synchronization": synchronization,
    "recurrence": recurrence,
    "criterion": criterion,
    "atypical": atypical,
    "monoid": monoid,
    "suffixes": suffixes,
    "repetitions": repetitions,
}


def run_suite(name: str, max_len: Optional[int] = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    res = SuiteResult(name)
    start = time.perf_counter()
    SUITES[name](res, max_len)
    res.seconds = time.perf_counter() - start
    return res


def run_all(max_len: Optional[int] = None) -> list[SuiteResult]:
    return [run_suite(name, max_len) for name in sorted(SUITES)]
