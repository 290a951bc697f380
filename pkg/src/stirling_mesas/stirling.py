"""Stirling permutations: validation, generation, and word statistics.

A Stirling permutation of order n is a word on the multiset {1,1,...,n,n}
in which every value lying between the two copies of k is larger than k.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Set

from .errors import (
    LengthError,
    MultisetError,
    ResourceGuardError,
    StirlingViolation,
)

DEFAULT_BRUTE_CEILING = 10
CEILING_ENV_VAR = "STIRLING_MESAS_BRUTE_CEILING"


def enumeration_ceiling(override=None) -> int:
    """Resolve the generation ceiling: explicit arg, env var, or default."""
    if override is not None:
        return int(override)
    env = os.environ.get(CEILING_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_BRUTE_CEILING


def double_factorial(m: int) -> int:
    """Product m * (m-2) * (m-4) * ... down to 1 or 2."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def format_word(word: Sequence[int]) -> str:
    """Digit string when all values fit one digit, else comma-separated."""
    if word and max(word) > 9:
        return ",".join(str(v) for v in word)
    return "".join(str(v) for v in word)


def parse_word(text: str) -> List[int]:
    """Inverse of :func:`format_word` for CLI and service input."""
    text = text.strip()
    if "," in text:
        return [int(piece) for piece in text.split(",")]
    return [int(ch) for ch in text]


@dataclass(frozen=True)
class StirlingPermutation:
    """A validated Stirling permutation.

    ``word`` is 1-based in value; ``word[i-1]`` is the paper-style w(i).
    Instances are immutable and safe to share between threads.
    """

    order: int
    word: tuple

    def __str__(self):
        return format_word(self.word)

    def __len__(self):
        return len(self.word)


def validate_stirling(word: Iterable[int]) -> StirlingPermutation:
    """Check the three defining invariants and wrap the word.

    Raises LengthError, MultisetError, or StirlingViolation describing
    the first violated invariant.
    """
    seq = tuple(int(v) for v in word)
    if len(seq) == 0 or len(seq) % 2 != 0:
        raise LengthError(f"word length {len(seq)} is not a positive even number")
    n = len(seq) // 2

    counts = [0] * (n + 1)
    for v in seq:
        if not 1 <= v <= n:
            raise MultisetError(f"value {v} outside [1, {n}]", value=v)
        counts[v] += 1
    for v in range(1, n + 1):
        if counts[v] != 2:
            raise MultisetError(
                f"value {v} appears {counts[v]} times, expected 2", value=v
            )

    first = {}
    for i, v in enumerate(seq):
        if v in first:
            between = seq[first[v] + 1 : i]
            for b in between:
                if b < v:
                    raise StirlingViolation(k=v, interloper=b)
        else:
            first[v] = i
    return StirlingPermutation(order=n, word=seq)


def _raw_words(n: int, top_gap=None) -> Iterator[List[int]]:
    """Yield the words of Q_n as lists, via pair insertion.

    Q_n is built by inserting the adjacent pair ``n n`` into each of the
    2n-1 gaps of every word of Q_{n-1}; each word is produced exactly
    once.  ``top_gap`` restricts the outermost insertion position, which
    splits the stream into 2n-1 disjoint sub-streams for parallel work.
    """
    if n == 1:
        if top_gap in (None, 0):
            yield [1, 1]
        return
    gaps = range(2 * n - 1) if top_gap is None else (top_gap,)
    for shorter in _raw_words(n - 1):
        for g in gaps:
            yield shorter[:g] + [n, n] + shorter[g:]


def generate_all(
    n: int,
    *,
    ceiling=None,
    allow_large: bool = False,
    top_gap=None,
) -> Iterator[StirlingPermutation]:
    """Stream every element of Q_n exactly once, in a fixed order.

    The emission order is lexicographic in the tuple of insertion
    positions, so runs are reproducible.  Refuses orders above the
    ceiling (default 10, |Q_10| ~ 6.5e8) unless ``allow_large`` is set.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    cap = enumeration_ceiling(ceiling)
    if n > cap and not allow_large:
        raise ResourceGuardError(n, cap)
    if top_gap is not None and not 0 <= top_gap <= 2 * n - 2:
        raise ValueError(f"top_gap {top_gap} outside [0, {2 * n - 2}]")
    for word in _raw_words(n, top_gap=top_gap):
        yield StirlingPermutation(order=n, word=tuple(word))


def mesa_mask(word: Sequence[int]) -> int:
    """Bitmask of mesa values; bit v is set iff v is a mesa.

    A mesa is a doubled value strictly above both flanking values:
    w(i-1) < w(i) = w(i+1) > w(i+2).
    """
    mask = 0
    for i in range(1, len(word) - 2):
        v = word[i]
        if word[i + 1] == v and word[i - 1] < v and word[i + 2] < v:
            mask |= 1 << v
    return mask


def mesa_set(w: StirlingPermutation) -> Set[int]:
    """The set of mesa values of w."""
    mask = mesa_mask(w.word)
    return {v for v in range(2, w.order + 1) if mask >> v & 1}


def local_minima(w: StirlingPermutation) -> Set[int]:
    """Values smaller than their nearest non-equal neighbors.

    A word boundary imposes no constraint; each occurrence of a value is
    tested separately (the two copies may sit in different valleys).
    """
    word = w.word
    out = set()
    for i, v in enumerate(word):
        j = i - 1
        while j >= 0 and word[j] == v:
            j -= 1
        if j >= 0 and word[j] < v:
            continue
        j = i + 1
        while j < len(word) and word[j] == v:
            j += 1
        if j < len(word) and word[j] < v:
            continue
        out.add(v)
    return out


def has_pinnacle(w: StirlingPermutation) -> bool:
    """True iff some single index is a strict peak: w(i-1) < w(i) > w(i+1).

    Always false on valid input; exposed as a testable oracle for the
    no-pinnacles lemma.
    """
    word = w.word
    return any(
        word[i - 1] < word[i] > word[i + 1] for i in range(1, len(word) - 1)
    )
