"""Shared test helpers."""

from __future__ import annotations

import random

from chordgenus.words import ChordWord


def random_word(rng: random.Random, n: int) -> ChordWord:
    """Uniformly random normalized word with n chords."""
    labels = [x for x in range(1, n + 1) for _ in (0, 1)]
    rng.shuffle(labels)
    return ChordWord(labels)


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = number of endpoint pairings of an n-chord word."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out
