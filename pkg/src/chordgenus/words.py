"""Double-occurrence words: the combinatorial core of chord diagrams.

A chord diagram with ``n`` chords on a based, oriented backbone circle
is recorded as a word of length ``2n`` in which every chord label
occurs exactly twice.  Words are kept in a normal form where, reading
left to right, first occurrences of labels appear as ``1, 2, ..., n``;
two words describe the same unbased diagram exactly when they agree
after some cyclic shift, reversal and relabelling.

This module provides parsing, canonical forms, enumeration of words up
to equivalence, connected sums, sub-diagram restriction and the handful
of constructive word families used to realize prescribed genus ranges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import (
    EmptyRestrictionError,
    EmptyWordError,
    EnumerationLimitError,
    MalformedTokenError,
    NotDoubleOccurrenceError,
)

DEFAULT_ENUMERATION_LIMIT = 8


def _normalize(labels: Sequence[int]) -> "tuple[int, ...]":
    out = []
    rename: "dict[int, int]" = {}
    for x in labels:
        t = rename.get(x)
        if t is None:
            t = len(rename) + 1
            rename[x] = t
        out.append(t)
    return tuple(out)


class ChordWord:
    """A normalized double-occurrence word.

    The constructor accepts any sequence of integer labels in which
    every label occurs exactly twice, and relabels them to the normal
    form.  Instances are immutable, hashable and ordered by their
    letter tuples.
    """

    __slots__ = ("_letters",)

    def __init__(self, labels: Iterable[int]):
        labels = tuple(labels)
        if not labels:
            raise EmptyWordError("a word needs at least one chord")
        seen: "dict[int, int]" = {}
        for x in labels:
            seen[x] = seen.get(x, 0) + 1
        bad = sorted(x for x, c in seen.items() if c != 2)
        if bad:
            raise NotDoubleOccurrenceError(
                "labels must occur exactly twice, got %s with counts %s"
                % (bad, [seen[x] for x in bad]))
        self._letters = _normalize(labels)

    @property
    def letters(self) -> "tuple[int, ...]":
        return self._letters

    @property
    def n(self) -> int:
        """Number of chords."""
        return len(self._letters) // 2

    def pairing(self) -> "ChordPairing":
        return ChordPairing.of_word(self)

    def render(self) -> str:
        """Textual form: contiguous digits when n <= 9, else
        comma-separated decimal labels."""
        if self.n <= 9:
            return "".join(str(x) for x in self._letters)
        return ",".join(str(x) for x in self._letters)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "ChordWord(%r)" % (self.render(),)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChordWord) and self._letters == other._letters

    def __lt__(self, other) -> bool:
        return self._letters < other._letters

    def __hash__(self) -> int:
        return hash(self._letters)


@dataclass(frozen=True)
class ChordPairing:
    """Fixed-point-free involution pairing same-label endpoints."""

    positions: "tuple[int, ...]"

    def __post_init__(self):
        p = self.positions
        m = len(p)
        for i, j in enumerate(p):
            if j == i or not 0 <= j < m or p[j] != i:
                raise ValueError("not a fixed-point-free involution")

    @classmethod
    def of_word(cls, word: ChordWord) -> "ChordPairing":
        first: "dict[int, int]" = {}
        pair = [0] * len(word)
        for i, x in enumerate(word.letters):
            if x in first:
                pair[i] = first[x]
                pair[first[x]] = i
            else:
                first[x] = i
        return cls(tuple(pair))

    def __getitem__(self, i: int) -> int:
        return self.positions[i]

    def __len__(self) -> int:
        return len(self.positions)

    def pairs(self) -> "tuple[tuple[int, int], ...]":
        return tuple((i, j) for i, j in enumerate(self.positions) if i < j)


@dataclass(frozen=True)
class EquivalenceClass:
    """Orbit of a word under shifts, reversal and relabelling."""

    canonical: ChordWord
    size: int


def parse(text: str) -> ChordWord:
    """Parse the textual word format.

    Accepts either contiguous digits (``"123123"``) or comma or
    whitespace separated decimal labels (``"1, 2, 3, 1, 2, 3"``), and
    returns the normalized word.
    """
    stripped = text.strip()
    if not stripped:
        raise EmptyWordError("empty word text")
    if any(c in ", \t" for c in stripped):
        tokens = stripped.replace(",", " ").split()
    else:
        tokens = list(stripped)
    labels = []
    for tok in tokens:
        if not tok.isdigit():
            raise MalformedTokenError("bad label token %r" % (tok,))
        labels.append(int(tok))
    return ChordWord(labels)


def word_variants(word: ChordWord) -> "tuple[tuple[int, ...], ...]":
    """All 4n normalized letter tuples reachable by a cyclic shift of
    the word or of its reversal (with repetitions)."""
    letters = word.letters
    size = len(letters)
    out = []
    for base in (letters + letters, letters[::-1] + letters[::-1]):
        for s in range(size):
            out.append(_normalize(base[s:s + size]))
    return tuple(out)


def canonical_form(word: ChordWord) -> ChordWord:
    """Least variant under lexicographic order; two words are
    equivalent exactly when their canonical forms coincide."""
    return ChordWord(kernels.canonical_letters(word.letters))


def equivalent(w1: ChordWord, w2: ChordWord) -> bool:
    return (kernels.canonical_letters(w1.letters)
            == kernels.canonical_letters(w2.letters))


def equivalence_class(word: ChordWord) -> EquivalenceClass:
    variants = set(word_variants(word))
    return EquivalenceClass(canonical=ChordWord(min(variants)),
                            size=len(variants))


def _pairing_words(n: int) -> "Iterator[tuple[int, ...]]":
    """All (2n-1)!! normalized words, one per endpoint pairing."""
    word = [0] * (2 * n)

    def rec(label: int, free: "tuple[int, ...]"):
        if not free:
            yield tuple(word)
            return
        i = free[0]
        word[i] = label
        for jx in range(1, len(free)):
            j = free[jx]
            word[j] = label
            yield from rec(label + 1, free[1:jx] + free[jx + 1:])

    yield from rec(1, tuple(range(2 * n)))


def all_normalized_words(n: int) -> "Iterator[ChordWord]":
    """Every normalized word with n chords ((2n-1)!! of them)."""
    if n < 1:
        raise EmptyWordError("n must be positive")
    for letters in _pairing_words(n):
        yield ChordWord(letters)


def enumerate_words(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> "Iterator[ChordWord]":
    """Canonical representatives of all n-chord equivalence classes,
    in lexicographic order, each class exactly once."""
    if n < 1:
        raise EmptyWordError("n must be positive")
    if n > limit:
        raise EnumerationLimitError(
            "enumeration of n=%d exceeds the limit %d" % (n, limit))
    reps = [letters for letters in _pairing_words(n)
            if kernels.is_canonical_letters(letters)]
    reps.sort()
    return iter([ChordWord(letters) for letters in reps])


def concat(w1: ChordWord, w2: ChordWord) -> ChordWord:
    """Connected sum: relabel w2 above w1's labels and concatenate.

    The result is already normalized, so no letters move; the base
    points of both summands merge into the new end edge.
    """
    shift = w1.n
    return ChordWord(w1.letters + tuple(x + shift for x in w2.letters))


def concat_all(words: Sequence[ChordWord]) -> ChordWord:
    if not words:
        raise EmptyWordError("need at least one word")
    out = words[0]
    for w in words[1:]:
        out = concat(out, w)
    return out


def power(word: ChordWord, k: int) -> ChordWord:
    """Connected sum of k copies of the word."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return concat_all([word] * k)


def restrict(word: ChordWord, chords: "Iterable[int]") -> ChordWord:
    """Sub-diagram keeping only the given chords.

    Letters outside the subset are deleted in place (the base point is
    kept, nothing rotates) and the survivors are relabelled.
    """
    keep = set(chords)
    if not keep:
        raise EmptyRestrictionError("chord subset is empty")
    bad = sorted(x for x in keep if not 1 <= x <= word.n)
    if bad:
        raise ValueError("chords %s not in 1..%d" % (bad, word.n))
    return ChordWord(x for x in word.letters if x in keep)


_NESTED_TRIPLE = None


def _nested_triple_canon() -> "tuple[int, ...]":
    global _NESTED_TRIPLE
    if _NESTED_TRIPLE is None:
        _NESTED_TRIPLE = kernels.canonical_letters((1, 2, 3, 3, 2, 1))
    return _NESTED_TRIPLE


def contains_nested_triple(word: ChordWord) -> bool:
    """True when some three chords of the word form, after forgetting
    the base point, a mutually nested triple (the 123321 pattern)."""
    if word.n < 3:
        return False
    target = _nested_triple_canon()
    letters = word.letters
    for sub in itertools.combinations(range(1, word.n + 1), 3):
        keep = set(sub)
        restricted = _normalize([x for x in letters if x in keep])
        if kernels.canonical_letters(restricted) == target:
            return True
    return False


# Constructive families.  Their connected sums and powers realize every
# guaranteed genus range; see chordgenus.ranges.witness.

def isolated_chords(n: int) -> ChordWord:
    """The word 1122..nn: n chords, none interleaved."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ChordWord(x for x in range(1, n + 1) for _ in (0, 1))


def repeated_sequence(n: int) -> ChordWord:
    """The word 12..n12..n: every pair of chords interleaved."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ChordWord(tuple(range(1, n + 1)) * 2)


def interleaved_pairs(count: int) -> ChordWord:
    """Connected sum of ``count`` interleaved pairs: (1212)(3434)..."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return power(repeated_sequence(2), count)


def genus_doubling_block() -> ChordWord:
    """The 4-chord block 12341342 whose connected-sum powers step the
    genus range from [1, 2] up to [k, 2k]."""
    return ChordWord((1, 2, 3, 4, 1, 3, 4, 2))
