"""Genus ranges over all band attachments of a chord diagram.

The genus range of a word is the set of genera realized by its 4^n
thickenings.  This module computes exact genus profiles (counts per
genus), classifies how extremal-genus thickenings trace the end edge,
verifies the connected-sum law those classifications predict, tabulates
the distinct ranges over all equivalence classes for a fixed chord
count, checks the structural conjectures suggested by those tables, and
constructs verified witness words for every guaranteed range.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from . import kernels
from .errors import (
    BudgetExceededError,
    GapDetectedError,
    NotGuaranteedError,
    TracingConsistencyError,
    VerificationFailedError,
)
from .surface import genus_from_boundary_count
from .words import (
    ChordWord,
    canonical_form,
    concat,
    concat_all,
    contains_nested_triple,
    enumerate_words,
    genus_doubling_block,
    interleaved_pairs,
    isolated_chords,
    power,
    repeated_sequence,
)

DEFAULT_PROFILE_BUDGET = 12
TABLE_BUDGET = 7

REALIZED = "realized"
IMPOSSIBLE = "impossible"
UNKNOWN = "unknown"

MIN = "min"
MAX = "max"


@dataclass(frozen=True, order=True)
class GenusRange:
    """Integer interval [lo, hi] of genera."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0 or self.hi < self.lo:
            raise ValueError("invalid genus range [%d, %d]" % (self.lo, self.hi))

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def as_pair(self) -> "tuple[int, int]":
        return (self.lo, self.hi)

    def __str__(self) -> str:
        return "[%d, %d]" % (self.lo, self.hi)


@dataclass(frozen=True)
class GenusProfile:
    """Exact count of attachments per genus (totalling 4^n)."""

    n: int
    counts: "Mapping[int, int]"

    @property
    def lo(self) -> int:
        return min(self.counts)

    @property
    def hi(self) -> int:
        return max(self.counts)

    def support(self) -> "tuple[int, ...]":
        return tuple(sorted(self.counts))

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class EndEdgeClass:
    """End-edge tracing statistics of the extremal-genus attachments.

    ``min_single`` counts the minimum-genus attachments whose end edge
    is traced by a single boundary curve, ``min_double`` by two, and
    likewise for the maximum genus.  The all/exists conditions used by
    the connected-sum law read straight off these counts.
    """

    min_single: int
    min_double: int
    max_single: int
    max_double: int

    def _counts(self, extreme: str) -> "tuple[int, int]":
        if extreme == MIN:
            return self.min_single, self.min_double
        if extreme == MAX:
            return self.max_single, self.max_double
        raise ValueError("extreme must be 'min' or 'max'")

    def always(self, extreme: str, curves: int) -> bool:
        """A(extreme, curves): every extremal attachment traces the end
        edge with ``curves`` boundary curve(s)."""
        single, double = self._counts(extreme)
        if curves == 1:
            return double == 0
        if curves == 2:
            return single == 0
        raise ValueError("curves must be 1 or 2")

    def exists(self, extreme: str, curves: int) -> bool:
        """E(extreme, curves): some extremal attachment does."""
        single, double = self._counts(extreme)
        return (single if curves == 1 else double) > 0

    def summary(self) -> str:
        """Connected-sum-relevant classification, e.g. "A(min,2), A(max,1)"."""
        parts = []
        if self.always(MIN, 2):
            parts.append("A(min,2)")
        elif self.always(MIN, 1):
            parts.append("A(min,1)")
        else:
            parts.append("E(min,1)")
        if self.always(MAX, 1):
            parts.append("A(max,1)")
        elif self.always(MAX, 2):
            parts.append("A(max,2)")
        else:
            parts.append("E(max,2)")
        return ", ".join(parts)

    def __str__(self) -> str:
        return self.summary()


@dataclass(frozen=True)
class ConnectedSumCheck:
    """Predicted vs observed genus-range corrections of a connected sum.

    The law: gr(W1 W2) = [lo1 + lo2 - eps, hi1 + hi2 - eps'] with eps
    and eps' in {0, 1} determined by the end-edge classes of the
    summands (eps = 0 iff one summand is A(min,2); eps' = 0 iff one is
    E(max,2)).
    """

    word1: ChordWord
    word2: ChordWord
    sum_word: ChordWord
    range1: GenusRange
    range2: GenusRange
    sum_range: GenusRange
    predicted_eps: int
    predicted_eps_prime: int
    observed_eps: int
    observed_eps_prime: int

    @property
    def agree(self) -> bool:
        return (self.predicted_eps == self.observed_eps
                and self.predicted_eps_prime == self.observed_eps_prime)


@dataclass(frozen=True)
class RangeTable:
    """Genus range of every equivalence class with a fixed chord count."""

    n: int
    classes: "Mapping[ChordWord, GenusRange]"

    def distinct_ranges(self) -> "tuple[GenusRange, ...]":
        return tuple(sorted(set(self.classes.values())))

    def range_counts(self) -> "dict[GenusRange, int]":
        out: "dict[GenusRange, int]" = {}
        for r in self.classes.values():
            out[r] = out.get(r, 0) + 1
        return dict(sorted(out.items()))

    def classes_with(self, rng: GenusRange) -> "tuple[ChordWord, ...]":
        return tuple(sorted(w for w, r in self.classes.items() if r == rng))


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of one conjecture check at a fixed chord count."""

    index: int
    statement: str
    holds: bool
    expected: "Optional[tuple[str, ...]]"
    actual: "tuple[str, ...]"
    counterexamples: "tuple[str, ...]" = ()


@dataclass(frozen=True)
class WitnessResult:
    """A constructed word realizing a requested genus range."""

    word: ChordWord
    target: GenusRange
    verified: bool
    construction: str


def _require_budget(n: int, budget: "Optional[int]") -> None:
    limit = DEFAULT_PROFILE_BUDGET if budget is None else budget
    if limit > kernels.MAX_KERNEL_CHORDS:
        limit = kernels.MAX_KERNEL_CHORDS
    if n > limit:
        raise BudgetExceededError(
            "exhaustive sweep over 4^%d attachments exceeds the budget "
            "(n <= %d)" % (n, limit))


@functools.lru_cache(maxsize=None)
def _b_counts(letters: "tuple[int, ...]") -> "tuple[int, ...]":
    word = ChordWord(letters)
    counts = kernels.profile_b_counts(word.pairing().positions)
    _check_b_support(word.n, counts)
    return tuple(counts)


@functools.lru_cache(maxsize=None)
def _end_counts(letters: "tuple[int, ...]"):
    word = ChordWord(letters)
    single, double = kernels.end_b_counts(word.pairing().positions)
    _check_b_support(word.n, [s + d for s, d in zip(single, double)])
    return tuple(single), tuple(double)


def _check_b_support(n: int, counts: "Sequence[int]") -> None:
    total = 0
    for b, c in enumerate(counts):
        if not c:
            continue
        total += c
        # raises TracingConsistencyError on parity/range violations
        genus_from_boundary_count(n, b)
    if total != 4 ** n:
        raise TracingConsistencyError(
            "profile covers %d of %d attachments" % (total, 4 ** n))


def genus_profile(word: ChordWord, budget: "Optional[int]" = None) -> GenusProfile:
    """Exact genus counts over all 4^n attachments.

    Only half of the attachments are traced (complementing every flag
    preserves the boundary count), so results are exact at half cost.
    """
    _require_budget(word.n, budget)
    counts = _b_counts(word.letters)
    by_genus = {genus_from_boundary_count(word.n, b): c
                for b, c in enumerate(counts) if c}
    return GenusProfile(n=word.n, counts=by_genus)


def genus_range(word: ChordWord, budget: "Optional[int]" = None) -> GenusRange:
    """The interval [min genus, max genus]; aborts if the profile
    support has a gap (that would mean a model bug, not mathematics)."""
    profile = genus_profile(word, budget)
    support = profile.support()
    if support != tuple(range(support[0], support[-1] + 1)):
        raise GapDetectedError(
            "genus support %s of %s is not an interval" % (support, word))
    return GenusRange(support[0], support[-1])


def classify_end_edge(word: ChordWord, budget: "Optional[int]" = None) -> EndEdgeClass:
    """End-edge tracing statistics of the extremal-genus attachments."""
    _require_budget(word.n, budget)
    single, double = _end_counts(word.letters)
    bs = [b for b in range(len(single)) if single[b] or double[b]]
    b_min_genus = max(bs)  # most boundary curves = least genus
    b_max_genus = min(bs)
    return EndEdgeClass(
        min_single=single[b_min_genus],
        min_double=double[b_min_genus],
        max_single=single[b_max_genus],
        max_double=double[b_max_genus],
    )


def connected_sum_check(w1: ChordWord, w2: ChordWord,
                        budget: "Optional[int]" = None) -> ConnectedSumCheck:
    """Compare the connected-sum law's prediction with direct
    computation on w1 w2."""
    r1 = genus_range(w1, budget)
    r2 = genus_range(w2, budget)
    c1 = classify_end_edge(w1, budget)
    c2 = classify_end_edge(w2, budget)
    sum_word = concat(w1, w2)
    rs = genus_range(sum_word, budget)
    pred_eps = 0 if (c1.always(MIN, 2) or c2.always(MIN, 2)) else 1
    pred_eps_prime = 0 if (c1.exists(MAX, 2) or c2.exists(MAX, 2)) else 1
    return ConnectedSumCheck(
        word1=w1, word2=w2, sum_word=sum_word,
        range1=r1, range2=r2, sum_range=rs,
        predicted_eps=pred_eps,
        predicted_eps_prime=pred_eps_prime,
        observed_eps=r1.lo + r2.lo - rs.lo,
        observed_eps_prime=r1.hi + r2.hi - rs.hi,
    )


def _range_worker(letters: "tuple[int, ...]") -> "tuple[int, int]":
    counts = _b_counts(letters)
    n = len(letters) // 2
    support = sorted(genus_from_boundary_count(n, b)
                     for b, c in enumerate(counts) if c)
    if support != list(range(support[0], support[-1] + 1)):
        raise GapDetectedError("genus support gap for %s" % (letters,))
    return support[0], support[-1]


def range_table(n: int, jobs: int = 1, force: bool = False) -> RangeTable:
    """Genus range of every n-chord equivalence class.

    ``n`` is capped at 7 unless ``force`` is given (n = 8 is supported
    but slow); results do not depend on ``jobs``.
    """
    if n > TABLE_BUDGET and not force:
        raise BudgetExceededError(
            "table for n=%d needs force=True (default cap is n <= %d)"
            % (n, TABLE_BUDGET))
    reps = list(enumerate_words(n))
    letter_lists = [w.letters for w in reps]
    if jobs > 1 and len(reps) > 64:
        chunk = max(1, len(reps) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = list(pool.map(_range_worker, letter_lists, chunksize=chunk))
    else:
        pairs = [_range_worker(letters) for letters in letter_lists]
    classes = {w: GenusRange(lo, hi) for w, (lo, hi) in zip(reps, pairs)}
    return RangeTable(n=n, classes=classes)


def _second_range_witness(n: int) -> ChordWord:
    """The expected unique class with range [1, 2]: a fully interleaved
    triple padded with isolated chords."""
    base = repeated_sequence(3)
    if n > 3:
        base = concat(base, isolated_chords(n - 3))
    return canonical_form(base)


def check_conjectures(n: int, jobs: int = 1, force: bool = False,
                      table: "Optional[RangeTable]" = None) -> "tuple[ConjectureReport, ...]":
    """Check the three structural conjectures at chord count n.

    1. every two-element genus range is [0, 1] or [1, 2];
    2. the classes with range [0, 1] are exactly the isolated-chords
       word (two classes at n = 2);
    3. the classes with range [1, 2] are exactly the padded interleaved
       triple (more than one class at n = 4).

    A precomputed ``table`` for the same n may be passed to avoid
    recomputing it.
    """
    if table is None or table.n != n:
        table = range_table(n, jobs=jobs, force=force)
    classes = table.classes

    two_elem = {w: r for w, r in classes.items() if r.size == 2}
    bad = tuple(sorted(str(w) for w, r in two_elem.items()
                       if r.as_pair() not in ((0, 1), (1, 2))))
    reports = [ConjectureReport(
        index=1,
        statement="two-element genus ranges are [0,1] or [1,2]",
        holds=not bad,
        expected=None,
        actual=tuple(sorted(set(str(r) for r in two_elem.values()))),
        counterexamples=bad,
    )]

    zero_one = tuple(sorted(str(w) for w, r in classes.items()
                            if r.as_pair() == (0, 1)))
    if n == 2:
        expected = ("1122", "1212")
    else:
        expected = (str(canonical_form(isolated_chords(n))),)
    reports.append(ConjectureReport(
        index=2,
        statement="classes with genus range [0,1]",
        holds=zero_one == expected,
        expected=expected,
        actual=zero_one,
    ))

    one_two = tuple(sorted(str(w) for w, r in classes.items()
                           if r.as_pair() == (1, 2)))
    if n == 4:
        reports.append(ConjectureReport(
            index=3,
            statement="more than one class with genus range [1,2] at n=4",
            holds=len(one_two) > 1,
            expected=None,
            actual=one_two,
        ))
    else:
        expected3 = (str(_second_range_witness(n)),) if n >= 3 else ()
        reports.append(ConjectureReport(
            index=3,
            statement="classes with genus range [1,2]",
            holds=one_two == expected3,
            expected=expected3,
            actual=one_two,
        ))
    return tuple(reports)


def check_nested_triple_bound(n: int) -> bool:
    """Every n-chord class containing a nested triple has a genus range
    of at least three values (checked exhaustively, 3 <= n <= 6)."""
    if not 3 <= n <= 6:
        raise ValueError("n must be between 3 and 6")
    for word in enumerate_words(n):
        if contains_nested_triple(word) and genus_range(word).size < 3:
            return False
    return True


def theorem_guarantees(n: int, lo: int, hi: int) -> bool:
    """True when [lo, hi] is a guaranteed-realizable genus range for
    some n-chord diagram: either hi = 2 lo with lo = 1 or hi = ceil(n/2),
    or 2 lo < hi <= ceil(n/2)."""
    if n < 1 or lo < 0 or hi < lo:
        return False
    m = (n + 1) // 2
    if hi > m:
        return False
    if 2 * lo < hi:
        return True
    return hi == 2 * lo and lo >= 1 and (lo == 1 or hi == m)


def witness(n: int, lo: int, hi: int,
            budget: "Optional[int]" = None) -> WitnessResult:
    """Construct an n-chord word with genus range [lo, hi].

    Raises NotGuaranteedError outside the guaranteed region.  Within
    the exhaustive budget the construction is verified by direct
    computation; a mismatch raises VerificationFailedError (and would
    mean the construction arithmetic is wrong).
    """
    if not theorem_guarantees(n, lo, hi):
        raise NotGuaranteedError(
            "no guaranteed n=%d construction for [%d, %d]" % (n, lo, hi))
    m = (n + 1) // 2
    block = genus_doubling_block()
    parts = []
    names = []
    if 2 * lo < hi:
        if n % 2 == 0 and hi == m:
            stride = hi - 2 * lo
            if lo:
                parts.append(power(block, lo))
                names.append("block^%d" % lo)
            parts.append(interleaved_pairs(stride))
            names.append("pairs(%d)" % stride)
        else:
            stride = hi - 2 * lo - 1
            pad = n - 4 * lo - 2 * stride
            parts.append(isolated_chords(pad))
            names.append("isolated(%d)" % pad)
            if lo:
                parts.append(power(block, lo))
                names.append("block^%d" % lo)
            if stride:
                parts.append(interleaved_pairs(stride))
                names.append("pairs(%d)" % stride)
    elif lo == 1:
        parts.append(repeated_sequence(3))
        names.append("interleaved(3)")
        if n > 3:
            parts.append(isolated_chords(n - 3))
            names.append("isolated(%d)" % (n - 3))
    elif n == 4 * lo:
        parts.append(power(block, lo))
        names.append("block^%d" % lo)
    else:
        parts.append(power(block, lo - 1))
        names.append("block^%d" % (lo - 1))
        parts.append(repeated_sequence(3))
        names.append("interleaved(3)")
    word = concat_all(parts)
    construction = " * ".join(names)
    if word.n != n:
        raise VerificationFailedError(
            "construction %s has %d chords, wanted %d"
            % (construction, word.n, n))
    limit = DEFAULT_PROFILE_BUDGET if budget is None else budget
    verified = False
    if n <= min(limit, kernels.MAX_KERNEL_CHORDS):
        got = genus_range(word, budget)
        if got.as_pair() != (lo, hi):
            raise VerificationFailedError(
                "construction %s has genus range %s, wanted [%d, %d]"
                % (construction, got, lo, hi))
        verified = True
    return WitnessResult(word=word, target=GenusRange(lo, hi),
                         verified=verified, construction=construction)


def realization_chart(n: int, jobs: int = 1,
                      table: "Optional[RangeTable]" = None) -> "tuple[tuple[int, int, str], ...]":
    """Status of every candidate range [a, b], 0 <= a <= b <= ceil(n/2).

    For n <= 7 the statuses come from the exhaustive table (realized or
    impossible, nothing unknown).  Beyond that, realized means
    guaranteed by construction, impossible covers the singletons, and
    the rest is unknown.
    """
    m = (n + 1) // 2
    entries = []
    if n <= TABLE_BUDGET:
        if table is None or table.n != n:
            table = range_table(n, jobs=jobs)
        realized = {r.as_pair() for r in table.classes.values()}
        for a in range(m + 1):
            for b in range(a, m + 1):
                status = REALIZED if (a, b) in realized else IMPOSSIBLE
                entries.append((a, b, status))
    else:
        for a in range(m + 1):
            for b in range(a, m + 1):
                if a == b:
                    status = IMPOSSIBLE
                elif theorem_guarantees(n, a, b):
                    status = REALIZED
                else:
                    status = UNKNOWN
                entries.append((a, b, status))
    return tuple(entries)
