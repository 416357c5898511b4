"""Pure-Python tracing and canonicalization kernels.

Reference implementations of the hot loops.  ``chordgenus.kernels``
prefers the compiled twin (``chordgenus._speedups``) when it is
available; this module is the fallback and the behavioural contract.

Conventions shared by both backends:

* Endpoints of an n-chord word are positions ``0 .. 2n-1``; ``pair`` is
  the fixed-point-free involution pairing same-label endpoints.
* Each endpoint ``i`` carries three darts: ``3i`` (toward the next
  backbone arc), ``3i + 1`` (into the chord band) and ``3i + 2``
  (toward the previous backbone arc).
* ``sigma`` is an attachment bitmask: bit ``i`` set means the band end
  at endpoint ``i`` is attached to the outer boundary circle; clear
  means inner.
* Boundary curves are the cycles of ``rotation ∘ edge-involution``; the
  per-endpoint rotation is ``(next, chord, prev)`` for an inner end and
  ``(next, prev, chord)`` for an outer end.
"""

from __future__ import annotations

from typing import Sequence

BACKEND_NAME = "pure-python"

MAX_KERNEL_CHORDS = 31


def build_alpha(pair: Sequence[int]) -> list:
    """Edge involution on darts for the given endpoint pairing."""
    m = len(pair)
    alpha = [0] * (3 * m)
    for i in range(m):
        alpha[3 * i] = 3 * ((i + 1) % m) + 2
        alpha[3 * i + 1] = 3 * pair[i] + 1
        alpha[3 * i + 2] = 3 * ((i - 1) % m)
    return alpha


def _check_pair(pair: Sequence[int]) -> int:
    m = len(pair)
    if m < 2 or m % 2:
        raise ValueError("pairing length must be even and positive")
    if m > 2 * MAX_KERNEL_CHORDS:
        raise ValueError("too many chords for the tracing kernel")
    for i, j in enumerate(pair):
        if j == i or not 0 <= j < m or pair[j] != i:
            raise ValueError("not a fixed-point-free involution")
    return m


def trace_b_end(pair: Sequence[int], sigma: int) -> "tuple[int, bool]":
    """Boundary count and end-edge tracing for one attachment.

    Returns ``(b, single)`` where ``single`` is True when the two
    boundary segments along the end edge (the arc from the last
    endpoint back to position 0) lie on the same boundary curve.
    """
    m = _check_pair(pair)
    alpha = build_alpha(pair)
    seen = [0] * (3 * m)
    cyc = [0] * (3 * m)
    b = _trace(alpha, m, sigma, seen, 1, cyc)
    return b, cyc[3 * (m - 1)] == cyc[2]


def _trace(alpha, m, sigma, seen, tick, cyc):
    # Walk the cycles of rotation∘alpha.  The rotation step is inlined:
    # dart a at endpoint a//3 maps to a+1 / a-2 (inner) or a+2 / a-1
    # (outer) depending on a % 3.
    b = 0
    nd = 3 * m
    for s in range(nd):
        if seen[s] == tick:
            continue
        b += 1
        d = s
        while seen[d] != tick:
            seen[d] = tick
            cyc[d] = b
            a = alpha[d]
            k = a % 3
            if (sigma >> (a // 3)) & 1:
                d = a + 2 if k == 0 else a - 1
            else:
                d = a - 2 if k == 2 else a + 1
    return b


def profile_b_counts(pair: Sequence[int]) -> list:
    """Count attachments by boundary-curve count, over all 4^n of them.

    Only half of the configurations are traced: flipping every flag of
    an attachment does not change its boundary count, so the loop fixes
    the last endpoint to inner and doubles each tally.  The returned
    list is indexed by b and sums to 4^n.
    """
    m = _check_pair(pair)
    alpha = build_alpha(pair)
    nd = 3 * m
    seen = [0] * nd
    cyc = [0] * nd
    counts = [0] * (nd + 1)
    tick = 0
    for sigma in range(1 << (m - 1)):
        tick += 1
        counts[_trace(alpha, m, sigma, seen, tick, cyc)] += 2
    return counts


def end_b_counts(pair: Sequence[int]) -> "tuple[list, list]":
    """Counts of attachments by (b, end-edge tracing), full sweep.

    Returns ``(single, double)`` lists indexed by b; ``single[b]`` is
    the number of attachments with b boundary curves whose end edge is
    traced by one curve, ``double[b]`` by two.
    """
    m = _check_pair(pair)
    alpha = build_alpha(pair)
    nd = 3 * m
    seen = [0] * nd
    cyc = [0] * nd
    single = [0] * (nd + 1)
    double = [0] * (nd + 1)
    ea = 3 * (m - 1)
    tick = 0
    for sigma in range(1 << m):
        tick += 1
        b = _trace(alpha, m, sigma, seen, tick, cyc)
        if cyc[ea] == cyc[2]:
            single[b] += 1
        else:
            double[b] += 1
    return single, double


def all_b(pair: Sequence[int]) -> list:
    """Boundary count of every attachment, indexed by bitmask (full
    4^n sweep; intended for exhaustive invariant checks at small n)."""
    m = _check_pair(pair)
    alpha = build_alpha(pair)
    nd = 3 * m
    seen = [0] * nd
    cyc = [0] * nd
    out = [0] * (1 << m)
    tick = 0
    for sigma in range(1 << m):
        tick += 1
        out[sigma] = _trace(alpha, m, sigma, seen, tick, cyc)
    return out


def _relabel(seq):
    out = []
    label = {}
    for x in seq:
        t = label.get(x)
        if t is None:
            t = len(label) + 1
            label[x] = t
        out.append(t)
    return tuple(out)


def canonical_letters(letters: Sequence[int]) -> "tuple[int, ...]":
    """Lexicographically least relabelled rotation of the word or its
    reversal (4n candidates in all)."""
    letters = tuple(letters)
    size = len(letters)
    best = _relabel(letters)
    for base in (letters + letters, letters[::-1] + letters[::-1]):
        for s in range(size):
            cand = _relabel(base[s:s + size])
            if cand < best:
                best = cand
    return best


def is_canonical_letters(letters: Sequence[int]) -> bool:
    """True when the word equals its own canonical form.

    Equivalent to ``canonical_letters(w) == w`` but with early exit,
    which matters when sieving all (2n-1)!! normalized words.
    """
    letters = tuple(letters)
    size = len(letters)
    doubled = letters + letters
    rev = letters[::-1]
    rev2 = rev + rev
    for base, skip0 in ((doubled, True), (rev2, False)):
        for s in range(size):
            if skip0 and s == 0:
                continue
            # streaming comparison of _relabel(base[s:s+size]) vs letters
            label = {}
            nxt = 1
            lt = False
            for idx in range(size):
                x = base[s + idx]
                t = label.get(x)
                if t is None:
                    t = nxt
                    label[x] = t
                    nxt += 1
                r = letters[idx]
                if t != r:
                    lt = t < r
                    break
            else:
                continue
            if lt:
                return False
    return True
