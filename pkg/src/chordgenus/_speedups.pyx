# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tracing and canonicalization kernels.

Mirrors chordgenus._kernel_py exactly; see that module for the
conventions.  Words are capped at 31 chords (attachment bitmasks live
in a 64-bit integer) which is far beyond any exhaustive budget.
"""

from libc.stdint cimport int64_t, uint64_t

BACKEND_NAME = "compiled"

cdef enum:
    MAX_ENDPOINTS = 62
    MAX_DARTS = 186

MAX_KERNEL_CHORDS = 31


cdef int _fill_pair(object pair, int* cpair) except -1:
    cdef int m = len(pair)
    cdef int i, j
    if m < 2 or m % 2 or m > MAX_ENDPOINTS:
        raise ValueError("pairing length must be even, positive and small")
    for i in range(m):
        cpair[i] = pair[i]
    for i in range(m):
        j = cpair[i]
        if j == i or j < 0 or j >= m or cpair[j] != i:
            raise ValueError("not a fixed-point-free involution")
    return m


cdef void _fill_alpha(const int* pair, int m, int* alpha) noexcept nogil:
    cdef int i
    for i in range(m):
        alpha[3 * i] = 3 * ((i + 1) % m) + 2
        alpha[3 * i + 1] = 3 * pair[i] + 1
        alpha[3 * i + 2] = 3 * ((i - 1 + m) % m)


cdef int _trace(const int* alpha, int m, uint64_t sigma,
                int64_t* seen, int64_t tick, int* cyc) noexcept nogil:
    cdef int b = 0
    cdef int nd = 3 * m
    cdef int s, d, a, k
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
            if (sigma >> (a / 3)) & 1:
                d = a + 2 if k == 0 else a - 1
            else:
                d = a - 2 if k == 2 else a + 1
    return b


def trace_b_end(pair, sigma):
    """Boundary count and end-edge tracing for one attachment bitmask."""
    cdef int cpair[MAX_ENDPOINTS]
    cdef int alpha[MAX_DARTS]
    cdef int64_t seen[MAX_DARTS]
    cdef int cyc[MAX_DARTS]
    cdef int m = _fill_pair(pair, cpair)
    cdef uint64_t sig = sigma
    cdef int d
    for d in range(3 * m):
        seen[d] = 0
    _fill_alpha(cpair, m, alpha)
    cdef int b = _trace(alpha, m, sig, seen, 1, cyc)
    return b, cyc[3 * (m - 1)] == cyc[2]


def profile_b_counts(pair):
    """Counts of attachments per boundary count, over all 4^n.

    Traces the half of the configurations whose last endpoint is inner
    and doubles each tally (flipping every flag preserves b).
    """
    cdef int cpair[MAX_ENDPOINTS]
    cdef int alpha[MAX_DARTS]
    cdef int64_t seen[MAX_DARTS]
    cdef int cyc[MAX_DARTS]
    cdef int64_t counts[MAX_DARTS + 1]
    cdef int m = _fill_pair(pair, cpair)
    cdef int nd = 3 * m
    cdef int i, b
    cdef uint64_t sigma, top
    cdef int64_t tick = 0
    _fill_alpha(cpair, m, alpha)
    for i in range(nd):
        seen[i] = 0
    for i in range(nd + 1):
        counts[i] = 0
    top = (<uint64_t>1) << (m - 1)
    with nogil:
        for sigma in range(top):
            tick += 1
            b = _trace(alpha, m, sigma, seen, tick, cyc)
            counts[b] += 2
    return [counts[i] for i in range(nd + 1)]


def end_b_counts(pair):
    """Counts per (b, end-edge tracing) over the full 4^n sweep."""
    cdef int cpair[MAX_ENDPOINTS]
    cdef int alpha[MAX_DARTS]
    cdef int64_t seen[MAX_DARTS]
    cdef int cyc[MAX_DARTS]
    cdef int64_t single[MAX_DARTS + 1]
    cdef int64_t double_[MAX_DARTS + 1]
    cdef int m = _fill_pair(pair, cpair)
    cdef int nd = 3 * m
    cdef int i, b, ea
    cdef uint64_t sigma, top
    cdef int64_t tick = 0
    _fill_alpha(cpair, m, alpha)
    for i in range(nd):
        seen[i] = 0
    for i in range(nd + 1):
        single[i] = 0
        double_[i] = 0
    ea = 3 * (m - 1)
    top = (<uint64_t>1) << m
    with nogil:
        for sigma in range(top):
            tick += 1
            b = _trace(alpha, m, sigma, seen, tick, cyc)
            if cyc[ea] == cyc[2]:
                single[b] += 1
            else:
                double_[b] += 1
    return ([single[i] for i in range(nd + 1)],
            [double_[i] for i in range(nd + 1)])


def all_b(pair):
    """Boundary count of every attachment, indexed by bitmask (full
    4^n sweep; intended for exhaustive invariant checks at small n)."""
    cdef int cpair[MAX_ENDPOINTS]
    cdef int alpha[MAX_DARTS]
    cdef int64_t seen[MAX_DARTS]
    cdef int cyc[MAX_DARTS]
    cdef int m = _fill_pair(pair, cpair)
    cdef int i
    cdef uint64_t sigma, top
    cdef int64_t tick = 0
    if m > 26:
        raise ValueError("full b table too large")
    _fill_alpha(cpair, m, alpha)
    for i in range(3 * m):
        seen[i] = 0
    top = (<uint64_t>1) << m
    out = [0] * (1 << m)
    for sigma in range(top):
        tick += 1
        out[sigma] = _trace(alpha, m, sigma, seen, tick, cyc)
    return out


# Canonicalization.  Letters are 1..n <= 31 so bytes are a convenient
# wire format; relabelling maps are stamp-cleared instead of zeroed.

cdef int _relabel_cmp(const unsigned char* seq, int start, int size,
                      const unsigned char* ref,
                      int* label, int* stamp, int tick) noexcept nogil:
    """-1 / 0 / +1 comparison of relabel(seq[start:start+size]) vs ref."""
    cdef int nxt = 1
    cdef int idx, t
    cdef unsigned char x
    for idx in range(size):
        x = seq[start + idx]
        if stamp[x] != tick:
            stamp[x] = tick
            label[x] = nxt
            nxt += 1
        t = label[x]
        if t < ref[idx]:
            return -1
        if t > ref[idx]:
            return 1
    return 0


def is_canonical_word(bytes w):
    """True when no shift/reversal/relabel variant is smaller."""
    cdef int size = len(w)
    cdef unsigned char doubled[2 * MAX_ENDPOINTS]
    cdef unsigned char rev2[2 * MAX_ENDPOINTS]
    cdef unsigned char ref[MAX_ENDPOINTS]
    cdef int label[MAX_ENDPOINTS + 2]
    cdef int stamp[MAX_ENDPOINTS + 2]
    cdef const unsigned char* data = w
    cdef int i, s, c
    cdef int tick = 0
    if size < 2 or size > MAX_ENDPOINTS:
        raise ValueError("word length out of kernel range")
    for i in range(size):
        ref[i] = data[i]
        doubled[i] = data[i]
        doubled[size + i] = data[i]
        rev2[i] = data[size - 1 - i]
        rev2[size + i] = rev2[i]
    for i in range(size + 2):
        stamp[i] = 0
    with nogil:
        for s in range(1, size):
            tick += 1
            if _relabel_cmp(doubled, s, size, ref, label, stamp, tick) < 0:
                with gil:
                    return False
        for s in range(size):
            tick += 1
            if _relabel_cmp(rev2, s, size, ref, label, stamp, tick) < 0:
                with gil:
                    return False
    return True


def canonical_word(bytes w):
    """Least shift/reversal/relabel variant of the word."""
    cdef int size = len(w)
    cdef unsigned char doubled[2 * MAX_ENDPOINTS]
    cdef unsigned char rev2[2 * MAX_ENDPOINTS]
    cdef unsigned char best[MAX_ENDPOINTS]
    cdef unsigned char cand[MAX_ENDPOINTS]
    cdef int label[MAX_ENDPOINTS + 2]
    cdef int stamp[MAX_ENDPOINTS + 2]
    cdef const unsigned char* data = w
    cdef int i, s, idx, nxt, tick
    cdef unsigned char x
    if size < 2 or size > MAX_ENDPOINTS:
        raise ValueError("word length out of kernel range")
    for i in range(size):
        doubled[i] = data[i]
        doubled[size + i] = data[i]
        rev2[i] = data[size - 1 - i]
        rev2[size + i] = rev2[i]
    for i in range(size + 2):
        stamp[i] = 0
    # seed best with the relabelled word itself (s = 0 of doubled)
    tick = 0
    for src in (0, 1):
        for s in range(size):
            tick += 1
            nxt = 1
            for idx in range(size):
                x = doubled[s + idx] if src == 0 else rev2[s + idx]
                if stamp[x] != tick:
                    stamp[x] = tick
                    label[x] = nxt
                    nxt += 1
                cand[idx] = <unsigned char>label[x]
            if src == 0 and s == 0:
                for idx in range(size):
                    best[idx] = cand[idx]
                continue
            for idx in range(size):
                if cand[idx] != best[idx]:
                    if cand[idx] < best[idx]:
                        for i in range(size):
                            best[i] = cand[i]
                    break
    return bytes([best[i] for i in range(size)])
