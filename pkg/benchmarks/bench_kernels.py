#!/usr/bin/env python3
"""Benchmark the compiled tracing kernel against the pure-Python
fallback.

Times the three hot loops on representative workloads: a full genus
profile of a single word, the per-attachment sweep behind the n-chord
tables, and the canonical-form sieve used by class enumeration.

Run from a checkout with the package installed:

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from chordgenus.kernels import available_backends
from chordgenus.words import all_normalized_words, parse


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per case (default 3)")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("note: compiled kernel not built, timing the fallback only")

    profile_words = {
        "profile n=6 (12123434 chain)": parse("121234345656"),
        "profile n=7 (12312345674675)": parse("12312345674675"),
        "profile n=9 (triple + blocks)": parse("123123456745679889"),
    }
    sweep_words = {"full sweep n=6": parse("123456123456")}
    sieve_n = 6
    sieve_words = [w.letters for w in all_normalized_words(sieve_n)]

    rows = []
    for label, word in profile_words.items():
        pair = word.pairing().positions
        cells = {name: best_of(args.repeat, mod.profile_b_counts, pair)
                 for name, mod in backends.items()}
        rows.append((label, cells))
    for label, word in sweep_words.items():
        pair = word.pairing().positions
        cells = {name: best_of(args.repeat, mod.end_b_counts, pair)
                 for name, mod in backends.items()}
        rows.append((label, cells))

    def sieve_pure(mod):
        return sum(1 for w in sieve_words if mod.is_canonical_letters(w))

    def sieve_compiled(mod):
        return sum(1 for w in sieve_words if mod.is_canonical_word(bytes(w)))

    cells = {}
    for name, mod in backends.items():
        fn = sieve_compiled if name == "compiled" else sieve_pure
        cells[name] = best_of(args.repeat, fn, mod)
    rows.append(("canonical sieve n=%d (%d words)" % (sieve_n, len(sieve_words)),
                 cells))

    width = max(len(label) for label, _ in rows) + 2
    header = "%-*s" % (width, "workload")
    for name in backends:
        header += "%14s" % name
    if len(backends) == 2:
        header += "%10s" % "speedup"
    print(header)
    print("-" * len(header))
    for label, cells in rows:
        line = "%-*s" % (width, label)
        for name in backends:
            line += "%12.4fs" % cells[name]
        if len(cells) == 2:
            line += "%9.1fx" % (cells["pure-python"] / cells["compiled"])
        print(line)


if __name__ == "__main__":
    main()
