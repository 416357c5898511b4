"""Command-line front end.

Commands mirror the library: single-word queries (``range``, ``trace``,
``classify``), exhaustive per-n computations (``table``, ``conjectures``,
``chart``, ``enumerate``) and witness construction (``witness``).

Every command builds one output document (command, parameters, version,
results, timing) and renders it as human text, JSON, CSV or SVG.  The
heavy per-n commands can persist their results payload in a cache
directory (``--cache`` or the ``CHORDGENUS_CACHE`` environment
variable); cache files are canonical JSON and byte-identical across
recomputations of the same tool version.

Exit codes: 0 success, 2 bad input, 3 budget or enumeration limit
exceeded, 4 requested range not guaranteed, 5 witness verification
failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__, kernels, ranges, surface, words
from .errors import (
    BudgetExceededError,
    ChordGenusError,
    EnumerationLimitError,
    GapDetectedError,
    NotGuaranteedError,
    TracingConsistencyError,
    VerificationFailedError,
)

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_NOT_GUARANTEED = 4
EXIT_VERIFICATION = 5


def _canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _cache_dir(args) -> "Path | None":
    if getattr(args, "cache", None):
        return Path(args.cache)
    env = os.environ.get("CHORDGENUS_CACHE", "")
    return Path(env) if env else None


def _cached_results(args, command: str, n: int, compute):
    """Fetch the results payload from the cache or compute and store it."""
    directory = _cache_dir(args)
    if directory is None:
        return compute()
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / ("%s-n%d-v%d.json" % (command, n, FORMAT_VERSION))
    if path.exists():
        return json.loads(path.read_text())
    results = compute()
    path.write_text(_canonical_json(results))
    return results


def _emit(args, command: str, parameters: dict, results, human_lines) -> None:
    fmt = getattr(args, "format", "human")
    if fmt == "json":
        doc = {
            "command": command,
            "parameters": parameters,
            "version": __version__,
            "results": results,
            "timing_seconds": round(time.perf_counter() - args._t0, 6),
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in human_lines():
            print(line)


def _dart_name(d: int) -> str:
    kind = ("n", "c", "p")[d % 3]
    return "%s%d" % (kind, d // 3)


def _parse_word(text: str) -> words.ChordWord:
    return words.parse(text)


def _attach(args, word: words.ChordWord) -> surface.AttachmentConfig:
    config = surface.AttachmentConfig.parse(args.attach, 2 * word.n)
    if len(config) != 2 * word.n:
        raise surface.AttachmentLengthError(
            "word has %d endpoints but %d flags given"
            % (2 * word.n, len(config)))
    return config


# ---------------------------------------------------------------- range

def cmd_range(args) -> int:
    word = _parse_word(args.word)
    rng = ranges.genus_range(word, args.budget)
    results = {"word": word.render(), "n": word.n,
               "range": [rng.lo, rng.hi], "profile": None}
    profile = None
    if args.profile:
        profile = ranges.genus_profile(word, args.budget)
        results["profile"] = {str(g): c for g, c in sorted(profile.counts.items())}

    def human():
        yield "word %s (n=%d): gr = %s" % (word.render(), word.n, rng)
        if profile is not None:
            for g in sorted(profile.counts):
                yield "  genus %d: %d attachments" % (g, profile.counts[g])
    _emit(args, "range", {"word": word.render(), "profile": bool(args.profile)},
          results, human)
    return EXIT_OK


# ---------------------------------------------------------------- trace

def cmd_trace(args) -> int:
    word = _parse_word(args.word)
    config = _attach(args, word)
    rs = surface.build_rotation_system(word, config)
    faces = surface.trace_faces(rs)
    g = surface.genus_from_boundary_count(word.n, faces.b)
    tracing = surface.end_edge_trace(word, config)
    named = [[_dart_name(d) for d in cycle] for cycle in faces.faces]
    results = {
        "word": word.render(), "n": word.n, "attach": config.render(),
        "b": faces.b, "genus": g,
        "end_edge": tracing.name.lower(), "faces": named,
    }

    def human():
        yield "word %s, attach %s: b = %d, genus = %d, end edge %s" % (
            word.render(), config.render(), faces.b, g, tracing.name.lower())
        for i, cycle in enumerate(named):
            yield "  boundary %d: %s" % (i, " ".join(cycle))
    _emit(args, "trace", {"word": word.render(), "attach": config.render()},
          results, human)
    return EXIT_OK


# ---------------------------------------------------------------- table

def _table_results(n: int, jobs: int, force: bool) -> dict:
    table = ranges.range_table(n, jobs=jobs, force=force)
    return {
        "n": n,
        "class_count": len(table.classes),
        "ranges": [{"range": list(r.as_pair()), "classes": c}
                   for r, c in table.range_counts().items()],
        "classes": {w.render(): list(r.as_pair())
                    for w, r in sorted(table.classes.items())},
    }


def cmd_table(args) -> int:
    results = _cached_results(
        args, "table", args.n,
        lambda: _table_results(args.n, args.jobs, args.force))
    if args.format == "csv":
        print("word,lo,hi")
        for word, (lo, hi) in sorted(results["classes"].items()):
            print("%s,%d,%d" % (word, lo, hi))
        return EXIT_OK

    def human():
        yield "n = %d: %d classes, %d distinct genus ranges" % (
            args.n, results["class_count"], len(results["ranges"]))
        for entry in results["ranges"]:
            lo, hi = entry["range"]
            yield "  [%d, %d]: %d classes" % (lo, hi, entry["classes"])
    _emit(args, "table", {"n": args.n}, results, human)
    return EXIT_OK


# ---------------------------------------------------------------- conjectures

def _conjecture_results(n: int, jobs: int, force: bool) -> dict:
    reports = ranges.check_conjectures(n, jobs=jobs, force=force)
    return {
        "n": n,
        "conjectures": [{
            "index": r.index,
            "statement": r.statement,
            "holds": r.holds,
            "expected": list(r.expected) if r.expected is not None else None,
            "actual": list(r.actual),
            "counterexamples": list(r.counterexamples),
        } for r in reports],
    }


def cmd_conjectures(args) -> int:
    results = _cached_results(
        args, "conjectures", args.n,
        lambda: _conjecture_results(args.n, args.jobs, args.force))

    def human():
        yield "conjecture checks at n = %d" % args.n
        for r in results["conjectures"]:
            yield "  %d. %s: %s" % (r["index"], r["statement"],
                                    "holds" if r["holds"] else "FAILS")
            if r["expected"] is not None:
                yield "     expected %s" % (r["expected"],)
            yield "     actual   %s" % (r["actual"],)
            if r["counterexamples"]:
                yield "     counterexamples %s" % (r["counterexamples"],)
    _emit(args, "conjectures", {"n": args.n}, results, human)
    return EXIT_OK


# ---------------------------------------------------------------- witness

def cmd_witness(args) -> int:
    result = ranges.witness(args.n, args.lo, args.hi, args.budget)
    results = {
        "n": args.n,
        "target": [args.lo, args.hi],
        "word": result.word.render(),
        "construction": result.construction,
        "verified": result.verified,
    }

    def human():
        status = "verified" if result.verified else "constructed (beyond budget)"
        yield "witness for [%d, %d] with %d chords: %s" % (
            args.lo, args.hi, args.n, result.word.render())
        yield "  construction: %s, %s" % (result.construction, status)
    _emit(args, "witness", {"n": args.n, "target": [args.lo, args.hi]},
          results, human)
    return EXIT_OK


# ---------------------------------------------------------------- chart

def _chart_results(n: int, jobs: int) -> dict:
    entries = ranges.realization_chart(n, jobs=jobs)
    return {"n": n, "entries": [[a, b, status] for a, b, status in entries]}


def _chart_svg(results: dict) -> str:
    n = results["n"]
    entries = results["entries"]
    m = max((b for _, b, _ in entries), default=0)
    cell = 34
    margin = 46
    size = margin * 2 + cell * max(m, 1)
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (size, size + 24, size, size + 24),
        '<style>text{font:12px sans-serif}</style>',
        '<text x="%d" y="16">realized genus ranges [a, b], n = %d '
        '(filled: realized, slashed: impossible, open: unknown)</text>'
        % (margin // 2, n),
    ]

    def pos(a, b):
        return margin + cell * a, size - margin - cell * b + 10

    for a, b, status in entries:
        x, y = pos(a, b)
        if status == ranges.REALIZED:
            out.append('<circle cx="%d" cy="%d" r="8" fill="black"/>' % (x, y))
        elif status == ranges.IMPOSSIBLE:
            out.append('<circle cx="%d" cy="%d" r="8" fill="white" '
                       'stroke="black"/>' % (x, y))
            out.append('<line x1="%d" y1="%d" x2="%d" y2="%d" '
                       'stroke="black"/>' % (x - 6, y + 6, x + 6, y - 6))
        else:
            out.append('<circle cx="%d" cy="%d" r="8" fill="white" '
                       'stroke="black" stroke-dasharray="2,2"/>' % (x, y))
    for a in range(m + 1):
        x, _ = pos(a, 0)
        out.append('<text x="%d" y="%d" text-anchor="middle">%d</text>'
                   % (x, size - margin + 30, a))
        _, y = pos(0, a)
        out.append('<text x="%d" y="%d" text-anchor="middle">%d</text>'
                   % (margin - 24, y + 4, a))
    out.append('<text x="%d" y="%d">a</text>' % (size - margin // 2, size - margin + 30))
    out.append('<text x="%d" y="%d">b</text>' % (margin - 24, margin - 6))
    out.append("</svg>")
    return "\n".join(out)


def cmd_chart(args) -> int:
    results = _cached_results(
        args, "chart", args.n, lambda: _chart_results(args.n, args.jobs))
    if args.format == "csv":
        print("a,b,status")
        for a, b, status in results["entries"]:
            print("%d,%d,%s" % (a, b, status))
        return EXIT_OK
    if args.format == "svg":
        svg = _chart_svg(results)
        if args.output:
            Path(args.output).write_text(svg + "\n")
        else:
            print(svg)
        return EXIT_OK

    def human():
        yield "realization chart for n = %d" % args.n
        for a, b, status in results["entries"]:
            yield "  [%d, %d]: %s" % (a, b, status)
    _emit(args, "chart", {"n": args.n}, results, human)
    return EXIT_OK


# ---------------------------------------------------------------- classify

def cmd_classify(args) -> int:
    word = _parse_word(args.word)
    cls = ranges.classify_end_edge(word, args.budget)
    conditions = {}
    for extreme in (ranges.MIN, ranges.MAX):
        for curves in (1, 2):
            conditions["A(%s,%d)" % (extreme, curves)] = cls.always(extreme, curves)
            conditions["E(%s,%d)" % (extreme, curves)] = cls.exists(extreme, curves)
    results = {
        "word": word.render(), "n": word.n,
        "summary": cls.summary(),
        "conditions": conditions,
        "counts": {
            "min_single": cls.min_single, "min_double": cls.min_double,
            "max_single": cls.max_single, "max_double": cls.max_double,
        },
    }

    def human():
        yield "%s: %s" % (word.render(), cls.summary())
        yield ("  min genus attachments: %d single-traced, %d double-traced"
               % (cls.min_single, cls.min_double))
        yield ("  max genus attachments: %d single-traced, %d double-traced"
               % (cls.max_single, cls.max_double))
    _emit(args, "classify", {"word": word.render()}, results, human)
    return EXIT_OK


# ---------------------------------------------------------------- enumerate

def cmd_enumerate(args) -> int:
    reps = list(words.enumerate_words(args.n, limit=args.limit))
    rendered = [w.render() for w in reps]
    if args.format == "csv":
        print("word")
        for w in rendered:
            print(w)
        return EXIT_OK
    results = {"n": args.n, "count": len(rendered), "words": rendered}

    def human():
        yield "n = %d: %d equivalence classes" % (args.n, len(rendered))
        for w in rendered:
            yield "  " + w
    _emit(args, "enumerate", {"n": args.n}, results, human)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _add_format(sub, *, csv=False, svg=False):
    choices = ["human", "json"]
    if csv:
        choices.append("csv")
    if svg:
        choices.append("svg")
    sub.add_argument("--format", choices=choices, default="human",
                     help="output format (default: human)")


def _add_jobs_cache(sub):
    sub.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                     help="worker processes (default: all cores; 1 = serial)")
    sub.add_argument("--cache", default=None, metavar="DIR",
                     help="cache directory (or set CHORDGENUS_CACHE)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordgenus",
        description="Genus ranges of thickened chord diagrams.")
    parser.add_argument("--version", action="version",
                        version="chordgenus %s (%s kernel)" % (__version__, kernels.BACKEND))
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("range", help="genus range of one word")
    p.add_argument("word")
    p.add_argument("--profile", action="store_true",
                   help="also count attachments per genus")
    p.add_argument("--budget", type=int, default=None,
                   help="max chord count for exhaustive sweeps (default 12)")
    _add_format(p)
    p.set_defaults(func=cmd_range)

    p = subs.add_parser("trace", help="boundary curves of one attachment")
    p.add_argument("word")
    p.add_argument("--attach", default="all-in",
                   help="2n flags over {i,o}, or all-in / all-out")
    _add_format(p)
    p.set_defaults(func=cmd_trace)

    p = subs.add_parser("table", help="genus ranges of all n-chord classes")
    p.add_argument("n", type=int)
    p.add_argument("--force", action="store_true",
                   help="allow n = 8 (slow; default cap is n = 7)")
    _add_jobs_cache(p)
    _add_format(p, csv=True)
    p.set_defaults(func=cmd_table)

    p = subs.add_parser("conjectures", help="check the structural conjectures")
    p.add_argument("n", type=int)
    p.add_argument("--force", action="store_true")
    _add_jobs_cache(p)
    _add_format(p)
    p.set_defaults(func=cmd_conjectures)

    p = subs.add_parser("witness", help="construct a word with range [lo, hi]")
    p.add_argument("n", type=int)
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--budget", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_witness)

    p = subs.add_parser("chart", help="realized / impossible / unknown ranges")
    p.add_argument("n", type=int)
    p.add_argument("--output", default=None, metavar="FILE",
                   help="write SVG here instead of stdout")
    _add_jobs_cache(p)
    _add_format(p, csv=True, svg=True)
    p.set_defaults(func=cmd_chart)

    p = subs.add_parser("classify", help="end-edge conditions of one word")
    p.add_argument("word")
    p.add_argument("--budget", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("enumerate", help="canonical n-chord representatives")
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=words.DEFAULT_ENUMERATION_LIMIT,
                   help="enumeration cap (default 8)")
    _add_format(p, csv=True)
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.perf_counter()
    try:
        return args.func(args)
    except (TracingConsistencyError, GapDetectedError):
        raise  # internal inconsistency: crash loudly, never mask
    except (BudgetExceededError, EnumerationLimitError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except NotGuaranteedError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_NOT_GUARANTEED
    except VerificationFailedError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VERIFICATION
    except ChordGenusError as exc:
        # parse errors, attachment mismatches, bad restrictions
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
