"""Kernel dispatch: compiled extension when available, else pure Python.

The compiled module ``chordgenus._speedups`` is built at install time;
if it failed to build (or ``CHORDGENUS_PURE=1`` is set) the pure-Python
twin in ``chordgenus._kernel_py`` is used instead.  Both expose the
same functions and are kept behaviourally identical; the test suite
cross-checks them.
"""

from __future__ import annotations

import os

from . import _kernel_py

_impl = _kernel_py
if os.environ.get("CHORDGENUS_PURE", "") in ("", "0"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = _impl.BACKEND_NAME
MAX_KERNEL_CHORDS = _kernel_py.MAX_KERNEL_CHORDS

trace_b_end = _impl.trace_b_end
profile_b_counts = _impl.profile_b_counts
end_b_counts = _impl.end_b_counts
all_b = _impl.all_b


if _impl is _kernel_py:
    canonical_letters = _kernel_py.canonical_letters
    is_canonical_letters = _kernel_py.is_canonical_letters
else:
    def canonical_letters(letters):
        return tuple(_impl.canonical_word(bytes(letters)))

    def is_canonical_letters(letters):
        return _impl.is_canonical_word(bytes(letters))


def available_backends() -> "dict[str, object]":
    """Importable kernel modules keyed by backend name (for benchmarks
    and cross-checking tests)."""
    found = {_kernel_py.BACKEND_NAME: _kernel_py}
    try:
        from . import _speedups
        found[_speedups.BACKEND_NAME] = _speedups
    except ImportError:
        pass
    return found
