"""Exception hierarchy for chordgenus.

All package errors derive from :class:`ChordGenusError` so callers can
catch everything from this library with a single except clause.  Errors
that signal bad user input additionally derive from ``ValueError``;
errors that can only come from an internal inconsistency derive from
``RuntimeError`` and should never be caught silently.
"""


class ChordGenusError(Exception):
    """Base class for all errors raised by this package."""


class WordSyntaxError(ChordGenusError, ValueError):
    """Input does not describe a valid double-occurrence word."""


class EmptyWordError(WordSyntaxError):
    """The word has no chords (n = 0 is rejected)."""


class MalformedTokenError(WordSyntaxError):
    """A token in the textual word format could not be parsed."""


class NotDoubleOccurrenceError(WordSyntaxError):
    """Some chord label does not occur exactly twice."""


class EmptyRestrictionError(ChordGenusError, ValueError):
    """A sub-diagram restriction was asked for an empty chord subset."""


class EnumerationLimitError(ChordGenusError):
    """Requested enumeration exceeds the configured chord-count limit."""


class AttachmentLengthError(ChordGenusError, ValueError):
    """Attachment flags do not match the word's endpoint count."""


class BudgetExceededError(ChordGenusError):
    """Exhaustive computation would exceed the configured budget."""


class TracingConsistencyError(ChordGenusError, RuntimeError):
    """Boundary tracing produced an impossible count (internal bug)."""


class GapDetectedError(ChordGenusError, RuntimeError):
    """A genus profile had a gap in its support (internal bug)."""


class NotGuaranteedError(ChordGenusError):
    """The requested genus range is outside the guaranteed region."""


class VerificationFailedError(ChordGenusError):
    """A constructed witness failed its direct verification."""
