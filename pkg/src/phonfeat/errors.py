"""Exception hierarchy for the phonfeat package.

All exceptions carry a plain message; structured context (line numbers,
offending symbols) is attached as attributes where useful so callers can
report precisely without string parsing.
"""


class PhonfeatError(Exception):
    """Base class for all errors raised by this package."""


# Data layer: feature definitions, inventories, mapping tables.

class UnknownFeature(PhonfeatError):
    """A name does not resolve to one of the 19 features."""


class UnknownPhoneme(PhonfeatError):
    """A SAMPA symbol is not present in the inventory."""


class ParseError(PhonfeatError):
    """A data file line is malformed."""

    def __init__(self, message: str, *, line: int | None = None, reason: str | None = None):
        super().__init__(message)
        self.line = line
        self.reason = reason


class ValidationError(PhonfeatError):
    """An inventory entry violates a structural invariant at load time."""

    def __init__(self, message: str, *, sampa: str | None = None):
        super().__init__(message)
        self.sampa = sampa


class EmptyCandidateSet(PhonfeatError):
    """Candidate ranking was requested over an empty candidate list."""


# Input layer: transcription parsing.

class UnknownArpabetCode(PhonfeatError):
    """An ARPABET code has no mapping entry."""


class UnknownSyllable(PhonfeatError):
    """A pinyin syllable does not decompose into a known initial and final."""


class MissingToneDigit(PhonfeatError):
    """A pinyin syllable lacks its final tone digit 1-5."""


class UnsupportedErhua(PhonfeatError):
    """Erhua was requested on a segment with no rhotic vowel counterpart."""


class MissingLanguageTag(PhonfeatError):
    """A tagged-transcription span lacks its en:/cmn: language prefix."""


class EmptySpan(PhonfeatError):
    """A tagged-transcription span carries no payload."""


# Evaluation layer.

class LineCountMismatch(PhonfeatError):
    """Reference and hypothesis files have different line counts."""


class ZeroEntries(PhonfeatError):
    """A phone error rate was requested against an empty reference."""

    def __init__(self, message: str, *, line: int | None = None):
        super().__init__(message)
        self.line = line


#: Errors caused by malformed user input streams (CLI exit code 3).
INPUT_ERRORS = (
    UnknownArpabetCode,
    UnknownSyllable,
    MissingToneDigit,
    UnsupportedErhua,
    MissingLanguageTag,
    EmptySpan,
    LineCountMismatch,
    ZeroEntries,
)

#: Errors caused by bad data files or failed lookups (CLI exit code 2).
DATA_ERRORS = (
    UnknownFeature,
    UnknownPhoneme,
    ParseError,
    ValidationError,
    EmptyCandidateSet,
)
