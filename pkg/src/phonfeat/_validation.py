"""Input validation helpers shared by the estimators and the CLI."""

from __future__ import annotations

from collections.abc import Iterable

from .accent import TONE_POLICIES
from .inventory import check_lang

__all__ = ["check_lang", "check_mode", "check_format", "check_tone_policy",
           "check_weights", "check_lines"]

MODES = ("phonemic", "surface")
FORMATS = ("tsv", "json")


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, not {mode!r}")
    return mode


def check_format(format: str) -> str:
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, not {format!r}")
    return format


def check_tone_policy(tone_policy: str) -> str:
    if tone_policy not in TONE_POLICIES:
        raise ValueError(f"tone_policy must be one of {TONE_POLICIES}, not {tone_policy!r}")
    return tone_policy


def check_weights(weights) -> tuple[float, float]:
    try:
        w_match, w_mismatch = weights
    except (TypeError, ValueError):
        raise ValueError("weights must be a (w_match, w_mismatch) pair") from None
    w_match, w_mismatch = float(w_match), float(w_mismatch)
    if w_match <= 0 or w_mismatch <= 0:
        raise ValueError("weights must be positive")
    return w_match, w_mismatch


def check_lines(X) -> list[str]:
    """Coerce estimator input to a list of tagged-transcription lines."""
    if isinstance(X, str):
        raise TypeError("expected an iterable of lines, not a single string")
    if not isinstance(X, Iterable):
        raise TypeError(f"expected an iterable of lines, got {type(X).__name__}")
    lines = list(X)
    for line in lines:
        if not isinstance(line, str):
            raise TypeError(f"every line must be a string, got {type(line).__name__}")
    return lines
