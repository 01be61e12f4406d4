"""Phone-sequence alignment and phone error rate.

PER = (deletions + insertions + substitutions) / reference length, from a
minimum-edit-distance alignment with unit costs. Among minimal alignments
the backtrace prefers substitution over deletion over insertion, so counts
are deterministic. Rates are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import LineCountMismatch, ZeroEntries


@dataclass(frozen=True)
class AlignmentResult:
    deletions: int
    insertions: int
    substitutions: int
    entries: int
    per: Fraction

    @property
    def distance(self) -> int:
        return self.deletions + self.insertions + self.substitutions


def align_sequences(ref: Sequence[str], hyp: Sequence[str]) -> AlignmentResult:
    """Align two symbol sequences and tally edit operations against ``ref``.

    Raises ZeroEntries for an empty reference, since the rate is undefined.
    The summed counts always equal the Levenshtein distance; the rate may
    exceed 1 when the hypothesis overruns a short reference.
    """
    m, n = len(ref), len(hyp)
    if m == 0:
        raise ZeroEntries("phone error rate requested against an empty reference")

    # Classic DP table; small inputs dominate, so plain lists are fastest here.
    previous = list(range(n + 1))
    table = [previous]
    for i in range(1, m + 1):
        ref_symbol = ref[i - 1]
        current = [i] + [0] * n
        for j in range(1, n + 1):
            diagonal = previous[j - 1] + (ref_symbol != hyp[j - 1])
            deletion = previous[j] + 1
            insertion = current[j - 1] + 1
            best = diagonal
            if deletion < best:
                best = deletion
            if insertion < best:
                best = insertion
            current[j] = best
        table.append(current)
        previous = current

    deletions = insertions = substitutions = 0
    i, j = m, n
    while i > 0 or j > 0:
        cell = table[i][j]
        if i > 0 and j > 0 and cell == table[i - 1][j - 1] + (ref[i - 1] != hyp[j - 1]):
            if ref[i - 1] != hyp[j - 1]:
                substitutions += 1
            i -= 1
            j -= 1
        elif i > 0 and cell == table[i - 1][j] + 1:
            deletions += 1
            i -= 1
        else:
            insertions += 1
            j -= 1

    errors = deletions + insertions + substitutions
    return AlignmentResult(deletions, insertions, substitutions, m, Fraction(errors, m))


@dataclass(frozen=True)
class CorpusSummary:
    """Corpus-pooled and utterance-averaged phone error rates."""

    total_errors: int
    total_entries: int
    per: Fraction
    mean_per: Fraction


def per_from_files(ref_path, hyp_path) -> tuple[list[AlignmentResult], CorpusSummary]:
    """Score line-aligned reference and hypothesis files.

    Lines hold whitespace-separated symbols. Raises LineCountMismatch when
    the files disagree in length and ZeroEntries (with the line number) when
    a reference line is empty.
    """
    ref_lines = Path(ref_path).read_text(encoding="utf-8").splitlines()
    hyp_lines = Path(hyp_path).read_text(encoding="utf-8").splitlines()
    if len(ref_lines) != len(hyp_lines):
        raise LineCountMismatch(
            f"reference has {len(ref_lines)} lines, hypothesis has {len(hyp_lines)}"
        )
    results: list[AlignmentResult] = []
    for lineno, (ref_line, hyp_line) in enumerate(zip(ref_lines, hyp_lines), start=1):
        ref = ref_line.split()
        hyp = hyp_line.split()
        if not ref:
            raise ZeroEntries(f"line {lineno}: empty reference", line=lineno)
        results.append(align_sequences(ref, hyp))
    total_errors = sum(r.distance for r in results)
    total_entries = sum(r.entries for r in results)
    pooled = Fraction(total_errors, total_entries) if total_entries else Fraction(0)
    mean = sum((r.per for r in results), Fraction(0)) / len(results) if results else Fraction(0)
    summary = CorpusSummary(total_errors, total_entries, pooled, mean)
    return results, summary
