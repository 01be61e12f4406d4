"""Edit-distance alignment and phone error rate against brute-force oracles."""

import itertools
import random
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phonfeat import LineCountMismatch, ZeroEntries, align_sequences, per_from_files


@lru_cache(maxsize=None)
def brute_distance(a: str, b: str) -> int:
    """Plain recursive Levenshtein, independent of the DP implementation."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(
        brute_distance(a[1:], b[1:]) + (a[0] != b[0]),
        brute_distance(a[1:], b) + 1,
        brute_distance(a, b[1:]) + 1,
    )


def test_identical_sequences_have_zero_per():
    result = align_sequences(["a", "b", "c"], ["a", "b", "c"])
    assert result.distance == 0
    assert result.per == 0


def test_single_deletion():
    result = align_sequences(["a", "b", "c"], ["a", "c"])
    assert (result.deletions, result.insertions, result.substitutions) == (1, 0, 0)
    assert result.per == Fraction(1, 3)


def test_per_can_exceed_one():
    result = align_sequences(["a"], ["b", "c"])
    assert result.distance == 2
    assert result.substitutions == 1 and result.insertions == 1
    assert result.per == Fraction(2, 1)
    assert float(result.per) == 2.0


def test_empty_hypothesis_is_all_deletions():
    result = align_sequences(["x", "y", "z"], [])
    assert result.deletions == 3
    assert result.per == 1


def test_empty_reference_raises():
    with pytest.raises(ZeroEntries):
        align_sequences([], ["a"])
    with pytest.raises(ZeroEntries):
        align_sequences([], [])


def test_counts_sum_to_distance_exhaustive_small():
    alphabet = "abc"
    strings = [""] + ["".join(p) for n in (1, 2, 3) for p in itertools.product(alphabet, repeat=n)]
    for ref in strings:
        if not ref:
            continue
        for hyp in strings:
            result = align_sequences(ref, hyp)
            assert result.distance == brute_distance(ref, hyp), (ref, hyp)


@settings(max_examples=300, deadline=None)
@given(
    ref=st.text(alphabet="abcd", min_size=1, max_size=10),
    hyp=st.text(alphabet="abcd", max_size=10),
)
def test_distance_matches_oracle_random(ref, hyp):
    assert align_sequences(ref, hyp).distance == brute_distance(ref, hyp)


@settings(max_examples=200, deadline=None)
@given(
    a=st.text(alphabet="abc", min_size=1, max_size=8),
    b=st.text(alphabet="abc", min_size=1, max_size=8),
    c=st.text(alphabet="abc", min_size=1, max_size=8),
)
def test_triangle_inequality(a, b, c):
    d_ab = align_sequences(a, b).distance
    d_bc = align_sequences(b, c).distance
    d_ac = align_sequences(a, c).distance
    assert d_ac <= d_ab + d_bc


def test_backtrace_preference_is_deterministic():
    # Two minimal alignments exist; substitution is preferred over indels.
    first = align_sequences(["a", "b"], ["b"])
    again = align_sequences(["a", "b"], ["b"])
    assert first == again
    assert first.distance == 1


class TestPerFromFiles:
    def write(self, tmp_path, name, lines):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def test_identical_files(self, tmp_path):
        ref = self.write(tmp_path, "ref.txt", ["a b c", "d e"])
        results, summary = per_from_files(ref, ref)
        assert [r.per for r in results] == [0, 0]
        assert summary.per == 0
        assert summary.mean_per == 0

    def test_corpus_pooling(self, tmp_path):
        # 1 error over 10 reference symbols pooled -> 0.1.
        ref = self.write(tmp_path, "ref.txt", ["a b c d e", "f g h i j"])
        hyp = self.write(tmp_path, "hyp.txt", ["a b c d e", "f g h i x"])
        results, summary = per_from_files(ref, hyp)
        assert summary.total_entries == 10
        assert summary.total_errors == 1
        assert summary.per == Fraction(1, 10)
        assert summary.mean_per == Fraction(1, 10)

    def test_mean_differs_from_pooled(self, tmp_path):
        ref = self.write(tmp_path, "ref.txt", ["a", "b c d e"])
        hyp = self.write(tmp_path, "hyp.txt", ["x", "b c d e"])
        _, summary = per_from_files(ref, hyp)
        assert summary.per == Fraction(1, 5)
        assert summary.mean_per == Fraction(1, 2)

    def test_line_count_mismatch(self, tmp_path):
        ref = self.write(tmp_path, "ref.txt", ["a b", "c"])
        hyp = self.write(tmp_path, "hyp.txt", ["a b"])
        with pytest.raises(LineCountMismatch):
            per_from_files(ref, hyp)

    def test_zero_entries_names_the_line(self, tmp_path):
        ref = self.write(tmp_path, "ref.txt", ["a b", ""])
        hyp = self.write(tmp_path, "hyp.txt", ["a b", "c"])
        with pytest.raises(ZeroEntries) as excinfo:
            per_from_files(ref, hyp)
        assert excinfo.value.line == 2
