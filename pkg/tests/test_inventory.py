"""Inventory loading, lookup, validation, and the vocabulary report."""

from dataclasses import replace

import pytest

from phonfeat import (
    Feature,
    FeatureVector,
    Inventory,
    UnknownPhoneme,
    ValidationError,
    load_inventory,
    lookup_phoneme,
    validate_inventory,
    vocab_report,
)
from phonfeat.inventory import data_root


def test_shipped_en_counts(en_inv):
    assert len(en_inv.phonemic_entries) == 38
    cons = [e for e in en_inv.phonemic_entries if Feature.CONSONANTAL in e.features.specified]
    vows = [e for e in en_inv.phonemic_entries if Feature.VOCALIC in e.features.specified]
    assert (len(cons), len(vows)) == (24, 14)


def test_shipped_cmn_counts(cmn_inv):
    assert len(cmn_inv.phonemic_entries) == 37
    cons = [e for e in cmn_inv.phonemic_entries if Feature.CONSONANTAL in e.features.specified]
    vows = [e for e in cmn_inv.phonemic_entries if Feature.VOCALIC in e.features.specified]
    assert (len(cons), len(vows)) == (21, 16)
    allophones = [e for e in cmn_inv.entries if e.is_allophone]
    assert sorted(a.sampa for a in allophones) == ["s\\", "ts\\", "ts\\_h"]
    for allophone in allophones:
        target = cmn_inv.lookup(allophone.allophone_of)
        assert not target.is_allophone


def test_loading_is_idempotent_and_order_preserving():
    path = data_root() / "en.tsv"
    first = load_inventory(path, "en")
    second = load_inventory(path, "en")
    assert [e.sampa for e in first.entries] == [e.sampa for e in second.entries]
    assert first.entries == second.entries


def test_lookup_examples(en_inv, cmn_inv):
    assert en_inv.lookup("m").features.names() == (
        "CONSONANTAL", "SONORANT", "VOICE", "NASAL", "LABIAL",
    )
    assert cmn_inv.lookup("p_h").features.names() == (
        "CONSONANTAL", "OBSTRUENT", "SPREAD_GLOTTIS", "PLOSIVE", "LABIAL",
    )
    with pytest.raises(UnknownPhoneme):
        en_inv.lookup("q")
    assert lookup_phoneme(en_inv, "m") is en_inv.lookup("m")


def test_duplicate_sampa_raises(tmp_path):
    source = (data_root() / "en.tsv").read_text(encoding="utf-8")
    dup_line = "m\tm\ten\tCONSONANTAL+SONORANT+VOICE+NASAL+LABIAL\t\t\n"
    bad = tmp_path / "dup.tsv"
    bad.write_text(source + dup_line, encoding="utf-8")
    with pytest.raises(ValidationError):
        load_inventory(bad, "en")


def test_validate_flags_seeded_voice_fault(cmn_inv):
    entries = []
    for entry in cmn_inv.entries:
        if entry.sampa == "p":
            voiced = FeatureVector(
                entry.features.specified | {Feature.VOICE}, entry.features.optional
            )
            entry = replace(entry, features=voiced)
        entries.append(entry)
    tampered = Inventory("cmn", tuple(entries))
    violations = validate_inventory(tampered)
    assert len(violations) == 1
    assert violations[0].sampa == "p"


def test_validate_clean_on_shipped_data(en_inv, cmn_inv):
    assert validate_inventory(en_inv) == []
    assert validate_inventory(cmn_inv) == []


def test_no_entry_violates_the_conflict_table(en_inv, cmn_inv):
    from phonfeat import DEFAULT_CONFLICTS

    for inv in (en_inv, cmn_inv):
        for entry in inv.entries:
            assert DEFAULT_CONFLICTS.violation(entry.features.specified) is None, entry.sampa


def test_specified_sets_are_unique_within_language(en_inv, cmn_inv):
    # Distinct phonemes must contrast; this also underpins self-projection.
    for inv in (en_inv, cmn_inv):
        seen = {}
        for entry in inv.entries:
            key = entry.features.specified
            assert key not in seen, f"{entry.sampa} duplicates {seen[key]}"
            seen[key] = entry.sampa


def test_vocab_report_counts(en_inv, cmn_inv):
    assert vocab_report([en_inv], punctuation=()).count == 38
    assert vocab_report([], punctuation=["."]).count == 1
    report = vocab_report([en_inv, cmn_inv])
    again = vocab_report([en_inv, cmn_inv])
    assert report == again
    union = {e.sampa for e in en_inv.phonemic_entries}
    union |= {e.sampa for e in cmn_inv.phonemic_entries}
    union |= {",", ".", "!", "?", "，", "。", "！", "？"}
    assert report.count == len(union)
    assert report.symbols == tuple(sorted(union))


def test_vocab_report_can_include_allophones(cmn_inv):
    with_allophones = vocab_report([cmn_inv], punctuation=(), include_allophones=True)
    without = vocab_report([cmn_inv], punctuation=())
    assert with_allophones.count == without.count + 3
