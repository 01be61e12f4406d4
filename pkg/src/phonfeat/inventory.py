"""Phoneme inventories for English and Mandarin with feature assignments.

Inventories load from TSV files (UTF-8, tab-separated, ``#`` comments):

    sampa<TAB>ipa<TAB>lang<TAB>features<TAB>optional<TAB>allophone_of

``features`` and ``optional`` are '+'-joined feature names; ``allophone_of``
is empty for phonemes and names the underlying phoneme for allophone rows
(which sit outside the phonemic counts). Shipped files: ``data/en.tsv``
(38 phonemes: 24 consonants, 14 vowels) and ``data/cmn.tsv`` (37 phonemes:
21 consonants, 16 vowels, plus the three alveolo-palatal allophone rows).

Inventories are immutable after load and safe for concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import ParseError, UnknownPhoneme, ValidationError
from .features import Feature, FeatureVector

LANGS = ("en", "cmn")

#: Break/punctuation symbols counted by vocab_report by default.
DEFAULT_PUNCTUATION = (",", ".", "!", "?", "，", "。", "！", "？")


def check_lang(lang: str) -> str:
    """Normalize a language code to 'en' or 'cmn'."""
    norm = lang.strip().lower()
    if norm not in LANGS:
        raise ValueError(f"unsupported language {lang!r}; expected one of {LANGS}")
    return norm


@dataclass(frozen=True)
class PhonemeEntry:
    """One inventory row: a SAMPA symbol with its feature specification."""

    sampa: str
    ipa: str
    lang: str
    features: FeatureVector
    is_allophone: bool = False
    allophone_of: str | None = None


@dataclass(frozen=True)
class Inventory:
    """Validated, order-preserving phoneme set for one language."""

    lang: str
    entries: tuple[PhonemeEntry, ...]
    by_sampa: dict[str, PhonemeEntry] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: dict[str, PhonemeEntry] = {}
        for entry in self.entries:
            if entry.sampa in index:
                raise ValidationError(
                    f"duplicate SAMPA symbol {entry.sampa!r} in {self.lang} inventory",
                    sampa=entry.sampa,
                )
            index[entry.sampa] = entry
        object.__setattr__(self, "by_sampa", index)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, sampa: str) -> bool:
        return sampa in self.by_sampa

    @property
    def phonemic_entries(self) -> tuple[PhonemeEntry, ...]:
        return tuple(e for e in self.entries if not e.is_allophone)

    def lookup(self, sampa: str) -> PhonemeEntry:
        """Exact-symbol lookup; raises UnknownPhoneme on a miss."""
        try:
            return self.by_sampa[sampa]
        except KeyError:
            raise UnknownPhoneme(f"no phoneme {sampa!r} in the {self.lang} inventory") from None

    def get(self, sampa: str) -> PhonemeEntry | None:
        return self.by_sampa.get(sampa)


def lookup_phoneme(inv: Inventory, sampa: str) -> PhonemeEntry:
    """Functional alias for :meth:`Inventory.lookup`."""
    return inv.lookup(sampa)


@dataclass(frozen=True)
class Violation:
    """One failed inventory check; ``sampa`` is None for inventory-wide checks."""

    lang: str
    sampa: str | None
    message: str

    def __str__(self) -> str:
        subject = self.sampa if self.sampa is not None else "*"
        return f"{self.lang}\t{subject}\t{self.message}"


def _entry_structural_violations(entry: PhonemeEntry) -> list[str]:
    spec = entry.features.specified
    problems = []
    major = {Feature.CONSONANTAL, Feature.VOCALIC} & spec
    if len(major) != 1:
        problems.append("exactly one of CONSONANTAL/VOCALIC must be specified")
    if Feature.CONSONANTAL in spec:
        stricture = {Feature.OBSTRUENT, Feature.SONORANT} & spec
        if len(stricture) != 1:
            problems.append("consonants require exactly one of OBSTRUENT/SONORANT")
    if Feature.VOCALIC in spec:
        if Feature.SONORANT not in spec or Feature.VOICE not in spec:
            problems.append("vowels must be specified SONORANT and VOICE")
    if entry.is_allophone and not entry.allophone_of:
        problems.append("allophone rows must name their underlying phoneme")
    if not entry.is_allophone and entry.allophone_of:
        problems.append("phoneme rows must leave allophone_of empty")
    return problems


# Expected phonemic counts: total, consonantal, vocalic.
_EXPECTED_COUNTS = {"en": (38, 24, 14), "cmn": (37, 21, 16)}


def validate_inventory(inv: Inventory) -> list[Violation]:
    """Run every structural and language-specific check; violations are data.

    Returns an empty list iff the inventory satisfies all invariants,
    including the language-specific constraints distilled from the feature
    system: English obstruents never carry contrastive SPREAD_GLOTTIS and
    its high stridents carry HIGH; Mandarin allows VOICE on exactly one
    obstruent (the syllabic retroflex) and marks every retroflex consonant
    (symbols with the X-SAMPA retroflex tick) as RTR.
    """
    violations: list[Violation] = []

    def flag(sampa: str | None, message: str):
        violations.append(Violation(inv.lang, sampa, message))

    for entry in inv.entries:
        if entry.lang != inv.lang:
            flag(entry.sampa, f"entry language {entry.lang!r} differs from inventory")
        for problem in _entry_structural_violations(entry):
            flag(entry.sampa, problem)
        if entry.is_allophone:
            target = inv.get(entry.allophone_of or "")
            if target is None:
                flag(entry.sampa, f"allophone_of target {entry.allophone_of!r} missing")
            elif target.is_allophone:
                flag(entry.sampa, "allophone_of must name a non-allophone entry")

    phonemic = inv.phonemic_entries
    expected = _EXPECTED_COUNTS.get(inv.lang)
    if expected is not None:
        total, consonants, vowels = expected
        n_cons = sum(1 for e in phonemic if Feature.CONSONANTAL in e.features.specified)
        n_voc = sum(1 for e in phonemic if Feature.VOCALIC in e.features.specified)
        if len(phonemic) != total:
            flag(None, f"expected {total} phonemic entries, found {len(phonemic)}")
        if n_cons != consonants:
            flag(None, f"expected {consonants} consonantal phonemes, found {n_cons}")
        if n_voc != vowels:
            flag(None, f"expected {vowels} vocalic phonemes, found {n_voc}")

    if inv.lang == "en":
        for entry in inv.entries:
            spec = entry.features
            if Feature.OBSTRUENT in spec.specified and Feature.SPREAD_GLOTTIS in spec.contrastive:
                flag(entry.sampa, "English obstruents must not carry contrastive SPREAD_GLOTTIS")
        for sampa in ("S", "Z"):
            entry = inv.get(sampa)
            if entry is not None and Feature.HIGH not in entry.features.specified:
                flag(sampa, "high strident must carry HIGH")

    if inv.lang == "cmn":
        voiced_obstruents = [
            e.sampa
            for e in inv.entries
            if Feature.OBSTRUENT in e.features.specified
            and Feature.VOICE in e.features.specified
        ]
        for sampa in voiced_obstruents:
            if sampa != "z`":
                flag(sampa, "only the syllabic retroflex obstruent may carry VOICE")
        if "z`" not in voiced_obstruents and inv.get("z`") is not None:
            flag("z`", "the syllabic retroflex obstruent must carry VOICE")
        for entry in inv.entries:
            is_retroflex_consonant = (
                Feature.CONSONANTAL in entry.features.specified and "`" in entry.sampa
            )
            if is_retroflex_consonant and Feature.RTR not in entry.features.specified:
                flag(entry.sampa, "retroflex consonants must carry RTR")

    return violations


def _read_text(source) -> str:
    reader = source if hasattr(source, "read_text") else Path(source)
    return reader.read_text(encoding="utf-8")


def load_inventory(path, lang: str | None = None) -> Inventory:
    """Load and validate one inventory file.

    Loading is idempotent and order-preserving. Malformed lines raise
    ParseError; entries violating structural invariants raise
    ValidationError. Language-specific checks are left to
    :func:`validate_inventory` so that seeded-fault inventories remain
    constructible for auditing.
    """
    entries: list[PhonemeEntry] = []
    inferred_lang: str | None = check_lang(lang) if lang else None
    for lineno, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        columns = raw.rstrip("\n").split("\t")
        if not 4 <= len(columns) <= 6:
            raise ParseError(
                f"line {lineno}: expected 6 tab-separated columns "
                f"(trailing empties may be omitted), found {len(columns)}",
                line=lineno,
                reason="bad column count",
            )
        columns += [""] * (6 - len(columns))
        sampa, ipa, row_lang, feature_field, optional_field, allophone_of = (
            c.strip() for c in columns
        )
        if not sampa:
            raise ParseError(f"line {lineno}: empty SAMPA symbol", line=lineno, reason="empty sampa")
        try:
            row_lang = check_lang(row_lang)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}", line=lineno, reason="bad language") from None
        if inferred_lang is None:
            inferred_lang = row_lang
        if row_lang != inferred_lang:
            raise ValidationError(
                f"line {lineno}: entry {sampa!r} is {row_lang}, file is {inferred_lang}",
                sampa=sampa,
            )
        try:
            features = FeatureVector.from_names(
                [n for n in feature_field.split("+") if n],
                [n for n in optional_field.split("+") if n],
            )
        except ValueError as exc:
            raise ValidationError(f"line {lineno}: {sampa}: {exc}", sampa=sampa) from None
        entry = PhonemeEntry(
            sampa=sampa,
            ipa=ipa,
            lang=row_lang,
            features=features,
            is_allophone=bool(allophone_of),
            allophone_of=allophone_of or None,
        )
        problems = _entry_structural_violations(entry)
        if problems:
            raise ValidationError(f"line {lineno}: {sampa}: {problems[0]}", sampa=sampa)
        entries.append(entry)
    if inferred_lang is None:
        raise ParseError("inventory file contains no entries", reason="empty file")
    inventory = Inventory(inferred_lang, tuple(entries))
    for entry in inventory.entries:
        if entry.is_allophone:
            target = inventory.get(entry.allophone_of or "")
            if target is None or target.is_allophone:
                raise ValidationError(
                    f"{entry.sampa}: allophone_of must name a phoneme in the same inventory",
                    sampa=entry.sampa,
                )
    return inventory


def data_root(data_dir: str | Path | None = None):
    """The directory holding inventory and mapping tables (packaged by default)."""
    if data_dir is not None:
        return Path(data_dir)
    return resources.files("phonfeat") / "data"


@lru_cache(maxsize=None)
def _cached_inventory(lang: str, data_dir_key: str | None) -> Inventory:
    root = data_root(data_dir_key)
    return load_inventory(root / f"{lang}.tsv", lang)


def default_inventory(lang: str, data_dir: str | Path | None = None) -> Inventory:
    """Load (and cache) the shipped inventory for ``lang``."""
    return _cached_inventory(check_lang(lang), str(data_dir) if data_dir is not None else None)


@dataclass(frozen=True)
class VocabReport:
    """Distinct-symbol tally across inventories plus punctuation."""

    count: int
    symbols: tuple[str, ...]


def vocab_report(
    inventories: list[Inventory],
    punctuation: tuple[str, ...] | list[str] = DEFAULT_PUNCTUATION,
    include_allophones: bool = False,
) -> VocabReport:
    """Count distinct symbols across inventories and break symbols.

    Informational only: the full symbol vocabulary of a deployed system may
    exceed the shipped inventories.
    """
    symbols: set[str] = set(punctuation)
    for inv in inventories:
        entries = inv.entries if include_allophones else inv.phonemic_entries
        symbols.update(e.sampa for e in entries)
    ordered = tuple(sorted(symbols))
    return VocabReport(count=len(ordered), symbols=ordered)
