"""Transcription parsers: ARPABET words, pinyin syllables, tagged lines.

ARPABET tokens are whitespace-separated CMU codes with optional stress
digits on vowels; stress is parsed and discarded (it is not an input
channel here), except that the mapping table may carry digit-specific rows
(AH0, ER0) which are consulted before stripping.

Pinyin syllables are lowercase with a mandatory trailing tone digit 1-5
(5 = neutral); 'v' or 'ü' stands for the front rounded vowel. Syllables
decompose into initial + final; the apical finals of zi/ci/si/zhi/chi/shi/ri
map to the syllabic retroflex; a trailing 'r' on a non-"er" syllable
replaces the final vowel with its rhotic counterpart and errors loudly when
none exists (no coda-deletion rules are attempted).

Tagged lines carry code-switched input:

    line := span (WS '|' WS span)*
    span := ('en:'|'cmn:') WS payload (WS punct)?

An en: span holds one ARPABET word; a cmn: span holds whitespace-separated
pinyin syllables. Trailing punctuation from {, . ! ? ，。！？} attaches to
the token it follows.

All parsers are pure functions over immutable mapping tables.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path

from .errors import (
    EmptySpan,
    MissingLanguageTag,
    MissingToneDigit,
    ParseError,
    UnknownArpabetCode,
    UnknownSyllable,
    UnsupportedErhua,
)
from .inventory import data_root

PUNCTUATION = (",", ".", "!", "?", "，", "。", "！", "？")


@dataclass(frozen=True)
class Segment:
    """One phone-sized unit: SAMPA symbol, language, syllable tone, surface flag.

    tone_id is 0 for every English segment; Mandarin segments carry their
    syllable's tone digit (1-4 full tones, 5 neutral).
    """

    sampa: str
    lang: str
    tone_id: int = 0
    surface: bool = False


@dataclass(frozen=True)
class TaggedToken:
    """One language-tagged word or syllable with optional trailing punctuation."""

    lang: str
    payload: str
    trailing_punct: str | None = None


def _read_table_lines(path) -> list[tuple[int, list[str]]]:
    reader = path if hasattr(path, "read_text") else Path(path)
    rows = []
    for lineno, raw in enumerate(reader.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, raw.split("\t")))
    return rows


def load_arpabet_table(path) -> dict[str, tuple[str, ...]]:
    """Read an ``arpabet<TAB>sampa[+sampa]`` mapping file."""
    table: dict[str, tuple[str, ...]] = {}
    for lineno, columns in _read_table_lines(path):
        if len(columns) != 2:
            raise ParseError(
                f"line {lineno}: expected 2 columns", line=lineno, reason="bad column count"
            )
        code, sampas = columns[0].strip(), columns[1].strip()
        if not code or not sampas:
            raise ParseError(f"line {lineno}: empty field", line=lineno, reason="empty field")
        table[code] = tuple(s for s in sampas.split("+") if s)
    return table


def load_pinyin_tables(path) -> tuple[dict[str, str], dict[str, tuple[str, ...]]]:
    """Read a ``component<TAB>kind<TAB>sampa[+sampa]`` mapping file."""
    initials: dict[str, str] = {}
    finals: dict[str, tuple[str, ...]] = {}
    for lineno, columns in _read_table_lines(path):
        if len(columns) != 3:
            raise ParseError(
                f"line {lineno}: expected 3 columns", line=lineno, reason="bad column count"
            )
        component, kind, sampas = (c.strip() for c in columns)
        if kind == "initial":
            initials[component] = sampas
        elif kind == "final":
            finals[component] = tuple(s for s in sampas.split("+") if s)
        else:
            raise ParseError(
                f"line {lineno}: kind must be initial or final, not {kind!r}",
                line=lineno,
                reason="bad kind",
            )
    return initials, finals


@lru_cache(maxsize=None)
def _cached_arpabet(data_dir_key: str | None) -> dict[str, tuple[str, ...]]:
    return load_arpabet_table(data_root(data_dir_key) / "arpabet_to_sampa.tsv")


@lru_cache(maxsize=None)
def _cached_pinyin(data_dir_key: str | None):
    return load_pinyin_tables(data_root(data_dir_key) / "pinyin_to_sampa.tsv")


def default_arpabet_table(data_dir=None) -> dict[str, tuple[str, ...]]:
    return _cached_arpabet(str(data_dir) if data_dir is not None else None)


def default_pinyin_tables(data_dir=None):
    return _cached_pinyin(str(data_dir) if data_dir is not None else None)


def parse_arpabet_token(token: str, table: dict[str, tuple[str, ...]] | None = None) -> list[Segment]:
    """Map one ARPABET word to English segments (tone_id 0 throughout)."""
    if table is None:
        table = default_arpabet_table()
    segments: list[Segment] = []
    for code in token.split():
        key = code.upper()
        if key not in table and key[-1:] in "012":
            key = key[:-1]
        sampas = table.get(key)
        if sampas is None:
            raise UnknownArpabetCode(f"unknown ARPABET code {code!r}")
        segments.extend(Segment(sampa, "en", 0) for sampa in sampas)
    return segments


# Initials ordered longest-first so zh/ch/sh win over z/c/s.
_INITIALS = ("zh", "ch", "sh", "b", "p", "m", "f", "d", "t", "n", "l",
             "g", "k", "h", "j", "q", "x", "r", "z", "c", "s")
_APICAL_INITIALS = frozenset({"z", "c", "s", "zh", "ch", "sh", "r"})
_PALATALIZING_INITIALS = frozenset({"j", "q", "x"})

# Zero-initial spellings and the final row they correspond to.
_Y_SPELLINGS = {
    "yi": "i", "ya": "ia", "ye": "ie", "yao": "iao", "you": "iu",
    "yan": "ian", "yin": "in", "yang": "iang", "ying": "ing", "yong": "iong",
}
_W_SPELLINGS = {
    "wu": "u", "wa": "ua", "wo": "uo", "wai": "uai", "wei": "ui",
    "wan": "uan", "wen": "un", "wang": "uang", "weng": "ueng",
}
_YU_SPELLINGS = {"yu": "v", "yue": "ve", "yuan": "van", "yun": "vn"}
_BARE_FINALS = frozenset({
    "a", "o", "e", "ai", "ei", "ao", "ou", "an", "en", "ang", "eng", "er",
})

_CMN_VOWELS = frozenset({
    "i", "y", "u", "@", "a", "e", "o", "E",
    "u`", "o`", "E`", "a`", "@`", "a~`", "o~`", "u~`",
})

_RHOTIC_COUNTERPART = {"a": "a`", "o": "o`", "E": "E`", "@": "@`", "u": "u`"}


def _strip_medial(sampas: tuple[str, ...]) -> tuple[str, ...]:
    # After a glide onset the i/u medial is absorbed into the glide.
    if len(sampas) > 1 and sampas[0] in ("i", "u") and sampas[1] in _CMN_VOWELS:
        return sampas[1:]
    return sampas


def parse_pinyin_syllable(syllable: str, tables=None) -> list[Segment]:
    """Decompose one numbered pinyin syllable into Mandarin segments.

    Every segment carries the syllable's tone digit. Raises UnknownSyllable,
    MissingToneDigit, or UnsupportedErhua on bad input.
    """
    if tables is None:
        tables = default_pinyin_tables()
    initials, finals = tables

    text = syllable.strip().lower().replace("ü", "v").replace("u:", "v")
    if not text:
        raise UnknownSyllable("empty syllable")
    if not text[-1].isdigit():
        raise MissingToneDigit(f"syllable {syllable!r} lacks its tone digit 1-5")
    tone = int(text[-1])
    if not 1 <= tone <= 5:
        raise MissingToneDigit(f"syllable {syllable!r}: tone digit must be 1-5")
    body = text[:-1]
    if not body:
        raise UnknownSyllable(f"syllable {syllable!r} has no segmental content")

    erhua = False
    if body != "er" and body.endswith("r") and len(body) > 1:
        erhua = True
        body = body[:-1]
        if not body:
            raise UnknownSyllable(f"syllable {syllable!r} has no segmental content")

    sampas: tuple[str, ...]
    if body in _YU_SPELLINGS:
        sampas = finals[_YU_SPELLINGS[body]]
    elif body in _Y_SPELLINGS:
        sampas = (initials["y"],) + _strip_medial(finals[_Y_SPELLINGS[body]])
    elif body in _W_SPELLINGS:
        sampas = (initials["w"],) + _strip_medial(finals[_W_SPELLINGS[body]])
    elif body in _BARE_FINALS:
        sampas = finals[body]
    else:
        initial = next((i for i in _INITIALS if body.startswith(i)), None)
        if initial is None:
            raise UnknownSyllable(f"cannot decompose syllable {syllable!r}")
        final = body[len(initial):]
        if not final:
            raise UnknownSyllable(f"syllable {syllable!r} lacks a final")
        if initial in _PALATALIZING_INITIALS and final.startswith("u"):
            final = "v" + final[1:]
        if initial in _APICAL_INITIALS and final == "i":
            # The -i of zi/ci/si/zhi/chi/shi/ri is the syllabic retroflex;
            # for ri it is one and the same segment as the initial.
            sampas = ("z`",) if initial == "r" else (initials[initial], "z`")
        else:
            if final not in finals:
                raise UnknownSyllable(f"unknown final {final!r} in syllable {syllable!r}")
            sampas = (initials[initial],) + finals[final]

    if erhua:
        last = sampas[-1]
        rhotic = _RHOTIC_COUNTERPART.get(last)
        if rhotic is None:
            raise UnsupportedErhua(
                f"syllable {syllable!r}: no rhotic counterpart for final segment {last!r}"
            )
        sampas = sampas[:-1] + (rhotic,)

    return [Segment(sampa, "cmn", tone) for sampa in sampas]


_ALLOPHONE_BY_PHONEME = {"s": "s\\", "ts": "ts\\", "ts_h": "ts\\_h"}


def apply_allophony(segments: list[Segment]) -> list[Segment]:
    """Rewrite dental sibilants to alveolo-palatals before /i/ or /y/.

    Idempotent; a segment changes only when its right neighbor is i or y.
    Non-Mandarin segments pass through unchanged.
    """
    out = list(segments)
    for pos in range(len(out) - 1):
        seg, right = out[pos], out[pos + 1]
        if (
            seg.lang == "cmn"
            and seg.sampa in _ALLOPHONE_BY_PHONEME
            and right.lang == "cmn"
            and right.sampa in ("i", "y")
        ):
            out[pos] = replace(seg, sampa=_ALLOPHONE_BY_PHONEME[seg.sampa], surface=True)
    return out


def tokenize_tagged_line(line: str) -> list[TaggedToken]:
    """Split one tagged transcription line into language-tagged tokens.

    An en: span becomes a single word token; a cmn: span becomes one token
    per syllable. A punctuation item attaches to the token before it.
    """
    stripped = line.strip()
    if not stripped:
        return []
    tokens: list[TaggedToken] = []
    for span in stripped.split("|"):
        span = span.strip()
        if not span:
            raise EmptySpan(f"empty span in line {line!r}")
        lowered = span.lower()
        if lowered.startswith("en:"):
            lang = "en"
        elif lowered.startswith("cmn:"):
            lang = "cmn"
        else:
            raise MissingLanguageTag(f"span {span!r} lacks an en:/cmn: language tag")
        items = span[len(lang) + 1:].split()

        if lang == "en":
            punct = None
            if items and items[-1] in PUNCTUATION:
                punct = items.pop()
            if not items:
                raise EmptySpan(f"span {span!r} has no payload")
            tokens.append(TaggedToken("en", " ".join(items), punct))
        else:
            span_tokens: list[TaggedToken] = []
            for item in items:
                if item in PUNCTUATION and span_tokens and span_tokens[-1].trailing_punct is None:
                    span_tokens[-1] = replace(span_tokens[-1], trailing_punct=item)
                elif item in PUNCTUATION and not span_tokens:
                    raise EmptySpan(f"span {span!r} starts with punctuation")
                else:
                    span_tokens.append(TaggedToken("cmn", item))
            if not span_tokens:
                raise EmptySpan(f"span {span!r} has no payload")
            tokens.extend(span_tokens)
    return tokens


def legal_syllables(data_dir=None) -> tuple[str, ...]:
    """The committed list of legal toneless pinyin syllables."""
    reader = data_root(data_dir) / "pinyin_syllables.txt"
    lines = reader.read_text(encoding="utf-8").splitlines()
    return tuple(l.strip() for l in lines if l.strip() and not l.startswith("#"))
