"""Cross-language phoneme projection via feature matching.

Speech heard in one language is mapped segment by segment onto the other
language's inventory: the candidate whose underlying specification best
absorbs the extracted surface features wins. Projection is segment-local
(no rule interaction), deterministic under fixed weights, and asymmetric
because underspecified targets tolerate extra surface features while
specified ones clash. Tone handling models the two accent directions:
dropping tones reproduces a non-tonal speaker's toneless Mandarin,
preserving them keeps the source tones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .features import DEFAULT_WEIGHTS, MatchOutcome, score_candidates
from .inventory import Inventory, PhonemeEntry, check_lang, default_inventory
from .parsing import TaggedToken, apply_allophony, parse_arpabet_token, parse_pinyin_syllable

TONE_POLICIES = ("drop", "preserve")


def project_segment(
    source: PhonemeEntry,
    target: Inventory,
    weights: tuple[float, float] = DEFAULT_WEIGHTS,
) -> tuple[PhonemeEntry, MatchOutcome]:
    """Best target-inventory phoneme for one source segment.

    Allophone rows are eligible candidates; a source entry projected onto
    its own inventory wins its self-match.
    """
    ranking = score_candidates(source.features, target.entries, weights)
    return ranking[0]


@dataclass(frozen=True)
class SegmentProjection:
    source_sampa: str
    target_sampa: str
    outcome: MatchOutcome
    runners_up: tuple[tuple[str, MatchOutcome], ...]
    tone_id: int


@dataclass(frozen=True)
class ProjectionReport:
    source_lang: str
    target_lang: str
    tone_policy_applied: str
    segments: tuple[SegmentProjection, ...]


def project_utterance(
    tokens: list[TaggedToken],
    source_lang: str,
    target_lang: str,
    tone_policy: str = "preserve",
    weights: tuple[float, float] = DEFAULT_WEIGHTS,
    data_dir=None,
) -> ProjectionReport:
    """Project every segment of a single-language utterance onto another inventory.

    Mandarin sources are projected in surface form (allophony applied),
    since the mapping models what a listener extracts from pronounced
    speech. tone_policy 'drop' zeroes all tone ids; 'preserve' keeps them.
    """
    source_lang = check_lang(source_lang)
    target_lang = check_lang(target_lang)
    if tone_policy not in TONE_POLICIES:
        raise ValueError(f"tone_policy must be one of {TONE_POLICIES}, not {tone_policy!r}")
    source_inventory = default_inventory(source_lang, data_dir)
    target_inventory = default_inventory(target_lang, data_dir)

    projections: list[SegmentProjection] = []
    for position, token in enumerate(tokens):
        if check_lang(token.lang) != source_lang:
            raise ParseError(
                f"token {position} is tagged {token.lang!r}, expected {source_lang!r}"
            )
        if source_lang == "en":
            segments = parse_arpabet_token(token.payload)
        else:
            segments = apply_allophony(parse_pinyin_syllable(token.payload))
        for segment in segments:
            entry = source_inventory.lookup(segment.sampa)
            ranking = score_candidates(entry.features, target_inventory.entries, weights)
            best_entry, best_outcome = ranking[0]
            runners = tuple((e.sampa, outcome) for e, outcome in ranking[1:3])
            projections.append(
                SegmentProjection(
                    source_sampa=segment.sampa,
                    target_sampa=best_entry.sampa,
                    outcome=best_outcome,
                    runners_up=runners,
                    tone_id=0 if tone_policy == "drop" else segment.tone_id,
                )
            )
    return ProjectionReport(source_lang, target_lang, tone_policy, tuple(projections))


@dataclass(frozen=True)
class SubstitutionRow:
    source_sampa: str
    rank: int
    target_sampa: str
    outcome: MatchOutcome


def substitution_table(
    source: Inventory,
    target: Inventory,
    weights: tuple[float, float] = DEFAULT_WEIGHTS,
    top_n: int = 3,
) -> list[SubstitutionRow]:
    """Ranked top-n targets for every phonemic source entry.

    Total by construction: every source phoneme gets rows for any non-empty
    target inventory. Allophone rows participate as candidates but not as
    sources, keeping the row count at the phonemic inventory size.
    """
    rows: list[SubstitutionRow] = []
    for entry in source.phonemic_entries:
        ranking = score_candidates(entry.features, target.entries, weights)
        for rank, (candidate, outcome) in enumerate(ranking[:top_n], start=1):
            rows.append(SubstitutionRow(entry.sampa, rank, candidate.sampa, outcome))
    return rows


def substitution_table_tsv(rows: list[SubstitutionRow]) -> str:
    """Render substitution rows as the documented TSV."""
    lines = ["src_sampa\trank\ttgt_sampa\tmatches\tmismatches\tno_mismatches\tscore"]
    for row in rows:
        o = row.outcome
        lines.append(
            f"{row.source_sampa}\t{row.rank}\t{row.target_sampa}"
            f"\t{o.matches}\t{o.mismatches}\t{o.no_mismatches}\t{o.score:g}"
        )
    return "\n".join(lines) + "\n"
