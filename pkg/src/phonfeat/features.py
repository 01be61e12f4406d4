"""Monovalent phonological feature set and the ternary matching logic.

The system uses exactly 19 features, each either present or absent in a
segment's specification; there are no +/- values and no feature trees.
The canonical index order below is fixed and is the bit order used by
every serialized feature row:

    0  CONSONANTAL     ROOT
    1  VOCALIC         ROOT
    2  SONORANT        ROOT
    3  OBSTRUENT       ROOT
    4  VOICE           LARYNGEAL
    5  SPREAD_GLOTTIS  LARYNGEAL
    6  PLOSIVE         CONSTRICTION
    7  CONTINUANT      CONSTRICTION
    8  NASAL           MANNER
    9  LATERAL         MANNER
    10 STRIDENT        MANNER
    11 RHOTIC          MANNER
    12 LABIAL          ARTICULATOR
    13 CORONAL         ARTICULATOR
    14 DORSAL          ARTICULATOR
    15 HIGH            TONGUE_HEIGHT
    16 LOW             TONGUE_HEIGHT
    17 ATR             TONGUE_ROOT
    18 RTR             TONGUE_ROOT

Matching is ternary: a surface feature that is also specified underlyingly
is a match; one that clashes with a non-optional underlying feature from a
conflicting pair is a mismatch; anything else is a no-mismatch. Features
specified underlyingly but absent from the surface contribute nothing, so
the relation is asymmetric by construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .errors import EmptyCandidateSet, UnknownFeature

if TYPE_CHECKING:
    from .inventory import PhonemeEntry


class FeatureClass(Enum):
    ROOT = "ROOT"
    LARYNGEAL = "LARYNGEAL"
    CONSTRICTION = "CONSTRICTION"
    MANNER = "MANNER"
    ARTICULATOR = "ARTICULATOR"
    TONGUE_HEIGHT = "TONGUE_HEIGHT"
    TONGUE_ROOT = "TONGUE_ROOT"


class Feature(Enum):
    """The 19 features, in canonical index order (``value`` is the index)."""

    CONSONANTAL = 0
    VOCALIC = 1
    SONORANT = 2
    OBSTRUENT = 3
    VOICE = 4
    SPREAD_GLOTTIS = 5
    PLOSIVE = 6
    CONTINUANT = 7
    NASAL = 8
    LATERAL = 9
    STRIDENT = 10
    RHOTIC = 11
    LABIAL = 12
    CORONAL = 13
    DORSAL = 14
    HIGH = 15
    LOW = 16
    ATR = 17
    RTR = 18

    @property
    def index(self) -> int:
        return self.value

    @property
    def feature_class(self) -> FeatureClass:
        return _FEATURE_CLASSES[self]


NUM_FEATURES = len(Feature)

_FEATURE_CLASSES: dict[Feature, FeatureClass] = {
    Feature.CONSONANTAL: FeatureClass.ROOT,
    Feature.VOCALIC: FeatureClass.ROOT,
    Feature.SONORANT: FeatureClass.ROOT,
    Feature.OBSTRUENT: FeatureClass.ROOT,
    Feature.VOICE: FeatureClass.LARYNGEAL,
    Feature.SPREAD_GLOTTIS: FeatureClass.LARYNGEAL,
    Feature.PLOSIVE: FeatureClass.CONSTRICTION,
    Feature.CONTINUANT: FeatureClass.CONSTRICTION,
    Feature.NASAL: FeatureClass.MANNER,
    Feature.LATERAL: FeatureClass.MANNER,
    Feature.STRIDENT: FeatureClass.MANNER,
    Feature.RHOTIC: FeatureClass.MANNER,
    Feature.LABIAL: FeatureClass.ARTICULATOR,
    Feature.CORONAL: FeatureClass.ARTICULATOR,
    Feature.DORSAL: FeatureClass.ARTICULATOR,
    Feature.HIGH: FeatureClass.TONGUE_HEIGHT,
    Feature.LOW: FeatureClass.TONGUE_HEIGHT,
    Feature.ATR: FeatureClass.TONGUE_ROOT,
    Feature.RTR: FeatureClass.TONGUE_ROOT,
}

# Accepted shorthands beyond the canonical names (case-insensitive; spaces
# and hyphens normalize to underscores, so "spread glottis" also resolves).
_ALIASES: dict[str, Feature] = {
    "CONS": Feature.CONSONANTAL,
    "VOC": Feature.VOCALIC,
    "SON": Feature.SONORANT,
    "OBS": Feature.OBSTRUENT,
    "SG": Feature.SPREAD_GLOTTIS,
    "CONT": Feature.CONTINUANT,
    "NAS": Feature.NASAL,
    "LAT": Feature.LATERAL,
    "STRID": Feature.STRIDENT,
    "LAB": Feature.LABIAL,
    "COR": Feature.CORONAL,
    "DOR": Feature.DORSAL,
}


def feature_from_name(name: str) -> Feature:
    """Resolve a canonical feature name or documented alias.

    Raises:
        UnknownFeature: for any string outside the 19-feature universe.
    """
    key = name.strip().upper().replace(" ", "_").replace("-", "_")
    try:
        return Feature[key]
    except KeyError:
        pass
    try:
        return _ALIASES[key]
    except KeyError:
        raise UnknownFeature(f"unknown feature name: {name!r}") from None


class ConflictTable:
    """Unordered feature pairs that may not cooccur in one specification.

    Articulator features are deliberately not conflicting: labial and dorsal
    cooccur on rounded back vowels, labial and coronal on front rounded ones.
    """

    def __init__(self, pairs: Iterable[tuple[Feature, Feature]]):
        self.pairs = frozenset(frozenset(p) for p in pairs)
        by_feature: dict[Feature, set[Feature]] = {f: set() for f in Feature}
        for pair in self.pairs:
            a, b = tuple(pair)
            by_feature[a].add(b)
            by_feature[b].add(a)
        self._conflicting = {f: frozenset(s) for f, s in by_feature.items()}

    def conflicting(self, feature: Feature) -> frozenset[Feature]:
        return self._conflicting[feature]

    def violation(self, features: Iterable[Feature]) -> tuple[Feature, Feature] | None:
        """Return some conflicting pair fully contained in ``features``, if any."""
        present = set(features)
        for f in present:
            for g in self._conflicting[f]:
                if g in present:
                    return (f, g)
        return None


DEFAULT_CONFLICTS = ConflictTable([
    (Feature.CONSONANTAL, Feature.VOCALIC),
    (Feature.OBSTRUENT, Feature.SONORANT),
    (Feature.PLOSIVE, Feature.CONTINUANT),
    (Feature.VOICE, Feature.SPREAD_GLOTTIS),
    (Feature.HIGH, Feature.LOW),
    (Feature.ATR, Feature.RTR),
])

#: Default scoring weights: one conflict outweighs one agreement.
DEFAULT_WEIGHTS: tuple[float, float] = (1.0, 2.0)


@dataclass(frozen=True)
class FeatureVector:
    """Presence-only feature specification with an optional-feature mask.

    ``specified`` holds every feature the segment carries, including the
    optional ones; ``optional`` must be a subset of it. Optional features
    count normally on the surface side of a match but never trigger
    mismatches when underlying.
    """

    specified: frozenset[Feature]
    optional: frozenset[Feature] = frozenset()

    def __post_init__(self):
        if not self.optional <= self.specified:
            raise ValueError("optional features must be a subset of specified features")
        clash = DEFAULT_CONFLICTS.violation(self.specified)
        if clash is not None:
            a, b = clash
            raise ValueError(f"conflicting features specified together: {a.name}, {b.name}")

    @classmethod
    def from_names(cls, names: Iterable[str], optional: Iterable[str] = ()) -> "FeatureVector":
        return cls(
            frozenset(feature_from_name(n) for n in names),
            frozenset(feature_from_name(n) for n in optional),
        )

    @property
    def contrastive(self) -> frozenset[Feature]:
        """Specified features minus the optional mask."""
        return self.specified - self.optional

    def bits(self) -> tuple[int, ...]:
        """The 19-bit row in canonical index order (optional features included)."""
        return tuple(1 if f in self.specified else 0 for f in Feature)

    def names(self) -> tuple[str, ...]:
        """Specified feature names in canonical index order."""
        return tuple(f.name for f in Feature if f in self.specified)


@dataclass(frozen=True)
class MatchOutcome:
    """Ternary tally of one surface-against-underlying comparison.

    Every surface feature lands in exactly one bucket, so
    matches + mismatches + no_mismatches equals the surface feature count.
    """

    matches: int
    mismatches: int
    no_mismatches: int
    score: float


def ternary_match(
    surface: FeatureVector,
    underlying: FeatureVector,
    weights: tuple[float, float] = DEFAULT_WEIGHTS,
    conflicts: ConflictTable = DEFAULT_CONFLICTS,
) -> MatchOutcome:
    """Compare extracted surface features against an underlying specification.

    For each surface feature: match if the underlying form also specifies it;
    mismatch if a non-optional underlying feature conflicts with it;
    no-mismatch otherwise. Underlying features with no surface counterpart
    are tolerated and contribute nothing.
    """
    w_match, w_mismatch = weights
    opposing = underlying.contrastive
    matches = mismatches = no_mismatches = 0
    for f in surface.specified:
        if f in underlying.specified:
            matches += 1
        elif conflicts.conflicting(f) & opposing:
            mismatches += 1
        else:
            no_mismatches += 1
    return MatchOutcome(
        matches=matches,
        mismatches=mismatches,
        no_mismatches=no_mismatches,
        score=w_match * matches - w_mismatch * mismatches,
    )


def score_candidates(
    surface: FeatureVector,
    candidates: Sequence["PhonemeEntry"],
    weights: tuple[float, float] = DEFAULT_WEIGHTS,
    conflicts: ConflictTable = DEFAULT_CONFLICTS,
) -> list[tuple["PhonemeEntry", MatchOutcome]]:
    """Rank candidate phonemes by how well they absorb the surface features.

    Sorted by score descending; ties break on fewer mismatches, fewer
    no-mismatches, fewer unmatched underlying features (the most economical
    specification wins, which keeps an exact self-match ahead of any strict
    superset), then lexicographic SAMPA symbol. The result is a total order,
    so repeated calls rank identically.

    Raises:
        EmptyCandidateSet: if ``candidates`` is empty.
    """
    if not candidates:
        raise EmptyCandidateSet("cannot rank an empty candidate list")
    scored = []
    for entry in candidates:
        outcome = ternary_match(surface, entry.features, weights, conflicts)
        leftover = len(entry.features.specified) - outcome.matches
        key = (-outcome.score, outcome.mismatches, outcome.no_mismatches, leftover, entry.sampa)
        scored.append((key, entry, outcome))
    scored.sort(key=lambda item: item[0])
    return [(entry, outcome) for _, entry, outcome in scored]
