"""phonfeat: a phonological-feature front end for English and Mandarin TTS input.

Compiles ARPABET and pinyin transcriptions into per-frame binary feature
vectors with tone and prosody channels, projects phonemes across languages
by featural match (the mechanism behind foreign-accent substitution), and
scores phone sequences with edit-distance phone error rates.
"""

from .accent import (
    ProjectionReport,
    SegmentProjection,
    SubstitutionRow,
    project_segment,
    project_utterance,
    substitution_table,
    substitution_table_tsv,
)
from .encoding import (
    EncodedUtterance,
    Frame,
    ToyEmbedding,
    deserialize,
    embed_utterance,
    encode_utterance,
    serialize,
)
from .errors import (
    EmptyCandidateSet,
    EmptySpan,
    LineCountMismatch,
    MissingLanguageTag,
    MissingToneDigit,
    ParseError,
    PhonfeatError,
    UnknownArpabetCode,
    UnknownFeature,
    UnknownPhoneme,
    UnknownSyllable,
    UnsupportedErhua,
    ValidationError,
    ZeroEntries,
)
from .estimators import AccentProjector, FeatureFrameEncoder, FrameEmbedder
from .features import (
    DEFAULT_CONFLICTS,
    DEFAULT_WEIGHTS,
    NUM_FEATURES,
    ConflictTable,
    Feature,
    FeatureClass,
    FeatureVector,
    MatchOutcome,
    feature_from_name,
    score_candidates,
    ternary_match,
)
from .inventory import (
    DEFAULT_PUNCTUATION,
    Inventory,
    PhonemeEntry,
    Violation,
    VocabReport,
    default_inventory,
    load_inventory,
    lookup_phoneme,
    validate_inventory,
    vocab_report,
)
from .metrics import AlignmentResult, CorpusSummary, align_sequences, per_from_files
from .parsing import (
    PUNCTUATION,
    Segment,
    TaggedToken,
    apply_allophony,
    legal_syllables,
    parse_arpabet_token,
    parse_pinyin_syllable,
    tokenize_tagged_line,
)

__version__ = "0.1.0"

__all__ = [
    "AccentProjector",
    "AlignmentResult",
    "ConflictTable",
    "CorpusSummary",
    "DEFAULT_CONFLICTS",
    "DEFAULT_PUNCTUATION",
    "DEFAULT_WEIGHTS",
    "EmptyCandidateSet",
    "EmptySpan",
    "EncodedUtterance",
    "Feature",
    "FeatureClass",
    "FeatureFrameEncoder",
    "FeatureVector",
    "Frame",
    "FrameEmbedder",
    "Inventory",
    "LineCountMismatch",
    "MatchOutcome",
    "MissingLanguageTag",
    "MissingToneDigit",
    "NUM_FEATURES",
    "ParseError",
    "PhonemeEntry",
    "PhonfeatError",
    "ProjectionReport",
    "PUNCTUATION",
    "Segment",
    "SegmentProjection",
    "SubstitutionRow",
    "TaggedToken",
    "ToyEmbedding",
    "UnknownArpabetCode",
    "UnknownFeature",
    "UnknownPhoneme",
    "UnknownSyllable",
    "UnsupportedErhua",
    "ValidationError",
    "Violation",
    "VocabReport",
    "ZeroEntries",
    "align_sequences",
    "apply_allophony",
    "default_inventory",
    "deserialize",
    "embed_utterance",
    "encode_utterance",
    "feature_from_name",
    "legal_syllables",
    "load_inventory",
    "lookup_phoneme",
    "parse_arpabet_token",
    "parse_pinyin_syllable",
    "per_from_files",
    "project_segment",
    "project_utterance",
    "score_candidates",
    "serialize",
    "substitution_table",
    "substitution_table_tsv",
    "ternary_match",
    "tokenize_tagged_line",
    "validate_inventory",
    "vocab_report",
]
