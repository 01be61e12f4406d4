"""Scikit-learn compatible wrappers around the front-end pipeline.

These estimators make the encoder, the toy embedder and the accent
projector composable with the wider ecosystem (pipelines, cloning,
get_params/set_params). They are stateless in the learning sense; fit only
loads and caches the immutable data tables.

    >>> pipeline = Pipeline([("frames", FeatureFrameEncoder(mode="surface")),
    ...                      ("embed", FrameEmbedder(seed=7))])
    >>> matrices = pipeline.fit_transform(["cmn: ni3 hao3 ."])
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import (
    check_lang,
    check_lines,
    check_mode,
    check_tone_policy,
    check_weights,
)
from .accent import ProjectionReport, project_utterance
from .encoding import EncodedUtterance, embed_utterance, encode_utterance
from .inventory import default_inventory
from .parsing import default_arpabet_table, default_pinyin_tables, tokenize_tagged_line


class FeatureFrameEncoder(BaseEstimator, TransformerMixin):
    """Transform tagged transcription lines into encoded utterances.

    Parameters
    ----------
    mode : {"phonemic", "surface"}
        Whether Mandarin allophony is applied before feature lookup.
    data_dir : str or None
        Directory holding the inventory and mapping tables; None uses the
        packaged data.
    """

    def __init__(self, mode: str = "phonemic", data_dir: str | None = None):
        self.mode = mode
        self.data_dir = data_dir

    def fit(self, X=None, y=None):
        check_mode(self.mode)
        self.inventories_ = {
            "en": default_inventory("en", self.data_dir),
            "cmn": default_inventory("cmn", self.data_dir),
        }
        # Warm the mapping-table caches so transform never touches disk.
        default_arpabet_table(self.data_dir)
        default_pinyin_tables(self.data_dir)
        return self

    def transform(self, X) -> list[EncodedUtterance]:
        check_is_fitted(self, "inventories_")
        return [
            encode_utterance(
                tokenize_tagged_line(line),
                mode=self.mode,
                en_inventory=self.inventories_["en"],
                cmn_inventory=self.inventories_["cmn"],
            )
            for line in check_lines(X)
        ]


class FrameEmbedder(BaseEstimator, TransformerMixin):
    """Transform encoded utterances into deterministic frames x 256 matrices."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def fit(self, X=None, y=None):
        self.seed_ = int(self.seed)
        return self

    def transform(self, X) -> list[np.ndarray]:
        check_is_fitted(self, "seed_")
        return [embed_utterance(encoded, self.seed_).matrix for encoded in X]


class AccentProjector(BaseEstimator):
    """Predict target-language phoneme sequences for source-language lines.

    ``predict`` returns one list of target SAMPA symbols per input line;
    ``report`` exposes the full per-segment outcomes and runner-ups.
    """

    def __init__(
        self,
        source_lang: str = "cmn",
        target_lang: str = "en",
        tone_policy: str = "drop",
        w_match: float = 1.0,
        w_mismatch: float = 2.0,
        data_dir: str | None = None,
    ):
        self.source_lang = source_lang
        self.target_lang = target_lang
        self.tone_policy = tone_policy
        self.w_match = w_match
        self.w_mismatch = w_mismatch
        self.data_dir = data_dir

    def fit(self, X=None, y=None):
        check_lang(self.source_lang)
        check_lang(self.target_lang)
        check_tone_policy(self.tone_policy)
        self.weights_ = check_weights((self.w_match, self.w_mismatch))
        default_inventory(self.source_lang, self.data_dir)
        default_inventory(self.target_lang, self.data_dir)
        return self

    def report(self, line: str) -> ProjectionReport:
        check_is_fitted(self, "weights_")
        return project_utterance(
            tokenize_tagged_line(line),
            self.source_lang,
            self.target_lang,
            tone_policy=self.tone_policy,
            weights=self.weights_,
            data_dir=self.data_dir,
        )

    def predict(self, X) -> list[list[str]]:
        return [
            [segment.target_sampa for segment in self.report(line).segments]
            for line in check_lines(X)
        ]
