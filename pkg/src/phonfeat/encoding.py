"""Model-input assembly: per-frame feature bits plus tone and prosody ids.

Each parsed segment becomes one frame holding its 19-bit feature row
(optional features included, since the goal is a cross-linguistic encoding),
the syllable tone id (0 none, 1-4 Mandarin tones, 5 neutral; domain size 6)
and a prosody id of 0. Trailing punctuation becomes a standalone break frame
with all-zero bits, tone 0, and a nonzero prosody id (1 minor break,
2 declarative-final, 3 interrogative-final; domain size 4).

The toy embedding exists purely to pin down the dimensional contract of the
downstream text embedding: feature bits feed a seeded 19x192 projection, and
the tone and prosody ids index seeded 6x32 and 4x32 lookup tables, giving
frames x 256 overall. Nothing is trained; the same seed reproduces the same
matrix bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .features import NUM_FEATURES
from .inventory import Inventory, check_lang, default_inventory
from .parsing import (
    TaggedToken,
    apply_allophony,
    parse_arpabet_token,
    parse_pinyin_syllable,
)

#: Prosody ids by punctuation mark.
PROSODY_IDS = {",": 1, "，": 1, ".": 2, "!": 2, "。": 2, "！": 2, "?": 3, "？": 3}

TONE_DOMAIN = 6
PROSODY_DOMAIN = 4

ZERO_BITS = (0,) * NUM_FEATURES

FEATURE_EMBED_DIM = 192
TONE_EMBED_DIM = 32
PROSODY_EMBED_DIM = 32
EMBED_DIM = FEATURE_EMBED_DIM + TONE_EMBED_DIM + PROSODY_EMBED_DIM


@dataclass(frozen=True)
class Frame:
    """One input position: a speech segment or a punctuation break."""

    symbol: str
    lang: str
    is_break: bool
    tone_id: int
    prosody_id: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != NUM_FEATURES or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bits must be {NUM_FEATURES} binary values")
        if not 0 <= self.tone_id < TONE_DOMAIN:
            raise ValueError(f"tone_id {self.tone_id} outside 0..{TONE_DOMAIN - 1}")
        if not 0 <= self.prosody_id < PROSODY_DOMAIN:
            raise ValueError(f"prosody_id {self.prosody_id} outside 0..{PROSODY_DOMAIN - 1}")
        if self.is_break:
            if any(self.bits) or self.tone_id != 0 or self.prosody_id == 0:
                raise ValueError("break frames need zero bits, tone 0 and nonzero prosody")
        elif self.prosody_id != 0:
            raise ValueError("non-break frames must have prosody_id 0")


@dataclass(frozen=True)
class EncodedUtterance:
    frames: tuple[Frame, ...]

    def __len__(self) -> int:
        return len(self.frames)

    def bit_matrix(self) -> np.ndarray:
        return np.array([f.bits for f in self.frames], dtype=np.float64).reshape(
            len(self.frames), NUM_FEATURES
        )


def encode_utterance(
    tokens: list[TaggedToken],
    mode: str = "phonemic",
    en_inventory: Inventory | None = None,
    cmn_inventory: Inventory | None = None,
    data_dir=None,
) -> EncodedUtterance:
    """Assemble tagged tokens into frames, deterministically.

    In surface mode Mandarin allophony is applied before lookup, so
    alveolo-palatals appear with their own feature rows; phonemic mode keeps
    underlying forms. Parser and lookup errors propagate with the token
    position prefixed.
    """
    if mode not in ("phonemic", "surface"):
        raise ValueError(f"mode must be 'phonemic' or 'surface', not {mode!r}")
    inventories = {
        "en": en_inventory or default_inventory("en", data_dir),
        "cmn": cmn_inventory or default_inventory("cmn", data_dir),
    }
    frames: list[Frame] = []
    for position, token in enumerate(tokens):
        lang = check_lang(token.lang)
        try:
            if lang == "en":
                segments = parse_arpabet_token(token.payload)
            else:
                segments = parse_pinyin_syllable(token.payload)
            if mode == "surface":
                segments = apply_allophony(segments)
            for segment in segments:
                entry = inventories[lang].lookup(segment.sampa)
                frames.append(
                    Frame(
                        symbol=segment.sampa,
                        lang=lang,
                        is_break=False,
                        tone_id=segment.tone_id,
                        prosody_id=0,
                        bits=entry.features.bits(),
                    )
                )
        except Exception as exc:
            raise type(exc)(f"token {position} ({lang}: {token.payload!r}): {exc}") from exc
        if token.trailing_punct is not None:
            frames.append(
                Frame(
                    symbol=token.trailing_punct,
                    lang=lang,
                    is_break=True,
                    tone_id=0,
                    prosody_id=PROSODY_IDS[token.trailing_punct],
                    bits=ZERO_BITS,
                )
            )
    return EncodedUtterance(tuple(frames))


_TSV_HEADER = (
    ["idx", "symbol", "lang", "is_break", "tone_id", "prosody_id"]
    + [f"b{i}" for i in range(NUM_FEATURES)]
)


def serialize(encoded: EncodedUtterance, format: str = "tsv") -> bytes:
    """Render an utterance losslessly; feature bits follow canonical index order."""
    if format == "tsv":
        lines = ["\t".join(_TSV_HEADER)]
        for idx, frame in enumerate(encoded.frames):
            lines.append(
                "\t".join(
                    [
                        str(idx),
                        frame.symbol,
                        frame.lang,
                        str(int(frame.is_break)),
                        str(frame.tone_id),
                        str(frame.prosody_id),
                    ]
                    + [str(b) for b in frame.bits]
                )
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    if format == "json":
        payload = {"frames": [_frame_dict(f) for f in encoded.frames]}
        return (json.dumps(payload, ensure_ascii=False, sort_keys=True) + "\n").encode("utf-8")
    raise ValueError(f"format must be 'tsv' or 'json', not {format!r}")


def _frame_dict(frame: Frame) -> dict:
    data = asdict(frame)
    data["bits"] = list(frame.bits)
    return data


def deserialize(data: bytes | str, format: str = "tsv") -> EncodedUtterance:
    """Invert :func:`serialize`; round-trips are exact."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if format == "tsv":
        lines = [l for l in text.splitlines() if l]
        if not lines or lines[0].split("\t") != _TSV_HEADER:
            raise ValueError("missing or malformed TSV header")
        frames = []
        for line in lines[1:]:
            cols = line.split("\t")
            if len(cols) != len(_TSV_HEADER):
                raise ValueError(f"expected {len(_TSV_HEADER)} columns, found {len(cols)}")
            frames.append(
                Frame(
                    symbol=cols[1],
                    lang=cols[2],
                    is_break=bool(int(cols[3])),
                    tone_id=int(cols[4]),
                    prosody_id=int(cols[5]),
                    bits=tuple(int(b) for b in cols[6:]),
                )
            )
        return EncodedUtterance(tuple(frames))
    if format == "json":
        payload = json.loads(text)
        frames = [
            Frame(
                symbol=f["symbol"],
                lang=f["lang"],
                is_break=bool(f["is_break"]),
                tone_id=int(f["tone_id"]),
                prosody_id=int(f["prosody_id"]),
                bits=tuple(int(b) for b in f["bits"]),
            )
            for f in payload["frames"]
        ]
        return EncodedUtterance(tuple(frames))
    raise ValueError(f"format must be 'tsv' or 'json', not {format!r}")


@dataclass(frozen=True)
class ToyEmbedding:
    """Seeded frames x 256 matrix: 192 feature + 32 tone + 32 prosody columns."""

    matrix: np.ndarray
    seed: int


def _embedding_tables(seed: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # One PCG64 stream, drawn in a fixed order, all entries uniform in [-1, 1].
    rng = np.random.default_rng(seed)
    projection = rng.uniform(-1.0, 1.0, (NUM_FEATURES, FEATURE_EMBED_DIM))
    tone_table = rng.uniform(-1.0, 1.0, (TONE_DOMAIN, TONE_EMBED_DIM))
    prosody_table = rng.uniform(-1.0, 1.0, (PROSODY_DOMAIN, PROSODY_EMBED_DIM))
    return projection, tone_table, prosody_table


def embed_utterance(encoded: EncodedUtterance, seed: int = 0) -> ToyEmbedding:
    """Deterministic toy text embedding; a pure function of (frames, seed).

    No training occurs: the operation exists to verify the 192+32+32
    concatenation shape of the input contract.
    """
    projection, tone_table, prosody_table = _embedding_tables(seed)
    n = len(encoded.frames)
    feature_block = encoded.bit_matrix() @ projection
    tone_block = np.zeros((n, TONE_EMBED_DIM))
    prosody_block = np.zeros((n, PROSODY_EMBED_DIM))
    for row, frame in enumerate(encoded.frames):
        tone_block[row] = tone_table[frame.tone_id]
        prosody_block[row] = prosody_table[frame.prosody_id]
    return ToyEmbedding(np.hstack([feature_block, tone_block, prosody_block]), seed)
