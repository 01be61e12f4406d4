"""Frame assembly, serialization round-trips, and the toy embedding."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phonfeat import (
    EncodedUtterance,
    Feature,
    Frame,
    MissingToneDigit,
    UnknownArpabetCode,
    deserialize,
    embed_utterance,
    encode_utterance,
    serialize,
    tokenize_tagged_line,
)
from phonfeat.encoding import EMBED_DIM, ZERO_BITS


def encode_line(line, mode="phonemic"):
    return encode_utterance(tokenize_tagged_line(line), mode=mode)


class TestEncode:
    def test_surface_mode_palatalizes(self, cmn_inv):
        encoded = encode_line("cmn: xi1", mode="surface")
        assert [f.symbol for f in encoded.frames] == ["s\\", "i"]
        assert all(f.tone_id == 1 and not f.is_break for f in encoded.frames)
        high_bit = Feature.HIGH.index
        assert encoded.frames[0].bits[high_bit] == 1

    def test_phonemic_mode_keeps_underlying_form(self):
        encoded = encode_line("cmn: xi1", mode="phonemic")
        assert [f.symbol for f in encoded.frames] == ["s", "i"]

    def test_english_tone_channel_is_zero(self):
        encoded = encode_line("en: M AH0")
        assert len(encoded.frames) == 2
        assert [f.tone_id for f in encoded.frames] == [0, 0]

    def test_punct_becomes_break_frame(self):
        # Hand assembly: ni3 -> n i; hao3 -> x a u; "." -> one break frame.
        encoded = encode_line("cmn: ni3 hao3 .")
        assert [f.symbol for f in encoded.frames] == ["n", "i", "x", "a", "u", "."]
        segment_frames = [f for f in encoded.frames if not f.is_break]
        assert len(segment_frames) == 5
        assert all(f.tone_id == 3 for f in segment_frames)
        break_frame = encoded.frames[-1]
        assert break_frame.is_break
        assert break_frame.prosody_id == 2
        assert break_frame.tone_id == 0
        assert break_frame.bits == ZERO_BITS

    @pytest.mark.parametrize(
        "punct,prosody", [(",", 1), ("，", 1), (".", 2), ("!", 2), ("。", 2),
                          ("！", 2), ("?", 3), ("？", 3)]
    )
    def test_prosody_mapping(self, punct, prosody):
        encoded = encode_line(f"cmn: ma5 {punct}")
        assert encoded.frames[-1].prosody_id == prosody

    def test_frame_count_is_segments_plus_puncts(self):
        line = "en: HH AH0 L OW1 , | cmn: zhang1 san1 ?"
        encoded = encode_line(line)
        assert len(encoded.frames) == 4 + 3 + 3 + 2

    def test_bits_equal_inventory_rows(self, en_inv, cmn_inv):
        encoded = encode_line("en: S IY1 | cmn: shi4 .", mode="surface")
        inventories = {"en": en_inv, "cmn": cmn_inv}
        for frame in encoded.frames:
            if frame.is_break:
                continue
            assert frame.bits == inventories[frame.lang].lookup(frame.symbol).features.bits()

    def test_optional_features_are_included_in_bits(self, en_inv):
        encoded = encode_line("en: K IY1")
        assert encoded.frames[0].bits[Feature.HIGH.index] == 1

    def test_parser_errors_carry_token_position(self):
        with pytest.raises(UnknownArpabetCode, match="token 0"):
            encode_line("en: QQ")
        with pytest.raises(MissingToneDigit, match="token 1"):
            encode_line("cmn: ni3 hao")

    def test_deterministic(self):
        line = "cmn: jiang3 | en: Y UW1 ."
        assert encode_line(line) == encode_line(line)

    @settings(max_examples=50, deadline=None)
    @given(data=st.data())
    def test_frame_count_is_segments_plus_puncts_property(self, data):
        from phonfeat import legal_syllables, parse_pinyin_syllable, tokenize_tagged_line

        rng = random.Random(data.draw(st.integers(0, 2**32 - 1)))
        syllables = legal_syllables()
        parts, n_segments, n_puncts = [], 0, 0
        for _ in range(rng.randrange(1, 4)):
            chosen = [f"{rng.choice(syllables)}{rng.randrange(1, 6)}"
                      for _ in range(rng.randrange(1, 4))]
            n_segments += sum(len(parse_pinyin_syllable(s)) for s in chosen)
            span = "cmn: " + " ".join(chosen)
            if rng.random() < 0.5:
                span += " " + rng.choice([",", ".", "?"])
                n_puncts += 1
            parts.append(span)
        line = " | ".join(parts)
        encoded = encode_utterance(tokenize_tagged_line(line))
        assert len(encoded.frames) == n_segments + n_puncts


def random_utterance(rng, en_inv, cmn_inv):
    inventories = {"en": en_inv, "cmn": cmn_inv}
    frames = []
    for _ in range(rng.randrange(0, 12)):
        lang = rng.choice(["en", "cmn"])
        if rng.random() < 0.2:
            punct, prosody = rng.choice([(",", 1), (".", 2), ("?", 3), ("！", 2)])
            frames.append(Frame(punct, lang, True, 0, prosody, ZERO_BITS))
        else:
            entry = rng.choice(inventories[lang].entries)
            tone = rng.randrange(1, 6) if lang == "cmn" else 0
            frames.append(Frame(entry.sampa, lang, False, tone, 0, entry.features.bits()))
    return EncodedUtterance(tuple(frames))


class TestSerialization:
    def test_empty_utterance_is_header_only_tsv(self):
        data = serialize(EncodedUtterance(()), "tsv")
        lines = data.decode("utf-8").splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("idx\tsymbol\tlang\t")
        assert lines[0].endswith("b18")

    def test_single_nasal_frame_bit_positions(self, en_inv):
        encoded = encode_line("en: M")
        row = serialize(encoded, "tsv").decode("utf-8").splitlines()[1].split("\t")
        bits = [int(b) for b in row[6:]]
        expected = {Feature.CONSONANTAL, Feature.SONORANT, Feature.VOICE,
                    Feature.NASAL, Feature.LABIAL}
        assert [i for i, b in enumerate(bits) if b] == sorted(f.index for f in expected)

    def test_round_trip_seeded_random(self, en_inv, cmn_inv):
        rng = random.Random(20240101)
        for _ in range(100):
            utterance = random_utterance(rng, en_inv, cmn_inv)
            for fmt in ("tsv", "json"):
                assert deserialize(serialize(utterance, fmt), fmt) == utterance

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_round_trip_hypothesis(self, data, en_inv, cmn_inv):
        rng = random.Random(data.draw(st.integers(0, 2**32 - 1)))
        utterance = random_utterance(rng, en_inv, cmn_inv)
        for fmt in ("tsv", "json"):
            assert deserialize(serialize(utterance, fmt), fmt) == utterance

    def test_rejects_unknown_format(self):
        with pytest.raises(ValueError):
            serialize(EncodedUtterance(()), "xml")


class TestFrameInvariants:
    def test_break_frames_must_be_silent(self):
        with pytest.raises(ValueError):
            Frame(".", "en", True, 0, 0, ZERO_BITS)
        with pytest.raises(ValueError):
            Frame(".", "en", True, 1, 2, ZERO_BITS)

    def test_non_break_frames_have_no_prosody(self):
        with pytest.raises(ValueError):
            Frame("m", "en", False, 0, 2, ZERO_BITS)

    def test_domains(self):
        with pytest.raises(ValueError):
            Frame("m", "cmn", False, 6, 0, ZERO_BITS)
        with pytest.raises(ValueError):
            Frame(".", "en", True, 0, 4, ZERO_BITS)


class TestToyEmbedding:
    def test_zero_frames(self):
        embedding = embed_utterance(EncodedUtterance(()), seed=1)
        assert embedding.matrix.shape == (0, EMBED_DIM)

    def test_shape_is_frames_by_256(self):
        encoded = encode_line("cmn: ni3 hao3 .")
        embedding = embed_utterance(encoded, seed=5)
        assert embedding.matrix.shape == (len(encoded.frames), 256)

    def test_same_seed_is_bit_identical(self):
        encoded = encode_line("en: HH AH0 L OW1 | cmn: ma5 ?")
        a = embed_utterance(encoded, seed=17).matrix
        b = embed_utterance(encoded, seed=17).matrix
        assert a.dtype == b.dtype and a.shape == b.shape
        assert np.array_equal(a, b)

    def test_different_seeds_differ(self):
        encoded = encode_line("en: M")
        assert not np.array_equal(
            embed_utterance(encoded, seed=0).matrix, embed_utterance(encoded, seed=1).matrix
        )

    def test_identical_channel_triples_give_identical_rows(self):
        encoded = encode_line("cmn: ma1 ma1")
        matrix = embed_utterance(encoded, seed=3).matrix
        assert np.array_equal(matrix[0], matrix[2])
        assert np.array_equal(matrix[1], matrix[3])

    def test_block_structure(self, en_inv):
        # Columns 0:192 depend only on bits, 192:224 only on tone,
        # 224:256 only on prosody.
        f1 = Frame("m", "cmn", False, 1, 0, en_inv.lookup("m").features.bits())
        f2 = Frame("m", "cmn", False, 2, 0, en_inv.lookup("m").features.bits())
        f3 = Frame("s", "cmn", False, 1, 0, en_inv.lookup("s").features.bits())
        matrix = embed_utterance(EncodedUtterance((f1, f2, f3)), seed=9).matrix
        assert np.array_equal(matrix[0, :192], matrix[1, :192])
        assert not np.array_equal(matrix[0, 192:224], matrix[1, 192:224])
        assert np.array_equal(matrix[0, 224:], matrix[1, 224:])
        assert np.array_equal(matrix[0, 192:224], matrix[2, 192:224])
        assert not np.array_equal(matrix[0, :192], matrix[2, :192])
