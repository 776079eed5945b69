import random
from pathlib import Path

import pytest

from lyricsmith.errors import UnresolvableWord
from lyricsmith.phonetics import (
    DictionaryEngine,
    Phonetics,
    PhoneticsConfig,
    Source,
    fallback_sequence,
    is_nucleus,
    load_pronunciation_file,
    normalize_token,
    tokenize,
)

GOLDEN_PATH = Path(__file__).parent / "data" / "g2p_golden.tsv"


class TestNormalizeToken:
    def test_case_and_punctuation_stripped(self):
        assert normalize_token("Hello,") == "hello"

    def test_internal_apostrophe_preserved(self):
        assert normalize_token("don't") == "don't"
        assert normalize_token("don’t") == "don't"

    def test_punctuation_only_becomes_empty(self):
        assert normalize_token("—") == ""
        assert normalize_token("...") == ""

    def test_surrounding_quotes_stripped(self):
        assert normalize_token('"night"') == "night"
        assert normalize_token("'night'") == "night"


def test_tokenize_drops_empty_tokens():
    assert tokenize("Hello, -- world!") == ["hello", "world"]
    assert tokenize("") == []


class TestPhonemize:
    def test_matches_engine_golden_file(self, phonetics):
        golden = load_pronunciation_file(str(GOLDEN_PATH))
        assert len(golden) >= 10
        for word, (phonemes, stresses) in golden.items():
            seq = phonetics.phonemize(word)
            assert seq.phonemes == phonemes, word
            assert seq.stress_indices == stresses, word
            assert seq.source is Source.DICTIONARY

    def test_doing_ends_with_ing_and_one_stress(self, phonetics):
        seq = phonetics.phonemize("doing")
        assert seq.phonemes[-2:] == ("ɪ", "ŋ")
        assert len(seq.stress_indices) == 1

    def test_cat(self, phonetics):
        assert phonetics.phonemize("cat").phonemes == ("k", "æ", "t")

    def test_oov_uses_fallback_source(self, phonetics):
        seq = phonetics.phonemize("zzzqx")
        assert seq.source is Source.FALLBACK
        assert seq.syllable_count == 1

    def test_fallback_disabled_raises(self):
        p = Phonetics(PhoneticsConfig(fallback_enabled=False))
        with pytest.raises(UnresolvableWord):
            p.phonemize("zzzqx")

    def test_empty_word_raises(self, phonetics):
        with pytest.raises(UnresolvableWord):
            phonetics.phonemize("")

    def test_stress_indices_point_at_nuclei_across_snapshot(self, phonetics):
        for word, (phonemes, stresses) in phonetics._dictionary.items():
            for idx in stresses:
                assert is_nucleus(phonemes[idx]), word


class TestFallbackSequence:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("shmorp", 1),
            ("frabjous", 2),
            ("grue", 1),
            ("blute", 1),  # silent final e
            ("zzzqx", 1),  # no vowel letters at all
            ("yolo", 2),
        ],
    )
    def test_vowel_group_counts(self, word, expected):
        assert fallback_sequence(word).syllable_count == expected

    def test_stress_assigned_to_last_nucleus(self):
        seq = fallback_sequence("frabjous")
        assert seq.stress_indices
        assert is_nucleus(seq.phonemes[seq.stress_indices[-1]])


class TestSyllableCounts:
    def test_empty_word_is_zero(self, phonetics):
        assert phonetics.syllable_count_word("") == 0

    def test_hello(self, phonetics):
        assert phonetics.syllable_count_word("hello") == 2

    def test_beautiful(self, phonetics):
        assert phonetics.syllable_count_word("beautiful") == 3

    def test_empty_line_is_zero(self, phonetics):
        assert phonetics.syllable_count_line("") == 0

    def test_repeated_word_line(self, phonetics):
        assert phonetics.syllable_count_line("hello hello") == 4

    def test_single_word_line_equals_word_count(self, phonetics):
        for word in ["cat", "beautiful", "doing"]:
            assert phonetics.syllable_count_line(word) == phonetics.syllable_count_word(word)

    def test_additivity_over_corpus_lines(self, phonetics, filtered_corpus):
        lines = list(filtered_corpus.lines())
        rng = random.Random(7)
        for _ in range(50):
            a, b = rng.choice(lines), rng.choice(lines)
            joint = phonetics.syllable_count_line(a + " " + b)
            assert joint == phonetics.syllable_count_line(a) + phonetics.syllable_count_line(b)


class TestDeterminismAndCache:
    def test_repeated_calls_identical(self, phonetics):
        assert phonetics.phonemize("doing") == phonetics.phonemize("doing")

    def test_cache_transparency(self):
        cached = Phonetics(PhoneticsConfig(cache_enabled=True))
        uncached = Phonetics(PhoneticsConfig(cache_enabled=False))
        for word in ["cat", "doing", "hello", "zzzqx", "frabjous"]:
            assert cached.phonemize(word) == uncached.phonemize(word)
        assert uncached.cache_stats()["entries"] == 0

    def test_cache_counters_move(self):
        p = Phonetics()
        p.phonemize("cat")
        p.phonemize("cat")
        stats = p.cache_stats()
        assert stats["entries"] == 1
        assert stats["hits"] >= 1


class TestEngineRouting:
    def test_dictionary_wins_by_default(self, tmp_path):
        # Engine disagrees with the snapshot about "cat".
        engine_file = tmp_path / "engine.tsv"
        engine_file.write_text("cat\tk ˈɑ t\nsnarfle\ts n ˈɑ ɹ f ə l\n", encoding="utf-8")
        p = Phonetics(PhoneticsConfig(engine=DictionaryEngine(engine_file)))
        assert p.phonemize("cat").phonemes == ("k", "æ", "t")
        assert p.phonemize("cat").source is Source.DICTIONARY

    def test_engine_preferred_when_configured(self, tmp_path):
        engine_file = tmp_path / "engine.tsv"
        engine_file.write_text("cat\tk ˈɑ t\n", encoding="utf-8")
        p = Phonetics(
            PhoneticsConfig(engine=DictionaryEngine(engine_file), prefer="engine")
        )
        seq = p.phonemize("cat")
        assert seq.phonemes == ("k", "ɑ", "t")
        assert seq.source is Source.ENGINE

    def test_engine_covers_snapshot_gaps(self, tmp_path):
        engine_file = tmp_path / "engine.tsv"
        engine_file.write_text("snarfle\ts n ˈɑ ɹ f ə l\n", encoding="utf-8")
        p = Phonetics(PhoneticsConfig(engine=DictionaryEngine(engine_file)))
        seq = p.phonemize("snarfle")
        assert seq.source is Source.ENGINE
        assert seq.syllable_count == 2
