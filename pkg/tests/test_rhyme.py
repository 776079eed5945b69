import random

import pytest

from lyricsmith.errors import NoNucleus, UnknownWord
from lyricsmith.phonetics import PhonemeSequence, Phonetics, PhoneticsConfig, Source
from lyricsmith.rhyme import (
    EquivalenceTable,
    RhymeClass,
    RhymeDictionary,
    Rhymer,
    build_rhyme_dictionary,
    canonical_key,
    default_table_path,
    rhyme_key,
)

GOLDEN_PAIRS = [
    ("doing", "ruin", RhymeClass.NEAR),
    ("mobile", "local", RhymeClass.NEAR),
    ("cat", "hat", RhymeClass.PERFECT),
    ("cat", "dog", RhymeClass.NONE),
    ("bell", "tell", RhymeClass.PERFECT),
    ("night", "light", RhymeClass.PERFECT),
    ("time", "line", RhymeClass.NEAR),
    ("heart", "star", RhymeClass.NEAR),
    ("gold", "soul", RhymeClass.NEAR),
    ("day", "dog", RhymeClass.NONE),
]


class TestRhymeKey:
    def test_cat_key(self, rhymer):
        assert rhymer.key("cat") == ("æ", "t")

    def test_doing_key_starts_at_stressed_nucleus(self, rhymer):
        assert rhymer.key("doing") == ("u", "ɪ", "ŋ")

    def test_single_vowel_word_key_is_whole_sequence(self, rhymer, phonetics):
        seq = phonetics.phonemize("eye")
        assert rhymer.key("eye") == seq.phonemes

    def test_no_nucleus_raises(self):
        seq = PhonemeSequence(("s", "t"), (), Source.DICTIONARY)
        with pytest.raises(NoNucleus):
            rhyme_key(seq)


class TestClassify:
    @pytest.mark.parametrize("a,b,expected", GOLDEN_PAIRS)
    def test_golden_pairs(self, rhymer, a, b, expected):
        assert rhymer.classify(a, b) is expected

    def test_symmetry_and_reflexivity(self, rhymer, filtered_corpus):
        words = sorted({w for line in filtered_corpus.lines() for w in line.split()})
        rng = random.Random(13)
        sample = rng.sample(words, 40)
        for a in sample[:20]:
            assert rhymer.classify(a, a) is RhymeClass.PERFECT
        for a, b in zip(sample[:20], sample[20:]):
            assert rhymer.classify(a, b) is rhymer.classify(b, a)

    def test_loosening_table_never_demotes_near(self, rhymer, phonetics, filtered_corpus):
        loosened = EquivalenceTable.from_classes(
            vowel_classes=[["i", "ɪ"], ["u", "ʊ"], ["ə", "ʌ", "ɚ", "ɝ"], ["ɑ", "ɔ", "æ"]],
            consonant_pairs=[
                ["s", "z", "ʃ", "ʒ"],
                ["t", "d"],
                ["f", "v"],
                ["p", "b"],
                ["k", "g"],
                ["m", "n", "ŋ"],
                ["θ", "ð"],
                ["tʃ", "dʒ"],
            ],
            deletable_codas=["t", "d", "s", "z"],
        )
        loose = Rhymer(phonetics, loosened)
        words = sorted({w for line in filtered_corpus.lines() for w in line.split()})
        rng = random.Random(29)
        pairs = [(rng.choice(words), rng.choice(words)) for _ in range(300)]
        pairs += [(a, b) for a, b, cls in GOLDEN_PAIRS if cls is not RhymeClass.NONE]
        for a, b in pairs:
            if rhymer.classify(a, b) is not RhymeClass.NONE:
                assert loose.classify(a, b) is not RhymeClass.NONE, (a, b)


class TestEquivalenceTable:
    def test_bundled_table_loads(self):
        table = EquivalenceTable.load(default_table_path())
        assert table.vowel_rep["ɪ"] == "i"
        assert table.consonant_rep["ŋ"] == "m"
        assert table.deletable_codas == frozenset({"t"})

    def test_canonical_key_strips_deletable_coda(self):
        table = EquivalenceTable.load(default_table_path())
        assert canonical_key(("aɪ", "t"), table) == ("aɪ", "/")

    def test_canonical_key_drops_medial_consonants(self):
        table = EquivalenceTable.load(default_table_path())
        assert canonical_key(("oʊ", "b", "ə", "l"), table) == canonical_key(
            ("oʊ", "k", "ə", "l"), table
        )


class TestRhymeDictionary:
    def test_empty_corpus_gives_empty_dictionary(self, rhymer):
        rdict = build_rhyme_dictionary([], rhymer)
        assert rdict.stats()["buckets"] == 0

    def test_one_line_shares_bucket(self, rhymer):
        rdict = build_rhyme_dictionary(["bell fell"], rhymer)
        assert rdict.top_rhymes("bell") == ["fell"]
        assert rdict.top_rhymes("fell") == ["bell"]

    def test_frequency_counts_occurrences(self, rhymer):
        rdict = build_rhyme_dictionary(["tell tell tell", "bell"], rhymer)
        ranked = rdict.top_rhymes_with_frequencies("bell")
        assert ranked == [("tell", 3)]

    def test_top_rhymes_frequency_sort(self, rhymer):
        rdict = RhymeDictionary(rhymer)
        for word, freq in [("tell", 5), ("well", 3), ("shell", 1), ("bell", 2)]:
            rdict.add_word(word, freq)
        assert rdict.top_rhymes("bell", k=2) == ["tell", "well"]

    def test_ties_break_lexicographically(self, rhymer):
        rdict = RhymeDictionary(rhymer)
        for word in ["well", "tell", "shell"]:
            rdict.add_word(word, 2)
        assert rdict.top_rhymes("bell", k=3) == ["shell", "tell", "well"]

    def test_query_word_never_returned(self, rdict):
        for word in ["night", "home", "day"]:
            assert word not in rdict.top_rhymes(word, k=50)

    def test_results_always_rhyme_with_query(self, rdict, rhymer):
        for word in ["night", "home", "bell", "doing"]:
            for mate in rdict.top_rhymes(word):
                assert rhymer.classify(word, mate) is not RhymeClass.NONE

    def test_default_k_is_8(self, rdict):
        assert len(rdict.top_rhymes("night")) == 8

    def test_no_mates_gives_empty_list(self, rhymer):
        rdict = build_rhyme_dictionary(["bell cat"], rhymer)
        assert rdict.top_rhymes("cat") == []

    def test_unknown_word_raises(self, phonetics):
        strict = Phonetics(PhoneticsConfig(fallback_enabled=False))
        rdict = build_rhyme_dictionary(["bell fell"], Rhymer(strict))
        with pytest.raises(UnknownWord):
            rdict.top_rhymes("zzzqx")

    def test_punctuation_only_word_raises(self, rdict):
        with pytest.raises(UnknownWord):
            rdict.top_rhymes("...")

    def test_unphonemizable_words_counted_not_fatal(self, phonetics):
        strict = Rhymer(Phonetics(PhoneticsConfig(fallback_enabled=False)))
        rdict = build_rhyme_dictionary(["bell zzzqx fell"], strict)
        assert rdict.skipped_words == 1
        assert rdict.top_rhymes("bell") == ["fell"]
