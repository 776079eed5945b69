from pathlib import Path

import pytest

from lyricsmith import corpus as corpus_mod
from lyricsmith.generation import NgramBackend, ngram_train
from lyricsmith.phonetics import Phonetics
from lyricsmith.rhyme import Rhymer, build_rhyme_dictionary

DATA_DIR = Path(__file__).parent / "data"
CORPUS_PATH = DATA_DIR / "synthetic_corpus.jsonl"


@pytest.fixture(scope="session")
def phonetics():
    return Phonetics()


@pytest.fixture(scope="session")
def rhymer(phonetics):
    return Rhymer(phonetics)


@pytest.fixture(scope="session")
def raw_corpus():
    return corpus_mod.ingest(CORPUS_PATH)


@pytest.fixture(scope="session")
def filtered_corpus(raw_corpus):
    filtered, _ = corpus_mod.preprocess(raw_corpus)
    return filtered


@pytest.fixture(scope="session")
def rdict(filtered_corpus, rhymer):
    return build_rhyme_dictionary(filtered_corpus.lines(), rhymer)


@pytest.fixture(scope="session")
def ngram_model(filtered_corpus):
    return ngram_train(filtered_corpus.lines(), order=3)


@pytest.fixture(scope="session")
def baseline_backend(ngram_model, phonetics, rdict):
    return NgramBackend(ngram_model, phonetics, rdict)
