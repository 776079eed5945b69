"""lyricsmith: a line-level lyric co-writing workbench.

Deterministic core for building tagged text-to-text lyric datasets, detecting
near rhymes phonetically, counting syllables, scoring generators on five genre
metrics, and serving constrained line suggestions over HTTP.
"""

__version__ = "0.1.0"

from .errors import (
    BackendUnavailable,
    EmptyCorpus,
    InsufficientRhymes,
    LengthMismatch,
    LyricsmithError,
    MalformedResponse,
    MalformedRow,
    NoNucleus,
    ParseError,
    UnknownWord,
    UnresolvableWord,
)
from .phonetics import PhonemeSequence, Phonetics, PhoneticsConfig, normalize_token, tokenize
from .rhyme import EquivalenceTable, RhymeClass, RhymeDictionary, Rhymer, build_rhyme_dictionary

__all__ = [
    "BackendUnavailable",
    "EmptyCorpus",
    "EquivalenceTable",
    "InsufficientRhymes",
    "LengthMismatch",
    "LyricsmithError",
    "MalformedResponse",
    "MalformedRow",
    "NoNucleus",
    "ParseError",
    "PhonemeSequence",
    "Phonetics",
    "PhoneticsConfig",
    "RhymeClass",
    "RhymeDictionary",
    "Rhymer",
    "UnknownWord",
    "UnresolvableWord",
    "build_rhyme_dictionary",
    "normalize_token",
    "tokenize",
    "__version__",
]
