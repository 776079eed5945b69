"""Word-to-phoneme conversion and syllable counting.

Words resolve through up to three routes, in a configurable order: an optional
external grapheme-to-phoneme engine, the bundled pronunciation snapshot, and an
orthographic fallback for out-of-vocabulary words (slang, invented spellings).
Results are cached per instance so repeated lookups are cheap and identical.
"""

from __future__ import annotations

import logging
import subprocess
import threading
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import UnresolvableWord

log = logging.getLogger(__name__)

STRESS_PRIMARY = "ˈ"
STRESS_SECONDARY = "ˌ"

# Nucleus symbols used by the bundled snapshot (General American inventory).
IPA_VOWELS = frozenset(
    ["ɑ", "æ", "ʌ", "ə", "ɔ", "aʊ", "aɪ", "ɛ", "ɝ", "ɚ", "eɪ", "ɪ", "i", "oʊ", "ɔɪ", "ʊ", "u"]
)

_VOWEL_LETTERS = frozenset("aeiouy")


def is_nucleus(phoneme: str) -> bool:
    """True for IPA vowels and for fallback vowel-letter groups like "ea"."""
    if phoneme in IPA_VOWELS:
        return True
    return bool(phoneme) and all(c in _VOWEL_LETTERS for c in phoneme)


class Source(Enum):
    ENGINE = "engine"
    DICTIONARY = "dictionary"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class PhonemeSequence:
    """One word's pronunciation: ordered phonemes plus stressed-nucleus positions."""

    phonemes: tuple[str, ...]
    stress_indices: tuple[int, ...]
    source: Source

    def nucleus_indices(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.phonemes) if is_nucleus(p))

    @property
    def syllable_count(self) -> int:
        return len(self.nucleus_indices())


def normalize_token(raw: str) -> str:
    """Lowercase and strip surrounding punctuation; keep internal apostrophes.

    Pure-punctuation input normalizes to the empty string.
    """
    word = raw.lower().replace("’", "'")
    start, end = 0, len(word)
    while start < end and not word[start].isalnum():
        start += 1
    while end > start and not word[end - 1].isalnum():
        end -= 1
    return word[start:end]


def tokenize(line: str) -> list[str]:
    """Normalized non-empty tokens of a line, in order."""
    out = []
    for raw in line.split():
        word = normalize_token(raw)
        if word:
            out.append(word)
    return out


def _parse_phoneme_field(field_text: str) -> tuple[tuple[str, ...], tuple[int, ...]]:
    phonemes = []
    stresses = []
    for token in field_text.split():
        stressed = token[0] in (STRESS_PRIMARY, STRESS_SECONDARY)
        if stressed:
            token = token[1:]
        if not token:
            continue
        if stressed:
            stresses.append(len(phonemes))
        phonemes.append(token)
    return tuple(phonemes), tuple(stresses)


def _with_default_stress(phonemes: tuple[str, ...], stresses: tuple[int, ...]) -> tuple[int, ...]:
    # No stress marked: anchor rhyme keys at the last nucleus.
    if stresses:
        return stresses
    nuclei = [i for i, p in enumerate(phonemes) if is_nucleus(p)]
    return (nuclei[-1],) if nuclei else ()


@lru_cache(maxsize=8)
def load_pronunciation_file(path: str) -> dict[str, tuple[tuple[str, ...], tuple[int, ...]]]:
    """Parse a `word<TAB>phonemes` file; `#` lines are comments."""
    entries: dict[str, tuple[tuple[str, ...], tuple[int, ...]]] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            word, _, phon = line.partition("\t")
            phonemes, stresses = _parse_phoneme_field(phon)
            entries[word] = (phonemes, _with_default_stress(phonemes, stresses))
    return entries


def default_dictionary_path() -> Path:
    return Path(str(resources.files("lyricsmith").joinpath("data/pronunciations.tsv")))


def fallback_sequence(word: str) -> PhonemeSequence:
    """Orthographic pronunciation guess for out-of-vocabulary words.

    Consonant letters become single pseudo-phonemes; each maximal vowel-letter
    group (a, e, i, o, u, y) becomes one nucleus. A lone final "e" after a
    consonant is treated as silent when another nucleus exists; words with no
    vowel letters get a synthetic schwa so every word has at least one syllable.
    """
    groups: list[str] = []
    for ch in word:
        if ch in _VOWEL_LETTERS:
            if groups and all(c in _VOWEL_LETTERS for c in groups[-1]):
                groups[-1] += ch
            else:
                groups.append(ch)
        else:
            groups.append(ch)
    nuclei = [g for g in groups if g and g[0] in _VOWEL_LETTERS]
    if groups and groups[-1] == "e" and len(nuclei) >= 2:
        groups = groups[:-1]
    if not nuclei:
        groups.append("ə")
    phonemes = tuple(groups)
    return PhonemeSequence(phonemes, _with_default_stress(phonemes, ()), Source.FALLBACK)


class G2PEngine:
    """Interface for an external grapheme-to-phoneme engine."""

    name = "none"

    def lookup(self, word: str) -> tuple[tuple[str, ...], tuple[int, ...]] | None:
        raise NotImplementedError


class DictionaryEngine(G2PEngine):
    """Engine backed by an extra pronunciation file in the snapshot format."""

    def __init__(self, path: str | Path, name: str = "dictionary-engine"):
        self.name = name
        self._entries = load_pronunciation_file(str(path))

    def lookup(self, word: str):
        return self._entries.get(word)


class CommandEngine(G2PEngine):
    """Engine that shells out to a command printing spaced IPA for one word."""

    def __init__(self, argv: list[str], name: str = "command-engine", timeout: float = 10.0):
        self.name = name
        self.argv = list(argv)
        self.timeout = timeout

    def lookup(self, word: str):
        try:
            proc = subprocess.run(
                self.argv + [word], capture_output=True, text=True, timeout=self.timeout
            )
        except (OSError, subprocess.TimeoutExpired) as exc:
            log.warning("g2p command failed for %r: %s", word, exc)
            return None
        if proc.returncode != 0 or not proc.stdout.strip():
            return None
        phonemes, stresses = _parse_phoneme_field(proc.stdout.strip())
        return phonemes, _with_default_stress(phonemes, stresses)


@dataclass
class PhoneticsConfig:
    dictionary_path: Path = field(default_factory=default_dictionary_path)
    engine: G2PEngine | None = None
    # Which route wins when both the engine and the dictionary resolve a word.
    prefer: str = "dictionary"
    fallback_enabled: bool = True
    cache_enabled: bool = True


class PhonemeCache:
    """Append-only per-run cache with hit/miss counters; reads are lock-free."""

    def __init__(self) -> None:
        self.entries: dict[str, PhonemeSequence] = {}
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()

    def get(self, word: str) -> PhonemeSequence | None:
        seq = self.entries.get(word)
        if seq is None:
            self.misses += 1
        else:
            self.hits += 1
        return seq

    def store(self, word: str, seq: PhonemeSequence) -> None:
        with self._lock:
            self.entries.setdefault(word, seq)


class Phonetics:
    """Phonemization facade: engine/dictionary/fallback routing plus caching."""

    def __init__(self, config: PhoneticsConfig | None = None):
        self.config = config or PhoneticsConfig()
        self.cache = PhonemeCache()
        self._dictionary = load_pronunciation_file(str(self.config.dictionary_path))

    def phonemize(self, word: str) -> PhonemeSequence:
        """Resolve one normalized, non-empty word to its phoneme sequence."""
        if not word:
            raise UnresolvableWord("empty word")
        if self.config.cache_enabled:
            cached = self.cache.get(word)
            if cached is not None:
                return cached
        seq = self._resolve(word)
        if self.config.cache_enabled:
            self.cache.store(word, seq)
        return seq

    def _resolve(self, word: str) -> PhonemeSequence:
        routes = ["dictionary", "engine"]
        if self.config.prefer == "engine":
            routes.reverse()
        for route in routes:
            if route == "engine" and self.config.engine is not None:
                hit = self.config.engine.lookup(word)
                if hit is not None:
                    return PhonemeSequence(hit[0], hit[1], Source.ENGINE)
            elif route == "dictionary":
                hit = self._dictionary.get(word)
                if hit is not None:
                    return PhonemeSequence(hit[0], hit[1], Source.DICTIONARY)
        if self.config.fallback_enabled:
            return fallback_sequence(word)
        raise UnresolvableWord(word)

    def syllable_count_word(self, word: str) -> int:
        if not word:
            return 0
        return self.phonemize(word).syllable_count

    def syllable_count_line(self, line: str) -> int:
        return sum(self.syllable_count_word(w) for w in tokenize(line))

    def cache_stats(self) -> dict[str, int]:
        return {
            "entries": len(self.cache.entries),
            "hits": self.cache.hits,
            "misses": self.cache.misses,
        }
