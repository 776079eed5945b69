"""Perfect / near rhyme classification and frequency-ranked rhyme lookup.

A word's rhyme key is the phoneme suffix from its last stressed nucleus to the
end. Two words rhyme perfectly when their keys are identical. Near rhyme keeps
the part of the key that carries when sung: the vowel sequence plus the final
consonant cluster, compared under a configurable equivalence table (vowel
near-classes, consonant pairs such as s~z and n~ŋ, and codas that may drop).
Medial consonants between nuclei are ignored, which is what lets pairs like
"mobile" / "local" count as near rhymes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from .errors import NoNucleus, UnknownWord, UnresolvableWord
from .phonetics import PhonemeSequence, Phonetics, is_nucleus, normalize_token, tokenize

# Separates the nucleus part from the coda part inside a canonical key.
_KEY_SEP = "/"


class RhymeClass(Enum):
    PERFECT = "perfect"
    NEAR = "near"
    NONE = "none"

    @property
    def rank(self) -> int:
        return {"perfect": 2, "near": 1, "none": 0}[self.value]


@dataclass(frozen=True)
class EquivalenceTable:
    """Symbol-equivalence configuration for near-rhyme comparison."""

    vowel_rep: dict[str, str] = field(default_factory=dict)
    consonant_rep: dict[str, str] = field(default_factory=dict)
    deletable_codas: frozenset[str] = frozenset()
    version: str = "custom"

    @staticmethod
    def from_classes(
        vowel_classes: list[list[str]],
        consonant_pairs: list[list[str]],
        deletable_codas: list[str],
        version: str = "custom",
    ) -> "EquivalenceTable":
        vowel_rep = {sym: group[0] for group in vowel_classes for sym in group}
        cons_rep = {sym: group[0] for group in consonant_pairs for sym in group}
        deletable = frozenset(cons_rep.get(sym, sym) for sym in deletable_codas)
        return EquivalenceTable(vowel_rep, cons_rep, deletable, version)

    @classmethod
    def load(cls, path: str | Path) -> "EquivalenceTable":
        sections: dict[str, list[list[str]]] = {
            "vowel_classes": [],
            "consonant_pairs": [],
            "deletable_codas": [],
        }
        current: list[list[str]] | None = None
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                current = sections[line[1:-1]]
                continue
            if current is None:
                raise ValueError(f"symbols outside any section in {path}: {line!r}")
            current.append(line.split())
        return cls.from_classes(
            sections["vowel_classes"],
            sections["consonant_pairs"],
            [sym for group in sections["deletable_codas"] for sym in group],
            version=Path(path).name,
        )


def default_table_path() -> Path:
    return Path(str(resources.files("lyricsmith").joinpath("data/near_equivalence.txt")))


def rhyme_key(seq: PhonemeSequence) -> tuple[str, ...]:
    """Suffix from the last stressed nucleus (or last nucleus) to the word end."""
    nuclei = seq.nucleus_indices()
    if not nuclei:
        raise NoNucleus(" ".join(seq.phonemes))
    stressed = [i for i in seq.stress_indices if i in nuclei]
    anchor = stressed[-1] if stressed else nuclei[-1]
    return seq.phonemes[anchor:]


def canonical_key(key: tuple[str, ...], table: EquivalenceTable) -> tuple[str, ...]:
    """Reduce a rhyme key to its sung skeleton under the equivalence table.

    Keeps the nucleus sequence (mapped to vowel-class representatives) and the
    final consonant cluster (mapped to consonant-class representatives, with
    trailing deletable codas stripped). Consonants between nuclei are dropped.
    """
    nuclei = [table.vowel_rep.get(p, p) for p in key if is_nucleus(p)]
    coda: list[str] = []
    for p in reversed(key):
        if is_nucleus(p):
            break
        coda.append(table.consonant_rep.get(p, p))
    coda.reverse()
    while coda and coda[-1] in table.deletable_codas:
        coda.pop()
    return tuple(nuclei) + (_KEY_SEP,) + tuple(coda)


class Rhymer:
    """Word-level rhyme classification bound to one phonetics + table config."""

    def __init__(self, phonetics: Phonetics, table: EquivalenceTable | None = None):
        self.phonetics = phonetics
        self.table = table if table is not None else EquivalenceTable.load(default_table_path())

    def key(self, word: str) -> tuple[str, ...]:
        return rhyme_key(self.phonetics.phonemize(word))

    def canonical(self, word: str) -> tuple[str, ...]:
        return canonical_key(self.key(word), self.table)

    def classify(self, a: str, b: str) -> RhymeClass:
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return RhymeClass.PERFECT
        if canonical_key(ka, self.table) == canonical_key(kb, self.table):
            return RhymeClass.NEAR
        return RhymeClass.NONE

    def rhymes(self, a: str, b: str) -> bool:
        """True for Near or Perfect; unphonemizable / nucleus-free words never rhyme."""
        try:
            return self.classify(a, b) is not RhymeClass.NONE
        except (NoNucleus, UnresolvableWord):
            return False


class RhymeDictionary:
    """Corpus words bucketed by canonical key, with occurrence frequencies.

    Bucket-mates are exactly the Near-or-better rhymes of each other, so
    lookups are a single dict access.
    """

    def __init__(self, rhymer: Rhymer):
        self.rhymer = rhymer
        self.buckets: dict[tuple[str, ...], Counter[str]] = {}
        self.skipped_words = 0

    def add_word(self, word: str, count: int = 1) -> None:
        try:
            key = self.rhymer.canonical(word)
        except (NoNucleus, UnresolvableWord):
            self.skipped_words += 1
            return
        self.buckets.setdefault(key, Counter())[word] += count

    def add_line(self, line: str) -> None:
        for word in tokenize(line):
            self.add_word(word)

    def top_rhymes(self, word: str, k: int = 8) -> list[str]:
        """Up to k rhymes of `word`, most frequent first, ties alphabetical."""
        if k < 1:
            raise ValueError("k must be >= 1")
        return [w for w, _ in self.top_rhymes_with_frequencies(word, k)]

    def top_rhymes_with_frequencies(self, word: str, k: int = 8) -> list[tuple[str, int]]:
        word = normalize_token(word)
        try:
            key = self.rhymer.canonical(word)
        except (NoNucleus, UnresolvableWord) as exc:
            raise UnknownWord(word) from exc
        bucket = self.buckets.get(key, Counter())
        mates = [(w, n) for w, n in bucket.items() if w != word]
        mates.sort(key=lambda item: (-item[1], item[0]))
        return mates[:k]

    def bucket_words(self, key: tuple[str, ...]) -> Counter[str]:
        return self.buckets.get(key, Counter())

    def buckets_with_at_least(self, n: int) -> list[tuple[str, ...]]:
        return sorted(key for key, bucket in self.buckets.items() if len(bucket) >= n)

    def stats(self) -> dict[str, int]:
        return {
            "buckets": len(self.buckets),
            "words": sum(len(b) for b in self.buckets.values()),
            "skipped_words": self.skipped_words,
        }


def build_rhyme_dictionary(lines, rhymer: Rhymer) -> RhymeDictionary:
    """Bucket every distinct normalized word of `lines` by its canonical key."""
    rdict = RhymeDictionary(rhymer)
    for line in lines:
        rdict.add_line(line)
    return rdict
