"""Corpus ingestion, cleanup filters, and the by-song train/test split.

The corpus file format is one JSON record per line, UTF-8:

    {"id": ..., "artist": ..., "title": ..., "language_tag": "en"?, "verses": [[line, ...], ...]}

Filtering drops non-English songs, near-duplicate consecutive lines (gestalt
similarity strictly above the threshold), verses shorter than 50 characters,
and verses with fewer than 6 lines. Splitting partitions whole songs so no
song contributes examples to both sides.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from difflib import SequenceMatcher
from importlib import resources
from pathlib import Path

from .errors import EmptyCorpus, ParseError
from .phonetics import tokenize

SIMILARITY_THRESHOLD = 0.70
MIN_VERSE_CHARS = 50
MIN_VERSE_LINES = 6
STOPWORD_FLOOR = 0.15


@dataclass(frozen=True)
class Verse:
    lines: tuple[str, ...]

    @property
    def char_length(self) -> int:
        return sum(len(line) for line in self.lines)


@dataclass(frozen=True)
class Song:
    id: str
    artist: str
    title: str
    verses: tuple[Verse, ...]
    language_tag: str | None = None


@dataclass(frozen=True)
class Corpus:
    songs: tuple[Song, ...]

    def __len__(self) -> int:
        return len(self.songs)

    @property
    def n_verses(self) -> int:
        return sum(len(s.verses) for s in self.songs)

    def lines(self):
        for song in self.songs:
            for verse in song.verses:
                yield from verse.lines

    def song_ids(self) -> set[str]:
        return {s.id for s in self.songs}


@dataclass(frozen=True)
class SplitConfig:
    test_fraction: float = 0.1
    rng_seed: int = 0
    allow_artists: tuple[str, ...] = ()
    deny_artists: tuple[str, ...] = ()


@dataclass
class PreprocessStats:
    songs_in: int = 0
    songs_dropped_language: int = 0
    lines_deduped: int = 0
    verses_dropped_short: int = 0
    verses_dropped_few_lines: int = 0
    songs_dropped_empty: int = 0
    songs_out: int = 0
    verses_out: int = 0

    def to_dict(self) -> dict[str, int]:
        return dict(vars(self))


def _clean_line(raw: str) -> str:
    # Collapse runs of whitespace (tabs included) so lines are TSV-safe.
    return " ".join(str(raw).split())


def ingest(path: str | Path) -> Corpus:
    """Parse a corpus file; malformed records raise ParseError with the line number."""
    songs: list[Song] = []
    seen_ids: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.strip()
            if not raw:
                continue
            try:
                record = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {lineno}: invalid JSON ({exc})") from exc
            if not isinstance(record, dict):
                raise ParseError(f"line {lineno}: record is not an object")
            for key in ("id", "artist", "title", "verses"):
                if key not in record:
                    raise ParseError(f"line {lineno}: missing field {key!r}")
            song_id = str(record["id"])
            if song_id in seen_ids:
                raise ParseError(f"line {lineno}: duplicate song id {song_id!r}")
            seen_ids.add(song_id)
            verses_raw = record["verses"]
            if not isinstance(verses_raw, list) or not all(
                isinstance(v, list) for v in verses_raw
            ):
                raise ParseError(f"line {lineno}: 'verses' must be a list of line lists")
            verses = tuple(
                Verse(tuple(_clean_line(line) for line in v)) for v in verses_raw
            )
            songs.append(
                Song(
                    id=song_id,
                    artist=str(record["artist"]),
                    title=str(record["title"]),
                    verses=verses,
                    language_tag=record.get("language_tag"),
                )
            )
    if not songs:
        raise EmptyCorpus(str(path))
    return Corpus(tuple(songs))


def write_corpus(corpus: Corpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for song in corpus.songs:
            record = {
                "id": song.id,
                "artist": song.artist,
                "title": song.title,
                "verses": [list(v.lines) for v in song.verses],
            }
            if song.language_tag is not None:
                record["language_tag"] = song.language_tag
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def gestalt_similarity(a: str, b: str) -> float:
    """Ratcliff/Obershelp ratio 2M/T; 1.0 when both strings are empty."""
    return SequenceMatcher(None, a, b, autojunk=False).ratio()


def dedup_consecutive(verse: Verse, threshold: float = SIMILARITY_THRESHOLD) -> Verse:
    """Drop lines too similar (strictly above threshold) to the last retained line."""
    kept: list[str] = []
    for line in verse.lines:
        if kept and gestalt_similarity(kept[-1], line) > threshold:
            continue
        kept.append(line)
    return Verse(tuple(kept))


def filter_verses(
    corpus: Corpus,
    min_chars: int = MIN_VERSE_CHARS,
    min_lines: int = MIN_VERSE_LINES,
    stats: PreprocessStats | None = None,
) -> Corpus:
    """Keep verses with >= min_lines lines and >= min_chars characters; drop emptied songs."""
    songs = []
    for song in corpus.songs:
        kept = []
        for verse in song.verses:
            if len(verse.lines) < min_lines:
                if stats:
                    stats.verses_dropped_few_lines += 1
                continue
            if verse.char_length < min_chars:
                if stats:
                    stats.verses_dropped_short += 1
                continue
            kept.append(verse)
        if kept:
            songs.append(replace(song, verses=tuple(kept)))
        elif stats:
            stats.songs_dropped_empty += 1
    return Corpus(tuple(songs))


def _load_stopwords() -> frozenset[str]:
    path = resources.files("lyricsmith").joinpath("data/stopwords_en.txt")
    words = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line)
    return frozenset(words)


_STOPWORDS: frozenset[str] | None = None


def english_stopword_ratio(song: Song, stopwords: frozenset[str] | None = None) -> float:
    global _STOPWORDS
    if stopwords is None:
        if _STOPWORDS is None:
            _STOPWORDS = _load_stopwords()
        stopwords = _STOPWORDS
    tokens = [t for verse in song.verses for line in verse.lines for t in tokenize(line)]
    if not tokens:
        return 0.0
    return sum(1 for t in tokens if t in stopwords) / len(tokens)


def filter_language(
    corpus: Corpus,
    floor: float = STOPWORD_FLOOR,
    stats: PreprocessStats | None = None,
) -> Corpus:
    """Keep songs tagged English, or untagged songs that read as English.

    Untagged songs pass when their stopword-hit ratio exceeds `floor`.
    """
    songs = []
    for song in corpus.songs:
        if song.language_tag is not None:
            keep = song.language_tag.lower().startswith("en")
        else:
            keep = english_stopword_ratio(song) > floor
        if keep:
            songs.append(song)
        elif stats:
            stats.songs_dropped_language += 1
    return Corpus(tuple(songs))


def preprocess(
    corpus: Corpus,
    similarity_threshold: float = SIMILARITY_THRESHOLD,
    min_chars: int = MIN_VERSE_CHARS,
    min_lines: int = MIN_VERSE_LINES,
    stopword_floor: float = STOPWORD_FLOOR,
) -> tuple[Corpus, PreprocessStats]:
    """Run the full cleanup pipeline: language, dedup, then verse filters."""
    stats = PreprocessStats(songs_in=len(corpus))
    corpus = filter_language(corpus, floor=stopword_floor, stats=stats)
    deduped_songs = []
    for song in corpus.songs:
        verses = []
        for verse in song.verses:
            deduped = dedup_consecutive(verse, threshold=similarity_threshold)
            stats.lines_deduped += len(verse.lines) - len(deduped.lines)
            verses.append(deduped)
        deduped_songs.append(replace(song, verses=tuple(verses)))
    corpus = filter_verses(
        Corpus(tuple(deduped_songs)), min_chars=min_chars, min_lines=min_lines, stats=stats
    )
    stats.songs_out = len(corpus)
    stats.verses_out = corpus.n_verses
    return corpus, stats


def split_by_song(corpus: Corpus, cfg: SplitConfig) -> tuple[Corpus, Corpus]:
    """Partition songs into (train, test); deterministic for a fixed seed.

    Deny-listed artists are removed first; a non-empty allow list restricts the
    corpus to exactly those artists (the deny list wins on conflict).
    """
    songs = [s for s in corpus.songs if s.artist not in set(cfg.deny_artists)]
    if cfg.allow_artists:
        allowed = set(cfg.allow_artists) - set(cfg.deny_artists)
        songs = [s for s in songs if s.artist in allowed]
    if not songs:
        raise EmptyCorpus("no songs left to split")
    if not 0 < cfg.test_fraction < 1:
        raise ValueError("test_fraction must be in (0, 1)")
    ids = sorted(s.id for s in songs)
    rng = random.Random(cfg.rng_seed)
    rng.shuffle(ids)
    n_test = min(round(cfg.test_fraction * len(ids)), len(ids) - 1)
    test_ids = set(ids[:n_test])
    train = Corpus(tuple(s for s in songs if s.id not in test_ids))
    test = Corpus(tuple(s for s in songs if s.id in test_ids))
    return train, test
