#!/usr/bin/env python3
"""Generate the synthetic public-domain lyric corpus used by the test suite.

The corpus is built from original template lines so it carries no copyrighted
lyrics. It is shaped to exercise every preprocessing rule: it contains exactly
50 verses, including a 5-line verse, a sub-50-character verse, verses with
near-duplicate consecutive lines, a Spanish-tagged song, an untagged Spanish
song, and an untagged English song. Every English content word is covered by
the bundled pronunciation snapshot (asserted at generation time).

Run from the repo root:

    python tools/make_synthetic_corpus.py
"""

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
OUT_PATH = ROOT / "tests" / "data" / "synthetic_corpus.jsonl"
PRON_PATH = ROOT / "src" / "lyricsmith" / "data" / "pronunciations.tsv"

# End-word pools grouped by rhyme family.
FAMILIES = {
    "ell": ["bell", "tell", "well", "fell", "sell", "shell", "spell", "swell", "yell", "farewell", "hotel"],
    "at": ["cat", "hat", "bat", "flat", "sat", "mat", "chat"],
    "ight": ["night", "light", "bright", "sight", "right", "tight", "flight", "tonight", "white"],
    "eye": ["sky", "fly", "high", "why", "cry", "goodbye", "mine"],
    "ay": ["day", "way", "say", "play", "stay", "away", "today", "gray", "okay"],
    "oo": ["you", "true", "blue", "new", "too", "through", "few", "grew", "view"],
    "own": ["home", "alone", "stone", "phone", "bone", "known", "shown", "roam", "grown", "zone"],
    "ain": ["rain", "pain", "chain", "name", "same", "game", "flame", "shame", "train", "remain", "insane"],
    "art": ["heart", "start", "part", "apart", "smart", "star", "far", "car", "guitar", "scar"],
    "ing": ["sing", "thing", "ring", "king", "bring", "wing", "spring", "begin", "within", "skin", "win"],
    "ine": ["time", "line", "shine", "sign", "fine", "mind", "find", "blind", "behind", "climb", "divine"],
    "eet": ["sweet", "street", "beat", "heat", "meet", "feet", "repeat", "complete", "free", "sea", "three", "key"],
    "old": ["gold", "cold", "hold", "old", "told", "bold", "soul", "whole", "roll", "control"],
    "all": ["all", "fall", "call", "small", "wall", "tall"],
    "ound": ["sound", "found", "ground", "around", "down", "town", "crown"],
    "ire": ["fire", "desire", "higher", "wire", "liar", "entire"],
    "ever": ["never", "forever", "together", "whether", "better", "letter", "remember"],
    "oh": ["go", "know", "show", "low", "slow", "grow", "ago", "though", "glow", "flow", "hello", "radio"],
    "uing": ["doing", "ruin", "losing", "moving", "choosing", "using", "cruising"],
    "uv": ["love", "above", "enough", "us", "trust", "touch"],
    "un": ["run", "sun", "done", "one", "fun", "come", "some", "drum"],
}

STEMS = [
    "we were dancing in the",
    "i still remember all the",
    "she was singing about the",
    "we keep driving through the",
    "i was thinking of the",
    "you were waiting by the",
    "he kept calling for the",
    "they were walking to the",
    "i can feel it in the",
    "we could be there by the",
    "the radio was playing our",
    "and the night was full of",
    "i gave a letter to the",
    "we found a way beyond the",
    "my heart keeps turning to the",
    "the summer took us to the",
    "somebody told me about the",
    "i never wanna lose the",
    "we sing all night about the",
    "you make me think about the",
    "my heart is beating like a",
    "i see your shadow on the",
    "the morning sun came over the",
    "nobody knows the story of the",
]

SPANISH_LINES = [
    "el corazón canta en la noche",
    "bailamos bajo las estrellas",
    "la luna brilla sobre el mar",
    "siempre recuerdo tu voz",
    "el río corre hacia el mar",
    "cantamos hasta el amanecer",
    "tus ojos son como el sol",
    "caminamos por la ciudad dormida",
]

MAIN_SONGS = [
    ("Aurora Lane", "Bells of the Evening", "en"),
    ("Aurora Lane", "Copper Sky", "en"),
    ("The Copper Foxes", "Harbor Lights", "en"),
    ("The Copper Foxes", "Night Train South", "en"),
    ("Midnight Harbor", "Paper Crown", "en"),
    ("Midnight Harbor", "Glass River", "en-US"),
    ("Violet Atlas", "Second Summer", "en"),
    ("Violet Atlas", "Static and Stone", "en"),
    ("Static Nine", "Wrong Side of Town", "en"),
    ("June Everly", "Letters Home", "en"),
    ("June Everly", "Golden Hour", "en"),
]


def pick_stem(rng, last_stem):
    stem = rng.choice(STEMS)
    while stem == last_stem:
        stem = rng.choice(STEMS)
    return stem


def rhyming_verse(rng, n_lines=6):
    """Couplet-rhymed verse: AABBCC... with families drawn per couplet."""
    lines = []
    last_stem = None
    while len(lines) < n_lines:
        family = rng.choice(sorted(FAMILIES))
        ends = rng.sample(FAMILIES[family], 2)
        for end in ends:
            stem = pick_stem(rng, last_stem)
            last_stem = stem
            lines.append(f"{stem} {end}")
    return lines[:n_lines]


def free_verse(rng, n_lines=6):
    """Verse whose line endings cycle through distinct families."""
    families = rng.sample(sorted(FAMILIES), n_lines)
    lines = []
    last_stem = None
    for family in families:
        stem = pick_stem(rng, last_stem)
        last_stem = stem
        lines.append(f"{stem} {rng.choice(FAMILIES[family])}")
    return lines


def make_songs():
    rng = random.Random(20250810)
    songs = []
    for idx, (artist, title, tag) in enumerate(MAIN_SONGS):
        verses = []
        for v in range(3 if idx >= 9 else 4):
            maker = rhyming_verse if (v + idx) % 5 < 2 else free_verse
            verses.append(maker(rng, n_lines=rng.choice([6, 7, 8])))
        songs.append(
            {
                "id": f"song-{idx + 1:02d}",
                "artist": artist,
                "title": title,
                "language_tag": tag,
                "verses": verses,
            }
        )

    # Filter-noise song: one verse per drop rule plus one that survives dedup.
    noise_verses = [
        # 5 lines: dropped by the line-count rule.
        free_verse(rng, n_lines=5),
        # 6 lines but fewer than 50 characters: dropped by the length rule.
        ["la la", "oh no", "hey hey", "so low", "my my", "go go"],
        # Near-duplicate consecutive lines; survives dedup with 7 lines.
        free_verse(rng, n_lines=4)[:2]
        + ["we sing la la la la", "we sing la la la na"]
        + free_verse(rng, n_lines=4)[:3],
        # Dedup shrinks it from 7 lines to 5: dropped afterwards.
        [
            "the radio was playing our song",
            "the radio was playing our songs",
            "the radio was playing our song now",
            "i gave a letter to the sea",
            "we found a way beyond the wall",
            "somebody told me about the rain",
            "somebody told me about the train",
        ],
    ]
    songs.append(
        {
            "id": "song-noise",
            "artist": "Aurora Lane",
            "title": "Scraps and Sketches",
            "language_tag": "en",
            "verses": noise_verses,
        }
    )

    songs.append(
        {
            "id": "song-es",
            "artist": "Los Faros",
            "title": "Canción del Puerto",
            "language_tag": "es",
            "verses": [SPANISH_LINES[:6], SPANISH_LINES[2:]],
        }
    )
    # Untagged Spanish: the stopword detector must drop it.
    songs.append(
        {
            "id": "song-es-untagged",
            "artist": "Los Faros",
            "title": "Sin Etiqueta",
            "verses": [SPANISH_LINES[1:7]],
        }
    )
    # Untagged English: the stopword detector must keep it.
    songs.append(
        {
            "id": "song-en-untagged",
            "artist": "June Everly",
            "title": "Unlabeled Demo",
            "verses": [rhyming_verse(rng, n_lines=6)],
        }
    )
    return songs


def check_vocabulary(songs):
    known = set()
    for line in PRON_PATH.read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            known.add(line.split("\t")[0])
    missing = set()
    for song in songs:
        if song.get("language_tag", "en") == "es" or song["id"] == "song-es-untagged":
            continue
        for verse in song["verses"]:
            for line in verse:
                for token in line.lower().split():
                    if token not in known:
                        missing.add(token)
    if missing:
        raise SystemExit(f"words missing from pronunciation snapshot: {sorted(missing)}")


def main():
    songs = make_songs()
    n_verses = sum(len(s["verses"]) for s in songs)
    assert n_verses == 50, f"expected 50 verses, got {n_verses}"
    check_vocabulary(songs)
    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    with OUT_PATH.open("w", encoding="utf-8") as fh:
        for song in songs:
            fh.write(json.dumps(song, ensure_ascii=False) + "\n")
    print(f"wrote {len(songs)} songs / {n_verses} verses to {OUT_PATH}")


if __name__ == "__main__":
    main()
