"""Tagged text-to-text training examples and the balanced task mixture.

Every example renders to a single input string whose grammar is pinned by
`render_input` / `parse_input` (they are inverses):

    finish lines: <line> [LINE] <line> ...
    finish lines rhyme: ... its [RHYME] true [LINE] ... of [RHYME] you syllable count: 7
    finish lines ending: <lines> syllable count: <n> ending word: <w>
    rhyme list: w1 [RHYME] w2 [RHYME] w3 [RHYME] w4 [RHYME] w5

Datasets are stored as `rendered_input<TAB>target` rows, one per line.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

from .corpus import Corpus, Verse
from .errors import InsufficientRhymes, MalformedRow
from .phonetics import Phonetics, tokenize
from .rhyme import RhymeDictionary, Rhymer, build_rhyme_dictionary

LINE_TOKEN = "[LINE]"
RHYME_TOKEN = "[RHYME]"
SYLLABLE_TAG = "syllable count:"
ENDING_TAG = "ending word:"

MAX_INPUT_LINES = 4
RHYME_LIST_WORDS = 5
DEFAULT_RHYME_LIST_SIZE = 20000


class Task(Enum):
    CONTROL = "control"
    RHYME = "rhyme"
    ENDING = "ending"
    RHYME_LIST = "rhyme_list"

    @property
    def prefix(self) -> str:
        return {
            "control": "finish lines:",
            "rhyme": "finish lines rhyme:",
            "ending": "finish lines ending:",
            "rhyme_list": "rhyme list:",
        }[self.value]


@dataclass(frozen=True)
class ExternalModelProfile:
    """Reference constants for the intended remote text-to-text model."""

    parameter_count: int = 220_000_000
    finetune_steps: int = 12_000
    learning_rate: float = 0.003
    batch_size: int = 128
    max_seq_len: int = 128


REFERENCE_MODEL_PROFILE = ExternalModelProfile()


@dataclass(frozen=True)
class TrainingExample:
    task: Task
    input_lines: tuple[str, ...]
    target: str
    rhyme_flags: tuple[bool, ...] = ()
    syllable_tag: int | None = None
    ending_word_tag: str | None = None
    rhyme_list_words: tuple[str, ...] | None = None
    song_id: str = ""

    def __post_init__(self):
        if self.task is Task.RHYME_LIST:
            if self.input_lines:
                raise ValueError("rhyme-list examples take no input lines")
        else:
            if not 1 <= len(self.input_lines) <= MAX_INPUT_LINES:
                raise ValueError(
                    f"{self.task.value} examples take 1-{MAX_INPUT_LINES} input lines"
                )
        if not self.rhyme_flags:
            object.__setattr__(self, "rhyme_flags", (False,) * len(self.input_lines))
        if len(self.rhyme_flags) != len(self.input_lines):
            raise ValueError("rhyme_flags length must match input_lines")
        if self.task is not Task.RHYME and any(self.rhyme_flags):
            raise ValueError(f"{self.task.value} examples cannot carry rhyme flags")
        if self.task is Task.RHYME and self.ending_word_tag is not None:
            raise ValueError("rhyme examples never receive the ending-word tag")


def end_word(line: str) -> str:
    """Normalized final word of a line; empty string when the line has none."""
    tokens = tokenize(line)
    return tokens[-1] if tokens else ""


def make_finish_lines_examples(
    verse: Verse, rng: random.Random, song_id: str = ""
) -> list[TrainingExample]:
    """One example per target line from the 2nd line on, with a random-size window.

    The window covers the 1 to min(4, available) lines immediately before the
    target; lines are never skipped and windows never cross verse boundaries.
    """
    examples = []
    lines = verse.lines
    for i in range(1, len(lines)):
        r = rng.randint(1, min(MAX_INPUT_LINES, i))
        examples.append(
            TrainingExample(
                task=Task.CONTROL,
                input_lines=tuple(lines[i - r : i]),
                target=lines[i],
                song_id=song_id,
            )
        )
    return examples


def annotate_rhyme(example: TrainingExample, rhymer: Rhymer) -> TrainingExample | None:
    """Flag input lines whose end word rhymes with the target's end word.

    Returns None when no line qualifies, filtering the example out of the
    rhyme task.
    """
    target_end = end_word(example.target)
    if not target_end:
        return None
    flags = []
    for line in example.input_lines:
        w = end_word(line)
        flags.append(bool(w) and rhymer.rhymes(w, target_end))
    if not any(flags):
        return None
    return replace(example, task=Task.RHYME, rhyme_flags=tuple(flags))


def append_syllable_tag(example: TrainingExample, phonetics: Phonetics) -> TrainingExample:
    return replace(example, syllable_tag=phonetics.syllable_count_line(example.target))


def append_ending_word_tag(example: TrainingExample) -> TrainingExample:
    if example.task is Task.RHYME:
        raise ValueError("rhyme examples never receive the ending-word tag")
    w = end_word(example.target)
    if not w:
        raise ValueError("target line has no final word")
    return replace(example, task=Task.ENDING, ending_word_tag=w)


def make_rhyme_list_examples(
    rdict: RhymeDictionary, n: int = DEFAULT_RHYME_LIST_SIZE, rng: random.Random | None = None
) -> list[TrainingExample]:
    """Sample n lists of 5 mutually rhyming words plus a 6th as the target."""
    rng = rng or random.Random(0)
    eligible = rdict.buckets_with_at_least(RHYME_LIST_WORDS + 1)
    if n > 0 and not eligible:
        raise InsufficientRhymes(
            f"no rhyme bucket has {RHYME_LIST_WORDS + 1} distinct words"
        )
    examples = []
    for _ in range(n):
        key = rng.choice(eligible)
        words = rng.sample(sorted(rdict.bucket_words(key)), RHYME_LIST_WORDS + 1)
        examples.append(
            TrainingExample(
                task=Task.RHYME_LIST,
                input_lines=(),
                rhyme_list_words=tuple(words[:RHYME_LIST_WORDS]),
                target=words[RHYME_LIST_WORDS],
            )
        )
    return examples


@dataclass(frozen=True)
class MixtureOptions:
    seed: int = 0
    include_rhyme_list: bool = False
    rhyme_list_size: int = DEFAULT_RHYME_LIST_SIZE
    # Whether plain control builds also carry syllable tags.
    control_syllable_tags: bool = False


@dataclass
class TaskMixture:
    tasks: dict[str, list[TrainingExample]]
    weights: dict[str, float]
    stats: dict[str, float] = field(default_factory=dict)


def build_control(
    corpus: Corpus,
    phonetics: Phonetics,
    opts: MixtureOptions = MixtureOptions(),
) -> list[TrainingExample]:
    """The unbalanced single-task dataset: plain verse continuation."""
    rng = random.Random(opts.seed)
    examples = []
    for song in corpus.songs:
        for verse in song.verses:
            examples.extend(make_finish_lines_examples(verse, rng, song.id))
    if opts.control_syllable_tags:
        examples = [append_syllable_tag(ex, phonetics) for ex in examples]
    return examples


def build_rhyme_dataset(
    corpus: Corpus,
    phonetics: Phonetics,
    rhymer: Rhymer,
    opts: MixtureOptions = MixtureOptions(),
) -> list[TrainingExample]:
    """Only the examples whose inputs rhyme with the target, flagged and tagged."""
    examples = []
    for ex in build_control(corpus, phonetics, MixtureOptions(seed=opts.seed)):
        rhymed = annotate_rhyme(append_syllable_tag(ex, phonetics), rhymer)
        if rhymed is not None:
            examples.append(rhymed)
    return examples


def build_ending_dataset(
    corpus: Corpus,
    phonetics: Phonetics,
    opts: MixtureOptions = MixtureOptions(),
) -> list[TrainingExample]:
    """Every example, with syllable and ending-word tags appended."""
    examples = []
    for ex in build_control(corpus, phonetics, MixtureOptions(seed=opts.seed)):
        if end_word(ex.target):
            examples.append(append_ending_word_tag(append_syllable_tag(ex, phonetics)))
    return examples


def build_combined(
    corpus: Corpus,
    phonetics: Phonetics,
    rhymer: Rhymer,
    opts: MixtureOptions = MixtureOptions(),
) -> TaskMixture:
    """Split examples into rhyme / ending tasks, balance them, and weight equally.

    Examples whose inputs rhyme with the target become the rhyme task; the
    rest get ending-word tags and are randomly cut to the rhyme set's size.
    All examples carry syllable tags. An optional third task lists rhyming
    words drawn from the corpus rhyme dictionary.
    """
    rng = random.Random(opts.seed)
    control = []
    for song in corpus.songs:
        for verse in song.verses:
            control.extend(make_finish_lines_examples(verse, rng, song.id))

    rhyme_set: list[TrainingExample] = []
    ending_pool: list[TrainingExample] = []
    for ex in control:
        tagged = append_syllable_tag(ex, phonetics)
        rhymed = annotate_rhyme(tagged, rhymer)
        if rhymed is not None:
            rhyme_set.append(rhymed)
        elif end_word(ex.target):
            ending_pool.append(append_ending_word_tag(tagged))

    size = min(len(rhyme_set), len(ending_pool))
    if len(ending_pool) > size:
        keep = sorted(rng.sample(range(len(ending_pool)), size))
        ending_set = [ending_pool[i] for i in keep]
    else:
        ending_set = ending_pool
    rhyme_set = rhyme_set[:size]

    tasks = {"rhyme": rhyme_set, "ending": ending_set}
    stats = {
        "control_examples": float(len(control)),
        "rhyme_fraction": len(rhyme_set) / len(control) if control else 0.0,
    }
    if opts.include_rhyme_list:
        rdict = build_rhyme_dictionary(corpus.lines(), rhymer)
        tasks["rhyme_list"] = make_rhyme_list_examples(rdict, opts.rhyme_list_size, rng)
    weight = 1.0 / len(tasks)
    return TaskMixture(tasks=tasks, weights={name: weight for name in tasks}, stats=stats)


def _render_line(line: str, flagged: bool) -> str:
    if not flagged:
        return line
    head, sep, last = line.rpartition(" ")
    if not sep:
        return f"{RHYME_TOKEN} {line}"
    return f"{head} {RHYME_TOKEN} {last}"


def render_input(example: TrainingExample) -> str:
    """Canonical input-string serialization of an example (target excluded)."""
    if example.task is Task.RHYME_LIST:
        body = f" {RHYME_TOKEN} ".join(example.rhyme_list_words or ())
        return f"{Task.RHYME_LIST.prefix} {body}"
    flags = example.rhyme_flags or (False,) * len(example.input_lines)
    body = f" {LINE_TOKEN} ".join(
        _render_line(line, flag) for line, flag in zip(example.input_lines, flags)
    )
    text = f"{example.task.prefix} {body}"
    if example.syllable_tag is not None:
        text += f" {SYLLABLE_TAG} {example.syllable_tag}"
    if example.ending_word_tag is not None:
        text += f" {ENDING_TAG} {example.ending_word_tag}"
    return text


def _parse_line(rendered: str) -> tuple[str, bool]:
    tokens = rendered.split(" ")
    if len(tokens) >= 2 and tokens[-2] == RHYME_TOKEN:
        return " ".join(tokens[:-2] + tokens[-1:]), True
    return rendered, False


def parse_input(text: str) -> TrainingExample:
    """Invert render_input; raises ValueError on text outside the grammar."""
    task = None
    for candidate in sorted(Task, key=lambda t: -len(t.prefix)):
        if text.startswith(candidate.prefix + " "):
            task = candidate
            break
    if task is None:
        raise ValueError(f"no task prefix in {text!r}")
    body = text[len(task.prefix) + 1 :]

    if task is Task.RHYME_LIST:
        words = body.split(f" {RHYME_TOKEN} ")
        if len(words) != RHYME_LIST_WORDS or not all(words):
            raise ValueError(f"rhyme list must have exactly {RHYME_LIST_WORDS} words")
        return TrainingExample(
            task=task, input_lines=(), rhyme_list_words=tuple(words), target=""
        )

    ending_word_tag = None
    if f" {ENDING_TAG} " in body:
        body, _, ending_word_tag = body.rpartition(f" {ENDING_TAG} ")
    syllable_tag = None
    if f" {SYLLABLE_TAG} " in body:
        body, _, count = body.rpartition(f" {SYLLABLE_TAG} ")
        if not count.isdigit():
            raise ValueError(f"non-numeric syllable tag {count!r}")
        syllable_tag = int(count)

    lines, flags = [], []
    for rendered in body.split(f" {LINE_TOKEN} "):
        line, flag = _parse_line(rendered)
        lines.append(line)
        flags.append(flag)
    return TrainingExample(
        task=task,
        input_lines=tuple(lines),
        rhyme_flags=tuple(flags) if task is Task.RHYME else (False,) * len(lines),
        syllable_tag=syllable_tag,
        ending_word_tag=ending_word_tag,
        target="",
    )


def serialize(examples, path: str | Path) -> None:
    """Write examples as `rendered_input<TAB>target` rows."""
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            rendered = render_input(ex)
            if "\t" in rendered or "\t" in ex.target:
                raise MalformedRow(f"tab inside example text: {rendered!r}")
            fh.write(f"{rendered}\t{ex.target}\n")


def read_rows(path: str | Path) -> list[tuple[str, str]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.rstrip("\n")
            if not raw:
                continue
            fields = raw.split("\t")
            if len(fields) != 2:
                raise MalformedRow(f"line {lineno}: expected 2 tab-separated fields")
            rows.append((fields[0], fields[1]))
    return rows


def deserialize(path: str | Path) -> list[TrainingExample]:
    """Read a dataset TSV back into examples (song ids are not stored)."""
    examples = []
    for lineno, (rendered, target) in enumerate(read_rows(path), start=1):
        try:
            ex = parse_input(rendered)
        except ValueError as exc:
            raise MalformedRow(f"line {lineno}: {exc}") from exc
        examples.append(replace(ex, target=target))
    return examples


def write_mixture(mixture: TaskMixture, out_dir: str | Path, stem: str = "dataset") -> Path:
    """Write one TSV per task plus a manifest; returns the manifest path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for name in sorted(mixture.tasks):
        path = out_dir / f"{stem}.{name}.tsv"
        serialize(mixture.tasks[name], path)
        entries.append(
            {
                "name": name,
                "path": path.name,
                "examples": len(mixture.tasks[name]),
                "weight": mixture.weights[name],
            }
        )
    manifest_path = out_dir / f"{stem}.manifest.json"
    manifest = {"tasks": entries, "stats": mixture.stats}
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest_path


def validate_example(
    example: TrainingExample, phonetics: Phonetics, rhymer: Rhymer
) -> list[str]:
    """All invariant violations of one example (empty list when it is clean)."""
    problems = []
    ex = example

    if ex.task is Task.RHYME_LIST:
        words = ex.rhyme_list_words or ()
        if len(words) != RHYME_LIST_WORDS:
            problems.append(f"rhyme list has {len(words)} words")
        for w in words:
            if not rhymer.rhymes(w, ex.target):
                problems.append(f"list word {w!r} does not rhyme with target {ex.target!r}")
    else:
        if not 1 <= len(ex.input_lines) <= MAX_INPUT_LINES:
            problems.append(f"{len(ex.input_lines)} input lines")
        if not ex.target:
            problems.append("empty target")

    if ex.task is Task.RHYME:
        if not any(ex.rhyme_flags):
            problems.append("rhyme example with no flagged line")
        target_end = end_word(ex.target)
        for line, flag in zip(ex.input_lines, ex.rhyme_flags):
            if flag and not rhymer.rhymes(end_word(line), target_end):
                problems.append(f"flagged end word {end_word(line)!r} does not rhyme")

    if ex.task is Task.ENDING and ex.ending_word_tag != end_word(ex.target):
        problems.append(
            f"ending tag {ex.ending_word_tag!r} != target end {end_word(ex.target)!r}"
        )

    if ex.syllable_tag is not None:
        actual = phonetics.syllable_count_line(ex.target)
        if ex.syllable_tag != actual:
            problems.append(f"syllable tag {ex.syllable_tag} != {actual}")

    if parse_input(render_input(ex)) != replace(ex, song_id="", target=""):
        problems.append("render/parse round trip is not the identity")
    return problems


def validate_mixture(
    mixture: TaskMixture, phonetics: Phonetics, rhymer: Rhymer
) -> dict[str, list[str]]:
    """Map of `task[index]` to its problems, for every invalid example."""
    report = {}
    for name, examples in mixture.tasks.items():
        for i, ex in enumerate(examples):
            problems = validate_example(ex, phonetics, rhymer)
            if problems:
                report[f"{name}[{i}]"] = problems
    if "rhyme" in mixture.tasks and "ending" in mixture.tasks:
        if len(mixture.tasks["rhyme"]) != len(mixture.tasks["ending"]):
            report["balance"] = [
                f"|rhyme| = {len(mixture.tasks['rhyme'])} != |ending| = {len(mixture.tasks['ending'])}"
            ]
    return report
