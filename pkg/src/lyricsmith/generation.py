"""Generation backends and the constrained suggestion flow.

Backends produce candidate lines from a rendered input string. The n-gram
baseline makes the whole pipeline (datasets, metrics, service, demo) testable
offline; a remote HTTP backend delegates to a hosted text-to-text model.
Constraint satisfaction is always recomputed here from the candidate text, so
no backend is trusted about rhyme, syllables, or end words.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import requests

from .dataset import Task, TrainingExample, end_word, parse_input, render_input
from .errors import BackendUnavailable, EmptyCorpus, MalformedResponse
from .phonetics import Phonetics, normalize_token, tokenize
from .rhyme import RhymeClass, RhymeDictionary, Rhymer

BOS = "<s>"
EOS = "</s>"
MAX_WORDS = 20
SYLLABLE_RETRY_LIMIT = 5
FORCE_RHYME_QUERIES = 8


@dataclass(frozen=True)
class SuggestionRequest:
    """A songwriter query: context lines plus optional constraints."""

    input_lines: tuple[str, ...]
    syllable_target: int | None = None
    ending_word: str | None = None
    force_rhyme: bool = False
    k: int = 5

    def __post_init__(self):
        if not 1 <= len(self.input_lines) <= 4:
            raise ValueError("between 1 and 4 input lines required")
        if self.ending_word is not None and self.force_rhyme:
            raise ValueError("ending_word and force_rhyme are mutually exclusive")
        if self.k < 1:
            raise ValueError("k must be >= 1")


@dataclass(frozen=True)
class CandidateReport:
    """Constraint satisfaction recomputed from the candidate line itself."""

    syllable_count: int
    syllable_target: int
    syllable_distance: int
    end_word: str
    requested_end_word: str | None
    end_word_match: bool | None
    rhyme_class: str
    attempts: int

    def to_dict(self) -> dict:
        return dict(vars(self))


@dataclass(frozen=True)
class Candidate:
    line: str
    report: CandidateReport


@dataclass
class SuggestionSet:
    candidates: list[Candidate]
    queries: list[str]
    notes: list[str] = field(default_factory=list)


class GenerationBackend:
    """Contract: generate(rendered_input, k, rng) -> up to k non-empty lines."""

    name = "backend"

    def generate(self, rendered_input: str, k: int, rng: random.Random) -> list[str]:
        raise NotImplementedError


class EchoBackend(GenerationBackend):
    """Oracle backend replaying known targets; used for tests and calibration."""

    name = "echo"

    def __init__(self, pairs):
        self.mapping = dict(pairs)

    def generate(self, rendered_input: str, k: int, rng: random.Random) -> list[str]:
        line = self.mapping.get(rendered_input, "")
        return [line] if line else []


class NgramModel:
    """Token n-gram tables over corpus lines, forward and backward.

    The backward table is the forward table of reversed lines, which lets
    generation run right-to-left from a required end word. Sampling applies
    add-one smoothing over the observed vocabulary; contexts never seen in
    training fall back to unigram sampling.
    """

    def __init__(self, order: int = 3):
        if order < 2:
            raise ValueError("order must be >= 2")
        self.order = order
        self.forward: dict[tuple[str, ...], Counter] = {}
        self.backward: dict[tuple[str, ...], Counter] = {}
        self.vocab: Counter = Counter()

    def train(self, lines) -> None:
        n_lines = 0
        for line in lines:
            tokens = tokenize(line)
            if not tokens:
                continue
            n_lines += 1
            self.vocab.update(tokens)
            self._count(self.forward, tokens)
            self._count(self.backward, tokens[::-1])
        if not n_lines:
            raise EmptyCorpus("no usable lines to train on")

    def _count(self, table, tokens) -> None:
        padded = [BOS] * (self.order - 1) + tokens + [EOS]
        for i in range(self.order - 1, len(padded)):
            ctx = tuple(padded[i - self.order + 1 : i])
            table.setdefault(ctx, Counter())[padded[i]] += 1

    def _sample(self, table, ctx, rng: random.Random) -> str:
        candidates = sorted(self.vocab) + [EOS]
        counts = table.get(ctx)
        if counts is None:
            counts = self.vocab  # unseen context: unigram fallback
        weights = [counts.get(w, 0) + 1 for w in candidates]
        return rng.choices(candidates, weights=weights, k=1)[0]

    def _extend(self, table, words, rng, phonetics, syllable_target) -> list[str]:
        ctx = tuple([BOS] * (self.order - 1) + words)[-(self.order - 1) :]
        while len(words) < MAX_WORDS:
            if syllable_target is not None and words:
                if phonetics.syllable_count_line(" ".join(words)) >= syllable_target:
                    break
            nxt = self._sample(table, ctx, rng)
            if nxt == EOS:
                if words:
                    break
                continue
            words.append(nxt)
            ctx = ctx[1:] + (nxt,)
        return words

    def generate_forward(self, rng, phonetics, syllable_target=None) -> str:
        words = self._extend(self.forward, [], rng, phonetics, syllable_target)
        return " ".join(words)

    def generate_backward(self, seed_word, rng, phonetics, syllable_target=None) -> str:
        words = self._extend(self.backward, [seed_word], rng, phonetics, syllable_target)
        return " ".join(reversed(words))

    def to_dict(self) -> dict:
        def dump(table):
            return {
                " ".join(ctx): dict(sorted(counter.items()))
                for ctx, counter in sorted(table.items())
            }

        return {
            "order": self.order,
            "vocab": dict(sorted(self.vocab.items())),
            "forward": dump(self.forward),
            "backward": dump(self.backward),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NgramModel":
        model = cls(order=data["order"])
        model.vocab = Counter(data["vocab"])
        for attr in ("forward", "backward"):
            table = getattr(model, attr)
            for ctx, counts in data[attr].items():
                table[tuple(ctx.split(" "))] = Counter(counts)
        return model

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "NgramModel":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def ngram_train(corpus_lines, order: int = 3) -> NgramModel:
    model = NgramModel(order=order)
    model.train(corpus_lines)
    return model


class NgramBackend(GenerationBackend):
    """Baseline backend: routes each task of a parsed query to the n-gram model."""

    name = "baseline"

    def __init__(self, model: NgramModel, phonetics: Phonetics, rdict: RhymeDictionary):
        self.model = model
        self.phonetics = phonetics
        self.rdict = rdict

    def _rhyme_end_word(self, parsed: TrainingExample, rng) -> str | None:
        flagged = [
            end_word(line)
            for line, flag in zip(parsed.input_lines, parsed.rhyme_flags)
            if flag and end_word(line)
        ]
        pool: Counter = Counter()
        for word in flagged:
            try:
                key = self.rdict.rhymer.canonical(word)
            except Exception:
                continue
            pool.update(self.rdict.bucket_words(key))
        others = {w: c for w, c in pool.items() if w not in flagged}
        if others:
            pool = Counter(others)
        if not pool:
            return None
        words = sorted(pool)
        return rng.choices(words, weights=[pool[w] for w in words], k=1)[0]

    def _one_line(self, parsed: TrainingExample, rng) -> str:
        target = parsed.syllable_tag
        if parsed.task is Task.ENDING and parsed.ending_word_tag:
            return self.model.generate_backward(
                parsed.ending_word_tag, rng, self.phonetics, target
            )
        if parsed.task is Task.RHYME:
            seed = self._rhyme_end_word(parsed, rng)
            if seed is not None:
                return self.model.generate_backward(seed, rng, self.phonetics, target)
        return self.model.generate_forward(rng, self.phonetics, target)

    def generate(self, rendered_input: str, k: int, rng: random.Random) -> list[str]:
        try:
            parsed = parse_input(rendered_input)
        except ValueError:
            parsed = None
        lines = []
        for _ in range(k):
            if parsed is None:
                line = self.model.generate_forward(rng, self.phonetics, None)
            else:
                line = self._one_line(parsed, rng)
            if line:
                lines.append(line)
        return lines


class RemoteBackend(GenerationBackend):
    """HTTP backend: POST {"input", "num_candidates"} -> {"candidates": [...]}."""

    name = "remote"

    def __init__(self, endpoint: str, timeout_ms: int = 5000, auth_header: str | None = None):
        self.endpoint = endpoint
        self.timeout_ms = timeout_ms
        self.headers = {"Authorization": auth_header} if auth_header else {}

    def generate(self, rendered_input: str, k: int, rng: random.Random = None) -> list[str]:
        try:
            resp = requests.post(
                self.endpoint,
                json={"input": rendered_input, "num_candidates": k},
                timeout=self.timeout_ms / 1000,
                headers=self.headers,
            )
        except requests.RequestException as exc:
            raise BackendUnavailable(f"{self.endpoint}: {exc}") from exc
        if resp.status_code != 200:
            raise BackendUnavailable(f"{self.endpoint}: HTTP {resp.status_code}")
        try:
            payload = resp.json()
        except ValueError as exc:
            raise MalformedResponse("response body is not JSON") from exc
        candidates = payload.get("candidates") if isinstance(payload, dict) else None
        if not isinstance(candidates, list) or not all(isinstance(c, str) for c in candidates):
            raise MalformedResponse("missing or non-string 'candidates' list")
        return [c for c in candidates[:k] if c]

    def is_available(self) -> bool:
        try:
            self.generate("finish lines: hello", 1)
            return True
        except (BackendUnavailable, MalformedResponse):
            return False


def derive_syllable_target(input_lines, phonetics: Phonetics) -> int:
    """Rounded mean syllable count of the input lines (round half to even), min 1."""
    counts = [phonetics.syllable_count_line(line) for line in input_lines]
    if not counts:
        raise ValueError("at least one input line required")
    return max(1, round(sum(counts) / len(counts)))


def build_query(req: SuggestionRequest, phonetics: Phonetics, rhymer: Rhymer) -> str:
    """Render a request as a task input: ending task if an end word is given,
    otherwise the rhyme task with end words auto-annotated against the last line."""
    syllables = (
        req.syllable_target
        if req.syllable_target is not None
        else derive_syllable_target(req.input_lines, phonetics)
    )
    if req.ending_word is not None:
        ex = TrainingExample(
            task=Task.ENDING,
            input_lines=req.input_lines,
            target="",
            syllable_tag=syllables,
            ending_word_tag=normalize_token(req.ending_word),
        )
        return render_input(ex)
    last = end_word(req.input_lines[-1])
    flags = tuple(
        bool(end_word(line)) and bool(last) and rhymer.rhymes(end_word(line), last)
        for line in req.input_lines
    )
    ex = TrainingExample(
        task=Task.RHYME,
        input_lines=req.input_lines,
        target="",
        rhyme_flags=flags,
        syllable_tag=syllables,
    )
    return render_input(ex)


def force_rhyme_queries(
    req: SuggestionRequest,
    phonetics: Phonetics,
    rhymer: Rhymer,
    rdict: RhymeDictionary,
    top_rhyme_count: int = FORCE_RHYME_QUERIES,
) -> tuple[list[str], list[str]]:
    """One ending-task query per top rhyme of the last input word (at most 8)."""
    last = end_word(req.input_lines[-1])
    rhymes = rdict.top_rhymes(last, top_rhyme_count)
    queries = []
    for word in rhymes:
        sub = SuggestionRequest(
            input_lines=req.input_lines,
            syllable_target=req.syllable_target,
            ending_word=word,
            k=req.k,
        )
        queries.append(build_query(sub, phonetics, rhymer))
    return queries, rhymes


def _best_rhyme_class(candidate_end: str, input_lines, rhymer: Rhymer) -> RhymeClass:
    best = RhymeClass.NONE
    for line in input_lines:
        w = end_word(line)
        if not w or not candidate_end:
            continue
        try:
            cls = rhymer.classify(candidate_end, w)
        except Exception:
            continue
        if cls.rank > best.rank:
            best = cls
    return best


def suggest(
    req: SuggestionRequest,
    backend: GenerationBackend,
    phonetics: Phonetics,
    rhymer: Rhymer,
    rdict: RhymeDictionary,
    rng: random.Random | None = None,
    retry_limit: int = SYLLABLE_RETRY_LIMIT,
    top_rhyme_count: int = FORCE_RHYME_QUERIES,
) -> SuggestionSet:
    """Dispatch a request and rank recomputed-verified candidates.

    An explicit syllable_target is treated as a hard constraint: each candidate
    slot is re-sampled up to 5 times total and the closest attempt is kept. A
    derived target only guides generation. Candidates are ranked by end-word
    match, then syllable distance, then rhyme class, then backend order; at
    most req.k are returned.
    """
    rng = rng or random.Random(0)
    notes: list[str] = []
    hard_syllables = req.syllable_target is not None
    target = (
        req.syllable_target
        if req.syllable_target is not None
        else derive_syllable_target(req.input_lines, phonetics)
    )

    if req.force_rhyme:
        queries, rhyme_words = force_rhyme_queries(
            req, phonetics, rhymer, rdict, top_rhyme_count
        )
        requested_ends = rhyme_words
        per_query_k = 1
        if not queries:
            notes.append("no rhymes found for the last input word")
    else:
        queries = [build_query(req, phonetics, rhymer)]
        requested_ends = [normalize_token(req.ending_word) if req.ending_word else None]
        per_query_k = req.k

    def distance(line: str) -> int:
        return abs(phonetics.syllable_count_line(line) - target)

    scored: list[tuple[tuple, Candidate]] = []
    order = 0
    for query, requested_end in zip(queries, requested_ends):
        for line in backend.generate(query, per_query_k, rng):
            attempts = 1
            best, best_d = line, distance(line)
            while hard_syllables and best_d > 0 and attempts < retry_limit:
                retry = backend.generate(query, 1, rng)
                attempts += 1
                if not retry:
                    continue
                d = distance(retry[0])
                if d < best_d:
                    best, best_d = retry[0], d
            cand_end = end_word(best)
            matched = (cand_end == requested_end) if requested_end else None
            report = CandidateReport(
                syllable_count=phonetics.syllable_count_line(best),
                syllable_target=target,
                syllable_distance=best_d,
                end_word=cand_end,
                requested_end_word=requested_end,
                end_word_match=matched,
                rhyme_class=_best_rhyme_class(cand_end, req.input_lines, rhymer).value,
                attempts=attempts,
            )
            rhyme_rank = {"perfect": 2, "near": 1, "none": 0}[report.rhyme_class]
            key = (0 if matched in (True, None) else 1, best_d, -rhyme_rank, order)
            scored.append((key, Candidate(line=best, report=report)))
            order += 1

    scored.sort(key=lambda item: item[0])
    return SuggestionSet(
        candidates=[cand for _, cand in scored[: req.k]],
        queries=queries,
        notes=notes,
    )
