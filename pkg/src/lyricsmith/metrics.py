"""The five genre evaluation metrics and the end-to-end evaluation harness.

All metrics tokenize through the shared normalizer (lowercase, punctuation
stripped), so scores are case- and punctuation-insensitive. BLEU is corpus
level with uniform 1-4-gram weights, a brevity penalty computed from corpus
length totals, and additive smoothing on zero-match precisions.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .dataset import TrainingExample, end_word, render_input
from .errors import LengthMismatch
from .phonetics import Phonetics, tokenize
from .rhyme import Rhymer

log = logging.getLogger(__name__)

BLEU_MAX_ORDER = 4
BLEU_SMOOTH_EPS = 0.1


@dataclass
class EvaluationReport:
    bleu: float
    lexical_diversity_rmse: float
    rhyme_score: float
    syllable_rmse: float
    end_word_accuracy: float
    n_examples: int
    backend_id: str
    dataset_id: str
    config_hash: str
    counters: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "bleu": self.bleu,
            "lexical_diversity_rmse": self.lexical_diversity_rmse,
            "rhyme_score": self.rhyme_score,
            "syllable_rmse": self.syllable_rmse,
            "end_word_accuracy": self.end_word_accuracy,
            "n_examples": self.n_examples,
            "backend_id": self.backend_id,
            "dataset_id": self.dataset_id,
            "config_hash": self.config_hash,
            "counters": dict(self.counters),
        }

    def metric_values(self) -> dict[str, float]:
        return {
            "bleu": self.bleu,
            "lexical_diversity_rmse": self.lexical_diversity_rmse,
            "rhyme_score": self.rhyme_score,
            "syllable_rmse": self.syllable_rmse,
            "end_word_accuracy": self.end_word_accuracy,
        }

    def save_json(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )

    def save_tsv(self, path: str | Path) -> None:
        rows = [f"{k}\t{v}" for k, v in self.metric_values().items()]
        rows.append(f"n_examples\t{self.n_examples}")
        rows.append(f"backend_id\t{self.backend_id}")
        rows.append(f"dataset_id\t{self.dataset_id}")
        rows.append(f"config_hash\t{self.config_hash}")
        Path(path).write_text("\n".join(rows) + "\n", encoding="utf-8")


def _require_paired(predictions, targets) -> None:
    if len(predictions) != len(targets):
        raise LengthMismatch(f"{len(predictions)} predictions vs {len(targets)} targets")
    if not predictions:
        raise LengthMismatch("empty inputs")


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(predictions, targets) -> float:
    """Corpus BLEU in [0, 100] against one reference per prediction.

    Zero-match n-gram precisions get an additive epsilon so single-line
    references without 4-gram overlap still score; orders with no candidate
    n-grams at all are excluded from the geometric mean.
    """
    _require_paired(predictions, targets)
    matches = [0] * BLEU_MAX_ORDER
    totals = [0] * BLEU_MAX_ORDER
    pred_len = 0
    ref_len = 0
    for pred, ref in zip(predictions, targets):
        pred_tokens = tokenize(pred)
        ref_tokens = tokenize(ref)
        pred_len += len(pred_tokens)
        ref_len += len(ref_tokens)
        for n in range(1, BLEU_MAX_ORDER + 1):
            pred_grams = _ngrams(pred_tokens, n)
            ref_grams = _ngrams(ref_tokens, n)
            totals[n - 1] += sum(pred_grams.values())
            matches[n - 1] += sum(
                min(count, ref_grams[gram]) for gram, count in pred_grams.items()
            )
    if pred_len == 0:
        return 0.0
    log_sum = 0.0
    orders = 0
    for m, t in zip(matches, totals):
        if t == 0:
            continue
        p = m / t if m > 0 else BLEU_SMOOTH_EPS / t
        log_sum += math.log(p)
        orders += 1
    if orders == 0:
        return 0.0
    brevity = 1.0 if pred_len >= ref_len else math.exp(1.0 - ref_len / pred_len)
    return 100.0 * brevity * math.exp(log_sum / orders)


def type_token_ratio(line: str, counters: dict | None = None) -> float:
    tokens = tokenize(line)
    if not tokens:
        if counters is not None:
            counters["empty_lines"] = counters.get("empty_lines", 0) + 1
        return 0.0
    return len(set(tokens)) / len(tokens)


def lexical_diversity_rmse(predictions, targets, counters: dict | None = None) -> float:
    """RMSE of the per-pair type-token-ratio difference."""
    _require_paired(predictions, targets)
    sq = [
        (type_token_ratio(p, counters) - type_token_ratio(t, counters)) ** 2
        for p, t in zip(predictions, targets)
    ]
    return math.sqrt(sum(sq) / len(sq))


def rhyme_score(predictions, example_inputs, rhymer: Rhymer, counters: dict | None = None) -> float:
    """Fraction of predictions whose final word rhymes with >= 1 input end word."""
    _require_paired(predictions, example_inputs)
    hits = 0
    for pred, input_lines in zip(predictions, example_inputs):
        pred_end = end_word(pred)
        if not pred_end:
            if counters is not None:
                counters["missing_end_words"] = counters.get("missing_end_words", 0) + 1
            continue
        rhymed = any(
            rhymer.rhymes(pred_end, end_word(line))
            for line in input_lines
            if end_word(line)
        )
        if rhymed:
            hits += 1
    return hits / len(predictions)


def syllable_rmse(predictions, targets, phonetics: Phonetics) -> float:
    _require_paired(predictions, targets)
    sq = [
        (phonetics.syllable_count_line(p) - phonetics.syllable_count_line(t)) ** 2
        for p, t in zip(predictions, targets)
    ]
    return math.sqrt(sum(sq) / len(sq))


def end_word_accuracy(predictions, targets) -> float:
    _require_paired(predictions, targets)
    hits = sum(1 for p, t in zip(predictions, targets) if end_word(p) == end_word(t))
    return hits / len(predictions)


def _config_hash(seed: int) -> str:
    config = {
        "bleu_max_order": BLEU_MAX_ORDER,
        "bleu_smooth_eps": BLEU_SMOOTH_EPS,
        "tokenization": "normalized",
        "predictions_per_example": 1,
        "seed": seed,
    }
    digest = hashlib.sha256(json.dumps(config, sort_keys=True).encode()).hexdigest()
    return digest[:12]


def evaluate(
    backend,
    examples: list[TrainingExample],
    phonetics: Phonetics,
    rhymer: Rhymer,
    seed: int = 0,
    dataset_id: str = "dataset",
) -> EvaluationReport:
    """Collect one seeded prediction per example and compute all five metrics."""
    if not examples:
        raise LengthMismatch("empty test set")
    rng = random.Random(seed)
    predictions = []
    for i, ex in enumerate(examples):
        try:
            outs = backend.generate(render_input(ex), 1, rng)
        except Exception:
            log.error("backend failed after %d/%d examples", i, len(examples))
            raise
        predictions.append(outs[0] if outs else "")
    targets = [ex.target for ex in examples]
    inputs = [ex.input_lines for ex in examples]
    counters: dict[str, int] = {}
    return EvaluationReport(
        bleu=corpus_bleu(predictions, targets),
        lexical_diversity_rmse=lexical_diversity_rmse(predictions, targets, counters),
        rhyme_score=rhyme_score(predictions, inputs, rhymer, counters),
        syllable_rmse=syllable_rmse(predictions, targets, phonetics),
        end_word_accuracy=end_word_accuracy(predictions, targets),
        n_examples=len(examples),
        backend_id=getattr(backend, "name", backend.__class__.__name__),
        dataset_id=dataset_id,
        config_hash=_config_hash(seed),
        counters=counters,
    )
