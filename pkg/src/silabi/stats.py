"""Corpus splitting and tokenizer comparison reports.

Reports are computed against a shared normalization and word split so
different schemes stay comparable: every scheme sees exactly the same
words and the metrics differ only in how each scheme cuts them up.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .bpe import MergeTable, tokenize_bpe
from .errors import EmptyCorpus
from .tokenizer import (
    UNK_TOKEN,
    SyllableTokenizer,
    normalize,
    pre_tokenize,
)
from .wordpiece import WordPieceVocab, tokenize_wordpiece

WordTokenizer = Callable[[str], list[str]]


@dataclass(frozen=True)
class SplitSpec:
    """How to partition a corpus: train fraction, seed, shuffle or not."""

    train_fraction: Union[float, str, Fraction] = 0.9
    seed: int = 0
    shuffle: bool = False


def _as_fraction(value: Union[float, str, Fraction]) -> Fraction:
    # Fraction(str(0.9)) reads the decimal the caller wrote rather than
    # the nearest binary float, so floor(f * N) is exact for inputs like
    # 0.9 regardless of platform rounding.
    frac = value if isinstance(value, Fraction) else Fraction(str(value))
    if not 0 < frac < 1:
        raise ValueError(f"train_fraction must be strictly between 0 and 1, got {value!r}")
    return frac


def train_size(total: int, train_fraction: Union[float, str, Fraction]) -> int:
    """Train side size of a split: floor(train_fraction * total)."""
    return math.floor(_as_fraction(train_fraction) * total)


def split_corpus(
    lines: Sequence[str], spec: SplitSpec = SplitSpec()
) -> tuple[list[str], list[str]]:
    """Partition lines into (train, test) with |train| = floor(f * N).

    Deterministic for a given spec: the same seed always produces the
    same partition. With shuffle=False the split is sequential; with
    shuffle=True lines are permuted first and emitted in shuffled order.
    Raises EmptyCorpus when there are no lines.
    """
    if not lines:
        raise EmptyCorpus("cannot split an empty corpus")
    n_train = train_size(len(lines), spec.train_fraction)
    order = list(range(len(lines)))
    if spec.shuffle:
        random.Random(spec.seed).shuffle(order)
    train = [lines[i] for i in order[:n_train]]
    test = [lines[i] for i in order[n_train:]]
    return train, test


@dataclass(frozen=True)
class CorpusReport:
    """Per-scheme corpus statistics.

    fertility is tokens per word, mean_sequence_length is tokens per
    sentence, chars_per_token divides word characters (spaces excluded)
    by the token count, oov_rate is the UNK share of all tokens, and
    vocab_used counts distinct emitted token strings.
    """

    name: str
    sentence_count: int
    word_count: int
    token_count: int
    vocab_used: int
    oov_rate: float
    fertility: float
    mean_sequence_length: float
    chars_per_token: float


def compute_report(
    word_tokenizer: WordTokenizer,
    lines: Iterable[str],
    name: str,
    unknown: str = "remove",
) -> CorpusReport:
    """Run one scheme over a corpus and collect its statistics.

    Args:
        word_tokenizer: maps one normalized word to its token strings,
            using UNK_TOKEN for unknown material.
        lines: raw corpus lines; normalization happens here so every
            scheme is measured on identical words.
        name: label for the report row.
        unknown: normalization mode, as for normalize().

    An empty corpus (no lines or no surviving words) yields an all-zero
    report rather than an error.
    """
    sentences = 0
    words = 0
    tokens = 0
    chars = 0
    unk = 0
    emitted: set[str] = set()
    for line in lines:
        sentences += 1
        for word in pre_tokenize(normalize(line, unknown=unknown)):
            words += 1
            chars += len(word)
            pieces = word_tokenizer(word)
            tokens += len(pieces)
            for piece in pieces:
                if piece == UNK_TOKEN:
                    unk += 1
                emitted.add(piece)
    return CorpusReport(
        name=name,
        sentence_count=sentences,
        word_count=words,
        token_count=tokens,
        vocab_used=len(emitted),
        oov_rate=unk / tokens if tokens else 0.0,
        fertility=tokens / words if words else 0.0,
        mean_sequence_length=tokens / sentences if sentences else 0.0,
        chars_per_token=chars / tokens if tokens else 0.0,
    )


def syllable_word_tokenizer(tokenizer: SyllableTokenizer) -> WordTokenizer:
    """Adapter for reports: unknown characters surface as UNK_TOKEN."""
    inventory = tokenizer.inventory

    def run(word: str) -> list[str]:
        return [
            piece if piece in inventory else UNK_TOKEN
            for piece in tokenizer.syllabify(word)
        ]

    return run


def bpe_word_tokenizer(table: MergeTable) -> WordTokenizer:
    return lambda word: tokenize_bpe(table, word)


def wordpiece_word_tokenizer(vocab: WordPieceVocab) -> WordTokenizer:
    return lambda word: tokenize_wordpiece(vocab, word)


# Metric rows of a comparison, in pinned display order.
_METRIC_FIELDS = (
    "sentence_count",
    "word_count",
    "token_count",
    "vocab_used",
    "oov_rate",
    "fertility",
    "mean_sequence_length",
    "chars_per_token",
)
assert set(_METRIC_FIELDS) == {f.name for f in fields(CorpusReport)} - {"name"}


def _format_value(value: Union[int, float]) -> str:
    if isinstance(value, int):
        return str(value)
    return f"{value:.4f}"


def comparison_rows(reports: Sequence[CorpusReport]) -> list[list[str]]:
    """Tabulate reports side by side: header row, then one row per metric.

    Columns follow the argument order. Raises ValueError with fewer than
    two reports since a comparison needs something to compare.
    """
    if len(reports) < 2:
        raise ValueError(f"comparison needs at least two reports, got {len(reports)}")
    rows = [["metric"] + [report.name for report in reports]]
    for metric in _METRIC_FIELDS:
        rows.append(
            [metric] + [_format_value(getattr(r, metric)) for r in reports]
        )
    return rows


def render_tsv(reports: Sequence[CorpusReport]) -> str:
    return "\n".join("\t".join(row) for row in comparison_rows(reports)) + "\n"


def render_table(reports: Sequence[CorpusReport]) -> str:
    """Aligned text table of a comparison."""
    rows = comparison_rows(reports)
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for k, row in enumerate(rows):
        cells = [row[0].ljust(widths[0])]
        cells += [cell.rjust(widths[i + 1]) for i, cell in enumerate(row[1:])]
        lines.append("  ".join(cells).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
