"""WordPiece baseline with likelihood-ratio pair selection.

Like BPE this grows a vocabulary by merging adjacent symbol pairs inside
words, but the pair chosen at each step maximizes
count(ab) / (count(a) * count(b)) rather than raw count. Scores are
compared exactly with integer cross multiplication, never floats. Word
interiors are marked with a "##" continuation prefix, and tokenization
is greedy longest-match-first with a whole-word UNK fallback.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import EmptyCorpus, MalformedModelFile
from .tokenizer import UNK_TOKEN

CONTINUATION = "##"


class MergeRecord(NamedTuple):
    """One training step: the pair merged and the counts that won it."""

    left: str
    right: str
    piece: str
    pair_count: int
    left_count: int
    right_count: int

    @property
    def score(self) -> Fraction:
        return Fraction(self.pair_count, self.left_count * self.right_count)


@dataclass(frozen=True)
class WordPieceVocab:
    """Pieces in creation order plus the training log that built them.

    The piece order is the id order: base pieces first (word-initial
    characters sorted, then continuation characters sorted), merged
    pieces after in the order they were learned. merge_log is empty for
    vocabularies loaded from disk; the file format carries pieces only.
    """

    pieces: tuple[str, ...]
    merge_log: tuple[MergeRecord, ...] = ()
    _members: frozenset[str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.pieces)) != len(self.pieces):
            raise MalformedModelFile("wordpiece pieces are not distinct")
        object.__setattr__(self, "_members", frozenset(self.pieces))

    def __len__(self) -> int:
        return len(self.pieces)

    def __contains__(self, piece: object) -> bool:
        return piece in self._members

    def scores(self) -> dict[str, Fraction]:
        """Selection score of each merged piece, from the training log."""
        return {record.piece: record.score for record in self.merge_log}

    def dump(self, handle) -> None:
        """One piece per line, continuation prefix included."""
        for piece in self.pieces:
            handle.write(piece + "\n")

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            self.dump(handle)

    @classmethod
    def load(cls, path: str) -> "WordPieceVocab":
        pieces = []
        with open(path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                piece = line.rstrip("\n")
                if not piece or piece == CONTINUATION:
                    raise MalformedModelFile(f"{path}:{lineno}: empty piece")
                pieces.append(piece)
        if not pieces:
            raise MalformedModelFile(f"{path}: no pieces")
        return cls(tuple(pieces))


def _word_symbols(word: str) -> list[str]:
    return [word[0]] + [CONTINUATION + ch for ch in word[1:]]


def _merge_symbols(symbols: list[str], a: str, b: str, piece: str) -> list[str]:
    merged = []
    i = 0
    while i < len(symbols):
        if i + 1 < len(symbols) and symbols[i] == a and symbols[i + 1] == b:
            merged.append(piece)
            i += 2
        else:
            merged.append(symbols[i])
            i += 1
    return merged


def _joined(a: str, b: str) -> str:
    return a + b[len(CONTINUATION):]


def train_wordpiece(corpus: Iterable[str], vocab_size: int) -> WordPieceVocab:
    """Learn a wordpiece vocabulary from normalized lines.

    The pair merged at each step maximizes the ratio of its count to the
    product of its parts' counts, all weighted by word frequency. Ties
    go to the higher pair count, then to the lexicographically smallest
    pair. Training stops at vocab_size pieces or when no pair occurs at
    least twice.

    Raises EmptyCorpus on a wordless corpus and ValueError when
    vocab_size is not positive.
    """
    if vocab_size < 1:
        raise ValueError(f"vocab_size must be positive, got {vocab_size}")
    word_freqs = Counter(word for line in corpus for word in line.split())
    if not word_freqs:
        raise EmptyCorpus("cannot train wordpiece on an empty corpus")
    segmented = {word: _word_symbols(word) for word in word_freqs}
    initial = {word[0] for word in word_freqs}
    continuation = {sym for word in word_freqs for sym in _word_symbols(word)[1:]}
    pieces: list[str] = sorted(initial) + sorted(continuation)
    log: list[MergeRecord] = []
    while len(pieces) < vocab_size:
        symbol_counts: Counter[str] = Counter()
        pair_counts: Counter[tuple[str, str]] = Counter()
        for word, freq in word_freqs.items():
            symbols = segmented[word]
            for sym in symbols:
                symbol_counts[sym] += freq
            for pair in zip(symbols, symbols[1:]):
                pair_counts[pair] += freq
        best: tuple[str, str] | None = None
        best_counts = (0, 0, 0)
        for (a, b), pair_count in pair_counts.items():
            if pair_count < 2:
                continue
            ca, cb = symbol_counts[a], symbol_counts[b]
            if best is None:
                better = True
            else:
                # score comparison by cross multiplication:
                # pair/(ca*cb) vs best_pair/(best_ca*best_cb)
                lhs = pair_count * best_counts[1] * best_counts[2]
                rhs = best_counts[0] * ca * cb
                if lhs != rhs:
                    better = lhs > rhs
                elif pair_count != best_counts[0]:
                    better = pair_count > best_counts[0]
                else:
                    better = (a, b) < best
            if better:
                best = (a, b)
                best_counts = (pair_count, ca, cb)
        if best is None:
            break
        piece = _joined(*best)
        pieces.append(piece)
        log.append(MergeRecord(best[0], best[1], piece, *best_counts))
        for word, symbols in segmented.items():
            if best[0] in symbols:
                segmented[word] = _merge_symbols(symbols, best[0], best[1], piece)
    return WordPieceVocab(tuple(pieces), tuple(log))


def tokenize_wordpiece(vocab: WordPieceVocab, word: str) -> list[str]:
    """Greedy longest-match-first segmentation of one word.

    Non-initial matches carry the continuation prefix. A word with any
    unmatchable stretch collapses to a single UNK token.
    """
    if not word:
        return []
    pieces = []
    start = 0
    n = len(word)
    while start < n:
        end = n
        found = None
        while end > start:
            candidate = word[start:end]
            if start > 0:
                candidate = CONTINUATION + candidate
            if candidate in vocab:
                found = candidate
                break
            end -= 1
        if found is None:
            return [UNK_TOKEN]
        pieces.append(found)
        start = end
    return pieces
