"""Character-level byte pair encoding baseline.

Training counts adjacent symbol pairs inside words, weighted by word
frequency, and repeatedly merges the most frequent pair. Merges never
cross word boundaries. Ties break lexicographically on the pair so
training is fully deterministic, and training stops once the vocabulary
(alphabet plus merged symbols) reaches the target size or no pair occurs
at least twice.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyCorpus, MalformedModelFile
from .tokenizer import UNK_TOKEN

_ALPHABET_HEADER = "# alphabet:"


@dataclass(frozen=True)
class MergeTable:
    """Ordered merge rules plus the base alphabet they build on."""

    merges: tuple[tuple[str, str], ...]
    alphabet: frozenset[str]

    @property
    def vocab_size(self) -> int:
        return len(self.alphabet) + len(self.merges)

    def symbols(self) -> list[str]:
        """Alphabet (sorted) followed by merged symbols in merge order."""
        return sorted(self.alphabet) + [a + b for a, b in self.merges]

    def dump(self, handle) -> None:
        """One merge per line, "a b". The alphabet rides in a comment so
        reloaded tables can still tell unknown characters apart."""
        handle.write(f"{_ALPHABET_HEADER} {' '.join(sorted(self.alphabet))}\n")
        for a, b in self.merges:
            handle.write(f"{a} {b}\n")

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            self.dump(handle)

    @classmethod
    def load(cls, path: str) -> "MergeTable":
        merges: list[tuple[str, str]] = []
        alphabet: set[str] = set()
        saw_header = False
        with open(path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.rstrip("\n")
                if line.startswith(_ALPHABET_HEADER):
                    alphabet.update(line[len(_ALPHABET_HEADER):].split())
                    saw_header = True
                    continue
                if not line or line.startswith("#"):
                    continue
                fields = line.split(" ")
                if len(fields) != 2 or not all(fields):
                    raise MalformedModelFile(
                        f"{path}:{lineno}: expected 'a b', got {line!r}"
                    )
                merges.append((fields[0], fields[1]))
        if not saw_header:
            # Legacy files without the header: fall back to the
            # characters the merges themselves mention.
            alphabet = {ch for pair in merges for part in pair for ch in part}
        return cls(tuple(merges), frozenset(alphabet))


def _merge_word(symbols: list[str], a: str, b: str) -> list[str]:
    merged = []
    i = 0
    while i < len(symbols):
        if i + 1 < len(symbols) and symbols[i] == a and symbols[i + 1] == b:
            merged.append(a + b)
            i += 2
        else:
            merged.append(symbols[i])
            i += 1
    return merged


def train_bpe(corpus: Iterable[str], vocab_size: int) -> MergeTable:
    """Learn a merge table from normalized lines.

    Args:
        corpus: lines of already-normalized text; words are whitespace
            separated.
        vocab_size: target size of alphabet plus merges. Training may
            stop short when no remaining pair occurs at least twice.

    Returns:
        MergeTable with merges in the order they were learned.

    Raises:
        EmptyCorpus: when the corpus contains no words.
        ValueError: when vocab_size is not positive.
    """
    if vocab_size < 1:
        raise ValueError(f"vocab_size must be positive, got {vocab_size}")
    word_freqs = Counter(
        word for line in corpus for word in line.split()
    )
    if not word_freqs:
        raise EmptyCorpus("cannot train BPE on an empty corpus")
    alphabet = frozenset(ch for word in word_freqs for ch in word)
    segmented = {word: list(word) for word in word_freqs}
    merges: list[tuple[str, str]] = []
    while len(alphabet) + len(merges) < vocab_size:
        pair_counts: Counter[tuple[str, str]] = Counter()
        for word, freq in word_freqs.items():
            symbols = segmented[word]
            for pair in zip(symbols, symbols[1:]):
                pair_counts[pair] += freq
        if not pair_counts:
            break
        # Highest count first; the lexicographically smallest pair wins
        # ties so reruns agree byte for byte.
        best, count = min(pair_counts.items(), key=lambda kv: (-kv[1], kv[0]))
        if count < 2:
            break
        merges.append(best)
        for word, symbols in segmented.items():
            if best[0] in symbols:
                segmented[word] = _merge_word(symbols, *best)
    return MergeTable(tuple(merges), alphabet)


def tokenize_bpe(table: MergeTable, word: str) -> list[str]:
    """Apply a merge table to one word.

    Characters outside the table's alphabet become UNK tokens, one per
    character; merges are then replayed in training order.
    """
    if not word:
        return []
    symbols = [ch if ch in table.alphabet else UNK_TOKEN for ch in word]
    for a, b in table.merges:
        if a in symbols:
            symbols = _merge_word(symbols, a, b)
    return symbols
