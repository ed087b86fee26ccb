"""Train the two learned baselines on the bundled sample and compare
all three schemes side by side.

Run from the repository root:

    python demos/comparing_schemes.py
"""

import pathlib

from silabi import (
    SyllableTokenizer,
    compute_report,
    render_table,
    train_bpe,
    train_wordpiece,
)
from silabi.stats import (
    bpe_word_tokenizer,
    syllable_word_tokenizer,
    wordpiece_word_tokenizer,
)
from silabi.tokenizer import normalize

sample = pathlib.Path(__file__).with_name("sample_sw.txt")
lines = sample.read_text(encoding="utf-8").splitlines()
normalized = [normalize(line) for line in lines]

# Small targets keep the toy models readable; bump them to see fertility
# fall as the learned vocabularies grow.
table = train_bpe(normalized, vocab_size=120)
wp = train_wordpiece(normalized, vocab_size=120)
print(f"bpe learned {len(table.merges)} merges over {len(table.alphabet)} characters")
print(f"wordpiece grew {len(wp)} pieces, {len(wp.merge_log)} of them merged")
print()

word = "anakula"
tokenizer = SyllableTokenizer()
print(f"{word!r} under each scheme:")
print(f"  syllable:  {tokenizer.syllabify(word)}")
print(f"  bpe:       {bpe_word_tokenizer(table)(word)}")
print(f"  wordpiece: {wordpiece_word_tokenizer(wp)(word)}")
print()

reports = [
    compute_report(syllable_word_tokenizer(tokenizer), lines, "syllable"),
    compute_report(bpe_word_tokenizer(table), lines, "bpe"),
    compute_report(wordpiece_word_tokenizer(wp), lines, "wordpiece"),
]
print(render_table(reports))
