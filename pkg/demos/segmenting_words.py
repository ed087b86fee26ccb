"""A tour of syllable segmentation, from raw text to ids.

Run from the repository root:

    python demos/segmenting_words.py
"""

from silabi import (
    SyllableTokenizer,
    decode,
    load_inventory,
    longest_prefix_match,
    one_hot_shape,
)

inventory = load_inventory()
print(f"inventory: {len(inventory)} entries")
print(f"first five: {inventory.entries[:5]}")
print(f"last five:  {inventory.entries[-5:]}")
print()

# The matcher always proposes the longest entry that prefixes the text.
for text in ("anakula", "ndwele", "mbwa", "xyz"):
    print(f"longest_prefix_match({text!r}) -> {longest_prefix_match(inventory, text)}")
print()

tokenizer = SyllableTokenizer(inventory)

# Syllabic nasals fall out naturally: "mtu" is m + tu because no longer
# entry covers the initial m, and "mbwa" is a single four-letter entry.
for word in ("kula", "anakula", "mtu", "mbwa", "ng'ombe", "tofauti"):
    print(f"{word:10} -> {' '.join(tokenizer.syllabify(word))}")
print()

# Full pipeline on a sentence: normalization, word split, segmentation,
# then ids against the vocabulary (4 specials + the inventory).
sentence = "Tofauti na somo la Historia"
seq = tokenizer.tokenize(sentence)
print(f"text:   {sentence!r}")
print(f"tokens: {seq.texts}")
print(f"ids:    {seq.ids}")
print(f"shape:  {one_hot_shape(tokenizer.vocab, seq.ids)}  (rows x tokens)")
print(f"back:   {decode(tokenizer.vocab, seq.ids, seq.word_initial)!r}")
