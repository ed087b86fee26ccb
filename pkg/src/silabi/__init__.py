"""silabi: Swahili syllable tokenization with subword baselines.

The core tokenizer segments words into entries of a fixed syllable
inventory by greedy longest-prefix matching. BPE and WordPiece trainers
are included as learned baselines, together with corpus statistics for
comparing all three schemes, and a command line front end (``silabi``).
"""

from .bpe import MergeTable, tokenize_bpe, train_bpe
from .errors import (
    EmptyCorpus,
    IdOutOfRange,
    MalformedEntry,
    MalformedModelFile,
    PlaceholderInData,
    SilabiError,
)
from .inventory import (
    INVENTORY_SIZE,
    STANDALONE_CONSONANTS,
    VOWELS,
    SyllableInventory,
    load_inventory,
    longest_prefix_match,
)
from .stats import (
    CorpusReport,
    SplitSpec,
    compute_report,
    comparison_rows,
    render_table,
    render_tsv,
    split_corpus,
)
from .tokenizer import (
    BOS_ID,
    BOS_TOKEN,
    EOS_ID,
    EOS_TOKEN,
    PAD_ID,
    PAD_TOKEN,
    UNK_ID,
    UNK_TOKEN,
    SyllableTokenizer,
    Token,
    TokenSequence,
    Vocabulary,
    decode,
    encode,
    normalize,
    one_hot_shape,
    pre_tokenize,
    syllabify_word,
    tokenize,
)
from .wordpiece import WordPieceVocab, tokenize_wordpiece, train_wordpiece

__version__ = "0.1.0"

__all__ = [
    "BOS_ID",
    "BOS_TOKEN",
    "CorpusReport",
    "EOS_ID",
    "EOS_TOKEN",
    "EmptyCorpus",
    "IdOutOfRange",
    "INVENTORY_SIZE",
    "MalformedEntry",
    "MalformedModelFile",
    "MergeTable",
    "PAD_ID",
    "PAD_TOKEN",
    "PlaceholderInData",
    "STANDALONE_CONSONANTS",
    "SilabiError",
    "SplitSpec",
    "SyllableInventory",
    "SyllableTokenizer",
    "Token",
    "TokenSequence",
    "UNK_ID",
    "UNK_TOKEN",
    "VOWELS",
    "Vocabulary",
    "WordPieceVocab",
    "comparison_rows",
    "compute_report",
    "decode",
    "encode",
    "load_inventory",
    "longest_prefix_match",
    "normalize",
    "one_hot_shape",
    "pre_tokenize",
    "render_table",
    "render_tsv",
    "split_corpus",
    "syllabify_word",
    "tokenize",
    "tokenize_bpe",
    "tokenize_wordpiece",
    "train_bpe",
    "train_wordpiece",
]
