"""Command line interface.

Every command streams line by line where the operation allows it, so
corpora larger than memory work; only training, shuffled splitting and
stdin-fed multi-pass commands buffer. Exit codes: 0 success, 2 bad
arguments, 3 I/O failure, 4 malformed data.

All randomness in the toolkit flows through the single --seed flag of
the split command; everything else is deterministic.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from contextlib import contextmanager
from dataclasses import asdict
from typing import Callable, Iterable, Iterator, Optional

from .bpe import MergeTable, train_bpe
from .errors import EmptyCorpus, SilabiError
from .inventory import load_inventory
from .stats import (
    SplitSpec,
    bpe_word_tokenizer,
    compute_report,
    render_table,
    render_tsv,
    split_corpus,
    syllable_word_tokenizer,
    train_size,
    wordpiece_word_tokenizer,
)
from .tokenizer import SyllableTokenizer, Vocabulary, normalize, pre_tokenize
from .wordpiece import WordPieceVocab, train_wordpiece

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DATA = 4

SCHEMES = ("syllable", "bpe", "wordpiece")
DEFAULT_SEPARATOR = " | "


@contextmanager
def _open_in(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as handle:
            yield handle


@contextmanager
def _open_out(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as handle:
            yield handle


def _input_lines(handle) -> Iterator[str]:
    for line in handle:
        yield line.rstrip("\n")


def _normalized_lines(handle, unknown: str) -> Iterator[str]:
    for line in _input_lines(handle):
        yield normalize(line, unknown=unknown)


# One renderer per (scheme, model, ...) configuration, usable from
# worker processes, hence built from picklable primitives only.
LineRenderer = Callable[[str], str]


def _build_renderer(
    scheme: str,
    model: Optional[str],
    inventory_path: Optional[str],
    unknown: str,
    ids: bool,
    separator: str,
) -> LineRenderer:
    if scheme == "syllable":
        tokenizer = SyllableTokenizer(load_inventory(inventory_path), unknown=unknown)

        def render(line: str) -> str:
            seq = tokenizer.tokenize(line)
            words = seq.words()
            if ids:
                return separator.join(
                    " ".join(str(t.id) for t in word) for word in words
                )
            return separator.join(
                " ".join(t.text for t in word) for word in words
            )

        return render
    if scheme == "bpe":
        word_tokenizer = bpe_word_tokenizer(MergeTable.load(model))
    else:
        word_tokenizer = wordpiece_word_tokenizer(WordPieceVocab.load(model))

    def render_baseline(line: str) -> str:
        words = pre_tokenize(normalize(line, unknown=unknown))
        return separator.join(" ".join(word_tokenizer(w)) for w in words)

    return render_baseline


_WORKER_RENDER: Optional[LineRenderer] = None


def _worker_init(config: tuple) -> None:
    global _WORKER_RENDER
    _WORKER_RENDER = _build_renderer(*config)


def _worker_render(line: str) -> str:
    return _WORKER_RENDER(line)


def _require_model(args) -> None:
    if args.scheme != "syllable" and not args.model:
        raise ValueError(f"--scheme {args.scheme} requires --model")


def _cmd_tokenize(args) -> int:
    _require_model(args)
    if args.ids and args.scheme != "syllable":
        raise ValueError("--ids is only defined for the syllable scheme")
    if args.threads < 1:
        raise ValueError("--threads must be at least 1")
    config = (
        args.scheme,
        args.model,
        args.inventory,
        args.unknown,
        args.ids,
        args.separator,
    )
    with _open_in(args.input) as src, _open_out(args.output) as dst:
        lines = _input_lines(src)
        if args.threads == 1:
            render = _build_renderer(*config)
            for line in lines:
                dst.write(render(line) + "\n")
        else:
            with multiprocessing.Pool(
                args.threads, initializer=_worker_init, initargs=(config,)
            ) as pool:
                for rendered in pool.imap(_worker_render, lines, chunksize=256):
                    dst.write(rendered + "\n")
    return EXIT_OK


def _cmd_train_bpe(args) -> int:
    with _open_in(args.input) as src:
        table = train_bpe(
            _normalized_lines(src, args.unknown), args.vocab_size
        )
    with _open_out(args.output) as dst:
        table.dump(dst)
    return EXIT_OK


def _cmd_train_wordpiece(args) -> int:
    with _open_in(args.input) as src:
        vocab = train_wordpiece(
            _normalized_lines(src, args.unknown), args.vocab_size
        )
    with _open_out(args.output) as dst:
        vocab.dump(dst)
    return EXIT_OK


def _cmd_split(args) -> int:
    spec = SplitSpec(
        train_fraction=args.fraction, seed=args.seed, shuffle=args.shuffle
    )
    if args.shuffle or args.input in (None, "-"):
        # Shuffled output needs random access; stdin cannot be reread.
        with _open_in(args.input) as src:
            lines = list(_input_lines(src))
        train, test = split_corpus(lines, spec)
        with _open_out(args.train_out) as dst:
            dst.writelines(line + "\n" for line in train)
        with _open_out(args.test_out) as dst:
            dst.writelines(line + "\n" for line in test)
        return EXIT_OK
    # Sequential split of a file streams in two passes: count, then route.
    with _open_in(args.input) as src:
        total = sum(1 for _ in src)
    if total == 0:
        raise EmptyCorpus("cannot split an empty corpus")
    n_train = train_size(total, args.fraction)
    with _open_in(args.input) as src, _open_out(args.train_out) as train_dst, _open_out(
        args.test_out
    ) as test_dst:
        for i, line in enumerate(_input_lines(src)):
            (train_dst if i < n_train else test_dst).write(line + "\n")
    return EXIT_OK


def _make_word_tokenizer(args):
    if args.scheme == "syllable":
        tokenizer = SyllableTokenizer(load_inventory(args.inventory), unknown=args.unknown)
        return syllable_word_tokenizer(tokenizer)
    if args.scheme == "bpe":
        return bpe_word_tokenizer(MergeTable.load(args.model))
    return wordpiece_word_tokenizer(WordPieceVocab.load(args.model))


def _cmd_stats(args) -> int:
    _require_model(args)
    word_tokenizer = _make_word_tokenizer(args)
    with _open_in(args.input) as src:
        report = compute_report(
            word_tokenizer,
            _input_lines(src),
            name=args.name or args.scheme,
            unknown=args.unknown,
        )
    with _open_out(args.output) as dst:
        if args.json:
            dst.write(json.dumps(asdict(report)) + "\n")
        else:
            for key, value in asdict(report).items():
                dst.write(f"{key}\t{value}\n")
    return EXIT_OK


def _cmd_compare(args) -> int:
    schemes = [s.strip() for s in args.schemes.split(",") if s.strip()]
    if len(schemes) < 2:
        raise ValueError("--schemes needs at least two comma-separated schemes")
    for scheme in schemes:
        if scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {scheme!r}")
    if "bpe" in schemes and not args.bpe_model:
        raise ValueError("comparing bpe requires --bpe-model")
    if "wordpiece" in schemes and not args.wp_model:
        raise ValueError("comparing wordpiece requires --wp-model")

    def tokenizer_for(scheme: str):
        if scheme == "syllable":
            return syllable_word_tokenizer(
                SyllableTokenizer(load_inventory(args.inventory), unknown=args.unknown)
            )
        if scheme == "bpe":
            return bpe_word_tokenizer(MergeTable.load(args.bpe_model))
        return wordpiece_word_tokenizer(WordPieceVocab.load(args.wp_model))

    if args.input in (None, "-"):
        buffered = None
        with _open_in(args.input) as src:
            buffered = list(_input_lines(src))

        def passes() -> Iterable[str]:
            return buffered

    else:

        def passes() -> Iterable[str]:
            with open(args.input, encoding="utf-8") as handle:
                yield from _input_lines(handle)

    reports = [
        compute_report(tokenizer_for(s), passes(), name=s, unknown=args.unknown)
        for s in schemes
    ]
    with _open_out(args.output) as dst:
        dst.write(render_tsv(reports) if args.tsv else render_table(reports))
    return EXIT_OK


def _cmd_inspect_vocab(args) -> int:
    _require_model(args)
    with _open_out(args.output) as dst:
        if args.scheme == "syllable":
            Vocabulary.from_inventory(load_inventory(args.inventory)).dump(dst)
        elif args.scheme == "bpe":
            for symbol in MergeTable.load(args.model).symbols():
                dst.write(symbol + "\n")
        else:
            WordPieceVocab.load(args.model).dump(dst)
    return EXIT_OK


def _add_io_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "input", nargs="?", default=None, help="input file; stdin when omitted"
    )
    parser.add_argument(
        "-o", "--output", default=None, help="output file; stdout when omitted"
    )


def _add_scheme_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--scheme", choices=SCHEMES, default="syllable", help="tokenization scheme"
    )
    parser.add_argument(
        "--model",
        default=None,
        help="model file for bpe (merge table) or wordpiece (vocabulary)",
    )
    parser.add_argument(
        "--inventory",
        default=None,
        help="override syllable inventory file (one entry per line)",
    )
    parser.add_argument(
        "--unknown",
        choices=("remove", "mark"),
        default="remove",
        help="drop out-of-alphabet characters or keep them as UNK markers",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="silabi",
        description="Swahili syllable tokenization with BPE and wordpiece baselines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tokenize", help="tokenize text line by line")
    _add_io_args(p)
    _add_scheme_args(p)
    p.add_argument(
        "--ids", action="store_true", help="emit token ids instead of texts"
    )
    p.add_argument(
        "--separator",
        default=DEFAULT_SEPARATOR,
        help=f"word boundary separator (default {DEFAULT_SEPARATOR!r})",
    )
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker processes for per-line tokenization; output order is preserved",
    )
    p.set_defaults(func=_cmd_tokenize)

    p = sub.add_parser("train-bpe", help="learn a BPE merge table")
    _add_io_args(p)
    p.add_argument("--vocab-size", type=int, required=True)
    p.add_argument("--unknown", choices=("remove", "mark"), default="remove")
    p.set_defaults(func=_cmd_train_bpe)

    p = sub.add_parser("train-wordpiece", help="learn a wordpiece vocabulary")
    _add_io_args(p)
    p.add_argument("--vocab-size", type=int, required=True)
    p.add_argument("--unknown", choices=("remove", "mark"), default="remove")
    p.set_defaults(func=_cmd_train_wordpiece)

    p = sub.add_parser("split", help="partition a corpus into train and test")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--fraction", default="0.9", help="train fraction, e.g. 0.9")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shuffle", action="store_true")
    p.add_argument("--train-out", required=True)
    p.add_argument("--test-out", required=True)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("stats", help="corpus statistics under one scheme")
    _add_io_args(p)
    _add_scheme_args(p)
    p.add_argument("--name", default=None, help="report label (default: scheme)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("compare", help="side-by-side statistics for several schemes")
    _add_io_args(p)
    p.add_argument(
        "--schemes",
        default="syllable,bpe,wordpiece",
        help="comma-separated schemes to compare",
    )
    p.add_argument("--bpe-model", default=None)
    p.add_argument("--wp-model", default=None)
    p.add_argument("--inventory", default=None)
    p.add_argument("--unknown", choices=("remove", "mark"), default="remove")
    p.add_argument("--tsv", action="store_true", help="emit TSV instead of a table")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("inspect-vocab", help="print a vocabulary, one token per line")
    p.add_argument("-o", "--output", default=None)
    _add_scheme_args(p)
    p.set_defaults(func=_cmd_inspect_vocab)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_IO
    except OSError as exc:
        print(f"silabi: {exc}", file=sys.stderr)
        return EXIT_IO
    except SilabiError as exc:
        print(f"silabi: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"silabi: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
