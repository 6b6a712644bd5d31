"""Command-line front end.

Subcommands:
    phish perturb      batch-perturb a corpus at a fixed ratio and degree
    phish stats        unknown-token statistics under a vocabulary
    phish canonicalize fold phonetic variants onto canonical spellings
    phish inspect      per-syllable vulnerability breakdown of one text

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .attack import AttackMode, PerturbationConfig
from .corpus import (
    FORMATS,
    DataError,
    canonicalize_corpus,
    ingest,
    inspect_report,
    perturb_corpus,
    write_corpus,
)
from .lookup import CODA_OVERLAP_MODES, LookupTable, default_table
from .normalize import transcribe
from .tokenizer import load_vocab, unk_report

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits 1 on usage errors instead of 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _ratio(value: str) -> float:
    ratio = float(value)
    if not 0.0 <= ratio <= 1.0:
        raise argparse.ArgumentTypeError("must be in [0, 1]")
    return ratio


def _seed(value: str) -> int:
    seed = int(value)
    if seed < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return seed


def _add_corpus_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="corpus file to read")
    parser.add_argument("--format", choices=FORMATS, default="jsonl")
    parser.add_argument(
        "--text-field", default="text", help="field holding the text (jsonl/tsv)"
    )
    parser.add_argument(
        "--label-field", default=None, help="field holding the label (jsonl/tsv)"
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="abort on the first malformed line instead of skipping it",
    )


def _add_table_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lookup-table", default=None, help="substitution table file overriding the embedded one"
    )
    parser.add_argument(
        "--coda-overlap",
        choices=CODA_OVERLAP_MODES,
        default="union",
        help="how a coda in two phone sets picks alternatives",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="phish",
        description="Phonetic substitution perturbation toolkit for Korean text",
    )
    parser.add_argument("--version", action="version", version=f"phish {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    perturb = sub.add_parser("perturb", help="batch-perturb a corpus")
    _add_corpus_options(perturb)
    perturb.add_argument("--ratio", type=_ratio, required=True,
                         help="fraction of vulnerable syllables to attack, in [0, 1]")
    perturb.add_argument("--mode", choices=[m.value for m in AttackMode], required=True)
    perturb.add_argument("--seed", type=_seed, required=True)
    perturb.add_argument("--output", required=True, help="perturbed corpus file to write")
    perturb.add_argument("--manifest", default=None, help="write the run manifest JSON here")
    _add_table_options(perturb)

    stats = sub.add_parser("stats", help="unknown-token statistics of a corpus")
    _add_corpus_options(stats)
    stats.add_argument("--vocab", required=True, help="one-token-per-line vocabulary file")
    stats.add_argument(
        "--phonemes",
        action="store_true",
        help="measure the texts' phone sequences instead of the raw texts",
    )
    stats.add_argument("--per-text", action="store_true", help="include per-text rates")
    _add_table_options(stats)

    canon = sub.add_parser("canonicalize", help="canonicalize a corpus")
    _add_corpus_options(canon)
    canon.add_argument("--output", required=True, help="canonicalized corpus file to write")
    _add_table_options(canon)

    inspect = sub.add_parser("inspect", help="show a text's vulnerable syllables")
    inspect.add_argument("text", help="text to analyze")
    _add_table_options(inspect)

    return parser


def _load_table(args: argparse.Namespace) -> LookupTable:
    try:
        if args.lookup_table:
            return LookupTable.from_file(args.lookup_table, coda_overlap=args.coda_overlap)
        return default_table(args.coda_overlap)
    except (OSError, ValueError) as exc:
        raise DataError(f"cannot load lookup table: {exc}") from exc


def _cmd_perturb(args: argparse.Namespace) -> int:
    table = _load_table(args)
    records, problems = ingest(
        args.input, args.format, args.text_field, args.label_field, strict=args.strict
    )
    config = PerturbationConfig(
        ratio=args.ratio, mode=AttackMode(args.mode), seed=args.seed
    )
    perturbed, manifest = perturb_corpus(
        records,
        config,
        table,
        input_path=args.input,
        output_path=args.output,
        skipped=problems,
    )
    write_corpus(perturbed, args.output, args.format, args.text_field, args.label_field)
    if args.manifest:
        with open(args.manifest, "w", encoding="utf-8") as handle:
            json.dump(manifest.as_dict(), handle, ensure_ascii=False, indent=2)
            handle.write("\n")
    print(
        f"perturbed {len(perturbed)} records "
        f"(skipped {len(problems)}): attacked {manifest.total_attacked} of "
        f"{manifest.total_vulnerable} vulnerable syllables "
        f"(achieved ratio {manifest.achieved_ratio:.4f})",
        file=sys.stderr,
    )
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    records, problems = ingest(
        args.input, args.format, args.text_field, args.label_field, strict=args.strict
    )
    if not records:
        raise DataError(f"{args.input}: no usable records")
    try:
        vocab = load_vocab(args.vocab)
    except (OSError, ValueError) as exc:
        raise DataError(f"cannot load vocabulary: {exc}") from exc
    texts = [r.text for r in records]
    if args.phonemes:
        table = _load_table(args)
        texts = [transcribe(t, table).as_text() for t in texts]
    report = unk_report(texts, vocab)
    payload = report.as_dict(include_per_text=args.per_text)
    payload["skipped"] = len(problems)
    payload["phonemes"] = args.phonemes
    print(json.dumps(payload, ensure_ascii=False))
    return 0


def _cmd_canonicalize(args: argparse.Namespace) -> int:
    table = _load_table(args)
    records, problems = ingest(
        args.input, args.format, args.text_field, args.label_field, strict=args.strict
    )
    canonical = canonicalize_corpus(records, table)
    write_corpus(canonical, args.output, args.format, args.text_field, args.label_field)
    print(
        f"canonicalized {len(canonical)} records (skipped {len(problems)})",
        file=sys.stderr,
    )
    return 0


def _cmd_inspect(args: argparse.Namespace) -> int:
    table = _load_table(args)
    report = inspect_report(args.text, table)
    if report:
        print(report)
    return 0


_COMMANDS = {
    "perturb": _cmd_perturb,
    "stats": _cmd_stats,
    "canonicalize": _cmd_canonicalize,
    "inspect": _cmd_inspect,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DataError as exc:
        print(f"phish: error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"phish: error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
