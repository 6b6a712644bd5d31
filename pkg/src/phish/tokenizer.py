"""Greedy longest-match subword tokenizer and unknown-token statistics.

Matches the standard WordPiece scheme: whitespace pre-tokenization,
then per word a longest-prefix match from the left with ``##``-prefixed
continuation pieces; a word that cannot be fully covered becomes one
unknown token. Used to measure how a perturbation inflates the unknown
rate under a fixed vocabulary.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class Vocabulary:
    """Fixed token inventory in file order."""

    tokens: tuple[str, ...]
    continuation_prefix: str = "##"
    unk_token: str = "[UNK]"
    max_word_chars: int = 100
    token_set: frozenset[str] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if len(set(self.tokens)) != len(self.tokens):
            raise ValueError("vocabulary contains duplicate tokens")
        if self.unk_token not in self.tokens:
            raise ValueError(f"vocabulary is missing the {self.unk_token!r} token")
        object.__setattr__(self, "token_set", frozenset(self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)


def load_vocab(
    path: str | Path,
    continuation_prefix: str = "##",
    unk_token: str = "[UNK]",
    max_word_chars: int = 100,
) -> Vocabulary:
    """Read a one-token-per-line UTF-8 vocabulary file, order preserved."""
    tokens = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            token = line.rstrip("\r\n")
            if not token:
                raise ValueError(f"{path}: line {lineno} is empty")
            tokens.append(token)
    return Vocabulary(
        tuple(tokens),
        continuation_prefix=continuation_prefix,
        unk_token=unk_token,
        max_word_chars=max_word_chars,
    )


def tokenize(text: str, vocab: Vocabulary) -> list[str]:
    """Split on whitespace, then greedy longest-match each word.

    Example with vocabulary {[UNK], 김, ##밥}:
        "김밥" -> [김, ##밥]
        "킴"   -> [[UNK]]
    """
    output: list[str] = []
    for word in text.split():
        if len(word) > vocab.max_word_chars:
            output.append(vocab.unk_token)
            continue
        pieces: list[str] = []
        start = 0
        while start < len(word):
            end = len(word)
            piece = None
            while start < end:
                candidate = word[start:end]
                if start > 0:
                    candidate = vocab.continuation_prefix + candidate
                if candidate in vocab.token_set:
                    piece = candidate
                    break
                end -= 1
            if piece is None:
                pieces = [vocab.unk_token]
                break
            pieces.append(piece)
            start = end
        output.extend(pieces)
    return output


@dataclass(frozen=True)
class UnkReport:
    """Unknown-token percentages per text plus corpus aggregates."""

    per_text_rate: tuple[float, ...]
    mean: float
    std: float

    def as_dict(self, include_per_text: bool = False) -> dict:
        report: dict = {"texts": len(self.per_text_rate), "mean": self.mean, "std": self.std}
        if include_per_text:
            report["per_text_rate"] = list(self.per_text_rate)
        return report


def unk_report(texts: list[str], vocab: Vocabulary) -> UnkReport:
    """Per-text unknown percentage with corpus mean and population std.

    A text that yields no tokens at all counts as rate 0. Raises
    ValueError on an empty corpus.
    """
    if not texts:
        raise ValueError("cannot compute unknown-token statistics of an empty corpus")
    rates = []
    for text in texts:
        tokens = tokenize(text, vocab)
        if not tokens:
            rates.append(0.0)
            continue
        unk = sum(1 for t in tokens if t == vocab.unk_token)
        rates.append(100.0 * unk / len(tokens))
    return UnkReport(
        per_text_rate=tuple(rates),
        mean=statistics.fmean(rates),
        std=statistics.pstdev(rates),
    )
