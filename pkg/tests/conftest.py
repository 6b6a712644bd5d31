"""Shared fixtures: an independent substitution oracle and text generators.

The oracle below is a second transcription of the phone-set table,
written as per-row character lists and expanded with its own set logic.
Tests use it to check the package's answers without going through the
package's own parsing or precomputation.
"""

from __future__ import annotations

import random

import pytest

SYLLABLE_BASE = 0xAC00

ONSETS = "ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ"
NUCLEI = "ㅏㅐㅑㅒㅓㅔㅕㅖㅗㅘㅙㅚㅛㅜㅝㅞㅟㅠㅡㅢㅣ"
CODAS = ["", *"ㄱㄲㄳㄴㄵㄶㄷㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅄㅅㅆㅇㅈㅊㅋㅌㅍㅎ"]

# One row per phone set, in table order.
ORACLE_ROWS = [
    ("onset", "/k/", ["ㄱ", "ㄲ", "ㅋ"]),
    ("onset", "/t/", ["ㄷ", "ㄸ", "ㅌ"]),
    ("onset", "/p/", ["ㅂ", "ㅃ", "ㅍ"]),
    ("onset", "/t͡ɕ/", ["ㅈ", "ㅉ", "ㅊ"]),
    ("onset", "/s/", ["ㅅ", "ㅆ"]),
    ("nucleus", "/i/", ["ㅣ", "ㅢ"]),
    ("nucleus", "/u/", ["ㅜ", "ㅠ"]),
    ("nucleus", "/o/", ["ㅗ", "ㅛ"]),
    ("nucleus", "/ʌ/", ["ㅓ", "ㅝ", "ㅕ"]),
    ("nucleus", "/a/", ["ㅏ", "ㅘ", "ㅑ"]),
    ("nucleus", "/e/", ["ㅔ", "ㅞ", "ㅖ"]),
    ("nucleus", "/ɛ/", ["ㅐ", "ㅙ", "ㅒ"]),
    ("coda", "/k/", ["ㄱ", "ㄲ", "ㅋ", "ㄳ", "ㄺ"]),
    ("coda", "/n/", ["ㄴ", "ㄵ", "ㄶ"]),
    ("coda", "/t/", ["ㅅ", "ㅆ", "ㄷ", "ㅌ", "ㅈ", "ㅊ", "ㅎ"]),
    ("coda", "/l/", ["ㄹ", "ㄺ", "ㄼ", "ㄽ", "ㄾ", "ㅀ"]),
    ("coda", "/m/", ["ㅁ", "ㄻ"]),
    ("coda", "/p/", ["ㅂ", "ㅍ", "ㄼ", "ㅄ", "ㄿ"]),
]


class SubstitutionOracle:
    """Alternative answers derived straight from ORACLE_ROWS."""

    def __init__(self) -> None:
        self.rows = ORACLE_ROWS

    def rows_for(self, position: str) -> list[list[str]]:
        return [members for pos, _, members in self.rows if pos == position]

    def alternatives(self, position: str, char: str) -> set[str]:
        pool: set[str] = set()
        for members in self.rows_for(position):
            if char in members:
                pool.update(members)
        pool.discard(char)
        return pool

    def substitutable_jamos(self, syllable_char: str) -> list[tuple[str, str]]:
        """(position, char) pairs of the syllable's replaceable jamos."""
        onset, nucleus, coda = jamo_triple(syllable_char)
        present = [("onset", ONSETS[onset]), ("nucleus", NUCLEI[nucleus])]
        if coda:
            present.append(("coda", CODAS[coda]))
        return [(pos, ch) for pos, ch in present if self.alternatives(pos, ch)]

    def vulnerable_split(self, text: str) -> tuple[list[int], list[int]]:
        """Ascending double/single index lists over a composed text."""
        double, single = [], []
        for index, ch in enumerate(text):
            if not is_syllable(ch):
                continue
            count = len(self.substitutable_jamos(ch))
            if count >= 2:
                double.append(index)
            elif count == 1:
                single.append(index)
        return double, single


def is_syllable(ch: str) -> bool:
    return 0 <= ord(ch) - SYLLABLE_BASE < 11172


def jamo_triple(ch: str) -> tuple[int, int, int]:
    code = ord(ch) - SYLLABLE_BASE
    return code // 588, (code % 588) // 28, code % 28


def compose_indices(onset: int, nucleus: int, coda: int) -> str:
    return chr(SYLLABLE_BASE + (onset * 21 + nucleus) * 28 + coda)


@pytest.fixture(scope="session")
def oracle() -> SubstitutionOracle:
    return SubstitutionOracle()


def random_korean_text(
    rng: random.Random,
    words: tuple[int, int] = (2, 6),
    word_len: tuple[int, int] = (1, 4),
    ascii_prob: float = 0.15,
) -> str:
    """Synthetic sentence of random syllable blocks with some ASCII mixed in."""
    parts = []
    for _ in range(rng.randint(*words)):
        if rng.random() < ascii_prob:
            parts.append(rng.choice(["ok", "123", "lol", "!!", "a1"]))
        else:
            parts.append(
                "".join(
                    chr(rng.randrange(SYLLABLE_BASE, SYLLABLE_BASE + 11172))
                    for _ in range(rng.randint(*word_len))
                )
            )
    return " ".join(parts)


# Single-set codas whose whole substitution pool canonicalizes back to
# one representative: every member of their row has that row as its
# first containing set. Excludes the /l/ and /p/ rows (their members ㄺ
# and ㄼ canonicalize to an earlier row's representative) plus ㄺ/ㄼ
# themselves; ㅇ is allowed because it is in no set at all.
STABLE_CODA_CHARS = ["", "ㄱ", "ㄲ", "ㅋ", "ㄳ", "ㄴ", "ㄵ", "ㄶ",
                     "ㅅ", "ㅆ", "ㄷ", "ㅌ", "ㅈ", "ㅊ", "ㅎ", "ㅁ", "ㄻ", "ㅇ"]


def random_stable_text(rng: random.Random, length: tuple[int, int] = (4, 12)) -> str:
    """Sentence restricted to jamos whose canonical form survives attack.

    Onset and nucleus sets never overlap, so all are allowed; codas are
    drawn from STABLE_CODA_CHARS so no substitution can land on a jamo
    whose first containing set differs from the set it was drawn from.
    """
    coda_indices = [CODAS.index(ch) for ch in STABLE_CODA_CHARS]
    out = []
    for _ in range(rng.randint(*length)):
        if rng.random() < 0.12:
            out.append(" ")
            continue
        out.append(
            compose_indices(
                rng.randrange(19), rng.randrange(21), rng.choice(coda_indices)
            )
        )
    return "".join(out)
