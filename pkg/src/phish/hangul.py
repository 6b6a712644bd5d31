"""Codec between precomposed Hangul syllables and their constituent jamos.

A precomposed syllable block (가..힣, 11,172 code points) encodes an
(onset, nucleus, coda) triple arithmetically:

    code = 0xAC00 + (onset_index * 21 + nucleus_index) * 28 + coda_index

Onset indices run 0..18, nucleus 0..20, coda 0..27 with coda 0 meaning
"no final consonant". Jamos are displayed with compatibility-block
characters (ㄱ, ㅣ, ...), which is also how the substitution table files
are written.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Final

SYLLABLE_BASE: Final = 0xAC00
SYLLABLE_LAST: Final = 0xD7A3
SYLLABLE_COUNT: Final = 11172

# Compatibility jamo per positional index, standard Unicode ordering.
ONSET_CHARS: Final[tuple[str, ...]] = (
    "ㄱ", "ㄲ", "ㄴ", "ㄷ", "ㄸ", "ㄹ", "ㅁ", "ㅂ", "ㅃ", "ㅅ",
    "ㅆ", "ㅇ", "ㅈ", "ㅉ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ",
)
NUCLEUS_CHARS: Final[tuple[str, ...]] = (
    "ㅏ", "ㅐ", "ㅑ", "ㅒ", "ㅓ", "ㅔ", "ㅕ", "ㅖ", "ㅗ", "ㅘ",
    "ㅙ", "ㅚ", "ㅛ", "ㅜ", "ㅝ", "ㅞ", "ㅟ", "ㅠ", "ㅡ", "ㅢ", "ㅣ",
)
# Index 0 is "no coda".
CODA_CHARS: Final[tuple[str, ...]] = (
    "", "ㄱ", "ㄲ", "ㄳ", "ㄴ", "ㄵ", "ㄶ", "ㄷ", "ㄹ", "ㄺ",
    "ㄻ", "ㄼ", "ㄽ", "ㄾ", "ㄿ", "ㅀ", "ㅁ", "ㅂ", "ㅄ", "ㅅ",
    "ㅆ", "ㅇ", "ㅈ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ",
)


class JamoPosition(Enum):
    """Slot a jamo occupies inside a syllable block."""

    ONSET = "onset"
    NUCLEUS = "nucleus"
    CODA = "coda"


_CHARS_BY_POSITION: Final[dict[JamoPosition, tuple[str, ...]]] = {
    JamoPosition.ONSET: ONSET_CHARS,
    JamoPosition.NUCLEUS: NUCLEUS_CHARS,
    JamoPosition.CODA: CODA_CHARS,
}
_INDEX_BY_CHAR: Final[dict[JamoPosition, dict[str, int]]] = {
    pos: {ch: i for i, ch in enumerate(chars) if ch}
    for pos, chars in _CHARS_BY_POSITION.items()
}


@dataclass(frozen=True)
class Jamo:
    """One positional jamo, identified by (position, index)."""

    position: JamoPosition
    index: int

    def __post_init__(self) -> None:
        limit = len(_CHARS_BY_POSITION[self.position])
        if not 0 <= self.index < limit:
            raise ValueError(
                f"{self.position.value} index {self.index} out of range 0..{limit - 1}"
            )

    @property
    def display_char(self) -> str:
        """Compatibility-block character; empty string for the absent coda."""
        return _CHARS_BY_POSITION[self.position][self.index]

    @property
    def is_absent(self) -> bool:
        return self.position is JamoPosition.CODA and self.index == 0

    def __repr__(self) -> str:
        shown = self.display_char or "-"
        return f"Jamo({self.position.value} {shown!r})"


NO_CODA: Final = Jamo(JamoPosition.CODA, 0)


def jamo_from_char(position: JamoPosition, char: str) -> Jamo:
    """Jamo for a compatibility-block character in the given position.

    The empty string maps to the absent coda. Raises ValueError for a
    character that is not valid in that position.
    """
    if char == "" and position is JamoPosition.CODA:
        return NO_CODA
    try:
        return Jamo(position, _INDEX_BY_CHAR[position][char])
    except KeyError:
        raise ValueError(f"{char!r} is not a valid {position.value} jamo") from None


@dataclass(frozen=True)
class Syllable:
    """An (onset, nucleus, coda) triple; coda may be the absent jamo."""

    onset: Jamo
    nucleus: Jamo
    coda: Jamo = NO_CODA

    def __post_init__(self) -> None:
        if self.onset.position is not JamoPosition.ONSET:
            raise ValueError(f"onset slot holds {self.onset!r}")
        if self.nucleus.position is not JamoPosition.NUCLEUS:
            raise ValueError(f"nucleus slot holds {self.nucleus!r}")
        if self.coda.position is not JamoPosition.CODA:
            raise ValueError(f"coda slot holds {self.coda!r}")

    def jamos(self) -> tuple[Jamo, ...]:
        """The present jamos, in onset, nucleus, coda order."""
        if self.coda.is_absent:
            return (self.onset, self.nucleus)
        return (self.onset, self.nucleus, self.coda)

    def replace(self, jamo: Jamo) -> Syllable:
        """Copy of this syllable with the slot for jamo's position swapped."""
        parts = {
            JamoPosition.ONSET: self.onset,
            JamoPosition.NUCLEUS: self.nucleus,
            JamoPosition.CODA: self.coda,
        }
        parts[jamo.position] = jamo
        return Syllable(
            parts[JamoPosition.ONSET],
            parts[JamoPosition.NUCLEUS],
            parts[JamoPosition.CODA],
        )

    def __str__(self) -> str:
        return compose(self)


def decompose(char: str) -> Syllable | None:
    """Jamo triple of a precomposed syllable character, or None.

    Total over all single characters; anything outside 가..힣 maps to None.

    Example: 김 → (ㄱ, ㅣ, ㅁ)
    """
    if len(char) != 1:
        raise ValueError(f"expected a single character, got {char!r}")
    code = ord(char) - SYLLABLE_BASE
    if not 0 <= code < SYLLABLE_COUNT:
        return None
    return Syllable(
        Jamo(JamoPosition.ONSET, code // (21 * 28)),
        Jamo(JamoPosition.NUCLEUS, (code % (21 * 28)) // 28),
        Jamo(JamoPosition.CODA, code % 28),
    )


def compose(syllable: Syllable) -> str:
    """The precomposed character for a jamo triple; inverse of decompose."""
    return chr(
        SYLLABLE_BASE
        + (syllable.onset.index * 21 + syllable.nucleus.index) * 28
        + syllable.coda.index
    )


@dataclass(frozen=True)
class TextUnit:
    """One character of a segmented text, decoded when it is a syllable."""

    char: str
    syllable: Syllable | None = None

    @property
    def is_syllable(self) -> bool:
        return self.syllable is not None


def segment(text: str) -> list[TextUnit]:
    """Split a string into per-character units, decoding syllable blocks.

    The input is composed first (NFC), so sequences of standalone
    conjoining jamos become syllable blocks where possible; everything
    that is not a precomposed syllable afterwards is carried through as
    an opaque unit. Joining the units' chars reproduces the composed
    input exactly.
    """
    composed = unicodedata.normalize("NFC", text)
    return [TextUnit(ch, decompose(ch)) for ch in composed]


def render(units: list[TextUnit]) -> str:
    """Reserialize segmented units back into a string."""
    return "".join(unit.char for unit in units)
