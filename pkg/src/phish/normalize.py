"""Defense-side text primitives: canonicalization and a rule transcriber.

Canonicalization collapses every jamo onto its substitution set's
representative, folding phonetically equivalent spellings (킴 -> 김,
부엌 -> 부억) onto one surface form.

The transcriber emits one base-phone token per jamo: the jamo's
substitution-set phone when it belongs to a set, otherwise a fixed
per-jamo value from a complete fallback table shipped alongside the
package. Codas neutralize to one of the six standard final phones. This
is deliberately a per-jamo engine; it applies no inter-syllable
phonology (liaison, assimilation) and does not try to reproduce any
full-blown phonemizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import hangul
from .hangul import Jamo, JamoPosition, Syllable
from .lookup import LookupTable, default_table, parse_table_rows

# Emitted between adjacent text units so syllable groupings stay visible.
BOUNDARY_MARK = "."

_JAMO_COUNTS = {
    JamoPosition.ONSET: 19,
    JamoPosition.NUCLEUS: 21,
    JamoPosition.CODA: 27,  # absent coda has no pronunciation entry
}


class IpaTable:
    """Complete per-jamo base-phone map used when a jamo is in no set."""

    def __init__(self, phones: dict[Jamo, str]) -> None:
        for position, expected in _JAMO_COUNTS.items():
            got = sum(1 for j in phones if j.position is position)
            if got != expected:
                raise ValueError(
                    f"fallback table covers {got} {position.value} jamos, "
                    f"expected {expected}"
                )
        self._phones = dict(phones)

    @classmethod
    def from_text(cls, text: str) -> IpaTable:
        phones: dict[Jamo, str] = {}
        for position, phone, members in parse_table_rows(text):
            for ch in members:
                jamo = hangul.jamo_from_char(position, ch)
                if jamo in phones:
                    raise ValueError(f"duplicate fallback entry for {jamo!r}")
                phones[jamo] = phone
        return cls(phones)

    @classmethod
    def from_file(cls, path: str | Path) -> IpaTable:
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

    def phone(self, jamo: Jamo) -> str:
        return self._phones[jamo]


@lru_cache(maxsize=None)
def default_ipa_table() -> IpaTable:
    text = (
        resources.files(__package__).joinpath("data/ipa_fallback.tsv").read_text("utf-8")
    )
    return IpaTable.from_text(text)


@dataclass(frozen=True)
class PhoneSequence:
    """Base-phone tokens, one per jamo, with unit boundaries marked."""

    phones: tuple[str, ...]

    def as_text(self) -> str:
        return " ".join(self.phones)


def canonicalize(text: str, table: LookupTable | None = None) -> str:
    """Map every syllable's jamos to their set representatives.

    Non-Hangul characters pass through untouched. Idempotent: the
    representatives are fixed points of the mapping.
    """
    table = table or default_table()
    out = []
    for unit in hangul.segment(text):
        if unit.syllable is None:
            out.append(unit.char)
            continue
        s = unit.syllable
        canonical = Syllable(
            table.canonical(s.onset),
            table.canonical(s.nucleus),
            table.canonical(s.coda),
        )
        out.append(hangul.compose(canonical))
    return "".join(out)


def _strip_slashes(phone: str) -> str:
    return phone[1:-1] if phone.startswith("/") and phone.endswith("/") else phone


def transcribe(
    text: str,
    table: LookupTable | None = None,
    ipa_table: IpaTable | None = None,
) -> PhoneSequence:
    """Per-jamo base-phone transcription of a text.

    Each syllable contributes one token per present jamo (set phone if
    the jamo is in a substitution set, fallback phone otherwise, so
    codas neutralize); non-Hangul characters contribute themselves as
    literal tokens. A boundary mark separates adjacent units.

    Example: 김 -> [k, i, m]
    """
    table = table or default_table()
    ipa_table = ipa_table or default_ipa_table()
    phones: list[str] = []
    for unit in hangul.segment(text):
        if phones:
            phones.append(BOUNDARY_MARK)
        if unit.syllable is None:
            phones.append(unit.char)
            continue
        for jamo in unit.syllable.jamos():
            containing = table.containing_sets(jamo)
            phone = containing[0].base_phone if containing else ipa_table.phone(jamo)
            phones.append(_strip_slashes(phone))
    return PhoneSequence(tuple(phones))
