"""Phonetic substitution table: which jamos sound alike.

Jamos are grouped into sets that share a base phone (5 onset sets, 7
nucleus sets, 6 coda sets). Onset and nucleus sets partition their
jamos; two coda jamos (ㄺ, ㄼ) belong to two sets each because the
standard pronunciation rule neutralizes them differently by context.

Two readings of overlapping membership are supported:

* ``union`` (default): a jamo may be replaced by any member of any set
  containing it.
* ``first-set``: each jamo belongs exclusively to the first set listing
  it, making the coda sets a partition as well.

The table ships as a TSV data file so it can be audited and swapped:
one set per line, ``<position>\\t<base_phone>\\t<members>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .hangul import Jamo, JamoPosition, Syllable, jamo_from_char

CODA_OVERLAP_MODES = ("union", "first-set")

_EXPECTED_SET_COUNTS = {
    JamoPosition.ONSET: 5,
    JamoPosition.NUCLEUS: 7,
    JamoPosition.CODA: 6,
}


@dataclass(frozen=True)
class PhoneSet:
    """Jamos of one position sharing a base phone; first member is the
    set's representative."""

    position: JamoPosition
    base_phone: str
    members: tuple[Jamo, ...]

    @property
    def representative(self) -> Jamo:
        return self.members[0]


def parse_table_rows(text: str) -> list[tuple[JamoPosition, str, str]]:
    """Parse the shared TSV line format into (position, phone, members) rows."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 3 tab-separated fields")
        position_name, phone, members = parts
        try:
            position = JamoPosition(position_name)
        except ValueError:
            raise ValueError(f"line {lineno}: unknown position {position_name!r}") from None
        if not phone:
            raise ValueError(f"line {lineno}: empty phone label")
        rows.append((position, phone, members))
    return rows


class LookupTable:
    """Answers which jamos are substitutable for a given jamo."""

    def __init__(self, sets: list[PhoneSet], coda_overlap: str = "union") -> None:
        if coda_overlap not in CODA_OVERLAP_MODES:
            raise ValueError(f"coda_overlap must be one of {CODA_OVERLAP_MODES}")
        self.sets = tuple(sets)
        self.coda_overlap = coda_overlap
        self._validate()

        # Containing sets per jamo, preserving table row order.
        self._containing: dict[Jamo, list[PhoneSet]] = {}
        for phone_set in self.sets:
            for member in phone_set.members:
                self._containing.setdefault(member, []).append(phone_set)

        self._alternatives: dict[Jamo, tuple[Jamo, ...]] = {}
        for jamo, containing in self._containing.items():
            if coda_overlap == "union":
                pool: list[Jamo] = []
                for phone_set in containing:
                    for member in phone_set.members:
                        if member != jamo and member not in pool:
                            pool.append(member)
            else:
                home = containing[0]
                pool = [
                    member
                    for member in home.members
                    if member != jamo and self._containing[member][0] is home
                ]
            self._alternatives[jamo] = tuple(pool)

    def _validate(self) -> None:
        for position, expected in _EXPECTED_SET_COUNTS.items():
            got = sum(1 for s in self.sets if s.position is position)
            if got != expected:
                raise ValueError(f"expected {expected} {position.value} sets, got {got}")
        for phone_set in self.sets:
            if len(phone_set.members) < 2:
                raise ValueError(
                    f"{phone_set.position.value} set {phone_set.base_phone} has "
                    f"fewer than 2 members"
                )
            if len(set(phone_set.members)) != len(phone_set.members):
                raise ValueError(
                    f"duplicate member in {phone_set.position.value} set "
                    f"{phone_set.base_phone}"
                )
        # Onset and nucleus sets must not overlap; only codas may.
        for position in (JamoPosition.ONSET, JamoPosition.NUCLEUS):
            seen: set[Jamo] = set()
            for phone_set in self.sets:
                if phone_set.position is not position:
                    continue
                overlap = seen.intersection(phone_set.members)
                if overlap:
                    raise ValueError(
                        f"{position.value} sets overlap on "
                        f"{sorted(j.display_char for j in overlap)}"
                    )
                seen.update(phone_set.members)

    @classmethod
    def from_text(cls, text: str, coda_overlap: str = "union") -> LookupTable:
        sets = []
        for position, phone, members in parse_table_rows(text):
            jamos = tuple(jamo_from_char(position, ch) for ch in members)
            sets.append(PhoneSet(position, phone, jamos))
        return cls(sets, coda_overlap=coda_overlap)

    @classmethod
    def from_file(cls, path: str | Path, coda_overlap: str = "union") -> LookupTable:
        text = Path(path).read_text(encoding="utf-8")
        return cls.from_text(text, coda_overlap=coda_overlap)

    def containing_sets(self, jamo: Jamo) -> tuple[PhoneSet, ...]:
        """Sets that list this jamo, in table order."""
        return tuple(self._containing.get(jamo, ()))

    def alternatives(self, jamo: Jamo) -> tuple[Jamo, ...]:
        """Jamos substitutable for this one, minus the jamo itself.

        Under ``union``, the pool is every member of every containing
        set; under ``first-set``, only the jamos exclusively assigned to
        this jamo's first containing set. Empty for a jamo in no set and
        for the absent coda.
        """
        return self._alternatives.get(jamo, ())

    def is_substitutable(self, jamo: Jamo) -> bool:
        return bool(self._alternatives.get(jamo))

    def canonical(self, jamo: Jamo) -> Jamo:
        """Representative of the jamo's first containing set, else the
        jamo itself."""
        containing = self._containing.get(jamo)
        if not containing:
            return jamo
        return containing[0].representative

    def substitutable_count(self, syllable: Syllable) -> int:
        """How many of the syllable's present jamos have alternatives."""
        return sum(1 for j in syllable.jamos() if self.is_substitutable(j))

    def serialize(self) -> str:
        """Table contents back in the TSV file format."""
        lines = [
            "{}\t{}\t{}".format(
                s.position.value,
                s.base_phone,
                "".join(j.display_char for j in s.members),
            )
            for s in self.sets
        ]
        return "\n".join(lines) + "\n"


def default_table_text() -> str:
    return (
        resources.files(__package__).joinpath("data/lookup_table.tsv").read_text("utf-8")
    )


@lru_cache(maxsize=None)
def default_table(coda_overlap: str = "union") -> LookupTable:
    """The embedded substitution table, loaded once per overlap mode."""
    return LookupTable.from_text(default_table_text(), coda_overlap=coda_overlap)
