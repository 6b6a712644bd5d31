"""Ratio-controlled phonetic substitution of Korean text.

The attack runs in three stages:

1. vulnerable search: classify each syllable by how many of its jamos
   have phonetic alternatives (two or more substitutable jamos -> the
   "double" list, exactly one -> the "single" list, none -> untouchable).
2. target selection: shuffle both lists, then drain the double list
   first, one syllable at a time, until the attacked fraction of
   vulnerable syllables reaches the requested ratio.
3. per-syllable substitution: shuffle the syllable's jamos and replace
   them with random same-set alternatives, one jamo in single mode, up
   to two in dual mode.

All randomness comes from one ``random.Random(seed)`` stream (Mersenne
Twister) consumed in a fixed order: shuffle the double list, shuffle the
single list, then per attacked syllable one shuffle of its jamo list
followed by one uniform draw per substitution. Shuffled target lists are
consumed front to back. Identical (text, config) therefore reproduce
identical output; outputs are not expected to match other tools' RNGs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from . import hangul
from .hangul import Jamo, JamoPosition, Syllable, TextUnit
from .lookup import LookupTable, default_table


class AttackMode(Enum):
    """Degree of attack: how many jamos to substitute per syllable."""

    SINGLE = "single"
    DUAL = "dual"

    @property
    def jamo_budget(self) -> int:
        return 1 if self is AttackMode.SINGLE else 2


@dataclass(frozen=True)
class PerturbationConfig:
    """Attack parameters: fraction of vulnerable syllables, degree, seed."""

    ratio: float
    mode: AttackMode
    seed: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.ratio <= 1.0:
            raise ValueError(f"ratio must be in [0, 1], got {self.ratio}")


@dataclass(frozen=True)
class AttackPlan:
    """Vulnerable-syllable indices found by the search stage."""

    double_indices: tuple[int, ...]
    single_indices: tuple[int, ...]

    @property
    def n_vulnerable(self) -> int:
        return len(self.double_indices) + len(self.single_indices)


@dataclass(frozen=True)
class Substitution:
    """Audit record: one jamo replaced inside one text unit."""

    unit_index: int
    position: JamoPosition
    original: Jamo
    replacement: Jamo


@dataclass(frozen=True)
class AttackOutcome:
    perturbed_text: str
    n_vulnerable: int
    n_attacked: int
    substitutions: tuple[Substitution, ...]


def vulnerable_search(
    units: list[TextUnit], table: LookupTable | None = None
) -> AttackPlan:
    """Classify syllable units by substitutable-jamo count.

    Indices with two or more substitutable jamos go to double_indices,
    exactly one to single_indices, in ascending order. Non-syllable
    units are skipped.
    """
    table = table or default_table()
    double_indices = []
    single_indices = []
    for index, unit in enumerate(units):
        if unit.syllable is None:
            continue
        count = table.substitutable_count(unit.syllable)
        if count >= 2:
            double_indices.append(index)
        elif count == 1:
            single_indices.append(index)
    return AttackPlan(tuple(double_indices), tuple(single_indices))


def syllable_attack(
    syllable: Syllable,
    mode: AttackMode,
    rng: random.Random,
    table: LookupTable | None = None,
) -> Syllable:
    """Replace up to ``mode.jamo_budget`` jamos with random alternatives.

    The present jamos are shuffled, then walked in that order; each
    substitutable jamo is swapped for a uniformly drawn member of its
    alternative set until the budget is spent or the list runs out.
    Raises ValueError if no jamo is substitutable (the search stage
    never selects such a syllable).
    """
    table = table or default_table()
    jamos = list(syllable.jamos())
    rng.shuffle(jamos)
    substituted = 0
    result = syllable
    for jamo in jamos:
        alternatives = table.alternatives(jamo)
        if alternatives:
            result = result.replace(rng.choice(alternatives))
            substituted += 1
        if substituted == mode.jamo_budget:
            break
    if substituted == 0:
        raise ValueError(f"syllable {syllable} has no substitutable jamo")
    return result


def expected_attack_count(ratio: float, n_vulnerable: int) -> int:
    """Closed form of the attack loop's stopping rule."""
    if n_vulnerable == 0:
        return 0
    return min(math.ceil(ratio * n_vulnerable), n_vulnerable)


def phish(
    text: str, config: PerturbationConfig, table: LookupTable | None = None
) -> AttackOutcome:
    """Perturb a fraction of the text's vulnerable syllables in place.

    Stops as soon as attacked/vulnerable reaches config.ratio, or when
    both target lists are exhausted; double-list targets are always
    drained before single-list ones. Unattacked units are carried
    through character-identical.
    """
    table = table or default_table()
    units = hangul.segment(text)
    plan = vulnerable_search(units, table)

    rng = random.Random(config.seed)
    double_order = list(plan.double_indices)
    rng.shuffle(double_order)
    single_order = list(plan.single_indices)
    rng.shuffle(single_order)

    n_vulnerable = plan.n_vulnerable
    n_attacked = 0
    substitutions: list[Substitution] = []
    if n_vulnerable > 0:
        for index in double_order + single_order:
            if n_attacked / n_vulnerable >= config.ratio:
                break
            original = units[index].syllable
            assert original is not None
            attacked = syllable_attack(original, config.mode, rng, table)
            for before, after in zip(
                (original.onset, original.nucleus, original.coda),
                (attacked.onset, attacked.nucleus, attacked.coda),
            ):
                if before != after:
                    substitutions.append(
                        Substitution(index, before.position, before, after)
                    )
            units[index] = TextUnit(hangul.compose(attacked), attacked)
            n_attacked += 1

    return AttackOutcome(
        perturbed_text=hangul.render(units),
        n_vulnerable=n_vulnerable,
        n_attacked=n_attacked,
        substitutions=tuple(substitutions),
    )
