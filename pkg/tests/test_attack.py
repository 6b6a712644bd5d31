"""Attack algorithm tests: search, per-syllable substitution, full runs."""

from __future__ import annotations

import math
import random

import pytest

from phish.attack import (
    AttackMode,
    AttackOutcome,
    PerturbationConfig,
    expected_attack_count,
    phish,
    syllable_attack,
    vulnerable_search,
)
from phish.hangul import decompose, segment

from conftest import is_syllable, jamo_triple, random_korean_text

POSITIONS = ("onset", "nucleus", "coda")


def loop_simulation(ratio: float, n_vulnerable: int) -> int:
    """Step-by-step re-enactment of the attack loop's stopping rule."""
    attacked = 0
    while attacked < n_vulnerable and attacked / n_vulnerable < ratio:
        attacked += 1
    return attacked


def changed_positions(before: str, after: str) -> list[str]:
    """Which jamo slots differ between two syllable characters."""
    return [
        name
        for name, old, new in zip(POSITIONS, jamo_triple(before), jamo_triple(after))
        if old != new
    ]


def check_outcome(text: str, outcome: AttackOutcome, oracle, mode: AttackMode) -> None:
    """Assert the audit trail against the independent oracle."""
    source = "".join(u.char for u in segment(text))
    perturbed = outcome.perturbed_text
    assert len(perturbed) == len(source)

    by_unit: dict[int, list] = {}
    for sub in outcome.substitutions:
        by_unit.setdefault(sub.unit_index, []).append(sub)
        # validity: replacement drawn from the oracle's alternative pool
        pool = oracle.alternatives(sub.position.value, sub.original.display_char)
        assert sub.replacement.display_char in pool

    assert len(by_unit) == outcome.n_attacked
    for index, (old, new) in enumerate(zip(source, perturbed)):
        if index not in by_unit:
            assert old == new  # locality
            continue
        changed = changed_positions(old, new)
        assert sorted(changed) == sorted(s.position.value for s in by_unit[index])
        budget = 1 if mode is AttackMode.SINGLE else 2
        substitutable = len(oracle.substitutable_jamos(old))
        assert len(changed) == min(budget, substitutable)


def test_vulnerable_search_examples():
    plan = vulnerable_search(segment("김밥"))
    assert plan.double_indices == (0, 1) and plan.single_indices == ()
    plan = vulnerable_search(segment("니"))
    assert plan.double_indices == () and plan.single_indices == (0,)
    plan = vulnerable_search(segment("느"))
    assert plan.double_indices == () and plan.single_indices == ()
    assert plan.n_vulnerable == 0


def test_vulnerable_search_skips_non_syllables():
    plan = vulnerable_search(segment("김 A 니!"))
    assert plan.double_indices == (0,)
    assert plan.single_indices == (4,)


def test_vulnerable_search_matches_oracle(oracle):
    rng = random.Random(11)
    for _ in range(150):
        text = random_korean_text(rng)
        units = segment(text)
        plan = vulnerable_search(units)
        double, single = oracle.vulnerable_split("".join(u.char for u in units))
        assert list(plan.double_indices) == double
        assert list(plan.single_indices) == single


def test_syllable_attack_single_changes_one_jamo(oracle):
    syllable = decompose("김")
    for seed in range(200):
        attacked = syllable_attack(syllable, AttackMode.SINGLE, random.Random(seed))
        changed = changed_positions("김", str(attacked))
        assert len(changed) == 1
        position = changed[0]
        index = POSITIONS.index(position)
        old = decompose("김").jamos()[index].display_char
        new = str(attacked)
        new_char = decompose(new).jamos()[index].display_char
        assert new_char in oracle.alternatives(position, old)


def test_syllable_attack_dual_caps_at_substitutable_count():
    # 니 has one substitutable jamo; dual mode still changes just that one
    syllable = decompose("니")
    for seed in range(50):
        attacked = syllable_attack(syllable, AttackMode.DUAL, random.Random(seed))
        assert str(attacked) == "늬"


def test_syllable_attack_dual_changes_two_when_possible():
    syllable = decompose("김")
    for seed in range(100):
        attacked = syllable_attack(syllable, AttackMode.DUAL, random.Random(seed))
        assert len(changed_positions("김", str(attacked))) == 2


def test_syllable_attack_deterministic_under_fixed_seed():
    syllable = decompose("밥")
    first = syllable_attack(syllable, AttackMode.DUAL, random.Random(99))
    second = syllable_attack(syllable, AttackMode.DUAL, random.Random(99))
    assert first == second


def test_syllable_attack_rejects_unattackable_syllable():
    with pytest.raises(ValueError):
        syllable_attack(decompose("느"), AttackMode.SINGLE, random.Random(0))


def test_phish_ratio_zero_is_identity():
    outcome = phish("김밥", PerturbationConfig(0.0, AttackMode.SINGLE, 5))
    assert outcome.perturbed_text == "김밥"
    assert outcome.n_attacked == 0
    assert outcome.n_vulnerable == 2
    assert outcome.substitutions == ()


def test_phish_full_ratio_attacks_everything(oracle):
    outcome = phish("김밥", PerturbationConfig(1.0, AttackMode.SINGLE, 7))
    assert outcome.n_vulnerable == 2
    assert outcome.n_attacked == 2
    check_outcome("김밥", outcome, oracle, AttackMode.SINGLE)


def test_phish_no_vulnerable_units():
    for text in ("", "ABC", "느느"):
        outcome = phish(text, PerturbationConfig(0.7, AttackMode.DUAL, 1))
        assert outcome.perturbed_text == text
        assert outcome.n_vulnerable == 0
        assert outcome.n_attacked == 0


def test_phish_rejects_invalid_ratio():
    with pytest.raises(ValueError):
        PerturbationConfig(-0.01, AttackMode.SINGLE, 0)
    with pytest.raises(ValueError):
        PerturbationConfig(1.01, AttackMode.SINGLE, 0)


def test_count_law_on_random_runs(oracle):
    rng = random.Random(21)
    for _ in range(200):
        text = random_korean_text(rng)
        ratio = rng.choice([0.0, 0.1, 0.2, 0.3, 0.5, 1.0, rng.random()])
        mode = rng.choice(list(AttackMode))
        outcome = phish(text, PerturbationConfig(ratio, mode, rng.randrange(2**32)))
        double, single = oracle.vulnerable_split(outcome.perturbed_text)
        # vulnerability classes are preserved by substitution, so the
        # perturbed text has the same counts; cross-check on the original
        n_v = outcome.n_vulnerable
        assert n_v == len(double) + len(single)
        assert outcome.n_attacked == loop_simulation(ratio, n_v)
        assert outcome.n_attacked == expected_attack_count(ratio, n_v)
        assert outcome.n_attacked == min(math.ceil(ratio * n_v), n_v)


def test_priority_law_double_list_drains_first(oracle):
    rng = random.Random(31)
    checked = 0
    for _ in range(300):
        text = random_korean_text(rng)
        ratio = rng.choice([0.1, 0.2, 0.3, 0.5])
        outcome = phish(
            text, PerturbationConfig(ratio, AttackMode.SINGLE, rng.randrange(2**32))
        )
        double, _ = oracle.vulnerable_split(text)
        attacked = {s.unit_index for s in outcome.substitutions}
        if outcome.n_attacked <= len(double):
            assert attacked <= set(double)
            checked += 1
    assert checked > 50


def test_budget_law_on_random_runs(oracle):
    rng = random.Random(41)
    for _ in range(150):
        text = random_korean_text(rng)
        mode = rng.choice(list(AttackMode))
        config = PerturbationConfig(
            rng.choice([0.1, 0.3, 0.7, 1.0]), mode, rng.randrange(2**32)
        )
        check_outcome(text, phish(text, config), oracle, mode)


def test_determinism():
    rng = random.Random(51)
    for _ in range(30):
        text = random_korean_text(rng)
        config = PerturbationConfig(0.4, AttackMode.DUAL, rng.randrange(2**32))
        assert phish(text, config) == phish(text, config)


def test_mode_dominance():
    rng = random.Random(61)
    for _ in range(100):
        text = random_korean_text(rng)
        ratio = rng.choice([0.1, 0.3, 0.6, 1.0])
        seed = rng.randrange(2**32)
        single = phish(text, PerturbationConfig(ratio, AttackMode.SINGLE, seed))
        dual = phish(text, PerturbationConfig(ratio, AttackMode.DUAL, seed))
        assert len(dual.substitutions) >= len(single.substitutions)
        assert dual.n_attacked == single.n_attacked


def test_unchanged_text_round_trips_non_bmp():
    # emoji and other astral characters survive segmentation untouched
    text = "김🔥밥 ok"
    outcome = phish(text, PerturbationConfig(0.0, AttackMode.SINGLE, 3))
    assert outcome.perturbed_text == text
