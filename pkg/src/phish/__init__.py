"""Phonetic-substitution perturbation toolkit for Korean text.

Perturbs Hangul syllables by swapping jamos for phonetically similar
ones at a controlled ratio, and ships the measurement side: a
canonicalization defense primitive, a per-jamo transcriber, and
unknown-token statistics under a fixed subword vocabulary.
"""

__version__ = "0.1.0"

from .attack import (
    AttackMode,
    AttackOutcome,
    AttackPlan,
    PerturbationConfig,
    Substitution,
    phish,
    syllable_attack,
    vulnerable_search,
)
from .hangul import (
    Jamo,
    JamoPosition,
    Syllable,
    TextUnit,
    compose,
    decompose,
    segment,
)
from .lookup import LookupTable, PhoneSet, default_table
from .normalize import IpaTable, PhoneSequence, canonicalize, transcribe
from .tokenizer import UnkReport, Vocabulary, load_vocab, tokenize, unk_report

__all__ = [
    "AttackMode",
    "AttackOutcome",
    "AttackPlan",
    "IpaTable",
    "Jamo",
    "JamoPosition",
    "LookupTable",
    "PerturbationConfig",
    "PhoneSequence",
    "PhoneSet",
    "Substitution",
    "Syllable",
    "TextUnit",
    "UnkReport",
    "Vocabulary",
    "canonicalize",
    "compose",
    "decompose",
    "default_table",
    "load_vocab",
    "phish",
    "segment",
    "syllable_attack",
    "tokenize",
    "transcribe",
    "unk_report",
    "vulnerable_search",
]
