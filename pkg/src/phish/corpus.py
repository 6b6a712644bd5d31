"""Dataset ingestion, batch perturbation, and run manifests.

Supported corpus formats: jsonl (one object per line), tsv (header row,
fields addressed by column name), and txt (one bare text per line).
Malformed lines abort the run in strict mode and are skipped and
counted in lenient mode, always reported with their line number.

Batch perturbation derives an independent random stream per record by
hashing (seed, record index), so results do not depend on processing
order and records can be perturbed in parallel.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .attack import AttackMode, PerturbationConfig, expected_attack_count, phish
from .hangul import segment
from .lookup import LookupTable, default_table
from .normalize import canonicalize

FORMATS = ("jsonl", "tsv", "txt")


class DataError(Exception):
    """Unreadable or malformed input data."""


@dataclass
class CorpusRecord:
    id: str
    text: str
    label: str = ""
    extras: dict = field(default_factory=dict)


def _check_text(value: object) -> str:
    if not isinstance(value, str):
        raise ValueError(f"text field holds {type(value).__name__}, not a string")
    if not value.strip():
        raise ValueError("text is empty")
    return value


def ingest(
    path: str | Path,
    fmt: str,
    text_field: str = "text",
    label_field: str | None = None,
    strict: bool = True,
) -> tuple[list[CorpusRecord], list[str]]:
    """Read a corpus file into records.

    Returns (records, problems); problems lists skipped lines as
    "line N: reason" strings and is always empty in strict mode, which
    raises DataError at the first offending line instead.
    """
    if fmt not in FORMATS:
        raise DataError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise DataError(f"{path} is not valid UTF-8: {exc}") from exc

    records: list[CorpusRecord] = []
    problems: list[str] = []
    seen_ids: set[str] = set()

    def problem(lineno: int, reason: str) -> None:
        message = f"line {lineno}: {reason}"
        if strict:
            raise DataError(f"{path}: {message}")
        problems.append(message)

    def add(lineno: int, record: CorpusRecord) -> None:
        if record.id in seen_ids:
            problem(lineno, f"duplicate id {record.id!r}")
            return
        seen_ids.add(record.id)
        records.append(record)

    if fmt == "txt":
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                problem(lineno, "text is empty")
                continue
            add(lineno, CorpusRecord(id=f"line-{lineno}", text=line))
        return records, problems

    if fmt == "jsonl":
        for lineno, line in enumerate(lines, start=1):
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                problem(lineno, f"invalid JSON ({exc.msg})")
                continue
            if not isinstance(obj, dict):
                problem(lineno, "line is not a JSON object")
                continue
            if text_field not in obj:
                problem(lineno, f"missing field {text_field!r}")
                continue
            if label_field is not None and label_field not in obj:
                problem(lineno, f"missing field {label_field!r}")
                continue
            try:
                text = _check_text(obj[text_field])
            except ValueError as exc:
                problem(lineno, str(exc))
                continue
            extras = {k: v for k, v in obj.items() if k != text_field and k != label_field}
            record_id = str(extras.get("id", f"line-{lineno}"))
            label = str(obj[label_field]) if label_field is not None else ""
            add(lineno, CorpusRecord(id=record_id, text=text, label=label, extras=extras))
        return records, problems

    # tsv
    if not lines:
        return records, problems
    header = next(csv.reader([lines[0]], dialect="excel-tab"))
    if text_field not in header:
        raise DataError(f"{path}: header has no {text_field!r} column")
    if label_field is not None and label_field not in header:
        raise DataError(f"{path}: header has no {label_field!r} column")
    for lineno, row in enumerate(
        csv.reader(lines[1:], dialect="excel-tab"), start=2
    ):
        if len(row) != len(header):
            problem(lineno, f"expected {len(header)} columns, got {len(row)}")
            continue
        obj = dict(zip(header, row))
        try:
            text = _check_text(obj[text_field])
        except ValueError as exc:
            problem(lineno, str(exc))
            continue
        extras = {k: v for k, v in obj.items() if k != text_field and k != label_field}
        record_id = str(extras.get("id", f"line-{lineno}"))
        label = obj[label_field] if label_field is not None else ""
        add(lineno, CorpusRecord(id=record_id, text=text, label=label, extras=extras))
    return records, problems


def derive_seed(seed: int, index: int) -> int:
    """Per-record 64-bit stream seed, stable in (seed, index) only."""
    digest = hashlib.sha256(f"{seed}:{index}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class RecordStats:
    record_id: str
    n_vulnerable: int
    n_attacked: int


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record of one batch perturbation."""

    ratio: float
    mode: str
    seed: int
    input_path: str | None
    output_path: str | None
    records: tuple[RecordStats, ...]
    skipped: tuple[str, ...]
    tool_version: str = __version__

    @property
    def total_vulnerable(self) -> int:
        return sum(r.n_vulnerable for r in self.records)

    @property
    def total_attacked(self) -> int:
        return sum(r.n_attacked for r in self.records)

    @property
    def achieved_ratio(self) -> float:
        total = self.total_vulnerable
        return self.total_attacked / total if total else 0.0

    def as_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "config": {"ratio": self.ratio, "mode": self.mode, "seed": self.seed},
            "input_path": self.input_path,
            "output_path": self.output_path,
            "records": [
                {
                    "id": r.record_id,
                    "n_vulnerable": r.n_vulnerable,
                    "n_attacked": r.n_attacked,
                }
                for r in self.records
            ],
            "skipped": list(self.skipped),
            "total_vulnerable": self.total_vulnerable,
            "total_attacked": self.total_attacked,
            "achieved_ratio": self.achieved_ratio,
        }


def perturb_corpus(
    records: list[CorpusRecord],
    config: PerturbationConfig,
    table: LookupTable | None = None,
    input_path: str | None = None,
    output_path: str | None = None,
    skipped: list[str] | None = None,
) -> tuple[list[CorpusRecord], RunManifest]:
    """Perturb every record's text; labels and extras pass through.

    Each record gets its own stream seeded from (config.seed, index).
    The original text is kept under the "text_original" extras key.
    """
    table = table or default_table()
    out_records: list[CorpusRecord] = []
    stats: list[RecordStats] = []
    for index, record in enumerate(records):
        record_config = PerturbationConfig(
            ratio=config.ratio, mode=config.mode, seed=derive_seed(config.seed, index)
        )
        outcome = phish(record.text, record_config, table)
        expected = expected_attack_count(config.ratio, outcome.n_vulnerable)
        if outcome.n_attacked != expected:
            raise RuntimeError(
                f"record {record.id}: attacked {outcome.n_attacked} of "
                f"{outcome.n_vulnerable} vulnerable syllables, expected {expected}"
            )
        out_records.append(
            CorpusRecord(
                id=record.id,
                text=outcome.perturbed_text,
                label=record.label,
                extras={**record.extras, "text_original": record.text},
            )
        )
        stats.append(RecordStats(record.id, outcome.n_vulnerable, outcome.n_attacked))
    manifest = RunManifest(
        ratio=config.ratio,
        mode=config.mode.value,
        seed=config.seed,
        input_path=input_path,
        output_path=output_path,
        records=tuple(stats),
        skipped=tuple(skipped or ()),
    )
    return out_records, manifest


def canonicalize_corpus(
    records: list[CorpusRecord], table: LookupTable | None = None
) -> list[CorpusRecord]:
    """Canonicalize every record's text, keeping the original alongside."""
    return [
        CorpusRecord(
            id=r.id,
            text=canonicalize(r.text, table),
            label=r.label,
            extras={**r.extras, "text_original": r.text},
        )
        for r in records
    ]


def write_corpus(
    records: list[CorpusRecord],
    path: str | Path,
    fmt: str,
    text_field: str = "text",
    label_field: str | None = None,
) -> None:
    """Write records in the given format; jsonl/tsv carry extras through.

    txt has no field structure, so only the text lines are written.
    """
    path = Path(path)
    if fmt == "txt":
        path.write_text(
            "".join(r.text + "\n" for r in records), encoding="utf-8"
        )
        return
    if fmt == "jsonl":
        lines = []
        for r in records:
            obj = dict(r.extras)
            obj[text_field] = r.text
            if label_field is not None:
                obj[label_field] = r.label
            lines.append(json.dumps(obj, ensure_ascii=False))
        path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
        return
    if fmt == "tsv":
        extra_keys: list[str] = []
        for r in records:
            for key in r.extras:
                if key not in extra_keys:
                    extra_keys.append(key)
        header = list(extra_keys)
        header.append(text_field)
        if label_field is not None:
            header.append(label_field)
        buffer = io.StringIO()
        writer = csv.writer(buffer, dialect="excel-tab", lineterminator="\n")
        writer.writerow(header)
        for r in records:
            row = [str(r.extras.get(k, "")) for k in extra_keys]
            row.append(r.text)
            if label_field is not None:
                row.append(r.label)
            writer.writerow(row)
        path.write_text(buffer.getvalue(), encoding="utf-8")
        return
    raise DataError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def inspect_report(text: str, table: LookupTable | None = None) -> str:
    """Human-readable per-syllable vulnerability breakdown."""
    table = table or default_table()
    units = segment(text)
    if not units:
        return ""
    lines: list[str] = []
    n_double = n_single = 0
    for index, unit in enumerate(units):
        if unit.syllable is None:
            lines.append(f"[{index}] {unit.char!r}  (not a Hangul syllable)")
            continue
        syllable = unit.syllable
        jamo_chars = " + ".join(j.display_char for j in syllable.jamos())
        count = table.substitutable_count(syllable)
        if count >= 2:
            cls = "double"
            n_double += 1
        elif count == 1:
            cls = "single"
            n_single += 1
        else:
            cls = "none"
        lines.append(
            f"[{index}] {unit.char} = {jamo_chars}  substitutable: {count}  class: {cls}"
        )
        for jamo in syllable.jamos():
            alternatives = table.alternatives(jamo)
            shown = (
                ", ".join(a.display_char for a in alternatives) if alternatives else "-"
            )
            lines.append(f"      {jamo.position.value:<7} {jamo.display_char}: {shown}")
    lines.append(
        f"vulnerable syllables: {n_double + n_single} of {len(units)} units "
        f"(double: {n_double}, single: {n_single})"
    )
    return "\n".join(lines)
