"""Batch manifests: one classification per line, validated before anything runs.

Manifest lines are ``kind<TAB>label<TAB>payload[<TAB>options]`` where kind is
``sgp``, ``complex`` or ``veronese``.  Blank lines and ``#`` lines are skipped.

* ``sgp``: comma-separated generators, ``3,4,5``.
* ``complex``: a path to a complex file (relative to the manifest), or the
  file body inline with ``;`` for newlines, ``n=4;1 2;2 3``.
* ``veronese``: ``d,n`` or ``d=3,n=2``.

The only option is ``field=q`` / ``field=p:<prime>`` for complexes.
"""

from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from .complexes import Field, parse_complex
from .errors import AgrError, InconsistencyError, InputError
from .report import ClassificationReport
from .semigroup import semigroup_from_generators
from .semigroup_rings import classify_local
from .stanley_reisner import classify_sr
from .veronese import VeroneseInstance, classify_veronese

KINDS = ("sgp", "complex", "veronese")


class ManifestError(InputError):
    pass


@dataclass(frozen=True)
class BatchEntry:
    kind: str
    label: str
    payload: str
    field: str = "q"


@dataclass(frozen=True)
class BatchManifest:
    entries: tuple[BatchEntry, ...]


@dataclass(frozen=True)
class BatchRecord:
    label: str
    kind: str
    status: str
    report: Optional[ClassificationReport] = None
    error: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "kind": self.kind,
            "status": self.status,
            "report": self.report.to_dict() if self.report else None,
            "error": self.error,
        }


def parse_gens(text: str) -> list[int]:
    try:
        gens = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"generators must be comma-separated integers, got {text!r}") from None
    if not gens or min(gens) < 1:
        raise InputError(f"generators must be positive integers, got {text!r}")
    return gens


def parse_veronese(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(?:d=)?(\d+)\s*,\s*(?:n=)?(\d+)\s*", text)
    if not m:
        raise InputError(f"veronese payload must be 'd,n' or 'd=<int>,n=<int>', got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _validate(entry: BatchEntry) -> None:
    if entry.kind == "sgp":
        parse_gens(entry.payload)
    elif entry.kind == "veronese":
        parse_veronese(entry.payload)
    else:
        if not re.fullmatch(r"q|p:\d+", entry.field.strip().lower()):
            raise ManifestError(f"field must be 'q' or 'p:<prime>', got {entry.field!r}")
        # syntax only: construction errors (ghost vertices, ...) become records
        try:
            parse_complex(entry.payload)
        except InputError:
            pass
        except ValueError as exc:
            raise ManifestError(str(exc)) from None


def parse_manifest(text: str, base_dir: Path | None = None) -> BatchManifest:
    base_dir = base_dir or Path(".")
    entries = []
    labels = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cols = raw.rstrip("\n").split("\t")
        if len(cols) not in (3, 4):
            raise ManifestError(f"line {lineno}: expected kind<TAB>label<TAB>payload")
        kind, label, payload = (c.strip() for c in cols[:3])
        if kind not in KINDS:
            raise ManifestError(f"line {lineno}: unknown kind {kind!r}")
        if label in labels:
            raise ManifestError(f"line {lineno}: duplicate label {label!r}")
        labels.add(label)
        field = "q"
        if len(cols) == 4:
            key, _, val = cols[3].strip().partition("=")
            if key != "field":
                raise ManifestError(f"line {lineno}: unknown option {cols[3]!r}")
            field = val
        if kind == "complex":
            if payload.startswith("n="):
                payload = payload.replace(";", "\n")
            else:
                path = base_dir / payload
                if not path.is_file():
                    raise ManifestError(f"line {lineno}: no complex file {payload!r}")
                payload = path.read_text()
        entry = BatchEntry(kind, label, payload, field)
        try:
            _validate(entry)
        except InputError as exc:
            raise ManifestError(f"line {lineno}: {exc}") from None
        entries.append(entry)
    return BatchManifest(tuple(entries))


def classify_entry(entry: BatchEntry) -> ClassificationReport:
    if entry.kind == "sgp":
        return classify_local(semigroup_from_generators(parse_gens(entry.payload)))
    if entry.kind == "veronese":
        return classify_veronese(VeroneseInstance(*parse_veronese(entry.payload)))
    return classify_sr(parse_complex(entry.payload), Field.parse(entry.field))


def run_entry(entry: BatchEntry) -> BatchRecord:
    try:
        report = classify_entry(entry)
    except InconsistencyError as exc:
        return BatchRecord(entry.label, entry.kind, "inconsistent", error=str(exc))
    except (AgrError, ValueError) as exc:
        return BatchRecord(entry.label, entry.kind, "error", error=f"{type(exc).__name__}: {exc}")
    return BatchRecord(entry.label, entry.kind, "ok", report=report)


def run_batch(manifest: BatchManifest, workers: int = 1) -> list[BatchRecord]:
    """One record per entry, in manifest order."""
    entries = list(manifest.entries)
    if workers <= 1 or len(entries) <= 1:
        return [run_entry(e) for e in entries]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_entry, entries))


def summarize(records: Sequence[BatchRecord]) -> dict[str, int]:
    status = Counter(r.status for r in records)
    out = {
        "entries": len(records),
        "ok": status["ok"],
        "error": status["error"],
        "inconsistent": status["inconsistent"],
    }
    for flag in ("cohen_macaulay", "gorenstein", "almost_gorenstein", "pseudo_gorenstein"):
        out[flag] = sum(1 for r in records if r.report and getattr(r.report, flag) is True)
    return out


def summary_line(summary: dict[str, int]) -> str:
    return "summary: " + " ".join(f"{k}={v}" for k, v in summary.items())
