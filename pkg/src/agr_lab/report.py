"""The classification verdict record and its JSON form.

Tri-state flags are ``True``, ``False`` or ``None`` (unknown).  In JSON an
unknown flag is the string ``"unknown"`` and an absent number is ``null``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from typing import Any, Optional

SEMIGROUP_RING = "SemigroupRing"
STANLEY_REISNER = "StanleyReisner"
VERONESE = "Veronese"
KINDS = (SEMIGROUP_RING, STANLEY_REISNER, VERONESE)

Tri = Optional[bool]

TRI_FIELDS = (
    "cohen_macaulay",
    "gorenstein",
    "almost_gorenstein",
    "pseudo_gorenstein",
    "level",
)

JSON_KEYS = (
    "kind",
    "input",
    "krull_dim",
    "multiplicity",
    "embedding_dim",
    "cohen_macaulay",
    "gorenstein",
    "almost_gorenstein",
    "pseudo_gorenstein",
    "cm_type",
    "a_invariant",
    "level",
    "notes",
)


def tri_to_json(v: Tri) -> Any:
    return "unknown" if v is None else v


def tri_from_json(v: Any) -> Tri:
    if v == "unknown" or v is None:
        return None
    if isinstance(v, bool):
        return v
    raise ValueError(f"bad tri-state value {v!r}")


@dataclass(frozen=True)
class ClassificationReport:
    kind: str
    input: str
    krull_dim: int
    multiplicity: int
    embedding_dim: int
    cohen_macaulay: Tri = None
    gorenstein: Tri = None
    almost_gorenstein: Tri = None
    pseudo_gorenstein: Tri = None
    cm_type: Optional[int] = None
    a_invariant: Optional[int] = None
    level: Tri = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}")
        check_report(self)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for key in JSON_KEYS:
            v = getattr(self, key)
            if key in TRI_FIELDS:
                v = tri_to_json(v)
            elif key == "notes":
                v = list(v)
            out[key] = v
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ClassificationReport:
        missing = set(JSON_KEYS) - set(data)
        if missing:
            raise ValueError(f"report is missing keys {sorted(missing)}")
        kw = {}
        for f in fields(cls):
            v = data[f.name]
            if f.name in TRI_FIELDS:
                v = tri_from_json(v)
            elif f.name == "notes":
                v = tuple(v)
            kw[f.name] = v
        return cls(**kw)

    @classmethod
    def from_json(cls, text: str) -> ClassificationReport:
        return cls.from_dict(json.loads(text))


def check_report(r: ClassificationReport) -> None:
    """Raise ``ValueError`` if the flags contradict each other."""
    if r.gorenstein is True and r.almost_gorenstein is False:
        raise ValueError("Gorenstein ring reported as not almost Gorenstein")
    if r.pseudo_gorenstein is True:
        if r.almost_gorenstein is not True:
            raise ValueError("pseudo-Gorenstein requires almost Gorenstein")
        if r.cm_type is not None and r.cm_type > 2:
            raise ValueError("pseudo-Gorenstein requires type at most 2")
    if r.cm_type is not None and r.gorenstein is not None:
        if (r.cm_type == 1) != r.gorenstein:
            raise ValueError("type 1 must coincide with Gorenstein")
    if r.gorenstein is True and r.cohen_macaulay is False:
        raise ValueError("Gorenstein ring reported as not Cohen-Macaulay")


def pseudo_flag(almost_gorenstein: Tri, cm_type: Optional[int]) -> Tri:
    if almost_gorenstein is False:
        return False
    if almost_gorenstein is None or cm_type is None:
        return None
    return cm_type <= 2


def format_table(r: ClassificationReport) -> str:
    rows = []
    for key in JSON_KEYS:
        if key == "notes":
            continue
        v = getattr(r, key)
        if key in TRI_FIELDS:
            v = tri_to_json(v)
        if isinstance(v, bool):
            v = "true" if v else "false"
        elif v is None:
            v = "-"
        rows.append((key, str(v)))
    lines = [f"{k}: {v}" for k, v in rows]
    lines.extend(f"note: {note}" for note in r.notes)
    return "\n".join(lines)
