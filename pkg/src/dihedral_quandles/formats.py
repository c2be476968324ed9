"""Report documents, polynomial rendering and output schemas.

Machine output is JSON.  A report document looks like::

    {"version": "0.1.0", "quandle": "Conj(D5)",
     "links": [{"name": "hopf_sum", "arcs": 4, "crossings": 4, "total": 160,
                "polynomial": {"3": 60, "2": 90, "1": 10}}],
     "verdicts": [{"a": "...", "b": "...", "verdict": "BY_COUNT"}]}

Polynomial keys are decimal exponents, written highest first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping

import jsonschema

__all__ = [
    "VERSION",
    "REPORT_SCHEMA",
    "TABLE_SCHEMA",
    "CHECK_SCHEMA",
    "GEN_SCHEMA",
    "REPORT_LIST_SCHEMA",
    "ReportFormatError",
    "LinkEntry",
    "VerdictEntry",
    "ReportDocument",
    "render_polynomial",
    "serialize_report",
    "parse_report",
    "validate",
    "dump",
]

VERSION = "0.1.0"

_COUNT = {"type": "integer", "minimum": 0}
_POLY = {
    "type": "object",
    "patternProperties": {"^[1-9][0-9]*$": {"type": "integer", "minimum": 1}},
    "additionalProperties": False,
}
REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["version", "quandle", "links", "verdicts"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "quandle": {"type": "string"},
        "links": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "arcs", "crossings", "total", "polynomial"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "arcs": _COUNT,
                    "crossings": _COUNT,
                    "total": _COUNT,
                    "polynomial": _POLY,
                },
            },
        },
        "verdicts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b", "verdict"],
                "additionalProperties": False,
                "properties": {
                    "a": {"type": "string"},
                    "b": {"type": "string"},
                    "verdict": {"enum": ["BY_COUNT", "BY_POLYNOMIAL", "INDISTINGUISHABLE"]},
                },
            },
        },
    },
}
REPORT_LIST_SCHEMA: dict[str, Any] = {"type": "array", "items": REPORT_SCHEMA}
TABLE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["version", "group", "table"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "group": {"type": "string"},
        "table": {"type": "array", "items": {"type": "array", "items": _COUNT}},
    },
}
CHECK_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["version", "source", "valid", "violations"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "source": {"type": "string"},
        "valid": {"type": "boolean"},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["axiom", "witness", "detail"],
                "additionalProperties": False,
                "properties": {
                    "axiom": {"type": "string"},
                    "witness": {"type": "array", "items": _COUNT},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}
GEN_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["version", "name", "arcs", "crossings", "path"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "name": {"type": "string"},
        "arcs": _COUNT,
        "crossings": _COUNT,
        "path": {"type": "string"},
    },
}


class ReportFormatError(ValueError):
    """Document does not match the schema; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")


def render_polynomial(coefficients: Mapping[int, int]) -> str:
    """``{3: 6, 1: 6}`` -> ``"6q^3 + 6q"``; the empty polynomial renders as ``"0"``."""
    terms = []
    for exp, c in sorted(coefficients.items(), reverse=True):
        if c == 0:
            continue
        if exp == 0:
            terms.append(f"{c}")
        elif exp == 1:
            terms.append(f"{c}q")
        else:
            terms.append(f"{c}q^{exp}")
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class LinkEntry:
    name: str
    arcs: int
    crossings: int
    total: int
    polynomial: dict[int, int]


@dataclass(frozen=True)
class VerdictEntry:
    a: str
    b: str
    verdict: str


@dataclass(frozen=True)
class ReportDocument:
    quandle: str
    links: tuple[LinkEntry, ...] = ()
    verdicts: tuple[VerdictEntry, ...] = ()
    version: str = VERSION

    @classmethod
    def from_reports(cls, quandle: str, reports, verdicts=()) -> ReportDocument:
        """Build from :class:`InvariantReport` objects and ``(a, b, verdict)`` triples."""
        links = tuple(
            LinkEntry(r.link, r.arcs, r.crossings, r.total, r.polynomial.coefficients)
            for r in reports
        )
        return cls(quandle, links, tuple(VerdictEntry(a, b, str(v)) for a, b, v in verdicts))

    def to_json(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "quandle": self.quandle,
            "links": [
                {
                    "name": e.name,
                    "arcs": e.arcs,
                    "crossings": e.crossings,
                    "total": e.total,
                    "polynomial": {
                        str(k): v for k, v in sorted(e.polynomial.items(), reverse=True)
                    },
                }
                for e in self.links
            ],
            "verdicts": [{"a": v.a, "b": v.b, "verdict": v.verdict} for v in self.verdicts],
        }

    @classmethod
    def from_json(cls, obj: Any) -> ReportDocument:
        validate(obj, REPORT_SCHEMA)
        links = tuple(
            LinkEntry(
                e["name"],
                e["arcs"],
                e["crossings"],
                e["total"],
                {int(k): v for k, v in e["polynomial"].items()},
            )
            for e in obj["links"]
        )
        for i, e in enumerate(links):
            if sum(e.polynomial.values()) != e.total:
                raise ReportFormatError(
                    "total differs from the sum of polynomial coefficients",
                    f"$.links[{i}].total",
                )
        verdicts = tuple(VerdictEntry(v["a"], v["b"], v["verdict"]) for v in obj["verdicts"])
        return cls(obj["quandle"], links, verdicts, obj["version"])


def _path(err: jsonschema.ValidationError) -> str:
    out = "$"
    for p in err.absolute_path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def validate(obj: Any, schema: Mapping[str, Any]) -> None:
    """Raise :class:`ReportFormatError` at the first schema violation (deterministic order)."""
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(obj), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        raise ReportFormatError(errors[0].message, _path(errors[0]))


def dump(obj: Any) -> str:
    """Stable JSON text: fixed field order, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def serialize_report(r: ReportDocument) -> str:
    return dump(r.to_json())


def parse_report(text: str) -> ReportDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportFormatError(f"not valid JSON ({exc.msg} at line {exc.lineno})") from None
    return ReportDocument.from_json(obj)
