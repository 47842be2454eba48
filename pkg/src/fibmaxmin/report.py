"""Report bundles: exact values as strings, decimal annotations, verdicts.

Rationals are written ``num/den`` and surds ``(a) + (b)·sqrt5``; the decimal
fields next to them are annotations and are never read back.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__
from .numeric import Surd, format_rational, format_surd, parse_rational, parse_surd

DEFAULT_DIGITS = 12


def encode(v) -> Any:
    """Exact, JSON-friendly rendering of engine values."""
    if isinstance(v, Surd):
        return format_surd(v)
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, dict):
        return {k: encode(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode(x) for x in v]
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_exact(text: str):
    """Inverse of :func:`encode` for a single rational or surd string."""
    if "sqrt5" in text:
        return parse_surd(text)
    return parse_rational(text)


def decimal(v, digits: int = DEFAULT_DIGITS) -> str:
    if isinstance(v, Surd):
        return str(v.to_decimal(digits))
    return str(Surd(v).to_decimal(digits))


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str = ""
    informational: bool = False

    def line(self) -> str:
        tag = "INFO" if self.informational else ("PASS" if self.passed else "FAIL")
        if self.informational:
            tag += " " + ("yes" if self.passed else "no")
        return f"{tag} {self.name}" + (f"  {self.detail}" if self.detail else "")


@dataclass
class ReportBundle:
    command: str
    records: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)
    digits: int = DEFAULT_DIGITS
    version: str = __version__

    def add(self, kind: str, exact: dict, annotate: tuple = ()) -> dict:
        rec = {"type": kind, **{k: encode(v) for k, v in exact.items()}}
        for key in annotate:
            rec[f"{key}_decimal"] = decimal(exact[key], self.digits)
        self.records.append(rec)
        return rec

    def check(self, name: str, passed: bool, detail: str = "", informational: bool = False):
        self.verdicts.append(Verdict(name, bool(passed), detail, informational))

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts if not v.informational)

    def to_text(self) -> str:
        out = [f"# fibmaxmin {self.version}: {self.command}"]
        for rec in self.records:
            fields = " ".join(f"{k}={_text_value(v)}" for k, v in rec.items() if k != "type")
            out.append(f"{rec['type']}: {fields}")
        out.extend(v.line() for v in self.verdicts)
        if self.verdicts:
            failed = sum(not v.passed for v in self.verdicts if not v.informational)
            out.append(f"# {'ALL PASS' if not failed else f'{failed} FAILED'}")
        return "\n".join(out) + "\n"

    def to_jsonl(self) -> str:
        """One self-describing JSON object per line."""
        lines = [json.dumps({"type": "header", "command": self.command, "version": self.version},
                            ensure_ascii=False)]
        lines += [json.dumps(r, ensure_ascii=False) for r in self.records]
        lines += [json.dumps({"type": "verdict", "name": v.name, "passed": v.passed,
                              "informational": v.informational, "detail": v.detail},
                             ensure_ascii=False) for v in self.verdicts]
        return "\n".join(lines) + "\n"


def _text_value(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    return str(v)
