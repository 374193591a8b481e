"""System files and result documents.

A system file is UTF-8 JSON with two keys::

    {
      "A": [[1, -2], [1, 3]],
      "b": [{"tri": [-2, 1, 4]},
            {"pl": {"r": [0, 0.5, 1], "lower": [2, 4, 6], "upper": [10, 8, 6]}}]
    }

``A`` is a rectangular array of numbers, ``b`` has one entry per row of
``A``: either a triangular number ``{"tri": [l, m, r]}`` or sampled
envelopes ``{"pl": {"r": levels, "lower": [...], "upper": [...]}}`` with
levels running from exactly 0 to exactly 1. An optional ``"comment"``
string is ignored. Results are JSON as well; floats are written in their
shortest round-trip form, so reparsing yields the same doubles.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import FuzzySystemError, ParseError, ValidationError
from .fuzzy_num import FuzzyNumber, make_piecewise_linear, make_triangular
from .system import FuzzySystem

_TOP_KEYS = {"A", "b", "comment"}


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ValidationError(f"{where}: number must be finite")
    return float(value)


def _numbers(values, where: str) -> list[float]:
    if not isinstance(values, list):
        raise ValidationError(f"{where}: expected an array of numbers")
    return [_number(v, f"{where}[{j}]") for j, v in enumerate(values)]


def parse_fuzzy(entry, where: str) -> FuzzyNumber:
    if not isinstance(entry, dict) or len(entry) != 1 or next(iter(entry)) not in ("tri", "pl"):
        raise ValidationError(f'{where}: expected {{"tri": [l, m, r]}} or {{"pl": {{"r", "lower", "upper"}}}}')
    try:
        if "tri" in entry:
            tri = _numbers(entry["tri"], f"{where}.tri")
            if len(tri) != 3:
                raise ValidationError(f"{where}.tri: expected 3 numbers, got {len(tri)}")
            return make_triangular(*tri)
        pl = entry["pl"]
        if not isinstance(pl, dict) or set(pl) != {"r", "lower", "upper"}:
            raise ValidationError(f'{where}.pl: expected exactly the keys "r", "lower", "upper"')
        return make_piecewise_linear(
            _numbers(pl["r"], f"{where}.pl.r"),
            _numbers(pl["lower"], f"{where}.pl.lower"),
            _numbers(pl["upper"], f"{where}.pl.upper"),
        )
    except ValidationError:
        raise
    except FuzzySystemError as exc:
        raise ValidationError(f"{where}: {exc}") from exc


def parse_system(text: str) -> FuzzySystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ValidationError("top level must be an object with keys A and b")
    missing = {"A", "b"} - set(doc)
    if missing:
        raise ValidationError(f"missing key(s): {', '.join(sorted(missing))}")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ValidationError(f"unknown key(s): {', '.join(sorted(unknown))}")

    rows = doc["A"]
    if not isinstance(rows, list) or not rows:
        raise ValidationError("A: expected a non-empty array of rows")
    A = [_numbers(row, f"A[{i}]") for i, row in enumerate(rows)]
    width = len(A[0])
    if width == 0:
        raise ValidationError("A: rows must not be empty")
    for i, row in enumerate(A):
        if len(row) != width:
            raise ValidationError(f"A[{i}]: expected {width} entries, got {len(row)}")

    b = doc["b"]
    if not isinstance(b, list):
        raise ValidationError("b: expected an array")
    if len(b) != len(A):
        raise ValidationError(f"b: expected {len(A)} entries (one per row of A), got {len(b)}")
    rhs = [parse_fuzzy(entry, f"b[{i}]") for i, entry in enumerate(b)]
    return FuzzySystem(np.array(A), rhs)


def load_system(path) -> FuzzySystem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8 ({exc.reason})") from exc
    return parse_system(text)


def system_to_dict(sys: FuzzySystem) -> dict:
    return {"A": sys.A.tolist(), "b": [f.to_dict() for f in sys.rhs]}


def plain(obj):
    """Convert numpy containers and scalars into JSON-ready Python values."""
    if isinstance(obj, dict):
        return {k: plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return plain(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        value = float(obj)
        return 0.0 if value == 0.0 else value  # drop negative zero
    return obj


def _is_leaf(value) -> bool:
    return not isinstance(value, (dict, list))


def _render(obj, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_render(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(_is_leaf(v) for v in obj):
            return json.dumps(obj)
        return "[\n" + ",\n".join(inner + _render(v, depth + 1) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj)


def dumps(doc) -> str:
    """JSON with numeric arrays kept on one line."""
    return _render(plain(doc), 0) + "\n"
