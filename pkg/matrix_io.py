"""
Matrix Documents
Loading matrices and vectors from text/JSON, and canonical JSON and CSV output
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from errors import ParseError, ValidationError
from logger_config import setup_logger
from semiring import MaxMatrix, MaxVector

logger = setup_logger()


@dataclass(frozen=True)
class Verdict:
    predicate: str
    holds: bool
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.holds and not self.details:
            raise ValidationError(f"a failing verdict for {self.predicate!r} needs details")

    def as_dict(self):
        return {"predicate": self.predicate, "holds": self.holds, "details": self.details}


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text (byte offset {e.start})") from e


def _read_source(source) -> str:
    if source is None or str(source) == "-":
        try:
            return sys.stdin.read()
        except UnicodeDecodeError as e:
            raise ParseError(f"stdin is not UTF-8 text (byte offset {e.start})") from e
    return _read_text(Path(source))


def _number(token, line, column):
    try:
        return float(token)
    except ValueError as e:
        raise ParseError(f"{token!r} is not a number", line, column) from e


def parse_matrix_text(text: str) -> MaxMatrix:
    """Newline-separated rows of whitespace-separated entries"""
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = [_number(m.group(), line_no, m.start() + 1) for m in re.finditer(r"\S+", line)]
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", line_no, 1)
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows found")
    return MaxMatrix(rows)


def parse_matrix_json(text: str) -> MaxMatrix:
    """{"rows": n, "cols": m, "data": [[...], ...]}"""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from e
    if not isinstance(doc, dict) or not {"rows", "cols", "data"} <= doc.keys():
        raise ParseError('matrix document needs "rows", "cols" and "data"')
    rows, cols, data = doc["rows"], doc["cols"], doc["data"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 1 and cols >= 1):
        raise ParseError('"rows" and "cols" must be positive integers')
    if not (isinstance(data, list) and len(data) == rows
            and all(isinstance(r, list) and len(r) == cols for r in data)):
        raise ParseError(f'"data" must be a {rows}x{cols} array')
    for r in data:
        for value in r:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParseError(f"{value!r} is not a number")
    return MaxMatrix(data)


def load_matrix(source=None, fmt: str = "auto") -> MaxMatrix:
    """Read a matrix from a path (or stdin for None/'-'); auto-detects JSON by a leading '{'"""
    text = _read_source(source)
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        matrix = parse_matrix_json(text)
    elif fmt == "text":
        matrix = parse_matrix_text(text)
    else:
        raise ValidationError(f"unknown matrix format {fmt!r}")
    logger.debug(f"📥 Loaded a {matrix.rows}x{matrix.cols} matrix ({fmt})")
    return matrix


def parse_vector(text: str) -> MaxVector:
    """Comma-separated decimals, e.g. '2,1'"""
    text = text.strip()
    if not text:
        raise ParseError("empty vector")
    values = []
    for position, token in enumerate(text.split(","), start=1):
        token = token.strip()
        if not token:
            raise ParseError(f"missing entry {position}", 1, position)
        values.append(_number(token, 1, position))
    return MaxVector(values)


def load_vector(spec: str) -> MaxVector:
    """An inline vector, or the contents of a file holding one"""
    path = Path(spec)
    try:
        is_file = path.is_file()
    except OSError:
        is_file = False
    return parse_vector(_read_text(path) if is_file else spec)


def _canonical_number(value):
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"cannot serialize {value!r}")
    if value.is_integer() and abs(value) < 2 ** 53:
        return int(value)
    # repr is the shortest string that round-trips, at most 17 significant digits
    return value


def canonical(obj):
    """Replace floats by their canonical JSON form, recursively"""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, float):
        return _canonical_number(obj)
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if hasattr(obj, "item"):
        return canonical(obj.item())
    raise ValidationError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, compact separators, shortest round-trip numbers"""
    return json.dumps(canonical(obj), sort_keys=True, separators=(",", ":"))


def matrix_document(A: MaxMatrix) -> dict:
    return {"rows": A.rows, "cols": A.cols, "data": A.to_lists()}


def save_matrix(A: MaxMatrix) -> str:
    return dumps(matrix_document(A))


def region_csv(sample) -> str:
    """Header x1,...,xn,inside then one row per grid point in row-major order"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    dim = len(sample.bounds)
    writer.writerow([f"x{i + 1}" for i in range(dim)] + ["inside"])
    for point, inside in zip(sample.grid_points, sample.labels):
        writer.writerow([repr(_canonical_number(v)) for v in point.data] + [int(inside)])
    return buffer.getvalue()
