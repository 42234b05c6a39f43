"""Text formats for band vectors, plain vectors and dense matrices.

* vector / band file: one scalar per line (``1.5`` or ``3/2``); blank lines
  are ignored. With ``as_json=True`` the file is a JSON array of strings or
  numbers instead, e.g. ``["3", "2", "1"]``.
* dense matrix: CSV, one row per line.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .exceptions import ParseError
from .scalars import RATIONAL, format_scalar, parse_scalar


def _parse(token, mode, where):
    try:
        return parse_scalar(str(token), mode)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: cannot parse scalar {token!r}") from exc


def parse_vector(text: str, mode: str = RATIONAL, as_json: bool = False, source="<input>"):
    if as_json:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}: invalid JSON ({exc.msg})") from exc
        if not isinstance(data, list) or any(isinstance(x, (list, dict, bool)) or x is None for x in data):
            raise ParseError(f"{source}: expected a flat JSON array of scalars")
        values = [_parse(x, mode, f"{source}[{k}]") for k, x in enumerate(data)]
    else:
        values = [
            _parse(line, mode, f"{source}:{lineno}")
            for lineno, line in enumerate(text.splitlines(), start=1)
            if line.strip()
        ]
    if not values:
        raise ParseError(f"{source}: no scalars found")
    return values


def read_vector(path, mode: str = RATIONAL, as_json: bool = False):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return parse_vector(text, mode, as_json, source=str(path))


def format_vector(values, as_json: bool = False) -> str:
    if as_json:
        return json.dumps([format_scalar(v) for v in values]) + "\n"
    return "".join(format_scalar(v) + "\n" for v in values)


def write_vector(path, values, as_json: bool = False):
    Path(path).write_text(format_vector(values, as_json), encoding="utf-8")


def parse_matrix(text: str, mode: str = RATIONAL, source="<input>"):
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        rows.append([_parse(c, mode, f"{source}:{lineno}") for c in row])
    if not rows:
        raise ParseError(f"{source}: empty matrix")
    n = len(rows)
    for k, r in enumerate(rows, start=1):
        if len(r) != n:
            raise ParseError(f"{source}: row {k} has {len(r)} entries, expected {n}")
    return rows


def read_matrix(path, mode: str = RATIONAL):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return parse_matrix(text, mode, source=str(path))


def format_matrix(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for r in rows:
        writer.writerow([format_scalar(x) for x in r])
    return buf.getvalue()


def write_matrix(path, rows):
    Path(path).write_text(format_matrix(rows), encoding="utf-8")
