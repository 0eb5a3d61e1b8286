"""
Text input formats and report serialization.

Simplex files hold one vertex per line with whitespace-separated rational
entries ("p/q" or integers); matrix files hold one row per line. Blank lines
and anything after '#' are ignored.

Reports are dataclasses. In JSON, rationals are "p/q" strings and floats are
written with ``float_digits`` significant digits; ``decode_report`` rebuilds a
report from the JSON form using the dataclass type hints. CSV output goes
through pandas.
"""

import dataclasses
import enum
import json
import logging
import sys
import typing
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, TextIO, Union

import numpy as np
import pandas as pd

from ..config import get_config
from ..exceptions import InputFormatError
from ..geometry.simplex import Simplex, build_simplex
from ..numerics import RationalMatrix, format_rational, parse_rational

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> List[List[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def read_text(source: Union[str, Path, TextIO]) -> str:
    """Read a path, '-' for stdin, or an open stream."""
    if hasattr(source, 'read'):
        return source.read()
    if str(source) == '-':
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as e:
        raise InputFormatError(f"Cannot read {source}: {e}") from e


def parse_simplex(text: str, floats: bool = False) -> Simplex:
    """
    Parse a simplex file.

    Args:
        text: File content
        floats: Accept decimal entries and convert their binary values exactly

    Raises:
        InputFormatError: malformed entries
        DimensionMismatch, DegenerateSimplex: from build_simplex
    """
    rows = _content_lines(text)
    if not rows:
        raise InputFormatError("Simplex input has no vertices")
    if floats:
        try:
            return Simplex.from_floats([[float(x) for x in row] for row in rows])
        except ValueError as e:
            raise InputFormatError(f"Bad float entry: {e}") from e
    return build_simplex([[parse_rational(x) for x in row] for row in rows])


def parse_matrix(text: str) -> RationalMatrix:
    """Parse a matrix file (0/1 or +-1 rows)."""
    rows = _content_lines(text)
    if not rows:
        raise InputFormatError("Matrix input has no rows")
    return RationalMatrix([[parse_rational(x) for x in row] for row in rows])


def format_simplex(S: Simplex) -> str:
    return "\n".join(" ".join(format_rational(x) for x in v) for v in S.vertices) + "\n"


def _float(value: float, digits: int) -> float:
    return float(format(float(value), f".{digits}g"))


def to_jsonable(value: Any, digits: Optional[int] = None) -> Any:
    """Convert a report (or any nested value) to JSON-ready Python data."""
    digits = get_config().output.float_digits if digits is None else digits
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _float(value, digits)
    if isinstance(value, Simplex):
        return {'n': value.n, 'vertices': [[format_rational(x) for x in v] for v in value.vertices]}
    if isinstance(value, RationalMatrix):
        return [[format_rational(x) for x in row] for row in value.entries]
    if dataclasses.is_dataclass(value):
        data = {f.name: to_jsonable(getattr(value, f.name), digits) for f in dataclasses.fields(value)}
        for name in dir(type(value)):
            if isinstance(getattr(type(value), name, None), property) and not name.startswith('_'):
                data[name] = to_jsonable(getattr(value, name), digits)
        return data
    if hasattr(value, '_asdict'):
        return {k: to_jsonable(v, digits) for k, v in value._asdict().items()}
    if isinstance(value, dict):
        return {str(to_jsonable(k, digits)): to_jsonable(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(v, digits) for v in value]
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def dumps_report(report: Any, digits: Optional[int] = None) -> str:
    return json.dumps(to_jsonable(report, digits), indent=2) + "\n"


def _decode(hint, data):
    origin = typing.get_origin(hint)
    args = typing.get_args(hint)
    if data is None:
        return None
    if origin is Union:
        options = [a for a in args if a is not type(None)]
        return _decode(options[0], data) if len(options) == 1 else data
    if origin is tuple:
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(_decode(args[0], item) for item in data)
        return tuple(_decode(a, item) for a, item in zip(args, data))
    if origin is list:
        return [_decode(args[0], item) for item in data]
    if hint is Fraction:
        return parse_rational(data)
    if hint is float:
        return float(data)
    if hint is Simplex:
        return build_simplex([[parse_rational(x) for x in v] for v in data['vertices']])
    if isinstance(hint, type) and issubclass(hint, enum.Enum):
        return hint(data)
    if dataclasses.is_dataclass(hint):
        return decode_report(hint, data)
    return data


def decode_report(cls, data: Dict[str, Any]):
    """Rebuild a report dataclass from its JSON form (extra property keys are ignored)."""
    hints = typing.get_type_hints(cls)
    kwargs = {f.name: _decode(hints[f.name], data[f.name]) for f in dataclasses.fields(cls) if f.name in data}
    return cls(**kwargs)


def write_csv(rows: Iterable[Dict[str, Any]], stream: TextIO, digits: Optional[int] = None) -> None:
    """Write flat records as CSV; rationals keep their "p/q" form."""
    frame = pd.DataFrame([{k: to_jsonable(v, digits) for k, v in row.items()} for row in rows])
    frame.to_csv(stream, index=False, lineterminator="\n")


def report_rows(report: Any) -> List[Dict[str, Any]]:
    """Flatten a report into CSV records: one row, or one per element of a list of records."""
    data = to_jsonable(report)
    if isinstance(data, list):
        return [item if isinstance(item, dict) else {'value': item} for item in data]
    flat = {}
    for key, value in data.items():
        flat[key] = json.dumps(value) if isinstance(value, (list, dict)) else value
    return [flat]


def emit(report: Any, fmt: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Write a report to ``stream`` (stdout by default) as JSON or CSV."""
    fmt = get_config().output.format if fmt is None else fmt
    stream = sys.stdout if stream is None else stream
    if fmt == 'csv':
        write_csv(report_rows(report), stream)
    elif fmt == 'json':
        stream.write(dumps_report(report))
    else:
        raise InputFormatError(f"Unknown output format {fmt!r} (json, csv)")


def save_report(report: Any, path: Union[str, Path], fmt: Optional[str] = None) -> Path:
    """Write a report under the configured output directory unless ``path`` is absolute."""
    path = Path(path)
    if not path.is_absolute():
        path = Path(get_config().output.output_directory) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w') as f:
        emit(report, fmt, f)
    logger.info(f"Report saved to {path}")
    return path


__all__ = [
    'read_text',
    'parse_simplex',
    'parse_matrix',
    'format_simplex',
    'to_jsonable',
    'dumps_report',
    'decode_report',
    'write_csv',
    'report_rows',
    'emit',
    'save_report',
]
