"""
Report serialization utilities for evchar: JSON, CSV, plain text and the
character cache line codec.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from algebra.partitions import Partition, parse_partition


def to_jsonable(obj: Any) -> Any:
    """
    Convert report objects into plain JSON types.

    Partitions become their comma text, integral Fractions become ints and the
    rest become ``"p/q"`` strings. Objects exposing ``to_dict`` are expanded.

    Args:
        obj: Any report value

    Returns:
        A structure made of dicts, lists, strings, ints and bools
    """
    if isinstance(obj, Partition):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return obj.numerator
        return f"{obj.numerator}/{obj.denominator}"
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {_key_text(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(item) for item in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _key_text(key: Any) -> str:
    if isinstance(key, Partition):
        return str(key)
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


def dump_json(obj: Any) -> str:
    """Serialize with sorted keys so identical runs give identical bytes."""
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)


def table_to_csv(header: Sequence[Any], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([_cell_text(cell) for cell in header])
    for row in rows:
        writer.writerow([_cell_text(cell) for cell in row])
    return buffer.getvalue()


def _cell_text(cell: Any) -> str:
    value = to_jsonable(cell)
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def render_text(obj: Any, indent: int = 0) -> str:
    """Render a report as indented ``key: value`` lines."""
    value = to_jsonable(obj)
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {item}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return "\n".join(lines)


def format_cache_line(mu: Sequence[int], lam: Sequence[int], value: int) -> str:
    """Encode one character value as ``mu;lambda;value``."""
    return f"{Partition(mu)};{Partition(lam)};{value}"


def parse_cache_line(line: str) -> Tuple[Partition, Partition, int]:
    """
    Decode a ``mu;lambda;value`` record.

    Raises:
        ValueError: if the record does not have three fields or a field is malformed
    """
    fields = line.strip().split(";")
    if len(fields) != 3:
        raise ValueError(f"expected 3 fields, found {len(fields)}")
    mu = parse_partition(fields[0])
    lam = parse_partition(fields[1])
    if mu.size != lam.size:
        raise ValueError("partition sizes differ")
    return mu, lam, int(fields[2])
