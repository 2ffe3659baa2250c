"""JSON and CSV wire formats used by the command line interface."""
from __future__ import annotations

import json

import numpy as np

from .coadjoint import DualVector
from .group import ExtendedGroupElement, GroupElement
from .realization import PhasePoint, SpacetimePoint

SCHEMAS = {
    "group": (GroupElement, ("v", "tau", "x")),
    "extended": (ExtendedGroupElement, ("v", "tau", "x", "zeta")),
    "dual": (DualVector, ("k", "e", "p", "f")),
    "phase": (PhasePoint, ("p", "q")),
    "spacetime": (SpacetimePoint, ("t", "q")),
}
ORBIT_CSV_HEADER = ("k", "e", "p", "f", "t", "q")


class SchemaError(ValueError):
    """A JSON document does not match the expected field set."""


def _clean(value) -> float:
    # adding 0.0 turns -0.0 into 0.0
    return float(value) + 0.0


def to_dict(obj) -> dict:
    for cls, fields in SCHEMAS.values():
        if type(obj) is cls:
            return {name: _clean(getattr(obj, name)) for name in fields}
    raise TypeError(f"no wire schema for {type(obj).__name__}")


def from_dict(schema: str, data) -> object:
    cls, fields = SCHEMAS[schema]
    if not isinstance(data, dict):
        raise SchemaError(f"{schema}: expected a JSON object, got {type(data).__name__}")
    if set(data) != set(fields):
        raise SchemaError(f"{schema}: expected fields {list(fields)}, got {sorted(data)}")
    values = {}
    for name in fields:
        value = data[name]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"{schema}.{name}: expected a number, got {value!r}")
        if not np.isfinite(value):
            raise SchemaError(f"{schema}.{name}: must be finite")
        values[name] = float(value)
    return cls(**values)


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), separators=(",", ":"))


def loads(schema: str, text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{schema}: invalid JSON ({exc})") from exc
    return from_dict(schema, data)


def format_number(value) -> str:
    """17 significant digits, ``.`` separator, no negative zero."""
    return format(_clean(value), ".17g")


def csv_row(values) -> str:
    return ",".join(format_number(v) for v in values)
