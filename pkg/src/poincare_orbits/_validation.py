"""Input validation shared by the numerical modules.

All core operations accept either Python scalars or NumPy arrays in the
fields of their value objects, so the checks below reduce with ``np.any``.
"""
from __future__ import annotations

import numpy as np

from .exceptions import DegenerateOrbit, VelocityOutOfRange


def check_velocity(v, params) -> None:
    if params.is_galilean:
        return
    if np.any(np.abs(v) >= params.c):
        raise VelocityOutOfRange(
            f"boost velocity must satisfy |v| < c = {params.c!r}"
        )


def check_force(f) -> None:
    if np.any(np.asarray(f) == 0):
        raise DegenerateOrbit("f = 0: the orbit chart (t = p/f, q = -e/f) is undefined")


def check_finite(*values, name: str = "value") -> None:
    for value in values:
        if not np.all(np.isfinite(value)):
            raise ValueError(f"{name} must be finite, got {value!r}")


def scaled_deviation(a, b) -> float:
    """Largest ``|a - b| / max(1, |a|, |b|)`` over all components."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0:
        return 0.0
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    return float(np.max(np.abs(a - b) / scale))


def abs_deviation(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))
