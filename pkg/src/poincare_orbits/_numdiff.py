"""Central finite differences used as independent oracles in the checks."""
from __future__ import annotations

import numpy as np


def _step(x: float, rel_step: float) -> float:
    return rel_step * max(1.0, abs(x))


def central_jacobian(func, point, rel_step: float = 1e-6) -> np.ndarray:
    """Jacobian of ``func: R^n -> R^m`` at ``point``; step ``rel_step * max(1, |x_i|)``."""
    point = np.asarray(point, dtype=float)
    columns = []
    for i in range(point.size):
        h = _step(point[i], rel_step)
        shift = np.zeros_like(point)
        shift[i] = h
        hi = np.asarray(func(point + shift), dtype=float)
        lo = np.asarray(func(point - shift), dtype=float)
        columns.append((hi - lo) / (2 * h))
    return np.stack(columns, axis=-1)


def central_gradient(func, point, rel_step: float = 1e-6) -> np.ndarray:
    return central_jacobian(func, point, rel_step)


def central_jacobian_batch(func, points, rel_step: float = 1e-6) -> np.ndarray:
    """Row-wise Jacobians for a batch: ``func`` maps ``(n, d) -> (n, m)``.

    Returns an array of shape ``(n, m, d)``.
    """
    points = np.asarray(points, dtype=float)
    columns = []
    for i in range(points.shape[1]):
        h = rel_step * np.maximum(1.0, np.abs(points[:, i]))
        shift = np.zeros_like(points)
        shift[:, i] = h
        hi = np.asarray(func(points + shift), dtype=float)
        lo = np.asarray(func(points - shift), dtype=float)
        columns.append((hi - lo) / (2 * h[:, None]))
    return np.stack(columns, axis=-1)
