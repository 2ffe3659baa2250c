"""Galilei limit (c -> infinity) of the group law and of the orbit actions.

The closed forms here are written out independently of the generic code so
that ``galilei_*(...) == generic(..., params=GALILEAN)`` is a real cross
check between two code paths.  ``contraction_rate`` measures how fast the
finite-c operations approach them; every correction term carries ``1/c**2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from ._validation import check_force
from .exceptions import InvalidGrid
from .group import ExtendedGroupElement, GroupElement, KinematicParams, compose
from .realization import PhasePoint, SpacetimePoint, phase_action, spacetime_action


class OpKind(str, Enum):
    COMPOSE = "compose"
    SPACETIME = "spacetime"
    PHASE = "phase"


def galilei_compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    return GroupElement(g1.v + g2.v, g1.tau + g2.tau, g1.v * g2.tau + g2.x + g1.x)


def galilei_inverse(g: GroupElement) -> GroupElement:
    return GroupElement(-g.v, -g.tau, g.v * g.tau - g.x)


def galilei_extended_compose(h1: ExtendedGroupElement,
                             h2: ExtendedGroupElement) -> ExtendedGroupElement:
    """Central extension of the Galilei law (the same limit taken in ``zeta``)."""
    base = galilei_compose(h1.base, h2.base)
    zeta = (h1.zeta + h2.zeta + 0.5 * (h1.x - h1.v * h1.tau) * h2.tau
            - 0.5 * h1.tau * h2.x)
    return ExtendedGroupElement(base.v, base.tau, base.x, zeta)


def galilei_spacetime_action(g: GroupElement, pt: SpacetimePoint) -> SpacetimePoint:
    return SpacetimePoint(pt.t + g.tau, g.v * pt.t + pt.q + g.x)


def galilei_phase_action(g: GroupElement, pt: PhasePoint, f) -> PhasePoint:
    check_force(f)
    return PhasePoint(pt.p + f * g.tau, (g.v / f) * pt.p + pt.q + g.x)


@dataclass
class ContractionReport:
    op_kind: str
    c_grid: list[float]
    deviations: list[float]
    fitted_slope: float | None
    degenerate: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def strictly_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.deviations, self.deviations[1:]))

    def to_dict(self) -> dict:
        return {
            "op_kind": self.op_kind,
            "c_grid": list(self.c_grid),
            "deviations": list(self.deviations),
            "fitted_slope": self.fitted_slope,
            "degenerate": self.degenerate,
            "strictly_decreasing": self.strictly_decreasing,
            "notes": list(self.notes),
        }


def _pair_outputs(op_kind: OpKind, args, params: KinematicParams):
    if op_kind is OpKind.COMPOSE:
        g1, g2 = args
        return compose(g1, g2, params).as_array(), galilei_compose(g1, g2).as_array()
    if op_kind is OpKind.SPACETIME:
        g, pt = args
        return (spacetime_action(g, pt, params).as_array(),
                galilei_spacetime_action(g, pt).as_array())
    g, pt, f = args
    return (phase_action(g, pt, f, params).as_array(),
            galilei_phase_action(g, pt, f).as_array())


def _max_speed(op_kind: OpKind, sample) -> float:
    speeds = [0.0]
    for args in sample:
        elements = args[:2] if op_kind is OpKind.COMPOSE else args[:1]
        speeds.extend(float(np.max(np.abs(g.v))) for g in elements)
    return max(speeds)


def _check_grid(c_grid: Sequence[float], max_speed: float) -> list[float]:
    grid = [float(c) for c in c_grid]
    if len(grid) < 2:
        raise InvalidGrid("c_grid needs at least two values")
    for c in grid:
        if not math.isfinite(c) or c <= 0:
            raise InvalidGrid(f"c_grid entries must be finite and positive, got {c!r}")
        if c <= max_speed:
            raise InvalidGrid(f"c = {c!r} does not exceed the largest sampled |v| = {max_speed!r}")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidGrid("c_grid must be strictly increasing")
    return grid


def contraction_rate(op_kind: OpKind | str, sample: Sequence[tuple],
                     c_grid: Sequence[float]) -> ContractionReport:
    """Sup-norm deviation from the Galilean closed form along ``c_grid``.

    ``sample`` is a sequence of argument tuples: ``(g1, g2)`` for compose,
    ``(g, SpacetimePoint)`` for the space-time action and
    ``(g, PhasePoint, f)`` for the phase action.  The slope is a least
    squares fit of ``log(deviation)`` against ``log(c)`` and is ``None``
    when some deviation vanishes (e.g. a sample without boosts).
    """
    op_kind = OpKind(op_kind)
    sample = list(sample)
    if not sample:
        raise ValueError("contraction sample is empty")
    grid = _check_grid(c_grid, _max_speed(op_kind, sample))

    deviations = []
    for c in grid:
        params = KinematicParams(c)
        worst = 0.0
        for args in sample:
            relativistic, galilean = _pair_outputs(op_kind, args, params)
            worst = max(worst, float(np.max(np.abs(relativistic - galilean))))
        deviations.append(worst)

    report = ContractionReport(op_kind.value, grid, deviations, None)
    if any(d == 0.0 for d in deviations):
        report.degenerate = True
        report.notes.append("zero deviation on the grid: sample has no boosts, slope undefined")
    else:
        slope, _ = np.polyfit(np.log(grid), np.log(deviations), 1)
        report.fitted_slope = float(slope)
    return report
