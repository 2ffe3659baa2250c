"""Charts on a coadjoint orbit and the group acting on them.

Two charts cover an orbit with ``f != 0``:

* the Darboux chart ``(p, q)``, with symplectic form ``dp ^ dq``;
* the space-time chart ``(t, q)`` with ``t = p / f``, where the form reads
  ``f dt ^ dq``.

In the space-time chart the action no longer depends on ``f`` and is the
ordinary Poincare transformation, which also preserves the interval
``c**2 dt**2 - dq**2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._validation import check_force
from .coadjoint import DualVector, OrbitInvariants, orbit_point
from .exceptions import GalileanRegime
from .group import GroupElement, KinematicParams, gamma


class Chart(str, Enum):
    PHASE = "phase"
    SPACETIME = "spacetime"


@dataclass(frozen=True)
class PhasePoint:
    p: float = 0.0
    q: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.p, self.q), axis=-1).astype(float)

    @classmethod
    def from_array(cls, a) -> "PhasePoint":
        a = np.asarray(a, dtype=float)
        return cls(a[..., 0], a[..., 1])


@dataclass(frozen=True)
class SpacetimePoint:
    t: float = 0.0
    q: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.t, self.q), axis=-1).astype(float)

    @classmethod
    def from_array(cls, a) -> "SpacetimePoint":
        a = np.asarray(a, dtype=float)
        return cls(a[..., 0], a[..., 1])


def darboux_from_dual(mu: DualVector):
    """Return ``(t, q, p)`` for a dual vector with ``f != 0``."""
    check_force(mu.f)
    return mu.p / mu.f, -mu.e / mu.f, mu.p


def dual_from_darboux(inv: OrbitInvariants, pt: PhasePoint, params: KinematicParams) -> DualVector:
    return orbit_point(inv, pt.p, pt.q, params)


def phase_to_spacetime(pt: PhasePoint, f) -> SpacetimePoint:
    check_force(f)
    return SpacetimePoint(pt.p / f, pt.q)


def spacetime_to_phase(pt: SpacetimePoint, f) -> PhasePoint:
    return PhasePoint(f * pt.t, pt.q)


def phase_action(g: GroupElement, pt: PhasePoint, f, params: KinematicParams) -> PhasePoint:
    """Affine action in the Darboux chart. Depends explicitly on ``f``."""
    check_force(f)
    gm = gamma(g.v, params)
    return PhasePoint(
        gm * pt.p + gm * f * g.v * pt.q * params.inv_c2 + f * g.tau,
        gm * (g.v / f) * pt.p + gm * pt.q + g.x,
    )


def spacetime_action(g: GroupElement, pt: SpacetimePoint, params: KinematicParams) -> SpacetimePoint:
    gm = gamma(g.v, params)
    return SpacetimePoint(
        gm * pt.t + gm * g.v * pt.q * params.inv_c2 + g.tau,
        gm * g.v * pt.t + gm * pt.q + g.x,
    )


def interval(a: SpacetimePoint, b: SpacetimePoint, params: KinematicParams):
    """``c**2 (a.t - b.t)**2 - (a.q - b.q)**2``; undefined for infinite c."""
    if params.is_galilean:
        raise GalileanRegime("the interval degenerates when c is infinite")
    dt = a.t - b.t
    dq = a.q - b.q
    return -dq * dq + params.c * params.c * dt * dt


def action_jacobian(g: GroupElement, f, params: KinematicParams,
                    chart: Chart | str = Chart.PHASE) -> np.ndarray:
    """Linear part of the affine action in the given chart, as a 2x2 matrix."""
    chart = Chart(chart)
    gm = gamma(g.v, params)
    ic2 = params.inv_c2
    if chart is Chart.PHASE:
        check_force(f)
        rows = [[gm, gm * f * g.v * ic2], [gm * g.v / f, gm]]
    else:
        rows = [[gm, gm * g.v * ic2], [gm * g.v, gm]]
    return np.stack([np.stack(np.broadcast_arrays(*row), axis=-1) for row in rows], axis=-2)

