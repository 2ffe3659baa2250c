"""Seeded random inputs for the property suites.

Velocities are uniform in (-0.99c, 0.99c) for finite c and in (-10, 10) in
the Galilean regime.  tau, x, k, e, p, zeta are uniform in (-10, 10); f is
uniform on (-10, -0.1] U [0.1, 10) so the charts stay well conditioned.
"""
from __future__ import annotations

import numpy as np

from .coadjoint import DualVector
from .group import ExtendedGroupElement, GroupElement, KinematicParams
from .realization import PhasePoint, SpacetimePoint

SPAN = 10.0
MIN_FORCE = 0.1
BOOST_FRACTION = 0.99


class Sampler:
    """Draws vectorized batches of group elements, dual vectors and points."""

    def __init__(self, params: KinematicParams, seed: int = 42):
        self.params = params
        self.rng = np.random.default_rng(seed)

    def _uniform(self, n, span=SPAN):
        return self.rng.uniform(-span, span, n)

    def velocities(self, n):
        vmax = SPAN if self.params.is_galilean else BOOST_FRACTION * self.params.c
        return self.rng.uniform(-vmax, vmax, n)

    def forces(self, n):
        magnitude = self.rng.uniform(MIN_FORCE, SPAN, n)
        sign = np.where(self.rng.random(n) < 0.5, -1.0, 1.0)
        return sign * magnitude

    def group_elements(self, n) -> GroupElement:
        return GroupElement(self.velocities(n), self._uniform(n), self._uniform(n))

    def extended_elements(self, n) -> ExtendedGroupElement:
        return ExtendedGroupElement(self.velocities(n), self._uniform(n),
                                    self._uniform(n), self._uniform(n))

    def dual_vectors(self, n) -> DualVector:
        return DualVector(self._uniform(n), self._uniform(n), self._uniform(n), self.forces(n))

    def phase_points(self, n) -> PhasePoint:
        return PhasePoint(self._uniform(n), self._uniform(n))

    def spacetime_points(self, n) -> SpacetimePoint:
        return SpacetimePoint(self._uniform(n), self._uniform(n))

    def vectors(self, n, dim):
        return self.rng.uniform(-SPAN, SPAN, (n, dim))


def contraction_sample(op_kind: str, seed: int = 42, n: int = 32,
                       zero_boosts: bool = False) -> list[tuple]:
    """Fixed input set for ``contraction_rate``; velocities in (-1, 1).

    ``zero_boosts=True`` forces every velocity to zero (degenerate sample).
    """
    rng = np.random.default_rng(seed)

    def element():
        v = 0.0 if zero_boosts else float(rng.uniform(-1.0, 1.0))
        return GroupElement(v, float(rng.uniform(-SPAN, SPAN)), float(rng.uniform(-SPAN, SPAN)))

    def force():
        return float(rng.choice([-1.0, 1.0]) * rng.uniform(MIN_FORCE, SPAN))

    sample = []
    for _ in range(n):
        if op_kind == "compose":
            sample.append((element(), element()))
        elif op_kind == "spacetime":
            sample.append((element(), SpacetimePoint(*rng.uniform(-SPAN, SPAN, 2))))
        elif op_kind == "phase":
            sample.append((element(), PhasePoint(*rng.uniform(-SPAN, SPAN, 2)), force()))
        else:
            raise ValueError(f"unknown op_kind {op_kind!r}")
    return sample
