"""Coadjoint action on the dual of the extended algebra and orbit invariants.

A dual vector is written ``(k, e, p, f)``; each moment pairs with the basis
vector of the same letter (``k`` with ``K``, ``e`` with ``E``, ``p`` with
``P``, ``f`` with ``F``).  The pairing is by label, so the tuple order of a
dual vector differs from the ``(K, P, E, F)`` basis order.

Orbits with ``f != 0`` are labelled by ``f`` and the Casimir

    K = k + e**2 / (2 f c**2) - p**2 / (2 f).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_force
from .group import AlgebraElement, GroupElement, KinematicParams, bracket, gamma

KIRILLOV_INDEX = ("K", "E", "P")


@dataclass(frozen=True)
class DualVector:
    k: float = 0.0
    e: float = 0.0
    p: float = 0.0
    f: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.k, self.e, self.p, self.f), axis=-1).astype(float)

    @classmethod
    def from_array(cls, a) -> "DualVector":
        a = np.asarray(a, dtype=float)
        return cls(a[..., 0], a[..., 1], a[..., 2], a[..., 3])


@dataclass(frozen=True)
class OrbitInvariants:
    f: float
    casimir: float


def pair(mu: DualVector, A: AlgebraElement):
    """Natural pairing of a dual vector with an algebra element."""
    return mu.k * A.K + mu.e * A.E + mu.p * A.P + mu.f * A.F


def coadjoint_action(g: GroupElement, mu: DualVector, params: KinematicParams) -> DualVector:
    """Left coadjoint action of ``g`` on ``mu``; leaves ``f`` untouched."""
    gm = gamma(g.v, params)
    ic2 = params.inv_c2
    v, tau, x = g.v, g.tau, g.x
    k, e, p, f = mu.k, mu.e, mu.p, mu.f
    return DualVector(
        k + gm * (x - v * tau) * e * ic2 + gm * (tau - v * x * ic2) * p
        + 0.5 * (tau * tau - x * x * ic2) * f,
        gm * e - gm * p * v - f * x,
        -gm * v * e * ic2 + gm * p + f * tau,
        f,
    )


def kirillov_matrix(mu: DualVector, params: KinematicParams) -> np.ndarray:
    """Kirillov form at ``mu`` on the non-central directions ordered (K, E, P).

    Entry ``(i, j)`` equals ``<mu, [X_j, X_i]>``.
    """
    a = mu.e * params.inv_c2
    p, f = mu.p, mu.f
    zero = np.zeros_like(np.asarray(p + a + f, dtype=float))
    return np.stack([
        np.stack([zero, -p + zero, -a + zero], axis=-1),
        np.stack([p + zero, zero, f + zero], axis=-1),
        np.stack([a + zero, -f + zero, zero], axis=-1),
    ], axis=-2)


def kirillov_kernel(mu: DualVector, params: KinematicParams) -> np.ndarray:
    """Closed-form kernel vector ``(f, e / c**2, -p)`` of the Kirillov matrix."""
    return np.stack(np.broadcast_arrays(
        np.asarray(mu.f, dtype=float), mu.e * params.inv_c2, -np.asarray(mu.p, dtype=float)
    ), axis=-1)


def casimir(mu: DualVector, params: KinematicParams) -> OrbitInvariants:
    check_force(mu.f)
    f = mu.f
    t = mu.p / f
    q = -mu.e / f
    return OrbitInvariants(f, mu.k + f * q * q * params.inv_c2 / 2 - f * t * t / 2)


def casimir_gradient(mu: DualVector, params: KinematicParams) -> AlgebraElement:
    """Analytic differential of the Casimir as an algebra element."""
    check_force(mu.f)
    f, e, p = mu.f, mu.e, mu.p
    ic2 = params.inv_c2
    return AlgebraElement(
        K=np.ones_like(np.asarray(f, dtype=float)) if np.ndim(f) else 1.0,
        P=-p / f,
        E=e * ic2 / f,
        F=-e * e * ic2 / (2 * f * f) + p * p / (2 * f * f),
    )


def lie_poisson_bracket(gradF: AlgebraElement, gradG: AlgebraElement, mu: DualVector,
                        params: KinematicParams):
    """``{F, G}(mu) = <mu, [dF, dG]>`` for differentials given as algebra elements."""
    return pair(mu, bracket(gradF, gradG, params))


def orbit_point(inv: OrbitInvariants, p, q, params: KinematicParams) -> DualVector:
    """Dual vector on the orbit ``inv`` with Darboux coordinates ``(p, q)``."""
    check_force(inv.f)
    f = inv.f
    k = inv.casimir - f * q * q * params.inv_c2 / 2 + p * p / (2 * f)
    return DualVector(k, -f * q, p, f)
