"""The 1+1 Poincare group, its central extension and the extended algebra.

Group elements are written ``(v, tau, x)``: a boost of velocity ``v``
followed by a time translation ``tau`` and a space translation ``x``.  The
central extension adds a parameter ``zeta`` (units length * time).

The Lie algebra basis is ordered ``(K, P, E, F)`` everywhere in this
package, with the nonzero brackets

    [K, E] = P,   [K, P] = E / c**2,   [P, E] = F,

and ``F`` central.

Every function is pure and accepts Python floats or NumPy arrays in the
fields of its arguments (arrays broadcast elementwise).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from ._validation import check_velocity

INFINITE = math.inf
BASIS = ("K", "P", "E", "F")


@dataclass(frozen=True)
class KinematicParams:
    """Speed of light, finite or ``INFINITE`` (the Galilean regime)."""

    c: float = 1.0

    def __post_init__(self):
        c = float(self.c)
        if math.isnan(c) or c <= 0:
            raise ValueError(f"c must be a positive real or INFINITE, got {self.c!r}")
        object.__setattr__(self, "c", c)

    @classmethod
    def parse(cls, value) -> "KinematicParams":
        """Build from a float or from the strings ``"inf"``/``"infinite"``."""
        if isinstance(value, str):
            text = value.strip().lower()
            if text in ("inf", "infinite", "infinity"):
                return cls(INFINITE)
            return cls(float(text))
        return cls(value)

    @property
    def is_galilean(self) -> bool:
        return math.isinf(self.c)

    @property
    def inv_c2(self) -> float:
        return 0.0 if self.is_galilean else 1.0 / (self.c * self.c)

    def __str__(self):
        return "inf" if self.is_galilean else repr(self.c)


GALILEAN = KinematicParams(INFINITE)


@dataclass(frozen=True)
class Tolerances:
    """Tolerances used by the verification suites."""

    rel: float = 1e-9
    abs: float = 1e-12
    finite_difference: float = 1e-6
    galilean_agreement: float = 1e-14
    galilean_laws: float = 1e-12
    slope: float = 0.1

    def __post_init__(self):
        for name in ("rel", "abs", "finite_difference", "galilean_agreement",
                     "galilean_laws", "slope"):
            if not getattr(self, name) > 0:
                raise ValueError(f"tolerance {name} must be > 0")


@dataclass(frozen=True)
class GroupElement:
    v: float = 0.0
    tau: float = 0.0
    x: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.v, self.tau, self.x), axis=-1).astype(float)

    @classmethod
    def from_array(cls, a) -> "GroupElement":
        a = np.asarray(a, dtype=float)
        return cls(a[..., 0], a[..., 1], a[..., 2])


@dataclass(frozen=True)
class ExtendedGroupElement:
    v: float = 0.0
    tau: float = 0.0
    x: float = 0.0
    zeta: float = 0.0

    @property
    def base(self) -> GroupElement:
        """Projection onto the unextended group (drops ``zeta``)."""
        return GroupElement(self.v, self.tau, self.x)

    def as_array(self) -> np.ndarray:
        return np.stack(
            np.broadcast_arrays(self.v, self.tau, self.x, self.zeta), axis=-1
        ).astype(float)

    @classmethod
    def from_array(cls, a) -> "ExtendedGroupElement":
        a = np.asarray(a, dtype=float)
        return cls(a[..., 0], a[..., 1], a[..., 2], a[..., 3])


@dataclass(frozen=True)
class AlgebraElement:
    """Coefficients on the ordered basis ``(K, P, E, F)``."""

    __array_ufunc__ = None  # let ndarray * element dispatch to __rmul__

    K: float = 0.0
    P: float = 0.0
    E: float = 0.0
    F: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.K, self.P, self.E, self.F), axis=-1).astype(float)

    @classmethod
    def from_array(cls, a) -> "AlgebraElement":
        a = np.asarray(a, dtype=float)
        return cls(a[..., 0], a[..., 1], a[..., 2], a[..., 3])

    @classmethod
    def basis(cls, label: str) -> "AlgebraElement":
        coefs = {name: 0.0 for name in BASIS}
        coefs[label] = 1.0
        return cls(**coefs)

    def __add__(self, other):
        return AlgebraElement(self.K + other.K, self.P + other.P,
                              self.E + other.E, self.F + other.F)

    def __mul__(self, scalar):
        return AlgebraElement(scalar * self.K, scalar * self.P,
                              scalar * self.E, scalar * self.F)

    __rmul__ = __mul__


IDENTITY = GroupElement(0.0, 0.0, 0.0)
EXTENDED_IDENTITY = ExtendedGroupElement(0.0, 0.0, 0.0, 0.0)


def gamma(v, params: KinematicParams):
    """Lorentz factor ``1 / sqrt(1 - v**2 / c**2)``; exactly 1 when c is infinite."""
    check_velocity(v, params)
    if params.is_galilean:
        return np.ones_like(v, dtype=float) if np.ndim(v) else 1.0
    return 1.0 / np.sqrt(1.0 - v * v * params.inv_c2)


def velocity_add(v1, v2, params: KinematicParams):
    """Relativistic addition ``(v1 + v2) / (1 + v1 v2 / c**2)``."""
    check_velocity(v1, params)
    check_velocity(v2, params)
    return (v1 + v2) / (1.0 + v1 * v2 * params.inv_c2)


def compose(g1: GroupElement, g2: GroupElement, params: KinematicParams) -> GroupElement:
    check_velocity(g2.v, params)
    g = gamma(g1.v, params)
    ic2 = params.inv_c2
    return GroupElement(
        velocity_add(g1.v, g2.v, params),
        g * g2.tau + g * g1.v * g2.x * ic2 + g1.tau,
        g * g1.v * g2.tau + g * g2.x + g1.x,
    )


def inverse(g: GroupElement, params: KinematicParams) -> GroupElement:
    gm = gamma(g.v, params)
    ic2 = params.inv_c2
    return GroupElement(
        -g.v,
        -gm * (g.tau - g.v * g.x * ic2),
        -gm * (g.x - g.v * g.tau),
    )


def cocycle(g1: GroupElement, g2: GroupElement, params: KinematicParams):
    """Central term added to ``zeta`` when composing in the extension."""
    g = gamma(g1.v, params)
    return (0.5 * g * (g1.x - g1.v * g1.tau) * g2.tau
            - 0.5 * g * (g1.tau - g1.v * g1.x * params.inv_c2) * g2.x)


def extended_compose(h1: ExtendedGroupElement, h2: ExtendedGroupElement,
                     params: KinematicParams) -> ExtendedGroupElement:
    base = compose(h1.base, h2.base, params)
    zeta = h1.zeta + h2.zeta + cocycle(h1.base, h2.base, params)
    return ExtendedGroupElement(base.v, base.tau, base.x, zeta)


def extended_inverse(h: ExtendedGroupElement, params: KinematicParams) -> ExtendedGroupElement:
    base_inv = inverse(h.base, params)
    # zeta^-1 solves zeta + zeta' + cocycle(h, h^-1) = 0
    zeta = -h.zeta - cocycle(h.base, base_inv, params)
    return ExtendedGroupElement(base_inv.v, base_inv.tau, base_inv.x, zeta)


def structure_constants(params: KinematicParams, exact: bool = False) -> np.ndarray:
    """Table ``C[i, j, k]``: coefficient of basis ``k`` in ``[X_i, X_j]``.

    With ``exact=True`` the entries are :class:`fractions.Fraction` (object
    array), so identities such as Jacobi can be checked without roundoff.
    """
    if exact:
        zero, one = Fraction(0), Fraction(1)
        ic2 = zero if params.is_galilean else one / Fraction(params.c) ** 2
        table = np.full((4, 4, 4), zero, dtype=object)
    else:
        zero, one, ic2 = 0.0, 1.0, params.inv_c2
        table = np.zeros((4, 4, 4))
    K, P, E, F = range(4)
    for (i, j, k, value) in ((K, E, P, one), (K, P, E, ic2), (P, E, F, one)):
        table[i, j, k] = value
        table[j, i, k] = -value
    return table


def jacobi_residual(table: np.ndarray):
    """Largest absolute entry of the Jacobi expression over all ``i, j, k, n``.

    Returns an exact zero for a consistent ``Fraction`` table.
    """
    dim = table.shape[0]
    worst = 0
    for i, j, k, n in product(range(dim), repeat=4):
        total = sum(
            table[i, j, m] * table[m, k, n]
            + table[j, k, m] * table[m, i, n]
            + table[k, i, m] * table[m, j, n]
            for m in range(dim)
        )
        worst = max(worst, abs(total))
    return worst


def bracket(A: AlgebraElement, B: AlgebraElement, params: KinematicParams) -> AlgebraElement:
    ic2 = params.inv_c2
    kk = A.K * B.K
    return AlgebraElement(
        np.zeros_like(kk, dtype=float) if np.ndim(kk) else 0.0,
        A.K * B.E - A.E * B.K,
        ic2 * (A.K * B.P - A.P * B.K),
        A.P * B.E - A.E * B.P,
    )
