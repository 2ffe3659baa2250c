"""Property suites behind ``poincare-orbits verify``.

Each property draws its own seeded batch (seeded from the run seed and the
property name), so adding or reordering properties never changes another
property's inputs.  Properties report the worst deviation seen and the
tolerance it was held to; a tolerance of 0 means the law must hold
bit-for-bit.

Group elements are compared in light units ``(v/c, tau, x/c, zeta/c)`` when
``c`` is finite, which keeps absolute tolerances meaningful for large ``c``.
"""
from __future__ import annotations

import json
import zlib
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import wire
from ._numdiff import central_jacobian_batch
from ._validation import abs_deviation, scaled_deviation
from .coadjoint import (
    DualVector,
    casimir,
    coadjoint_action,
    kirillov_kernel,
    kirillov_matrix,
    lie_poisson_bracket,
    orbit_point,
)
from .contraction import (
    contraction_rate,
    galilei_compose,
    galilei_extended_compose,
    galilei_inverse,
    galilei_phase_action,
    galilei_spacetime_action,
)
from .group import (
    BASIS,
    EXTENDED_IDENTITY,
    GALILEAN,
    IDENTITY,
    AlgebraElement,
    ExtendedGroupElement,
    GroupElement,
    KinematicParams,
    Tolerances,
    bracket,
    compose,
    extended_compose,
    extended_inverse,
    inverse,
    jacobi_residual,
    structure_constants,
    velocity_add,
)
from .realization import (
    Chart,
    PhasePoint,
    SpacetimePoint,
    action_jacobian,
    darboux_from_dual,
    dual_from_darboux,
    interval,
    phase_action,
    spacetime_action,
)
from .sampling import Sampler, contraction_sample

CONTRACTION_GRID = (1e2, 1e3, 1e4, 1e5, 1e6)
CONTRACTION_SAMPLE_SIZE = 32


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    cases: int = 1000
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    c: str | float = 1.0

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError("seed must be an unsigned integer")
        if isinstance(self.cases, bool) or not isinstance(self.cases, int) or self.cases < 1:
            raise ValueError("cases must be an integer >= 1")
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be > 0")
        KinematicParams.parse(self.c)

    @property
    def params(self) -> KinematicParams:
        return KinematicParams.parse(self.c)

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances(rel=self.rel_tol, abs=self.abs_tol)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    cases: int
    max_deviation: float
    tolerance: float
    status: str  # "pass", "fail" or "skip"

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "cases": self.cases,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "status": self.status,
        })


class Skip(Exception):
    """Raised by a property that does not apply in the current regime."""


# light-unit scaling of (v, tau, x[, zeta]) columns
def _light(arr, params: KinematicParams) -> np.ndarray:
    arr = np.array(arr, dtype=float)
    if not params.is_galilean:
        scale = np.array([params.c, 1.0, params.c, params.c][: arr.shape[-1]])
        arr = arr / scale
    return arr


class Context:
    """Shared inputs of one verification run."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.params = config.params
        self.tol = config.tolerances
        self.n = config.cases

    def sampler(self, name: str, params: KinematicParams | None = None) -> Sampler:
        seed = [self.config.seed, zlib.crc32(name.encode())]
        return Sampler(params or self.params, seed)


_PROPERTIES: dict[str, Callable[[Context], tuple[float, float, int]]] = {}


def prop(name: str):
    def register(func):
        _PROPERTIES[name] = func
        return func
    return register


def property_names() -> list[str]:
    return sorted(_PROPERTIES)


# --- group core -------------------------------------------------------------

@prop("group.associativity")
def _(ctx):
    s = ctx.sampler("group.associativity")
    g1, g2, g3 = (s.group_elements(ctx.n) for _ in range(3))
    lhs = compose(compose(g1, g2, ctx.params), g3, ctx.params)
    rhs = compose(g1, compose(g2, g3, ctx.params), ctx.params)
    return scaled_deviation(_light(lhs.as_array(), ctx.params),
                            _light(rhs.as_array(), ctx.params)), ctx.tol.rel, ctx.n


@prop("group.identity")
def _(ctx):
    g = ctx.sampler("group.identity").group_elements(ctx.n)
    e = GroupElement(np.zeros(ctx.n), np.zeros(ctx.n), np.zeros(ctx.n))
    left = compose(e, g, ctx.params).as_array()
    right = compose(g, e, ctx.params).as_array()
    inv_e = inverse(IDENTITY, ctx.params).as_array()
    dev = max(abs_deviation(left, g.as_array()), abs_deviation(right, g.as_array()),
              abs_deviation(inv_e, np.zeros(3)))
    return dev, 0.0, ctx.n


@prop("group.inverse")
def _(ctx):
    g = ctx.sampler("group.inverse").group_elements(ctx.n)
    gi = inverse(g, ctx.params)
    zero = np.zeros((ctx.n, 3))
    dev = max(abs_deviation(_light(compose(g, gi, ctx.params).as_array(), ctx.params), zero),
              abs_deviation(_light(compose(gi, g, ctx.params).as_array(), ctx.params), zero))
    return dev, ctx.tol.abs, ctx.n


@prop("group.translations_commute")
def _(ctx):
    s = ctx.sampler("group.translations_commute")
    zero = np.zeros(ctx.n)
    a = GroupElement(zero, *s.vectors(ctx.n, 2).T)
    b = GroupElement(zero, *s.vectors(ctx.n, 2).T)
    ab = compose(a, b, ctx.params).as_array()
    expected = np.stack([zero, a.tau + b.tau, a.x + b.x], axis=-1)
    return abs_deviation(ab, expected), 0.0, ctx.n


@prop("group.velocity_bound")
def _(ctx):
    if ctx.params.is_galilean:
        raise Skip
    s = ctx.sampler("group.velocity_bound")
    v1, v2 = s.velocities(ctx.n), s.velocities(ctx.n)
    extreme = np.array([0.99, -0.99, 0.999999]) * ctx.params.c
    w = np.concatenate([velocity_add(v1, v2, ctx.params), velocity_add(extreme, extreme, ctx.params)])
    return float(np.count_nonzero(np.abs(w) >= ctx.params.c)), 0.0, ctx.n + 3


@prop("extended.associativity")
def _(ctx):
    s = ctx.sampler("extended.associativity")
    h1, h2, h3 = (s.extended_elements(ctx.n) for _ in range(3))
    lhs = extended_compose(extended_compose(h1, h2, ctx.params), h3, ctx.params)
    rhs = extended_compose(h1, extended_compose(h2, h3, ctx.params), ctx.params)
    return scaled_deviation(_light(lhs.as_array(), ctx.params),
                            _light(rhs.as_array(), ctx.params)), ctx.tol.rel, ctx.n


@prop("extended.projection_homomorphism")
def _(ctx):
    s = ctx.sampler("extended.projection_homomorphism")
    h1, h2 = s.extended_elements(ctx.n), s.extended_elements(ctx.n)
    full = extended_compose(h1, h2, ctx.params).as_array()[:, :3]
    base = compose(h1.base, h2.base, ctx.params).as_array()
    return abs_deviation(full, base), 0.0, ctx.n


@prop("extended.identity")
def _(ctx):
    h = ctx.sampler("extended.identity").extended_elements(ctx.n)
    z = np.zeros(ctx.n)
    e = ExtendedGroupElement(z, z, z, z)
    dev = max(abs_deviation(extended_compose(e, h, ctx.params).as_array(), h.as_array()),
              abs_deviation(extended_compose(h, e, ctx.params).as_array(), h.as_array()),
              abs_deviation(extended_inverse(EXTENDED_IDENTITY, ctx.params).as_array(), np.zeros(4)))
    return dev, 0.0, ctx.n


@prop("extended.inverse")
def _(ctx):
    h = ctx.sampler("extended.inverse").extended_elements(ctx.n)
    hi = extended_inverse(h, ctx.params)
    zero = np.zeros((ctx.n, 4))
    dev = max(
        abs_deviation(_light(extended_compose(h, hi, ctx.params).as_array(), ctx.params), zero),
        abs_deviation(_light(extended_compose(hi, h, ctx.params).as_array(), ctx.params), zero))
    return dev, ctx.tol.abs, ctx.n


# --- algebra ----------------------------------------------------------------

@prop("algebra.jacobi_exact")
def _(ctx):
    table = structure_constants(ctx.params, exact=True)
    return float(jacobi_residual(table)), 0.0, 4 ** 4


@prop("algebra.jacobi_float")
def _(ctx):
    table = structure_constants(ctx.params)
    return float(jacobi_residual(table)), ctx.tol.abs, 4 ** 4


@prop("algebra.structure_antisymmetry")
def _(ctx):
    table = structure_constants(ctx.params, exact=True)
    worst = max(abs(table[i, j, k] + table[j, i, k])
                for i in range(4) for j in range(4) for k in range(4))
    return float(worst), 0.0, 4 ** 3


def _algebra_batch(s: Sampler, n: int) -> AlgebraElement:
    return AlgebraElement.from_array(s.vectors(n, 4))


@prop("algebra.bracket_matches_table")
def _(ctx):
    s = ctx.sampler("algebra.bracket_matches_table")
    A, B = _algebra_batch(s, ctx.n), _algebra_batch(s, ctx.n)
    table = structure_constants(ctx.params)
    via_table = np.einsum("ni,nj,ijk->nk", A.as_array(), B.as_array(), table)
    return scaled_deviation(bracket(A, B, ctx.params).as_array(), via_table), ctx.tol.rel, ctx.n


@prop("algebra.bracket_antisymmetry")
def _(ctx):
    s = ctx.sampler("algebra.bracket_antisymmetry")
    A, B = _algebra_batch(s, ctx.n), _algebra_batch(s, ctx.n)
    ab = bracket(A, B, ctx.params).as_array()
    ba = bracket(B, A, ctx.params).as_array()
    return abs_deviation(ab, -ba), 0.0, ctx.n


@prop("algebra.bracket_bilinearity")
def _(ctx):
    s = ctx.sampler("algebra.bracket_bilinearity")
    A, B, C = (_algebra_batch(s, ctx.n) for _ in range(3))
    alpha, beta = s.vectors(ctx.n, 2).T
    lhs = bracket(alpha * A + beta * B, C, ctx.params).as_array()
    rhs = (alpha * bracket(A, C, ctx.params) + beta * bracket(B, C, ctx.params)).as_array()
    return scaled_deviation(lhs, rhs), ctx.tol.rel, ctx.n


@prop("algebra.f_central")
def _(ctx):
    s = ctx.sampler("algebra.f_central")
    A = _algebra_batch(s, ctx.n)
    F = AlgebraElement.basis("F")
    dev = max(abs_deviation(bracket(F, A, ctx.params).as_array(), 0.0),
              abs_deviation(bracket(A, F, ctx.params).as_array(), 0.0))
    return dev, 0.0, ctx.n


# --- coadjoint ----------------------------------------------------------------

@prop("coadjoint.left_action")
def _(ctx):
    s = ctx.sampler("coadjoint.left_action")
    g1, g2, mu = s.group_elements(ctx.n), s.group_elements(ctx.n), s.dual_vectors(ctx.n)
    lhs = coadjoint_action(compose(g1, g2, ctx.params), mu, ctx.params).as_array()
    rhs = coadjoint_action(g1, coadjoint_action(g2, mu, ctx.params), ctx.params).as_array()
    return scaled_deviation(lhs, rhs), ctx.tol.rel, ctx.n


@prop("coadjoint.identity")
def _(ctx):
    mu = ctx.sampler("coadjoint.identity").dual_vectors(ctx.n)
    return abs_deviation(coadjoint_action(IDENTITY, mu, ctx.params).as_array(),
                         mu.as_array()), 0.0, ctx.n


@prop("coadjoint.f_preserved")
def _(ctx):
    s = ctx.sampler("coadjoint.f_preserved")
    g, mu = s.group_elements(ctx.n), s.dual_vectors(ctx.n)
    return abs_deviation(coadjoint_action(g, mu, ctx.params).f, mu.f), 0.0, ctx.n


@prop("coadjoint.casimir_invariance")
def _(ctx):
    s = ctx.sampler("coadjoint.casimir_invariance")
    g, mu = s.group_elements(ctx.n), s.dual_vectors(ctx.n)
    before = casimir(mu, ctx.params)
    after = casimir(coadjoint_action(g, mu, ctx.params), ctx.params)
    return scaled_deviation(after.casimir, before.casimir), ctx.tol.rel, ctx.n


@prop("coadjoint.orbit_point_round_trip")
def _(ctx):
    mu = ctx.sampler("coadjoint.orbit_point_round_trip").dual_vectors(ctx.n)
    back = orbit_point(casimir(mu, ctx.params), mu.p, -mu.e / mu.f, ctx.params)
    return scaled_deviation(back.as_array(), mu.as_array()), ctx.tol.rel, ctx.n


def _casimir_fd_gradient(mu: DualVector, params: KinematicParams) -> AlgebraElement:
    """Finite-difference differential of the Casimir at a batch of points."""
    def k_of(points):
        return casimir(DualVector.from_array(points), params).casimir[:, None]

    grad = central_jacobian_batch(k_of, mu.as_array())[:, 0, :]  # columns (k, e, p, f)
    return AlgebraElement(K=grad[:, 0], P=grad[:, 2], E=grad[:, 1], F=grad[:, 3])


@prop("lie_poisson.casimir_commutes")
def _(ctx):
    mu = ctx.sampler("lie_poisson.casimir_commutes").dual_vectors(ctx.n)
    grad = _casimir_fd_gradient(mu, ctx.params)
    worst = 0.0
    for label in BASIS:
        value = lie_poisson_bracket(grad, AlgebraElement.basis(label), mu, ctx.params)
        worst = max(worst, abs_deviation(value, 0.0))
    return worst, ctx.tol.finite_difference, ctx.n


@prop("lie_poisson.antisymmetry")
def _(ctx):
    s = ctx.sampler("lie_poisson.antisymmetry")
    A, B, mu = _algebra_batch(s, ctx.n), _algebra_batch(s, ctx.n), s.dual_vectors(ctx.n)
    ab = lie_poisson_bracket(A, B, mu, ctx.params)
    ba = lie_poisson_bracket(B, A, mu, ctx.params)
    return abs_deviation(ab, -ba), 0.0, ctx.n


@prop("lie_poisson.linear_in_mu")
def _(ctx):
    s = ctx.sampler("lie_poisson.linear_in_mu")
    A, B = _algebra_batch(s, ctx.n), _algebra_batch(s, ctx.n)
    mu, nu = s.dual_vectors(ctx.n), s.dual_vectors(ctx.n)
    alpha, beta = s.vectors(ctx.n, 2).T
    mix = DualVector.from_array(alpha[:, None] * mu.as_array() + beta[:, None] * nu.as_array())
    lhs = lie_poisson_bracket(A, B, mix, ctx.params)
    rhs = (alpha * lie_poisson_bracket(A, B, mu, ctx.params)
           + beta * lie_poisson_bracket(A, B, nu, ctx.params))
    return scaled_deviation(lhs, rhs), ctx.tol.rel, ctx.n


@prop("kirillov.antisymmetry")
def _(ctx):
    mu = ctx.sampler("kirillov.antisymmetry").dual_vectors(ctx.n)
    M = kirillov_matrix(mu, ctx.params)
    return abs_deviation(M, -np.swapaxes(M, -1, -2)), 0.0, ctx.n


@prop("kirillov.matches_lie_poisson")
def _(ctx):
    mu = ctx.sampler("kirillov.matches_lie_poisson").dual_vectors(ctx.n)
    M = kirillov_matrix(mu, ctx.params)
    labels = ("K", "E", "P")
    expected = np.empty_like(M)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            expected[:, i, j] = lie_poisson_bracket(
                AlgebraElement.basis(b), AlgebraElement.basis(a), mu, ctx.params)
    return scaled_deviation(M, expected), ctx.tol.rel, ctx.n


@prop("kirillov.rank_two")
def _(ctx):
    mu = ctx.sampler("kirillov.rank_two").dual_vectors(ctx.n)
    ranks = np.linalg.matrix_rank(kirillov_matrix(mu, ctx.params))
    return float(np.max(np.abs(ranks - 2))), 0.0, ctx.n


@prop("kirillov.kernel_annihilates_casimir_gradient")
def _(ctx):
    mu = ctx.sampler("kirillov.kernel_annihilates_casimir_gradient").dual_vectors(ctx.n)
    M = kirillov_matrix(mu, ctx.params)
    grad = _casimir_fd_gradient(mu, ctx.params)
    g_kep = np.stack([grad.K, grad.E, grad.P], axis=-1)
    residual = np.linalg.norm(np.einsum("nij,nj->ni", M, g_kep), axis=-1)
    scale = np.maximum(1.0, np.linalg.norm(M, axis=(-2, -1)) * np.linalg.norm(g_kep, axis=-1))
    # numerical kernel (SVD) must be parallel to both the gradient and the closed form
    null = np.linalg.svd(M)[2][:, -1, :]
    unit_grad = g_kep / np.linalg.norm(g_kep, axis=-1, keepdims=True)
    closed = kirillov_kernel(mu, ctx.params)
    closed /= np.linalg.norm(closed, axis=-1, keepdims=True)
    dev = max(float(np.max(residual / scale)),
              float(np.max(np.linalg.norm(np.cross(null, unit_grad), axis=-1))),
              float(np.max(np.linalg.norm(np.cross(closed, unit_grad), axis=-1))))
    return dev, ctx.tol.finite_difference, ctx.n


# --- realization -------------------------------------------------------------

@prop("realization.chart_equivariance")
def _(ctx):
    s = ctx.sampler("realization.chart_equivariance")
    g, mu = s.group_elements(ctx.n), s.dual_vectors(ctx.n)
    t1, q1, p1 = darboux_from_dual(coadjoint_action(g, mu, ctx.params))
    t0, q0, p0 = darboux_from_dual(mu)
    st = spacetime_action(g, SpacetimePoint(t0, q0), ctx.params)
    ph = phase_action(g, PhasePoint(p0, q0), mu.f, ctx.params)
    dev = max(scaled_deviation(np.stack([t1, q1], -1), st.as_array()),
              scaled_deviation(np.stack([p1, q1], -1), ph.as_array()))
    return dev, ctx.tol.rel, ctx.n


@prop("realization.chart_consistency")
def _(ctx):
    s = ctx.sampler("realization.chart_consistency")
    g, pt, f = s.group_elements(ctx.n), s.phase_points(ctx.n), s.forces(ctx.n)
    ph = phase_action(g, pt, f, ctx.params)
    st = spacetime_action(g, SpacetimePoint(pt.p / f, pt.q), ctx.params)
    return scaled_deviation(np.stack([ph.p / f, ph.q], -1), st.as_array()), ctx.tol.rel, ctx.n


@prop("realization.darboux_round_trip")
def _(ctx):
    s = ctx.sampler("realization.darboux_round_trip")
    mu, pt = s.dual_vectors(ctx.n), s.phase_points(ctx.n)
    inv = casimir(mu, ctx.params)
    t, q, p = darboux_from_dual(dual_from_darboux(inv, pt, ctx.params))
    return scaled_deviation(np.stack([p, q], -1), pt.as_array()), ctx.tol.rel, ctx.n


@prop("realization.phase_left_action")
def _(ctx):
    s = ctx.sampler("realization.phase_left_action")
    g1, g2, pt, f = (s.group_elements(ctx.n), s.group_elements(ctx.n),
                     s.phase_points(ctx.n), s.forces(ctx.n))
    lhs = phase_action(compose(g1, g2, ctx.params), pt, f, ctx.params)
    rhs = phase_action(g1, phase_action(g2, pt, f, ctx.params), f, ctx.params)
    return scaled_deviation(lhs.as_array(), rhs.as_array()), ctx.tol.rel, ctx.n


@prop("realization.spacetime_left_action")
def _(ctx):
    s = ctx.sampler("realization.spacetime_left_action")
    g1, g2, pt = s.group_elements(ctx.n), s.group_elements(ctx.n), s.spacetime_points(ctx.n)
    lhs = spacetime_action(compose(g1, g2, ctx.params), pt, ctx.params)
    rhs = spacetime_action(g1, spacetime_action(g2, pt, ctx.params), ctx.params)
    return scaled_deviation(lhs.as_array(), rhs.as_array()), ctx.tol.rel, ctx.n


@prop("realization.phase_determinant")
def _(ctx):
    s = ctx.sampler("realization.phase_determinant")
    g, f = s.group_elements(ctx.n), s.forces(ctx.n)
    det = np.linalg.det(action_jacobian(g, f, ctx.params, Chart.PHASE))
    return abs_deviation(det, 1.0), ctx.tol.abs, ctx.n


@prop("realization.spacetime_determinant")
def _(ctx):
    g = ctx.sampler("realization.spacetime_determinant").group_elements(ctx.n)
    det = np.linalg.det(action_jacobian(g, None, ctx.params, Chart.SPACETIME))
    return abs_deviation(det, 1.0), ctx.tol.abs, ctx.n


@prop("realization.phase_jacobian_finite_difference")
def _(ctx):
    s = ctx.sampler("realization.phase_jacobian_finite_difference")
    g, pt, f = s.group_elements(ctx.n), s.phase_points(ctx.n), s.forces(ctx.n)

    # differentiate in light units (p, q/c) so large c does not swamp the step
    c = 1.0 if ctx.params.is_galilean else ctx.params.c
    unit = np.array([1.0, c])

    def act(points):
        image = phase_action(g, PhasePoint.from_array(points * unit), f, ctx.params)
        return image.as_array() / unit

    fd = central_jacobian_batch(act, pt.as_array() / unit)
    closed = action_jacobian(g, f, ctx.params, Chart.PHASE) * unit[None, :] / unit[:, None]
    return scaled_deviation(fd, closed), ctx.tol.finite_difference, ctx.n


@prop("realization.time_translation_momentum")
def _(ctx):
    s = ctx.sampler("realization.time_translation_momentum")
    z = np.zeros(ctx.n)
    g = GroupElement(z, s.vectors(ctx.n, 1)[:, 0], z)
    pt, f = s.phase_points(ctx.n), s.forces(ctx.n)
    out = phase_action(g, pt, f, ctx.params).as_array()
    expected = np.stack([pt.p + f * g.tau, pt.q], -1)
    return abs_deviation(out, expected), 0.0, ctx.n


@prop("realization.interval_invariance")
def _(ctx):
    if ctx.params.is_galilean:
        raise Skip
    s = ctx.sampler("realization.interval_invariance")
    g, a, b = s.group_elements(ctx.n), s.spacetime_points(ctx.n), s.spacetime_points(ctx.n)
    before = interval(a, b, ctx.params)
    after = interval(spacetime_action(g, a, ctx.params), spacetime_action(g, b, ctx.params),
                     ctx.params)
    return scaled_deviation(after, before), ctx.tol.rel, ctx.n


# --- contraction ---------------------------------------------------------------

@prop("contraction.agreement")
def _(ctx):
    s = ctx.sampler("contraction.agreement", GALILEAN)
    g1, g2, pt, st, f = (s.group_elements(ctx.n), s.group_elements(ctx.n),
                         s.phase_points(ctx.n), s.spacetime_points(ctx.n), s.forces(ctx.n))
    h1, h2 = s.extended_elements(ctx.n), s.extended_elements(ctx.n)
    pairs = [
        (galilei_compose(g1, g2), compose(g1, g2, GALILEAN)),
        (galilei_inverse(g1), inverse(g1, GALILEAN)),
        (galilei_extended_compose(h1, h2), extended_compose(h1, h2, GALILEAN)),
        (galilei_spacetime_action(g1, st), spacetime_action(g1, st, GALILEAN)),
        (galilei_phase_action(g1, pt, f), phase_action(g1, pt, f, GALILEAN)),
    ]
    dev = max(scaled_deviation(a.as_array(), b.as_array()) for a, b in pairs)
    return dev, ctx.tol.galilean_agreement, ctx.n


@prop("contraction.galilei_group_laws")
def _(ctx):
    s = ctx.sampler("contraction.galilei_group_laws", GALILEAN)
    g1, g2, g3 = (s.group_elements(ctx.n) for _ in range(3))
    h1, h2, h3 = (s.extended_elements(ctx.n) for _ in range(3))
    z = np.zeros(ctx.n)
    e = GroupElement(z, z, z)
    assoc = scaled_deviation(galilei_compose(galilei_compose(g1, g2), g3).as_array(),
                             galilei_compose(g1, galilei_compose(g2, g3)).as_array())
    ext_assoc = scaled_deviation(
        galilei_extended_compose(galilei_extended_compose(h1, h2), h3).as_array(),
        galilei_extended_compose(h1, galilei_extended_compose(h2, h3)).as_array())
    ident = max(abs_deviation(galilei_compose(e, g1).as_array(), g1.as_array()),
                abs_deviation(galilei_compose(g1, e).as_array(), g1.as_array()))
    inv = max(abs_deviation(galilei_compose(g1, galilei_inverse(g1)).as_array(), 0.0),
              abs_deviation(galilei_compose(galilei_inverse(g1), g1).as_array(), 0.0))
    return max(assoc, ext_assoc, ident, inv), ctx.tol.galilean_laws, ctx.n


@prop("contraction.galilei_left_actions")
def _(ctx):
    s = ctx.sampler("contraction.galilei_left_actions", GALILEAN)
    g1, g2 = s.group_elements(ctx.n), s.group_elements(ctx.n)
    st, pt, f = s.spacetime_points(ctx.n), s.phase_points(ctx.n), s.forces(ctx.n)
    g12 = galilei_compose(g1, g2)
    dev_st = scaled_deviation(
        galilei_spacetime_action(g12, st).as_array(),
        galilei_spacetime_action(g1, galilei_spacetime_action(g2, st)).as_array())
    dev_ph = scaled_deviation(
        galilei_phase_action(g12, pt, f).as_array(),
        galilei_phase_action(g1, galilei_phase_action(g2, pt, f), f).as_array())
    ph = galilei_phase_action(g1, pt, f)
    st_img = galilei_spacetime_action(g1, SpacetimePoint(pt.p / f, pt.q))
    dev_chart = scaled_deviation(np.stack([ph.p / f, ph.q], -1), st_img.as_array())
    return max(dev_st, dev_ph, dev_chart), ctx.tol.galilean_laws, ctx.n


def _rate_property(op_kind: str):
    def check(ctx):
        sample = contraction_sample(op_kind, seed=ctx.config.seed, n=CONTRACTION_SAMPLE_SIZE)
        report = contraction_rate(op_kind, sample, CONTRACTION_GRID)
        if report.fitted_slope is None or not report.strictly_decreasing:
            return float("inf"), ctx.tol.slope, len(sample)
        return abs(report.fitted_slope + 2.0), ctx.tol.slope, len(sample)
    return check


for _kind in ("compose", "spacetime", "phase"):
    prop(f"contraction.rate_{_kind}")(_rate_property(_kind))


# --- cli wire formats ------------------------------------------------------------

@prop("cli.json_round_trip")
def _(ctx):
    s = ctx.sampler("cli.json_round_trip")
    n = min(ctx.n, 200)
    batches = [s.group_elements(n), s.extended_elements(n), s.dual_vectors(n),
               s.phase_points(n), s.spacetime_points(n)]
    schema_of = {GroupElement: "group", ExtendedGroupElement: "extended", DualVector: "dual",
                 PhasePoint: "phase", SpacetimePoint: "spacetime"}
    worst = 0.0
    for batch in batches:
        cls = type(batch)
        for row in batch.as_array():
            obj = cls.from_array(row)
            back = wire.loads(schema_of[cls], wire.dumps(obj))
            worst = max(worst, abs_deviation(back.as_array(), obj.as_array()))
    return worst, 0.0, n * len(batches)


def run_property(name: str, ctx: Context) -> PropertyResult:
    try:
        dev, tol, cases = _PROPERTIES[name](ctx)
    except Skip:
        return PropertyResult(name, 0, 0.0, 0.0, "skip")
    dev = float(dev)
    passed = bool(dev <= tol) and np.isfinite(dev)
    return PropertyResult(name, int(cases), dev, float(tol), "pass" if passed else "fail")


def run_suite(config: RunConfig) -> list[PropertyResult]:
    """Run every registered property, ordered by name."""
    ctx = Context(config)
    return [run_property(name, ctx) for name in property_names()]
