import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poincare_orbits import (
    GALILEAN,
    IDENTITY,
    Chart,
    DegenerateOrbit,
    DualVector,
    GalileanRegime,
    GroupElement,
    KinematicParams,
    OrbitInvariants,
    PhasePoint,
    SpacetimePoint,
    VelocityOutOfRange,
    action_jacobian,
    casimir,
    coadjoint_action,
    compose,
    darboux_from_dual,
    dual_from_darboux,
    interval,
    phase_action,
    phase_to_spacetime,
    spacetime_action,
    spacetime_to_phase,
)
from poincare_orbits._numdiff import central_jacobian

C1 = KinematicParams(1.0)
finite = st.floats(-10, 10, allow_nan=False)
force = st.one_of(st.floats(0.1, 10), st.floats(-10, -0.1))
elements = st.builds(GroupElement, st.floats(-0.99, 0.99), finite, finite)
phase_pts = st.builds(PhasePoint, finite, finite)
st_pts = st.builds(SpacetimePoint, finite, finite)
duals = st.builds(DualVector, finite, finite, finite, force)


def scaled(a, b):
    a, b = np.asarray(a, float), np.asarray(b, float)
    return np.max(np.abs(a - b) / np.maximum(1.0, np.maximum(abs(a), abs(b))))


class TestCharts:
    def test_origin(self):
        assert darboux_from_dual(DualVector(4.0, 0.0, 0.0, 1.0)) == (0.0, -0.0, 0.0)

    def test_worked_point(self):
        assert darboux_from_dual(DualVector(1.0, -2.0, 3.0, 1.0)) == (3.0, 2.0, 3.0)

    def test_degenerate(self):
        with pytest.raises(DegenerateOrbit):
            darboux_from_dual(DualVector(1.0, 1.0, 1.0, 0.0))

    def test_dual_from_darboux_examples(self):
        assert dual_from_darboux(OrbitInvariants(1.0, 0.0), PhasePoint(0, 0), C1).as_array().tolist() == [0, 0, 0, 1]
        mu = dual_from_darboux(OrbitInvariants(1.0, -1.5), PhasePoint(3.0, 2.0), C1)
        assert mu.as_array() == pytest.approx([1, -2, 3, 1])

    @given(duals, phase_pts)
    def test_round_trip(self, mu, pt):
        inv = casimir(mu, C1)
        t, q, p = darboux_from_dual(dual_from_darboux(inv, pt, C1))
        assert scaled([p, q], [pt.p, pt.q]) <= 1e-12
        assert t == pytest.approx(p / inv.f)

    def test_chart_conversions(self):
        st_pt = phase_to_spacetime(PhasePoint(6.0, 1.0), 2.0)
        assert st_pt == SpacetimePoint(3.0, 1.0)
        assert spacetime_to_phase(st_pt, 2.0) == PhasePoint(6.0, 1.0)


class TestPhaseAction:
    def test_identity(self):
        assert phase_action(IDENTITY, PhasePoint(1.5, -2.0), 3.0, C1) == PhasePoint(1.5, -2.0)

    @given(finite, phase_pts, force)
    def test_time_translation_builds_momentum(self, tau, pt, f):
        out = phase_action(GroupElement(0.0, tau, 0.0), pt, f, C1)
        assert out == PhasePoint(pt.p + f * tau, pt.q)

    def test_boost(self):
        out = phase_action(GroupElement(0.6, 0, 0), PhasePoint(0.0, 1.0), 1.0, C1)
        assert out.as_array() == pytest.approx([0.75, 1.25], rel=1e-15)

    def test_degenerate_force(self):
        with pytest.raises(DegenerateOrbit):
            phase_action(IDENTITY, PhasePoint(1, 1), 0.0, C1)

    def test_fast_boost(self):
        with pytest.raises(VelocityOutOfRange):
            phase_action(GroupElement(1.2, 0, 0), PhasePoint(1, 1), 1.0, C1)

    @settings(max_examples=200)
    @given(elements, elements, phase_pts, force)
    def test_left_action(self, g1, g2, pt, f):
        lhs = phase_action(compose(g1, g2, C1), pt, f, C1)
        rhs = phase_action(g1, phase_action(g2, pt, f, C1), f, C1)
        assert scaled(lhs.as_array(), rhs.as_array()) <= 1e-9


class TestSpacetimeAction:
    def test_identity(self):
        assert spacetime_action(IDENTITY, SpacetimePoint(1.0, 2.0), C1) == SpacetimePoint(1.0, 2.0)

    @given(finite, finite, st_pts)
    def test_translation(self, tau, x, pt):
        out = spacetime_action(GroupElement(0.0, tau, x), pt, C1)
        assert out == SpacetimePoint(pt.t + tau, pt.q + x)

    def test_boost_matches_phase_example(self):
        out = spacetime_action(GroupElement(0.6, 0, 0), SpacetimePoint(0.0, 1.0), C1)
        assert out.as_array() == pytest.approx([0.75, 1.25], rel=1e-15)

    def test_galilean(self):
        out = spacetime_action(GroupElement(2.0, 1.0, 3.0), SpacetimePoint(0.5, 1.0), GALILEAN)
        assert out == SpacetimePoint(1.5, 5.0)

    @settings(max_examples=200)
    @given(elements, elements, st_pts)
    def test_left_action(self, g1, g2, pt):
        lhs = spacetime_action(compose(g1, g2, C1), pt, C1)
        rhs = spacetime_action(g1, spacetime_action(g2, pt, C1), C1)
        assert scaled(lhs.as_array(), rhs.as_array()) <= 1e-9

    @given(elements, phase_pts, force)
    def test_charts_agree(self, g, pt, f):
        ph = phase_action(g, pt, f, C1)
        sp = spacetime_action(g, SpacetimePoint(pt.p / f, pt.q), C1)
        assert scaled([ph.p / f, ph.q], sp.as_array()) <= 1e-12


class TestEquivariance:
    @settings(max_examples=300)
    @given(elements, duals)
    def test_darboux_chart_is_equivariant(self, g, mu):
        t1, q1, p1 = darboux_from_dual(coadjoint_action(g, mu, C1))
        t0, q0, p0 = darboux_from_dual(mu)
        sp = spacetime_action(g, SpacetimePoint(t0, q0), C1)
        ph = phase_action(g, PhasePoint(p0, q0), mu.f, C1)
        assert scaled([t1, q1], sp.as_array()) <= 1e-9
        assert scaled([p1, q1], ph.as_array()) <= 1e-9


class TestInterval:
    def test_zero_on_diagonal(self):
        a = SpacetimePoint(1.3, -0.4)
        assert interval(a, a, C1) == 0.0

    def test_timelike_unit(self):
        assert interval(SpacetimePoint(1, 0), SpacetimePoint(0, 0), C1) == 1.0

    def test_uses_c_squared(self):
        assert interval(SpacetimePoint(1, 1), SpacetimePoint(0, 0), KinematicParams(2.0)) == 3.0

    def test_galilean_rejected(self):
        with pytest.raises(GalileanRegime):
            interval(SpacetimePoint(1, 0), SpacetimePoint(0, 0), GALILEAN)

    def test_boost_invariance(self):
        g = GroupElement(0.6, 0, 0)
        a, b = SpacetimePoint(2.0, 0.5), SpacetimePoint(-1.0, 1.5)
        boosted = interval(spacetime_action(g, a, C1), spacetime_action(g, b, C1), C1)
        assert boosted == pytest.approx(interval(a, b, C1), rel=1e-9)

    @settings(max_examples=200)
    @given(elements, st_pts, st_pts)
    def test_invariance(self, g, a, b):
        before = interval(a, b, C1)
        after = interval(spacetime_action(g, a, C1), spacetime_action(g, b, C1), C1)
        assert scaled(after, before) <= 1e-9


class TestJacobian:
    def test_identity(self):
        for chart in Chart:
            np.testing.assert_array_equal(action_jacobian(IDENTITY, 1.0, C1, chart), np.eye(2))

    def test_boost_phase(self):
        J = action_jacobian(GroupElement(0.6, 0, 0), 1.0, C1, Chart.PHASE)
        np.testing.assert_allclose(J, [[1.25, 0.75], [0.75, 1.25]], rtol=1e-15)
        assert np.linalg.det(J) == pytest.approx(1.0, abs=1e-12)

    def test_galilean_shear(self):
        J = action_jacobian(GroupElement(3.0, 0, 0), 2.0, GALILEAN, "phase")
        np.testing.assert_array_equal(J, [[1.0, 0.0], [1.5, 1.0]])

    def test_phase_chart_needs_force(self):
        with pytest.raises(DegenerateOrbit):
            action_jacobian(IDENTITY, 0.0, C1, Chart.PHASE)

    @settings(max_examples=300)
    @given(elements, force)
    def test_unit_determinant(self, g, f):
        assert abs(np.linalg.det(action_jacobian(g, f, C1, Chart.PHASE)) - 1) <= 1e-12
        assert abs(np.linalg.det(action_jacobian(g, f, C1, Chart.SPACETIME)) - 1) <= 1e-12

    @given(elements, phase_pts, force)
    def test_matches_finite_differences(self, g, pt, f):
        fd = central_jacobian(
            lambda z: phase_action(g, PhasePoint(*z), f, C1).as_array(), pt.as_array())
        assert scaled(fd, action_jacobian(g, f, C1, Chart.PHASE)) <= 1e-6
        fd = central_jacobian(
            lambda z: spacetime_action(g, SpacetimePoint(*z), C1).as_array(), [pt.p, pt.q])
        assert scaled(fd, action_jacobian(g, f, C1, Chart.SPACETIME)) <= 1e-6
