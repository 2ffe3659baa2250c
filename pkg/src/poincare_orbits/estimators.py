"""scikit-learn compatible transformers over the group actions and charts.

These wrap the pure functions of the library so that batches of points can
flow through ``Pipeline``/``clone``/``get_params`` like any other transformer.
Rows are points, columns are coordinates:

=============  =====================
space          columns
=============  =====================
``group``      ``v, tau, x``
``spacetime``  ``t, q``
``phase``      ``p, q``
``coadjoint``  ``k, e, p, f``
=============  =====================
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from ._validation import check_force, check_velocity
from .coadjoint import DualVector, OrbitInvariants, casimir, coadjoint_action, orbit_point
from .group import GroupElement, KinematicParams, compose, inverse
from .realization import PhasePoint, SpacetimePoint, phase_action, spacetime_action

COLUMNS = {
    "group": ("v", "tau", "x"),
    "spacetime": ("t", "q"),
    "phase": ("p", "q"),
    "coadjoint": ("k", "e", "p", "f"),
}


def _check_columns(X, names, estimator):
    X = check_array(X, dtype=np.float64, ensure_all_finite=True)
    if X.shape[1] != len(names):
        raise ValueError(
            f"{type(estimator).__name__} expects {len(names)} columns "
            f"{list(names)}, got {X.shape[1]}"
        )
    return X


class GroupActionTransformer(TransformerMixin, BaseEstimator):
    """Apply the group element ``(v, tau, x)`` to every row of ``X``.

    Parameters
    ----------
    v, tau, x : float
        Boost velocity, time translation and space translation.
    c : float or "inf"
        Speed of light; ``"inf"`` selects the Galilean regime.
    space : {"spacetime", "phase", "coadjoint", "group"}
        What the rows of ``X`` are.  ``"group"`` left-multiplies group elements.
    force : float, optional
        Orbit force ``f``; required for ``space="phase"``.

    ``fit`` only validates; the transformation is fixed by the parameters.
    ``inverse_transform`` applies the inverse element.
    """

    def __init__(self, v=0.0, tau=0.0, x=0.0, c=1.0, space="spacetime", force=None):
        self.v = v
        self.tau = tau
        self.x = x
        self.c = c
        self.space = space
        self.force = force

    def fit(self, X, y=None):
        if self.space not in COLUMNS:
            raise ValueError(f"space must be one of {sorted(COLUMNS)}, got {self.space!r}")
        params = KinematicParams.parse(self.c)
        check_velocity(self.v, params)
        if self.space == "phase":
            if self.force is None:
                raise ValueError("space='phase' requires force")
            check_force(self.force)
        X = _check_columns(X, COLUMNS[self.space], self)
        self.params_ = params
        self.element_ = GroupElement(float(self.v), float(self.tau), float(self.x))
        self.n_features_in_ = X.shape[1]
        return self

    def _apply(self, g, X):
        X = _check_columns(X, COLUMNS[self.space], self)
        if self.space == "spacetime":
            return spacetime_action(g, SpacetimePoint.from_array(X), self.params_).as_array()
        if self.space == "phase":
            return phase_action(g, PhasePoint.from_array(X), self.force, self.params_).as_array()
        if self.space == "coadjoint":
            return coadjoint_action(g, DualVector.from_array(X), self.params_).as_array()
        return compose(g, GroupElement.from_array(X), self.params_).as_array()

    def transform(self, X):
        check_is_fitted(self, "element_")
        return self._apply(self.element_, X)

    def inverse_transform(self, X):
        check_is_fitted(self, "element_")
        return self._apply(inverse(self.element_, self.params_), X)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "element_")
        return np.asarray(COLUMNS[self.space], dtype=object)


class DarbouxChart(TransformerMixin, BaseEstimator):
    """Chart between dual vectors ``(k, e, p, f)`` and orbit coordinates.

    ``fit`` reads the orbit labels ``(f, casimir)`` off the training rows,
    which must all lie on one orbit.  ``transform`` maps dual vectors to
    ``(p, q)`` (``coordinates="phase"``) or ``(t, q)``
    (``coordinates="spacetime"``); ``inverse_transform`` rebuilds dual vectors
    on the fitted orbit.

    Parameters
    ----------
    c : float or "inf"
        Speed of light.
    coordinates : {"phase", "spacetime"}
    rtol : float
        Relative spread allowed in ``f`` and the Casimir across training rows.
    """

    def __init__(self, c=1.0, coordinates="phase", rtol=1e-9):
        self.c = c
        self.coordinates = coordinates
        self.rtol = rtol

    def fit(self, X, y=None):
        if self.coordinates not in ("phase", "spacetime"):
            raise ValueError(f"coordinates must be 'phase' or 'spacetime', got {self.coordinates!r}")
        params = KinematicParams.parse(self.c)
        X = _check_columns(X, COLUMNS["coadjoint"], self)
        inv = casimir(DualVector.from_array(X), params)
        f, k = np.asarray(inv.f), np.asarray(inv.casimir)
        for name, values in (("f", f), ("casimir", k)):
            spread = np.ptp(values) / max(1.0, float(np.max(np.abs(values))))
            if spread > self.rtol:
                raise ValueError(f"training rows span several orbits ({name} varies by {spread:.3g})")
        self.params_ = params
        self.force_ = float(f[0])
        self.casimir_ = float(np.mean(k))
        self.invariants_ = OrbitInvariants(self.force_, self.casimir_)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "invariants_")
        X = _check_columns(X, COLUMNS["coadjoint"], self)
        mu = DualVector.from_array(X)
        check_force(mu.f)
        q = -mu.e / mu.f
        first = mu.p if self.coordinates == "phase" else mu.p / mu.f
        return np.stack([first, q], axis=-1)

    def inverse_transform(self, X):
        check_is_fitted(self, "invariants_")
        X = _check_columns(X, COLUMNS[self.coordinates], self)
        p = X[:, 0] if self.coordinates == "phase" else self.force_ * X[:, 0]
        return orbit_point(self.invariants_, p, X[:, 1], self.params_).as_array()

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "invariants_")
        return np.asarray(COLUMNS[self.coordinates], dtype=object)
