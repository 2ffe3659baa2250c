"""Numerics for the 1+1 Poincare group, its coadjoint orbits and Galilei limit."""
from .coadjoint import (
    DualVector,
    OrbitInvariants,
    casimir,
    casimir_gradient,
    coadjoint_action,
    kirillov_kernel,
    kirillov_matrix,
    lie_poisson_bracket,
    orbit_point,
    pair,
)
from .contraction import (
    ContractionReport,
    OpKind,
    contraction_rate,
    galilei_compose,
    galilei_extended_compose,
    galilei_inverse,
    galilei_phase_action,
    galilei_spacetime_action,
)
from .estimators import DarbouxChart, GroupActionTransformer
from .exceptions import (
    DegenerateOrbit,
    GalileanRegime,
    InvalidGrid,
    PoincareError,
    VelocityOutOfRange,
)
from .group import (
    BASIS,
    EXTENDED_IDENTITY,
    GALILEAN,
    IDENTITY,
    INFINITE,
    AlgebraElement,
    ExtendedGroupElement,
    GroupElement,
    KinematicParams,
    Tolerances,
    bracket,
    cocycle,
    compose,
    extended_compose,
    extended_inverse,
    gamma,
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
    phase_to_spacetime,
    spacetime_action,
    spacetime_to_phase,
)

__version__ = "0.1.0"
