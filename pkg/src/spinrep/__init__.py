"""Grassmann/Clifford algebra toolkit for 4D spacetime with a verification CLI.

The package implements the 16-dimensional complex exterior algebra on four
generators, the Clifford algebra of an arbitrary nondegenerate symmetric
metric acting on it through boundary/coboundary operators, the canonical
linear identification between the two, concrete Dirac matrices, spin lifts of
metric isometries, the exterior action of invertible linear maps, and a
plane-wave solver for the matrix Dirac equation.  The ``spinrep`` CLI drives
numerical verification suites over all of it.
"""

from ._kernels import backend_name
from .clifford import CliffordElement, even_part, geometric_product, grade_project, reversion
from .dirac import (
    PlaneWave,
    ProductState,
    covariance_residual,
    entanglement_probe,
    hodge_dirac_symbol,
    make_product_state,
    plane_wave_solutions,
    symbol_matrix,
    transform_plane_wave,
)
from .errors import (
    ConfigError,
    DegenerateMetric,
    LiftNotFound,
    NoRealFactorization,
    NotIsometry,
    SpinrepError,
)
from .grassmann import (
    GrassmannElement,
    Metric,
    Orientation,
    delta,
    delta_star,
    gamma_op,
    hodge,
    minkowski,
    right_delta,
    right_delta_star,
    right_gamma_op,
    vee,
    wedge,
)
from .isomorphisms import (
    GammaBasis,
    clifford_to_matrix,
    dirac_matrices,
    left_rep,
    matrix_to_clifford,
    matrix_wedge,
    right_rep,
    to_clifford,
    to_grassmann,
)
from .transforms import (
    SpinElement,
    conjugation_subspace_check,
    exterior_pushforward,
    gl4_on_matrices,
    is_isometry,
    metric_pullback,
    proposition_check,
    random_lorentz,
    spin_lift,
    substitute_gammas,
)

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "CliffordElement",
    "GrassmannElement",
    "GammaBasis",
    "Metric",
    "Orientation",
    "PlaneWave",
    "ProductState",
    "SpinElement",
    "SpinrepError",
    "ConfigError",
    "DegenerateMetric",
    "LiftNotFound",
    "NoRealFactorization",
    "NotIsometry",
    "clifford_to_matrix",
    "conjugation_subspace_check",
    "covariance_residual",
    "delta",
    "delta_star",
    "dirac_matrices",
    "entanglement_probe",
    "even_part",
    "exterior_pushforward",
    "gamma_op",
    "geometric_product",
    "gl4_on_matrices",
    "grade_project",
    "hodge",
    "hodge_dirac_symbol",
    "is_isometry",
    "left_rep",
    "make_product_state",
    "matrix_to_clifford",
    "matrix_wedge",
    "metric_pullback",
    "minkowski",
    "plane_wave_solutions",
    "proposition_check",
    "random_lorentz",
    "reversion",
    "right_delta",
    "right_delta_star",
    "right_gamma_op",
    "right_rep",
    "spin_lift",
    "substitute_gammas",
    "symbol_matrix",
    "to_clifford",
    "to_grassmann",
    "transform_plane_wave",
    "vee",
    "wedge",
]
