"""Fitted finite-difference schemes on Shishkin-type meshes for 1-D
singularly perturbed convection-diffusion problems, with a solution-
decomposition solve path and a convergence-study harness."""

from .diagnostics import (
    ModelCurves,
    layer_truncation_profile,
    mesh_parameter_floor,
    model_curves,
    truncation_error,
)
from .errors import ConfigurationError, LayerFDError, SingularCoefficientError, SingularSystemError
from .harness import (
    ConvergenceTable,
    SolveConfig,
    SolveMethod,
    SolveResult,
    TableRow,
    convergence_table,
    emit,
    max_error,
    solution_error,
    solve,
)
from .meshes import Mesh, MeshFamily, MeshSpec, build_mesh, half_step
from .problems import (
    CoefficientSet,
    TwoPointBVP,
    WProblem,
    builtin_problem,
    layer_component,
    make_w_problem,
    reduced_derivative,
    reduced_second_derivative,
)
from .reduced import ReducedMode, reduced_nodal_data, rk4_terminal_solve
from .schemes import (
    FittingKind,
    TridiagonalSystem,
    assemble,
    fitting_factors,
    precondition,
    rho,
    sigma,
    sigma_exact_fit,
)
from .tridiag import MMatrixReport, apply_operator, inf_condition_estimate, is_m_matrix, thomas_solve

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError",
    "ConvergenceTable",
    "CoefficientSet",
    "FittingKind",
    "LayerFDError",
    "Mesh",
    "MeshFamily",
    "MeshSpec",
    "MMatrixReport",
    "ModelCurves",
    "ReducedMode",
    "SingularCoefficientError",
    "SingularSystemError",
    "SolveConfig",
    "SolveMethod",
    "SolveResult",
    "TableRow",
    "TridiagonalSystem",
    "TwoPointBVP",
    "WProblem",
    "apply_operator",
    "assemble",
    "build_mesh",
    "builtin_problem",
    "convergence_table",
    "emit",
    "fitting_factors",
    "half_step",
    "inf_condition_estimate",
    "is_m_matrix",
    "layer_component",
    "layer_truncation_profile",
    "make_w_problem",
    "max_error",
    "mesh_parameter_floor",
    "model_curves",
    "precondition",
    "reduced_derivative",
    "reduced_nodal_data",
    "reduced_second_derivative",
    "rho",
    "rk4_terminal_solve",
    "sigma",
    "sigma_exact_fit",
    "solution_error",
    "solve",
    "thomas_solve",
    "truncation_error",
]
