"""Curvilinear coordinate generation by least-squares polynomial mappings."""

from .errors import (
    CurvifitError, DegenerateSystemError, DomainError, NumericalError, SeamError,
    SingularMappingError, SolvabilityError, SolverError, UsageError, ValidationError,
)
from .geometry import AnnulusSpec, EccentricMap, PolarMap, eccentric_oracle, eccentric_points, polar_points, table1_fixture
from .mapping import (
    ForwardMapping, InverseMapping, MeshPointSet, eval_forward, eval_inverse, fit_forward,
    fit_inverse, generalization_grid, round_trip_report, seam_adjust, seam_restore,
)
from .metrics import MetricTerms, consistency_check, metric_from_forward, metric_from_inverse
from .pde import (
    DirichletProblem, SolutionField, annulus_problem, compare_with_exact, exact_concentric,
    exact_eccentric, solve_problem,
)
from .poly2d import Poly2D, basis_row, differentiate, monomial_count

__version__ = "0.1.0"
