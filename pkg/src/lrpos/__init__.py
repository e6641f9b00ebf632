"""Exact decisions and values of Littlewood-Richardson coefficients.

Two independent routes to the same numbers:

* the polytope route — build the explicit constraint system whose
  nonnegative integer points are the LR fillings, and decide positivity
  by exact rational LP feasibility (a rational point suffices, by the
  saturation property);
* the enumeration route — backtrack over actual fillings to get exact
  coefficients, tensor decompositions and integral witnesses.

All arithmetic is exact, all functions are pure, and the hot kernels
come in compiled and pure-Python twins selected at import time.
"""

from ._kernels import backend_info
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    HeightExceedsRank,
    LRPosError,
    MalformedInput,
    NegativePart,
    NonpositiveScale,
    NotWeaklyDecreasing,
)
from .lp import FeasibilityResult, feasible
from .oracle import (
    DEFAULT_NODE_BUDGET,
    Decomposition,
    count_lr_tableaux,
    count_ssyt,
    decompose_tensor,
    integral_witness,
    is_reverse_lattice_word,
    validate_filling,
)
from .partitions import (
    Partition,
    parse_partition,
    partitions_of,
    render_partition,
    weyl_dimension,
)
from .polytope import (
    ConstraintSystem,
    build_lr_system,
    check_trivial_necessary,
    evaluate_point,
    trivial_reject_reason,
)
from .saturation import (
    Decision,
    ProbeReport,
    Route,
    SweepReport,
    decide_positive,
    saturation_probe,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ConstraintSystem",
    "DEFAULT_NODE_BUDGET",
    "Decision",
    "Decomposition",
    "DimensionMismatch",
    "FeasibilityResult",
    "HeightExceedsRank",
    "LRPosError",
    "MalformedInput",
    "NegativePart",
    "NonpositiveScale",
    "NotWeaklyDecreasing",
    "Partition",
    "ProbeReport",
    "Route",
    "SweepReport",
    "backend_info",
    "build_lr_system",
    "check_trivial_necessary",
    "count_lr_tableaux",
    "count_ssyt",
    "decide_positive",
    "decompose_tensor",
    "evaluate_point",
    "feasible",
    "integral_witness",
    "is_reverse_lattice_word",
    "parse_partition",
    "partitions_of",
    "render_partition",
    "saturation_probe",
    "sweep",
    "trivial_reject_reason",
    "validate_filling",
    "weyl_dimension",
    "__version__",
]
