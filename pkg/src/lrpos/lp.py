"""Exact rational LP feasibility with witness extraction.

Decides whether a constraint system has any nonnegative rational
solution, by phase-1 simplex over exact arithmetic: no floating point,
no tolerances, no rounding anywhere.  Verdicts and witnesses are a
deterministic function of the system (Bland's rule fixes every pivot),
and each call works on a private tableau, so concurrent use is fine.

The headline complexity story is deliberately modest: this is a plain
exact simplex, not an ellipsoid / interior-point / strongly-polynomial
method.  Correctness, not worst-case step counts, is what the test
suite certifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import KernelCapacityError
from .polytope import ConstraintSystem, VariableIndex


@dataclass
class FeasibilityResult:
    feasible: bool
    witness: dict[VariableIndex, Fraction] | None  # present iff feasible
    pivot_count: int
    phase1_optimum: Fraction  # 0 iff feasible; the infeasibility certificate
    backend: str

    @property
    def verdict(self) -> str:
        return "Feasible" if self.feasible else "Infeasible"


def feasible(system: ConstraintSystem) -> FeasibilityResult:
    """Feasible with an exact rational witness, or Infeasible."""
    rows = [(row.coeffs, row.rhs, True) for row in system.eq_rows]
    rows += [(row.coeffs, row.rhs, False) for row in system.le_rows]

    kernel = _kernels.simplex
    backend = _kernels.backend_info()["simplex"]
    try:
        ok, values, pivots, optimum = kernel.solve(system.num_vars, rows)
    except KernelCapacityError:
        from . import _simplex_py

        backend = "pure-python"
        ok, values, pivots, optimum = _simplex_py.solve(system.num_vars, rows)

    witness = None
    if ok:
        witness = {v: values[k] for k, v in enumerate(system.variables)}
    return FeasibilityResult(ok, witness, pivots, optimum, backend)
