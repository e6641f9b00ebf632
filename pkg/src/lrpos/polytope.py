"""The Littlewood-Richardson polytope as an explicit constraint system.

Variables are letter counts r[i,j] = number of j's in row i of a filling
of the skew shape gamma/alpha with content beta, for 1 <= j <= i <= n.
(A reverse lattice word cannot place letter j above row j, so variables
with i < j are eliminated outright; that also keeps every coefficient in
{-1, 0, +1}.)  The rows come in four families:

  shape    per row i:        sum_j r[i,j]  =  gamma_i - alpha_i
  content  per letter j:     sum_i r[i,j]  =  beta_j
  tableau  per i < n, j:     the cells holding letters <= j in row i+1
                             end no further right than the cells holding
                             letters < j in row i (column strictness)
  lattice  per j >= 2, i:    letter j's running count through row i stays
                             at most letter j-1's count through row i-1

Right-hand sides are integer linear forms in the three partitions, so
scaling (alpha, beta, gamma) by q scales b and leaves A untouched; the
nonnegative integer points of the system are exactly the valid fillings.
Construction and evaluation are pure and exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch
from .partitions import Partition

SHAPE = "shape"
CONTENT = "content"
TABLEAU = "tableau"
LATTICE = "lattice"

VariableIndex = tuple[int, int]  # (row i, letter j), 1-based, j <= i


def variable_order(n: int) -> list[VariableIndex]:
    """The fixed (i, j)-lexicographic variable order for rank n."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]


@dataclass(frozen=True)
class Row:
    """One linear row: coeffs (variable position -> +-1), as lhs <= / == rhs."""

    coeffs: dict[int, int]
    rhs: int
    family: str
    label: tuple[int, ...] = ()  # the (i,) / (j,) / (i, j) the row came from


@dataclass
class ConstraintSystem:
    n: int
    variables: list[VariableIndex]
    eq_rows: list[Row]
    le_rows: list[Row]
    _positions: dict[VariableIndex, int] = field(init=False, repr=False)

    def __post_init__(self):
        self._positions = {v: k for k, v in enumerate(self.variables)}

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def position(self, i: int, j: int) -> int:
        return self._positions[(i, j)]

    def to_json_dict(self) -> dict:
        def rows(rs):
            return [
                {
                    "coeffs": {str(k): c for k, c in sorted(r.coeffs.items())},
                    "rhs": str(r.rhs),
                    "family": r.family,
                }
                for r in rs
            ]

        return {
            "num_vars": self.num_vars,
            "vars": [{"i": i, "j": j} for i, j in self.variables],
            "eq": rows(self.eq_rows),
            "le": rows(self.le_rows),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ConstraintSystem":
        variables = [(v["i"], v["j"]) for v in data["vars"]]
        n = max((i for i, _ in variables), default=0)

        def rows(rs, family_default=""):
            return [
                Row(
                    {int(k): int(c) for k, c in r["coeffs"].items()},
                    int(r["rhs"]),
                    r["family"],
                )
                for r in rs
            ]

        return cls(n, variables, rows(data["eq"]), rows(data["le"]))


def build_lr_system(
    alpha: Partition, beta: Partition, gamma: Partition, n: int
) -> ConstraintSystem:
    """Emit the four constraint families over the rank-n variable set.

    Partitions are zero-padded to length n.  Sums skip eliminated
    variables (j > i); an inequality row whose variables all vanish is
    dropped when it reads 0 <= c with c >= 0 and kept when c < 0 (it
    then certifies infeasibility, preserving the feasible set).
    """
    a = alpha.padded(n)  # raises HeightExceedsRank
    b = beta.padded(n)
    g = gamma.padded(n)

    variables = variable_order(n)
    pos = {v: k for k, v in enumerate(variables)}

    eq_rows: list[Row] = []
    le_rows: list[Row] = []

    for i in range(1, n + 1):
        coeffs = {pos[(i, j)]: 1 for j in range(1, i + 1)}
        eq_rows.append(Row(coeffs, g[i - 1] - a[i - 1], SHAPE, (i,)))

    for j in range(1, n + 1):
        coeffs = {pos[(i, j)]: 1 for i in range(j, n + 1)}
        eq_rows.append(Row(coeffs, b[j - 1], CONTENT, (j,)))

    for i in range(1, n):
        for j in range(1, n + 1):
            coeffs = {pos[(i + 1, k)]: 1 for k in range(1, min(j, i + 1) + 1)}
            for k in range(1, min(j - 1, i) + 1):
                coeffs[pos[(i, k)]] = -1
            _append_le(le_rows, coeffs, a[i - 1] - a[i], TABLEAU, (i, j))

    for i in range(1, n + 1):
        for j in range(2, n + 1):
            coeffs = {pos[(t, j)]: 1 for t in range(j, i + 1)}
            for t in range(j - 1, i):
                coeffs[pos[(t, j - 1)]] = -1
            _append_le(le_rows, coeffs, 0, LATTICE, (i, j))

    return ConstraintSystem(n, variables, eq_rows, le_rows)


def _append_le(rows: list[Row], coeffs: dict[int, int], rhs: int, family, label):
    if not coeffs and rhs >= 0:
        return  # 0 <= c, vacuous
    rows.append(Row(coeffs, rhs, family, label))


def trivial_reject_reason(
    alpha: Partition, beta: Partition, gamma: Partition
) -> str | None:
    """A cheap certificate that the coefficient is zero, or None.

    None means inconclusive, not positive.
    """
    if alpha.size + beta.size != gamma.size:
        return "size mismatch"
    if not gamma.contains(alpha):
        return "alpha not contained in gamma"
    if gamma.height > alpha.height + beta.height:
        return "gamma taller than the combined heights"
    return None


def check_trivial_necessary(
    alpha: Partition, beta: Partition, gamma: Partition
) -> bool:
    """False certifies the coefficient is zero; True is inconclusive."""
    return trivial_reject_reason(alpha, beta, gamma) is None


@dataclass
class SatisfactionReport:
    """Exact residuals of a candidate point against every row."""

    satisfied: bool
    eq_residuals: list[Fraction]  # lhs - rhs, one per eq row; 0 required
    le_residuals: list[Fraction]  # lhs - rhs, one per le row; <= 0 required
    negative_variables: list[VariableIndex]
    violations: list[str]


def evaluate_point(
    system: ConstraintSystem, point: dict[VariableIndex, Fraction | int]
) -> SatisfactionReport:
    """Check a rational point against the system, exactly."""
    if set(point) != set(system.variables):
        raise DimensionMismatch(
            f"point has {len(point)} coordinates, system has {system.num_vars}"
        )
    coords = [Fraction(point[v]) for v in system.variables]

    violations: list[str] = []
    negative = [v for v, x in zip(system.variables, coords) if x < 0]
    for i, j in negative:
        violations.append(f"nonnegativity r[{i},{j}]: value {point[(i, j)]}")

    def residual(row: Row) -> Fraction:
        return sum((c * coords[k] for k, c in row.coeffs.items()), Fraction(0)) - row.rhs

    eq_residuals = []
    for row in system.eq_rows:
        r = residual(row)
        eq_residuals.append(r)
        if r != 0:
            violations.append(f"{row.family}{row.label}: residual {r}")
    le_residuals = []
    for row in system.le_rows:
        r = residual(row)
        le_residuals.append(r)
        if r > 0:
            violations.append(f"{row.family}{row.label}: residual {r}")

    return SatisfactionReport(
        satisfied=not violations,
        eq_residuals=eq_residuals,
        le_residuals=le_residuals,
        negative_variables=negative,
        violations=violations,
    )


def point_to_json(point: dict[VariableIndex, Fraction | int]) -> dict[str, str]:
    """Serialize coordinates as {"i.j": "p/q"} with exact values."""
    return {f"{i}.{j}": str(Fraction(v)) for (i, j), v in sorted(point.items())}


def point_from_json(data: dict[str, str]) -> dict[VariableIndex, Fraction]:
    out = {}
    for key, value in data.items():
        i, j = key.split(".")
        out[(int(i), int(j))] = Fraction(value)
    return out
