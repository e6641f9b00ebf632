"""Phase-1 primal simplex over exact integer arithmetic (pure Python).

The tableau is an integer matrix plus one positive scalar denominator
(the previous pivot element); the rational tableau it represents is
matrix / denominator.  A pivot maps entry a to (a*p - f*r) / d where p
is the pivot element, f the entry's pivot-column value, r the pivot-row
value and d the old denominator; the division is exact (the entries are
minors of the original integer data), so nothing is ever rounded and no
per-entry gcd normalization is needed.

Bland's smallest-index rule picks both the entering column and, on ratio
ties, the leaving row, which rules out cycling and makes the whole pivot
sequence a deterministic function of the input.

Shared kernel interface (the compiled twin mirrors it exactly):

    solve(num_vars, rows) ->
        (feasible, witness, pivots, phase1_opt)

    rows: sequence of (coeffs: {column: +-1 int}, rhs: int, is_eq: bool)
    witness: list of Fraction, one per structural variable (None when
    infeasible); phase1_opt: the minimum of the artificial-variable sum,
    an exact Fraction, strictly positive iff infeasible.
"""

from __future__ import annotations

from fractions import Fraction

PIVOT_LIMIT = 10_000_000  # far beyond anything reachable; a tripwire, not a tuning knob


def solve(num_vars, rows):
    # Standard form: one slack per inequality, then sign-normalize the
    # right-hand sides, then one artificial per row whose slack cannot
    # serve as the initial basic variable.
    n_le = sum(1 for _, _, is_eq in rows if not is_eq)
    base_cols = num_vars + n_le

    prepared = []  # (dense row of length base_cols, rhs, basic slack or None)
    next_slack = num_vars
    for coeffs, rhs, is_eq in rows:
        dense = [0] * base_cols
        for col, c in coeffs.items():
            dense[col] = c
        slack = None
        if not is_eq:
            dense[next_slack] = 1
            slack = next_slack
            next_slack += 1
        if rhs < 0:
            dense = [-v for v in dense]
            rhs = -rhs
            slack = None  # its coefficient is now -1
        prepared.append((dense, rhs, slack))

    n_art = sum(1 for _, _, slack in prepared if slack is None)
    ncols = base_cols + n_art
    rhs_col = ncols

    matrix: list[list[int]] = []
    basis: list[int] = []
    art_cols: list[int] = []
    next_art = base_cols
    for dense, rhs, slack in prepared:
        full = dense + [0] * n_art + [rhs]
        if slack is not None:
            basis.append(slack)
        else:
            full[next_art] = 1
            basis.append(next_art)
            art_cols.append(next_art)
            next_art += 1
        matrix.append(full)

    # Reduced-cost row for min(sum of artificials): subtract every
    # artificial-basic row from the cost vector, leaving each artificial
    # column itself at reduced cost 0.
    obj = [0] * (ncols + 1)
    for row, bcol in zip(matrix, basis):
        if bcol >= base_cols:
            for j in range(ncols + 1):
                obj[j] -= row[j]
    for col in art_cols:
        obj[col] += 1

    den = 1
    pivots = 0
    nrows = len(matrix)
    while True:
        enter = -1
        for j in range(ncols):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break

        leave = -1
        for i in range(nrows):
            if matrix[i][enter] > 0:
                if leave < 0:
                    leave = i
                else:
                    cross = (
                        matrix[i][rhs_col] * matrix[leave][enter]
                        - matrix[leave][rhs_col] * matrix[i][enter]
                    )
                    if cross < 0 or (cross == 0 and basis[i] < basis[leave]):
                        leave = i
        if leave < 0:
            raise AssertionError(
                "phase-1 objective unbounded: kernel invariant violated"
            )
        if pivots >= PIVOT_LIMIT:
            raise RuntimeError("pivot limit exceeded")

        pivot = matrix[leave][enter]
        prow = matrix[leave]
        for i in range(nrows):
            if i != leave:
                _update_row(matrix[i], prow, enter, pivot, den)
        _update_row(obj, prow, enter, pivot, den)
        den = pivot
        basis[leave] = enter
        pivots += 1

    feasible = obj[rhs_col] == 0
    phase1_opt = Fraction(-obj[rhs_col], den)
    witness = None
    if feasible:
        witness = [Fraction(0)] * num_vars
        for row, bcol in zip(matrix, basis):
            if bcol < num_vars:
                witness[bcol] = Fraction(row[rhs_col], den)
    return feasible, witness, pivots, phase1_opt


def _update_row(row, prow, enter, pivot, den):
    f = row[enter]
    if f == 0:
        if pivot != den:
            for j in range(len(row)):
                row[j] = row[j] * pivot // den
    else:
        for j in range(len(row)):
            row[j] = (row[j] * pivot - f * prow[j]) // den
