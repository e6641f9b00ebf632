"""Exact Littlewood-Richardson combinatorics by direct enumeration.

This module is the ground truth the polytope route is judged against:
it counts LR skew tableaux (giving exact coefficients), expands whole
tensor products, digs out integral witnesses, and counts semistandard
tableaux as the independent check on the dimension formula.

Everything here works at the level of actual fillings and words, never
through the constraint system, so the two routes stay independent.
Enumeration is exponential in general and is therefore metered by a
node budget; it fails loudly with BudgetExceeded instead of hanging.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import BudgetExceeded, HeightExceedsRank, KernelCapacityError
from .partitions import Partition, partitions_of
from .polytope import VariableIndex, check_trivial_necessary, variable_order

DEFAULT_NODE_BUDGET = 10**7

LRFilling = dict[VariableIndex, int]


@dataclass
class Decomposition:
    """A full tensor-product expansion: partition -> multiplicity."""

    alpha: Partition
    beta: Partition
    rank: int
    terms: dict[Partition, int]

    def to_json_list(self) -> list[dict]:
        return [
            {"gamma": gamma.to_json(), "mult": str(mult)}
            for gamma, mult in self.terms.items()
        ]

    @classmethod
    def from_json_list(
        cls, alpha: Partition, beta: Partition, rank: int, data: list[dict]
    ) -> "Decomposition":
        terms = {
            Partition.from_json(item["gamma"]): int(item["mult"]) for item in data
        }
        return cls(alpha, beta, rank, terms)


def default_rank(*partitions: Partition) -> int:
    return max((p.height for p in partitions), default=0)


def _resolve(budget: int | None) -> int:
    return DEFAULT_NODE_BUDGET if budget is None else budget


def _run_filling_kernel(alpha, beta, gamma, n, budget, want_witness):
    a, b, g = alpha.padded(n), beta.padded(n), gamma.padded(n)
    kernel = _kernels.enumeration
    try:
        result = kernel.count_fillings(list(a), list(g), list(b), n, budget, want_witness)
    except KernelCapacityError:
        from . import _enum_py

        result = _enum_py.count_fillings(list(a), list(g), list(b), n, budget, want_witness)
    count, witness, nodes, exhausted = result
    if exhausted:
        raise BudgetExceeded(nodes)
    return count, witness


def count_lr_tableaux(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    n: int | None = None,
    budget: int | None = None,
) -> int:
    """The exact LR coefficient: the number of LR skew tableaux of shape
    gamma/alpha and content beta, by budgeted backtracking."""
    rank = default_rank(alpha, beta, gamma) if n is None else n
    if not check_trivial_necessary(alpha, beta, gamma):
        return 0
    count, _ = _run_filling_kernel(alpha, beta, gamma, rank, _resolve(budget), False)
    return count


def integral_witness(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    n: int | None = None,
    budget: int | None = None,
) -> LRFilling | None:
    """The first LR filling in enumeration order, or None when the
    coefficient is zero.  Deterministic: rows top to bottom, letters low
    to high, counts tried high to low."""
    rank = default_rank(alpha, beta, gamma) if n is None else n
    if not check_trivial_necessary(alpha, beta, gamma):
        return None
    count, witness = _run_filling_kernel(
        alpha, beta, gamma, rank, _resolve(budget), True
    )
    if count == 0:
        return None
    filling: LRFilling = {v: 0 for v in variable_order(rank)}
    for i, j, value in witness:
        filling[(i, j)] = value
    return filling


def decompose_tensor(
    alpha: Partition, beta: Partition, n: int, budget: int | None = None
) -> Decomposition:
    """Expand the tensor product over all candidate partitions of the
    right size and height, keeping the ones with positive multiplicity.

    Candidates are generated in descending lexicographic order, so the
    term order (and its serialization) is stable.  The node budget
    applies to each candidate's enumeration separately.
    """
    terms: dict[Partition, int] = {}
    for gamma in partitions_of(alpha.size + beta.size, n):
        mult = count_lr_tableaux(alpha, beta, gamma, n, budget)
        if mult > 0:
            terms[gamma] = mult
    return Decomposition(alpha, beta, n, terms)


def count_ssyt(lam: Partition, n: int, budget: int | None = None) -> int:
    """Count semistandard tableaux of shape ``lam`` with entries in [1, n]
    by direct backtracking; the oracle for the dimension formula."""
    if lam.height > n:
        raise HeightExceedsRank(
            f"shape of height {lam.height} has no semistandard filling in [1, {n}]"
        )
    kernel = _kernels.enumeration
    resolved = _resolve(budget)
    try:
        count, nodes, exhausted = kernel.count_ssyt(list(lam.parts), n, resolved)
    except KernelCapacityError:
        from . import _enum_py

        count, nodes, exhausted = _enum_py.count_ssyt(list(lam.parts), n, resolved)
    if exhausted:
        raise BudgetExceeded(nodes)
    return count


# ---------------------------------------------------------------------------
# Word-level view of a filling.  These helpers never consult the
# constraint system; they exist so witnesses can be validated against
# the definitions themselves.


def filling_rows(filling: LRFilling, n: int) -> list[list[int]]:
    """Materialize each row's letters, left to right (blanks omitted)."""
    rows = []
    for i in range(1, n + 1):
        letters: list[int] = []
        for j in range(1, i + 1):
            letters.extend([j] * filling.get((i, j), 0))
        rows.append(letters)
    return rows


def row_word(filling: LRFilling, n: int) -> list[int]:
    """Read rows bottom to top, each left to right."""
    rows = filling_rows(filling, n)
    word: list[int] = []
    for letters in reversed(rows):
        word.extend(letters)
    return word


def is_reverse_lattice_word(word: list[int]) -> bool:
    """Every suffix must contain at least as many j's as (j+1)'s, for all j.

    Deliberately naive (recounts every suffix from scratch): this is the
    reference validator, independent of any incremental bookkeeping.
    """
    if not word:
        return True
    top = max(word)
    for start in range(len(word)):
        tail = word[start:]
        counts = [tail.count(j) for j in range(1, top + 1)]
        if any(counts[j] < counts[j + 1] for j in range(top - 1)):
            return False
    return True


def validate_filling(
    filling: LRFilling,
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    n: int,
) -> bool:
    """Check a count vector against the definitions directly.

    Verifies nonnegativity, row sums (shape), letter totals (content),
    cell-level column strictness, and the reverse lattice word property
    of the row word.  No constraint-system machinery is involved.
    """
    if set(filling) != set(variable_order(n)):
        return False
    if any(v < 0 for v in filling.values()):
        return False
    a, b, g = alpha.padded(n), beta.padded(n), gamma.padded(n)
    rows = filling_rows(filling, n)
    for i in range(1, n + 1):
        if len(rows[i - 1]) != g[i - 1] - a[i - 1]:
            return False
    for j in range(1, n + 1):
        total = sum(filling.get((i, j), 0) for i in range(j, n + 1))
        if total != b[j - 1]:
            return False
    for i in range(2, n + 1):  # column strictness, cell by cell
        prev, cur = rows[i - 2], rows[i - 1]
        for c in range(a[i - 2] + 1, g[i - 1] + 1):
            if cur[c - a[i - 1] - 1] <= prev[c - a[i - 2] - 1]:
                return False
    return is_reverse_lattice_word(row_word(filling, n))


def filling_to_json(filling: LRFilling) -> dict[str, str]:
    """Same key scheme as rational witness maps: {"i.j": "count"}."""
    return {f"{i}.{j}": str(v) for (i, j), v in sorted(filling.items())}


def filling_from_json(data: dict[str, str]) -> LRFilling:
    out: LRFilling = {}
    for key, value in data.items():
        i, j = key.split(".")
        out[(int(i), int(j))] = int(value)
    return out
