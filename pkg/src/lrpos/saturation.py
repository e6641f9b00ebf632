"""Positivity decisions and the empirical saturation harness.

decide_positive answers "does the Weyl module labeled gamma occur in the
tensor product of the modules labeled alpha and beta?" without any
enumeration: a cheap necessary-condition check, then exact LP
feasibility of the LR polytope.  Nonemptiness is equivalent to the
existence of an integer point (that is the saturation property), so a
rational witness already certifies positivity.

Saturation itself is assumed, not proved; saturation_probe and sweep
exist to hammer on it empirically — across scalings q and against the
enumeration oracle — and to serialize any counterexample verbatim,
since a single disagreement would falsify the implementation.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle
from .errors import BudgetExceeded, HeightExceedsRank
from .lp import feasible
from .oracle import LRFilling, default_rank
from .partitions import Partition, partitions_of
from .polytope import (
    VariableIndex,
    build_lr_system,
    evaluate_point,
    point_from_json,
    point_to_json,
    trivial_reject_reason,
)


class Route(enum.Enum):
    TRIVIAL_REJECT = "TrivialReject"
    LP_FEASIBLE = "LPFeasible"
    LP_INFEASIBLE = "LPInfeasible"


@dataclass
class Decision:
    alpha: Partition
    beta: Partition
    gamma: Partition
    rank: int
    positive: bool
    route: Route
    rational_witness: dict[VariableIndex, Fraction] | None
    integral_witness: LRFilling | None
    pivot_count: int
    elapsed_seconds: float
    trivial_reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "gamma": self.gamma.to_json(),
            "rank": self.rank,
            "positive": self.positive,
            "route": self.route.value,
            "witness": None
            if self.rational_witness is None
            else point_to_json(self.rational_witness),
            "integral_witness": None
            if self.integral_witness is None
            else oracle.filling_to_json(self.integral_witness),
            "pivots": self.pivot_count,
            "elapsed_seconds": self.elapsed_seconds,
            "trivial_reason": self.trivial_reason,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Decision":
        return cls(
            alpha=Partition.from_json(data["alpha"]),
            beta=Partition.from_json(data["beta"]),
            gamma=Partition.from_json(data["gamma"]),
            rank=data["rank"],
            positive=data["positive"],
            route=Route(data["route"]),
            rational_witness=None
            if data["witness"] is None
            else point_from_json(data["witness"]),
            integral_witness=None
            if data["integral_witness"] is None
            else oracle.filling_from_json(data["integral_witness"]),
            pivot_count=data["pivots"],
            elapsed_seconds=data["elapsed_seconds"],
            trivial_reason=data["trivial_reason"],
        )


def decide_positive(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    n: int | None = None,
    want_integral_witness: bool = False,
    budget: int | None = None,
) -> Decision:
    """Decide positivity of the LR coefficient through the LP route.

    Never enumerates tableaux unless an integral witness is explicitly
    requested, so the running time is governed by the LP alone.  The
    rank defaults to the largest height, which never changes the
    coefficient.
    """
    started = time.perf_counter()
    rank = default_rank(alpha, beta, gamma) if n is None else n
    for p in (alpha, beta, gamma):
        if p.height > rank:
            raise HeightExceedsRank(
                f"partition {p} has height {p.height}, exceeding rank {rank}"
            )

    reason = trivial_reject_reason(alpha, beta, gamma)
    if reason is not None:
        return Decision(
            alpha, beta, gamma, rank,
            positive=False,
            route=Route.TRIVIAL_REJECT,
            rational_witness=None,
            integral_witness=None,
            pivot_count=0,
            elapsed_seconds=time.perf_counter() - started,
            trivial_reason=reason,
        )

    system = build_lr_system(alpha, beta, gamma, rank)
    result = feasible(system)
    integral = None
    if result.feasible and want_integral_witness:
        integral = oracle.integral_witness(alpha, beta, gamma, rank, budget)
    return Decision(
        alpha, beta, gamma, rank,
        positive=result.feasible,
        route=Route.LP_FEASIBLE if result.feasible else Route.LP_INFEASIBLE,
        rational_witness=result.witness,
        integral_witness=integral,
        pivot_count=result.pivot_count,
        elapsed_seconds=time.perf_counter() - started,
    )


@dataclass
class ProbeEntry:
    q: int
    positive: bool
    route: Route
    oracle_count: int | None  # None when skipped or budget ran out
    budget_exceeded: bool


@dataclass
class ProbeReport:
    alpha: Partition
    beta: Partition
    gamma: Partition
    rank: int
    entries: list[ProbeEntry]
    consistent: bool  # identical positivity verdict at every q

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "gamma": self.gamma.to_json(),
            "rank": self.rank,
            "entries": [
                {
                    "q": entry.q,
                    "positive": entry.positive,
                    "route": entry.route.value,
                    "oracle_count": None
                    if entry.oracle_count is None
                    else str(entry.oracle_count),
                    "budget_exceeded": entry.budget_exceeded,
                }
                for entry in self.entries
            ],
            "consistent": self.consistent,
        }


def saturation_probe(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    n: int | None = None,
    qs: tuple[int, ...] = (2, 3, 5),
    budget: int | None = None,
    use_oracle: bool = True,
) -> ProbeReport:
    """Re-decide at q=1 and at every scaled (q*alpha, q*beta, q*gamma).

    Saturation says the verdicts must all agree.  Where the budget
    permits, the enumeration count is recorded as well; a budget failure
    is noted per entry and never aborts the probe.
    """
    rank = default_rank(alpha, beta, gamma) if n is None else n
    entries: list[ProbeEntry] = []
    for q in [1] + [q for q in qs if q != 1]:
        sa, sb, sg = alpha.scale(q), beta.scale(q), gamma.scale(q)
        decision = decide_positive(sa, sb, sg, rank)
        count = None
        exceeded = False
        if use_oracle:
            try:
                count = oracle.count_lr_tableaux(sa, sb, sg, rank, budget)
            except BudgetExceeded:
                exceeded = True
        entries.append(ProbeEntry(q, decision.positive, decision.route, count, exceeded))
    consistent = len({entry.positive for entry in entries}) == 1
    return ProbeReport(alpha, beta, gamma, rank, entries, consistent)


@dataclass
class SweepReport:
    instances: int = 0
    lp_positive: int = 0
    lp_negative: int = 0
    oracle_checked: int = 0
    disagreements: list[dict] = field(default_factory=list)
    budget_failures: int = 0

    def to_json_dict(self) -> dict:
        return {
            "instances": self.instances,
            "lp_positive": self.lp_positive,
            "lp_negative": self.lp_negative,
            "oracle_checked": self.oracle_checked,
            "disagreements": self.disagreements,
            "budget_failures": self.budget_failures,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SweepReport":
        return cls(
            instances=data["instances"],
            lp_positive=data["lp_positive"],
            lp_negative=data["lp_negative"],
            oracle_checked=data["oracle_checked"],
            disagreements=list(data["disagreements"]),
            budget_failures=data["budget_failures"],
        )


def sweep(
    max_size: int,
    max_n: int,
    qs: tuple[int, ...] = (),
    budget: int | None = None,
    use_oracle: bool = True,
    validate_witnesses: bool = True,
) -> SweepReport:
    """Exhaust all triples at desk scale and tally every cross-check.

    Iterates alpha, beta with sizes up to max_size and gamma over all
    partitions of the combined size, heights capped by max_n.  For each
    triple: the LP verdict is compared against the enumeration count
    (where the budget allows), the rational witness is re-validated
    exactly, and the verdict is compared across every scaling in qs.
    Any mismatch lands in `disagreements` verbatim — one is enough to
    falsify the implementation, so full forensics matter.
    """
    report = SweepReport()
    alphas = [
        p
        for size in range(max_size + 1)
        for p in partitions_of(size, max_n)
    ]
    for alpha in alphas:
        for beta in alphas:
            for gamma in partitions_of(alpha.size + beta.size, max_n):
                report.instances += 1
                decision = decide_positive(alpha, beta, gamma, max_n)
                if decision.positive:
                    report.lp_positive += 1
                else:
                    report.lp_negative += 1

                triple = {
                    "alpha": alpha.to_json(),
                    "beta": beta.to_json(),
                    "gamma": gamma.to_json(),
                    "rank": max_n,
                }

                if validate_witnesses and decision.rational_witness is not None:
                    system = build_lr_system(alpha, beta, gamma, max_n)
                    check = evaluate_point(system, decision.rational_witness)
                    if not check.satisfied:
                        report.disagreements.append(
                            dict(triple, kind="witness", violations=check.violations)
                        )

                if use_oracle:
                    try:
                        count = oracle.count_lr_tableaux(
                            alpha, beta, gamma, max_n, budget
                        )
                    except BudgetExceeded:
                        report.budget_failures += 1
                    else:
                        report.oracle_checked += 1
                        if (count > 0) != decision.positive:
                            report.disagreements.append(
                                dict(
                                    triple,
                                    kind="lp-vs-oracle",
                                    lp_positive=decision.positive,
                                    route=decision.route.value,
                                    oracle_count=str(count),
                                )
                            )

                for q in qs:
                    scaled = decide_positive(
                        alpha.scale(q), beta.scale(q), gamma.scale(q), max_n
                    )
                    if scaled.positive != decision.positive:
                        report.disagreements.append(
                            dict(
                                triple,
                                kind="scaling",
                                q=q,
                                base_positive=decision.positive,
                                scaled_positive=scaled.positive,
                            )
                        )
    return report
