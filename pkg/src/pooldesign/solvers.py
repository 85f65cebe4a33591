"""Solvers for splitting a demand of N accepted items into batches.

Four routes to the same question, cheapest expected total tests
sum of q**-n_i over batch sizes n_i summing to N:

- dp_solve: exact O(N^2) dynamic program over the demand.
- sweep_solve: exact O(N) scan that exploits a convexity fact: among
  designs with a fixed number of batches, the most balanced one (sizes
  differing by at most one) is optimal.
- theorem_solve: closed-form construction from the constant-size
  optimum; valid for 0 < q < 1.
- brute_force_solve: enumerates every integer partition of the demand.
  Exponentially slow, kept as ground truth for small N.

All solvers return a DesignSolution whose expected_tests is recomputed
from the returned partition with expected_waiting_time, so equal
partitions report bitwise-equal values regardless of the route taken.

Ties are broken the same way everywhere: prefer fewer batches, then the
lexicographically smallest ascending size tuple.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import (
    VALUE_ATOL,
    VALUE_RTOL,
    DesignSolution,
    Partition,
    expected_waiting_time,
    optimal_constant_size,
    values_close,
)

# Partition counts grow super-polynomially (N = 50 already has ~200k),
# so the exhaustive solver refuses larger demands unless overridden.
BRUTE_FORCE_CAP = 50


def _positive_int(value: int, what: str) -> int:
    if isinstance(value, bool):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    try:
        value = operator.index(value)
    except TypeError:
        raise ValueError(f"{what} must be an integer, got {value!r}") from None
    if value < 1:
        raise ValueError(f"{what} must be at least 1, got {value}")
    return value


def _check_demand(demand: int) -> int:
    return _positive_int(demand, "demand")


def _check_q(q: float) -> None:
    if q == 0:
        raise ValueError(
            "per-item pass probability q = 0: no batch can ever pass, "
            "so every design has infinite expected tests"
        )
    if not 0.0 < q <= 1.0:
        raise ValueError(f"per-item pass probability must be in (0, 1], got {q}")


def _inverse_power_table(q: float, n_max: int) -> np.ndarray:
    """Array t with t[n] = q**-n for n = 0..n_max; raises on overflow."""
    table = np.empty(n_max + 1)
    table[0] = 1.0
    if n_max >= 1:
        with np.errstate(over="ignore"):  # checked explicitly below
            np.cumprod(np.full(n_max, 1.0 / q), out=table[1:])
    overflowed = np.flatnonzero(np.isinf(table))
    if overflowed.size:
        raise OverflowError(
            f"expected waiting time q**-n exceeds double precision "
            f"for n = {int(overflowed[0])}, q = {q}"
        )
    return table


@dataclass(frozen=True)
class DpTable:
    """Dynamic-programming table over demands 0..N.

    values[n] is the optimal expected test count for demand n
    (values[0] = 0); choices[n] is the size of the batch an optimal
    design for demand n uses alongside an optimal design for demand
    n - choices[n].  Among equal-value choices the largest is stored.
    """

    values: np.ndarray
    choices: np.ndarray

    def __post_init__(self) -> None:
        self.values.setflags(write=False)
        self.choices.setflags(write=False)


def build_dp_table(demand: int, q: float) -> DpTable:
    """Tabulate optimal costs for every demand up to the one given.

    Recursion: cost(0) = 0 and
    cost(n) = min over x in 1..n of q**-x + cost(n - x),
    where x is the size of one batch and n - x the demand it leaves.
    """
    demand = _check_demand(demand)
    _check_q(q)
    inv = _inverse_power_table(q, demand)
    values = np.zeros(demand + 1)
    choices = np.zeros(demand + 1, dtype=np.int64)
    values[1] = inv[1]
    choices[1] = 1
    for n in range(2, demand + 1):
        # candidates[x - 1] = cost of one batch of x plus the rest
        candidates = inv[1 : n + 1] + values[n - 1 :: -1]
        # argmin over the reversed array lands on the largest
        # minimizing batch size, the documented tie-break
        reversed_view = candidates[::-1]
        offset = int(np.argmin(reversed_view))
        values[n] = reversed_view[offset]
        choices[n] = n - offset
    return DpTable(values=values, choices=choices)


def _walk_choices(table: DpTable) -> Partition:
    sizes = []
    n = len(table.values) - 1
    while n > 0:
        x = int(table.choices[n])
        sizes.append(x)
        n -= x
    return Partition(tuple(sizes))


def dp_solve(demand: int, q: float) -> DesignSolution:
    """Exact optimum by dynamic programming over the demand."""
    table = build_dp_table(demand, q)
    partition = _walk_choices(table)
    return DesignSolution(partition, expected_waiting_time(partition, q), "dp")


def balanced_partition(demand: int, groups: int) -> Partition:
    """Split demand into the given number of batches, sizes within one.

    demand = groups * floor(demand / groups) + r leaves r batches one
    item larger than the rest.
    """
    demand = _check_demand(demand)
    groups = _positive_int(groups, "batch count")
    if groups > demand:
        raise ValueError(
            f"cannot split demand {demand} into {groups} nonempty batches"
        )
    small, bumped = divmod(demand, groups)
    sizes = (small,) * (groups - bumped) + (small + 1,) * bumped
    return Partition(sizes)


def sweep_solve(demand: int, q: float) -> DesignSolution:
    """Exact optimum by scanning batch counts with balanced splits.

    For a fixed batch count the balanced split is optimal, so the
    search space collapses to one candidate per count: cost(I) =
    (I - r) * q**-floor(N/I) + r * q**-ceil(N/I) with r = N mod I.
    """
    demand = _check_demand(demand)
    _check_q(q)
    inv = _inverse_power_table(q, demand)
    counts = np.arange(1, demand + 1)
    small = demand // counts
    bumped = demand - small * counts
    large = np.minimum(small + 1, demand)  # unused when bumped == 0
    costs = (counts - bumped) * inv[small] + bumped * inv[large]
    best = float(costs.min())
    tolerance = VALUE_ATOL + VALUE_RTOL * abs(best)
    fewest = int(np.flatnonzero(costs <= best + tolerance)[0]) + 1
    partition = balanced_partition(demand, fewest)
    return DesignSolution(partition, expected_waiting_time(partition, q), "sweep")


@dataclass(frozen=True)
class TheoremInputs:
    """How a demand divides by the constant-optimal batch size.

    s full batches of that size fit, leaving theta items over
    (0 <= theta < size).
    """

    s: int
    theta: int


def constant_size_split(demand: int, size: int) -> TheoremInputs:
    """Divide the demand by a batch size: full-batch count and remainder."""
    demand = _check_demand(demand)
    size = _positive_int(size, "batch size")
    s, theta = divmod(demand, size)
    return TheoremInputs(s=s, theta=theta)


def theorem_solve(demand: int, q: float) -> DesignSolution:
    """Optimum from the closed-form construction, for 0 < q < 1.

    For q <= 1/2 singleton batches are optimal.  Otherwise let n* be
    the constant-size optimum and s, theta the quotient and remainder
    of the demand by n*:

    - theta = 0: s batches of n*.
    - 1 <= theta <= s when n* ties with n* + 1: balance over s batches
      (grows theta of them by one).
    - anything else: the better of balancing over s or s + 1 batches.
    - s = 0 (demand below n*): a single batch holds everything.

    Equal-cost cases keep the fewer-batches candidate.
    """
    demand = _check_demand(demand)
    if not 0.0 < q < 1.0:
        raise ValueError(
            f"closed-form construction needs q in (0, 1), got {q}"
        )
    if q <= 0.5:
        partition = Partition((1,) * demand)
        return DesignSolution(
            partition, expected_waiting_time(partition, q), "theorem"
        )
    pick = optimal_constant_size(q)
    split = constant_size_split(demand, pick.n_star_low)
    if split.s == 0:
        partition = Partition((demand,))
    elif split.theta == 0:
        partition = Partition((pick.n_star_low,) * split.s)
    elif split.theta <= split.s and pick.n_star_high is not None:
        partition = balanced_partition(demand, split.s)
    else:
        fewer = balanced_partition(demand, split.s)
        more = balanced_partition(demand, split.s + 1)
        cost_fewer = expected_waiting_time(fewer, q)
        cost_more = expected_waiting_time(more, q)
        if cost_fewer < cost_more or values_close(cost_fewer, cost_more):
            partition = fewer
        else:
            partition = more
    return DesignSolution(partition, expected_waiting_time(partition, q), "theorem")


def integer_partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield integer partitions of total as descending tuples."""
    if total < 0:
        raise ValueError(f"cannot partition a negative total, got {total}")
    if max_part is None or max_part > total:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first, *rest)


def brute_force_solve(
    demand: int, q: float, cap: int = BRUTE_FORCE_CAP
) -> DesignSolution:
    """Exact optimum by enumerating every partition of the demand.

    Ground truth for the fast solvers; refuses demands above cap
    because the partition count explodes.
    """
    demand = _check_demand(demand)
    _check_q(q)
    if demand > cap:
        raise ValueError(
            f"demand {demand} exceeds the exhaustive-search cap {cap}; "
            f"pass a larger cap to force the enumeration anyway"
        )
    inv = _inverse_power_table(q, demand)
    best_cost: float | None = None
    best_sizes: tuple[int, ...] | None = None
    for descending in integer_partitions(demand):
        cost = 0.0
        for n in descending:
            cost += inv[n]
        if best_cost is None:
            best_cost = cost
            best_sizes = descending[::-1]
            continue
        if values_close(cost, best_cost):
            ascending = descending[::-1]
            if (len(ascending), ascending) < (len(best_sizes), best_sizes):
                best_sizes = ascending
                best_cost = min(best_cost, cost)
        elif cost < best_cost:
            best_cost = cost
            best_sizes = descending[::-1]
    partition = Partition(best_sizes)
    return DesignSolution(partition, expected_waiting_time(partition, q), "brute")


def is_majorized_by(a: Partition | tuple[int, ...], b: Partition | tuple[int, ...]) -> bool:
    """True when a's sizes are majorized by b's (a is at least as balanced).

    Both partitions must have the same length and total.  Majorization
    compares prefix sums of the sizes in descending order; the cost
    sum of q**-n is Schur-convex, so a majorized (more balanced)
    partition never costs more.
    """
    pa = _majorization_sizes(a)
    pb = _majorization_sizes(b)
    if len(pa) != len(pb):
        raise ValueError(
            f"majorization compares equal batch counts, got {len(pa)} and {len(pb)}"
        )
    if sum(pa) != sum(pb):
        raise ValueError(
            f"majorization compares equal totals, got {sum(pa)} and {sum(pb)}"
        )
    prefix_a = 0
    prefix_b = 0
    for xa, xb in zip(pa, pb):
        prefix_a += xa
        prefix_b += xb
        if prefix_a > prefix_b:
            return False
    return True


def _majorization_sizes(p: Partition | tuple[int, ...]) -> tuple[int, ...]:
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    return tuple(reversed(p.sizes))
