"""Core quantities for batch screening designs.

Items arrive as an unlimited stream and each one is good independently
with probability q.  A batch of n items is screened with a single test
that comes back clean only if all n items are good, which happens with
probability q**n.  A clean batch is accepted whole; a failed batch is
discarded and a fresh batch of the same size is drawn, so the number of
tests spent per accepted batch is geometric with mean q**-n.

A design that needs N accepted items splits N into batch sizes
n_1 + ... + n_I = N and pays an expected q**-n_1 + ... + q**-n_I tests.
This module provides the per-batch arithmetic, the value types shared by
the solvers, and the optimal batch size when every batch must have the
same size.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from typing import Iterable

# Relative tolerance for deciding that two adjacent batch sizes tie on
# throughput, and absolute/relative tolerances for comparing candidate
# design costs.  Both comparisons sit well above double rounding noise
# and well below any real gap between distinct candidates.
MU_TIE_RTOL = 1e-12
VALUE_ATOL = 1e-12
VALUE_RTOL = 1e-12

SOLVER_METHODS = ("dp", "sweep", "theorem", "brute")


def values_close(a: float, b: float) -> bool:
    """True when a and b agree within the shared design-cost tolerance."""
    return abs(a - b) <= VALUE_ATOL + VALUE_RTOL * max(abs(a), abs(b))


def _int_power(base: float, exponent: int) -> float:
    # Repeated squaring; squares only while bits remain so the final
    # square cannot overflow spuriously after the result is complete.
    result = 1.0
    b = base
    e = exponent
    while True:
        if e & 1:
            result *= b
        e >>= 1
        if e == 0:
            return result
        b *= b


def _check_batch_size(n: int) -> int:
    # Accepts any integer-like (numpy ints included), rejects bools/floats.
    if isinstance(n, bool):
        raise ValueError(f"batch size must be an integer, got {n!r}")
    try:
        value = operator.index(n)
    except TypeError:
        raise ValueError(f"batch size must be an integer, got {n!r}") from None
    if value < 1:
        raise ValueError(f"batch size must be at least 1, got {value}")
    return value


def _check_q(q: float) -> None:
    if q == 0:
        raise ValueError(
            "per-item pass probability q = 0: no batch can ever pass, "
            "so the expected number of tests is infinite"
        )
    if not 0.0 < q <= 1.0:
        raise ValueError(f"per-item pass probability must be in (0, 1], got {q}")


def batch_pass_probability(n: int, q: float) -> float:
    """Probability q**n that a batch of n items tests clean."""
    n = _check_batch_size(n)
    _check_q(q)
    return _int_power(q, n)


def batch_waiting_time(n: int, q: float) -> float:
    """Expected tests q**-n spent until a batch of size n passes."""
    n = _check_batch_size(n)
    _check_q(q)
    value = _int_power(1.0 / q, n)
    if math.isinf(value):
        raise OverflowError(
            f"expected waiting time q**-n exceeds double precision "
            f"for n = {n}, q = {q}"
        )
    return value


def mu(n: int, q: float) -> float:
    """Expected items accepted per test, n * q**n, for batches of size n."""
    n = _check_batch_size(n)
    _check_q(q)
    return n * _int_power(q, n)


def per_item_cost(n: int, q: float) -> float:
    """Expected tests per accepted item, 1 / (n * q**n); the inverse of mu."""
    return batch_waiting_time(n, q) / n


@dataclass(frozen=True)
class Prevalence:
    """Per-item defect probability p with its complement q = 1 - p."""

    p: float
    q: float = field(init=False)

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"defect probability must be in [0, 1], got {self.p}")
        object.__setattr__(self, "q", 1.0 - self.p)


@dataclass(frozen=True)
class Partition:
    """Batch sizes summing to the demand, stored in ascending order."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        cleaned = [_check_batch_size(n) for n in self.sizes]
        if not cleaned:
            raise ValueError("a design needs at least one batch")
        object.__setattr__(self, "sizes", tuple(sorted(cleaned)))

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)


def as_partition(sizes: Partition | Iterable[int]) -> Partition:
    """Coerce a Partition or an iterable of batch sizes to a Partition."""
    if isinstance(sizes, Partition):
        return sizes
    return Partition(tuple(sizes))


def expected_waiting_time(partition: Partition | Iterable[int], q: float) -> float:
    """Expected total tests for a design: the sum of q**-n over its batches."""
    part = as_partition(partition)
    total = 0.0
    for n in part.sizes:
        total += batch_waiting_time(n, q)
    return total


@dataclass(frozen=True)
class DesignSolution:
    """A partition of the demand with its expected test count and origin."""

    partition: Partition
    expected_tests: float
    method: str

    def __post_init__(self) -> None:
        if self.method not in SOLVER_METHODS:
            raise ValueError(
                f"method must be one of {SOLVER_METHODS}, got {self.method!r}"
            )


@dataclass(frozen=True)
class ConstantSizeResult:
    """Optimal batch size(s) when every batch must have the same size.

    n_star_low is the optimal size; n_star_high is set only when the
    next size up achieves the same throughput, which happens exactly
    when q = n / (n + 1) for an integer n.
    """

    n_star_low: int
    n_star_high: int | None
    items_per_test: float


def optimal_constant_size(q: float) -> ConstantSizeResult:
    """Batch size maximizing expected items accepted per test.

    mu(n, q) = n * q**n is unimodal in n with continuous peak at
    1 / ln(1/q), so the integer optimum is a floor/ceil comparison.
    For q <= 1/2 the peak is at or below 1 and batches of one item
    are optimal (q = 1/2 ties with pairs).  q = 1 has no finite
    optimum since mu grows without bound.
    """
    if not 0.0 < q < 1.0:
        raise ValueError(f"constant-size optimum needs q in (0, 1), got {q}")
    if q < 0.5:
        return ConstantSizeResult(1, None, mu(1, q))
    if q == 0.5:
        return ConstantSizeResult(1, 2, mu(1, q))
    peak = 1.0 / math.log(1.0 / q)
    lo = max(1, math.floor(peak))
    mu_lo = mu(lo, q)
    mu_hi = mu(lo + 1, q)
    if abs(mu_lo - mu_hi) <= MU_TIE_RTOL * max(mu_lo, mu_hi):
        return ConstantSizeResult(lo, lo + 1, mu_lo)
    if mu_hi > mu_lo:
        return ConstantSizeResult(lo + 1, None, mu_hi)
    return ConstantSizeResult(lo, None, mu_lo)
