"""Monte Carlo check of expected test counts for batch designs.

Each batch of size n passes a test with probability q**n, so the tests
spent on it follow a geometric law with that success probability.  A
replication draws one geometric count per batch and sums them; the mean
over replications estimates the design's expected total tests, and a
z-score locates the analytic value inside the simulation's error bar.

Draws come from a fixed, documented pipeline so results are exactly
reproducible across runs and platforms: a Philox counter-based
generator keyed by the seed yields raw 64-bit words, word r*J + j
(replication r, batch j of J) becomes a uniform via (raw >> 11) * 2**-53,
and the uniform becomes a geometric count via inverse transform
ceil(log1p(-u) / log1p(-p)), clamped to at least one test.  No numpy
distribution methods are involved, so a numpy upgrade cannot shift the
stream, and the draw for a given (seed, replication, batch) slot never
depends on how many replications are requested by other callers.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .core import (
    Partition,
    as_partition,
    batch_pass_probability,
    expected_waiting_time,
)


@dataclass(frozen=True)
class SimulationReport:
    """Monte Carlo summary of total tests for one design."""

    replications: int
    mean_tests: float
    variance_tests: float
    std_error: float
    analytic_tests: float
    z_score: float


def _check_replications(replications: int) -> int:
    if isinstance(replications, bool):
        raise ValueError(f"replications must be an integer, got {replications!r}")
    try:
        replications = operator.index(replications)
    except TypeError:
        raise ValueError(
            f"replications must be an integer, got {replications!r}"
        ) from None
    if replications < 1:
        raise ValueError(f"replications must be at least 1, got {replications}")
    return replications


def _check_seed(seed: int) -> int:
    if isinstance(seed, bool):
        raise ValueError(f"seed must be an integer, got {seed!r}")
    try:
        return operator.index(seed)
    except TypeError:
        raise ValueError(f"seed must be an integer, got {seed!r}") from None


def _uniform_stream(seed: int, count: int) -> np.ndarray:
    # Philox is counter-based: the same key always yields the same
    # word sequence, independent of platform and numpy version.
    key = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    raw = np.random.Philox(key=key).random_raw(count)
    return (raw >> np.uint64(11)) * np.float64(2.0**-53)


def simulate_design(
    partition: Partition | tuple[int, ...],
    q: float,
    replications: int,
    seed: int,
) -> SimulationReport:
    """Estimate a design's expected total tests by Monte Carlo.

    Deterministic in (partition, q, replications, seed).  Raises the
    same domain errors as the analytic path, q = 0 included, since a
    design that cannot pass any test has no finite simulation either.
    """
    part = as_partition(partition)
    if q == 0:
        raise ValueError(
            "per-item pass probability q = 0: every test fails, so the "
            "waiting time is almost surely infinite"
        )
    if not 0.0 < q <= 1.0:
        raise ValueError(f"per-item pass probability must be in (0, 1], got {q}")
    replications = _check_replications(replications)
    seed = _check_seed(seed)
    analytic = expected_waiting_time(part, q)

    batches = len(part.sizes)
    uniforms = _uniform_stream(seed, replications * batches)
    uniforms = uniforms.reshape(replications, batches)
    counts = np.empty_like(uniforms)
    for j, n in enumerate(part.sizes):
        p = batch_pass_probability(n, q)
        if p >= 1.0:
            counts[:, j] = 1.0
        else:
            counts[:, j] = np.ceil(np.log1p(-uniforms[:, j]) / math.log1p(-p))
    np.maximum(counts, 1.0, out=counts)

    totals = counts.sum(axis=1)
    mean = float(totals.mean())
    variance = float(totals.var(ddof=1)) if replications > 1 else 0.0
    std_error = math.sqrt(variance / replications)
    if std_error > 0.0:
        z_score = (mean - analytic) / std_error
    elif mean == analytic:
        z_score = 0.0
    else:
        z_score = math.nan
    return SimulationReport(
        replications=replications,
        mean_tests=mean,
        variance_tests=variance,
        std_error=std_error,
        analytic_tests=analytic,
        z_score=z_score,
    )


def simulate_stream_rate(n: int, q: float, replications: int, seed: int) -> float:
    """Estimated tests per accepted item for constant batches of size n.

    Simulates one batch per replication and divides the mean test
    count by the batch size; converges to 1 / mu(n, q).
    """
    report = simulate_design(Partition((n,)), q, replications, seed)
    return report.mean_tests / n
