"""Replicated comparison curves over a random graph model."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .centrality import compute
from .curve import ccc
from .errors import CCCError
from .generators import ModelSpec, generate
from .seeding import sub_seed

__all__ = ["EnsembleSummary", "replicate_curve", "run_ensemble", "summarize"]


@dataclass(frozen=True, eq=False)
class EnsembleSummary:
    """Pointwise mean and population standard deviation of replicate curves."""

    n: int
    replicates: int
    mean: np.ndarray
    std: np.ndarray
    spec: ModelSpec | None = None
    measure_pair: tuple[str, str] = ("R", "S")
    seed: int | None = None

    @property
    def x(self):
        return np.arange(1, self.n + 1) / self.n


class ReplicateError(CCCError):
    def __init__(self, index, cause):
        self.index = index
        super().__init__(f"replicate {index} failed: {cause}")


def replicate_curve(spec, measure_a, measure_b, seed, index):
    """Counts of replicate ``index``: graph from ``sub_seed(seed, index)``,
    tie-breaks from ``sub_seed(seed, index, "ties")``."""
    try:
        g = generate(spec, sub_seed(seed, index))
        a = compute(g, measure_a)
        b = compute(g, measure_b)
        return ccc(a, b, sub_seed(seed, index, "ties")).counts
    except CCCError as exc:
        raise ReplicateError(index, exc) from exc


def summarize(counts, spec=None, measure_pair=("R", "S"), seed=None) -> EnsembleSummary:
    """Two-pass mean and population std over stacked overlap counts."""
    counts = np.asarray(counts)
    r, n = counts.shape
    values = counts / n
    mean = values.mean(axis=0)
    std = np.sqrt(((values - mean) ** 2).mean(axis=0))
    return EnsembleSummary(n, r, mean, std, spec, tuple(measure_pair), seed)


def run_ensemble(spec: ModelSpec, measure_a: str, measure_b: str,
                 replicates: int, seed: int, workers: int | None = None) -> EnsembleSummary:
    """Mean and std bands of ``replicates`` independent curves.

    Each replicate owns its random streams, so the summary is the same for
    any ``workers`` count and earlier replicates do not change when more
    are added.
    """
    if replicates < 1:
        raise ValueError("replicates must be at least 1")
    args = [(spec, measure_a, measure_b, seed, r) for r in range(replicates)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(replicate_curve, *zip(*args)))
    else:
        rows = [replicate_curve(*a) for a in args]
    if len({len(r) for r in rows}) != 1:
        raise ValueError("replicate graphs differ in size")
    return summarize(np.vstack(rows), spec, (measure_a, measure_b), seed)
