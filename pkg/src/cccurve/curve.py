"""Centrality comparison curves.

For two score vectors ``R`` and ``S`` on ``n`` vertices the curve value at
``k/n`` is the size of the intersection of the top-``k`` sets of the two
induced orderings, divided by ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ordering import (TIE_RULES, induced_order, induced_order_degenerate,
                       shared_uniforms)
from .seeding import sub_seed

__all__ = ["CccCurve", "ccc", "overlap_counts", "ccco", "reference_curves",
           "curve_distance", "grid_index", "REFERENCES"]

REFERENCES = ("identity", "square", "opposed")


@dataclass(frozen=True, eq=False)
class CccCurve:
    """Curve sampled at every ``k/n``; ``counts[k-1]`` is the overlap size."""

    n: int
    counts: np.ndarray
    measure_pair: tuple[str, str] = ("R", "S")
    seed: int | None = None
    rule: str = "hierarchical"

    @property
    def values(self) -> np.ndarray:
        return self.counts / self.n

    @property
    def x(self) -> np.ndarray:
        return np.arange(1, self.n + 1) / self.n

    def at(self, x: float) -> float:
        """Curve value at an arbitrary ``x`` in (0, 1], using ``k = ceil(x n)``."""
        return float(self.counts[grid_index(x, self.n) - 1] / self.n)


def grid_index(x: float, n: int) -> int:
    """``ceil(x * n)`` for ``x`` in (0, 1], robust to representation error
    (``0.07 * 100`` evaluates to 7.000000000000001)."""
    if not 0 < x <= 1:
        raise ValueError(f"x must lie in (0, 1], got {x}")
    return max(1, math.ceil(round(x * n, 9)))


def overlap_counts(perm_a, perm_b) -> np.ndarray:
    """``|top_k(a) & top_k(b)|`` for every k = 1..n.

    A vertex is in both top-k sets exactly when the later of its two
    positions is below ``k``, so the counts are a cumulative histogram.
    """
    perm_a = np.asarray(perm_a)
    perm_b = np.asarray(perm_b)
    n = len(perm_a)
    if len(perm_b) != n:
        raise ValueError("permutations differ in length")
    pos_a = np.empty(n, dtype=np.int64)
    pos_b = np.empty(n, dtype=np.int64)
    pos_a[perm_a] = np.arange(n)
    pos_b[perm_b] = np.arange(n)
    return np.cumsum(np.bincount(np.maximum(pos_a, pos_b), minlength=n))


def _name(x, default):
    m = getattr(x, "measure", None)
    return str(m) if m is not None else default


def ccc(R, S, seed: int = 0, rule: str = "hierarchical") -> CccCurve:
    """Comparison curve of two score vectors (or plain arrays).

    ``rule="hierarchical"`` is the standard construction: one uniform array
    from ``seed`` shared by both orderings.  The diagnostic rules
    ``random_ties`` and ``primary_only`` ignore the other measure when
    breaking ties; ``random_ties`` draws independent uniforms for the two
    orderings (the second from ``sub_seed(seed, "second")``).
    """
    gid_r, gid_s = getattr(R, "graph_id", None), getattr(S, "graph_id", None)
    if gid_r is not None and gid_s is not None and gid_r != gid_s:
        raise ValueError("score vectors belong to different graphs")
    n = len(getattr(R, "scores", R))
    if len(getattr(S, "scores", S)) != n:
        raise ValueError(f"length mismatch: {n} vs {len(getattr(S, 'scores', S))}")
    if n == 0:
        raise ValueError("cannot compare measures on an empty graph")
    if rule not in TIE_RULES:
        raise ValueError(f"unknown tie rule {rule!r}; choose from {TIE_RULES}")
    u = shared_uniforms(n, seed)
    if rule == "hierarchical":
        a = induced_order(R, S, u, seed)
        b = induced_order(S, R, u, seed)
    else:
        u2 = shared_uniforms(n, sub_seed(seed, "second")) if rule == "random_ties" else u
        a = induced_order_degenerate(R, S, u, rule, seed)
        b = induced_order_degenerate(S, R, u2, rule, seed)
    counts = overlap_counts(a.permutation, b.permutation)
    return CccCurve(n, counts, (_name(R, "R"), _name(S, "S")), seed, rule)


def ccco(curve: CccCurve, p: float) -> float:
    """Fraction of the top ``ceil(p n)`` cohort shared by both measures."""
    if not 0 < p <= 1:
        raise ValueError(f"p must lie in (0, 1], got {p}")
    k = grid_index(p, curve.n)
    return float(curve.counts[k - 1] / k)


def reference_curves(n: int) -> dict[str, np.ndarray]:
    """Identity, square (independence) and opposed references on the k/n grid."""
    if n < 1:
        raise ValueError("n must be at least 1")
    k = np.arange(1, n + 1)
    x = k / n
    return {
        "identity": x,
        "square": x * x,
        "opposed": np.maximum(0, 2 * k - n) / n,
    }


def curve_distance(curve, reference: str = "identity") -> float:
    """Sup-norm distance between a curve (or value array) and a reference."""
    values = np.asarray(getattr(curve, "values", curve), dtype=np.float64)
    if reference not in REFERENCES:
        raise ValueError(f"reference must be one of {REFERENCES}")
    ref = reference_curves(len(values))[reference]
    return float(np.max(np.abs(values - ref)))
