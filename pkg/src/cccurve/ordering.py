"""Total vertex orderings induced by a pair of score vectors.

The hierarchical rule ranks vertices by the primary scores, breaks ties
with the secondary scores, then with one uniform number per vertex.
Permutations list vertices from most to least central.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .seeding import sub_seed

__all__ = ["InducedOrder", "shared_uniforms", "induced_order",
           "induced_order_degenerate", "TIE_RULES"]

TIE_RULES = ("hierarchical", "random_ties", "primary_only")


@dataclass(frozen=True, eq=False)
class InducedOrder:
    permutation: np.ndarray
    key_spec: str
    seed: int | None = None
    uniforms_id: str | None = None

    def top(self, k):
        """The ``k`` most central vertices."""
        return self.permutation[:k]

    def positions(self):
        """Inverse permutation: rank position of each vertex (0 = top)."""
        pos = np.empty_like(self.permutation)
        pos[self.permutation] = np.arange(len(self.permutation))
        return pos


def shared_uniforms(n: int, seed: int) -> np.ndarray:
    """Per-vertex tie-break numbers in the open interval (0, 1).

    Drawn in vertex order from numpy's PCG64 generator seeded with
    ``sub_seed(seed, "uniforms")``: 53-bit integers ``j`` mapped to
    ``(j + 0.5) / 2**53``.  The derived seed keeps the tie-break stream
    apart from a graph generated with the same integer seed.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = np.random.Generator(np.random.PCG64(sub_seed(seed, "uniforms")))
    j = rng.integers(0, 2**53, size=n, dtype=np.uint64)
    return (j.astype(np.float64) + 0.5) / 2.0**53


def _as_array(x):
    return np.asarray(getattr(x, "scores", x), dtype=np.float64)


def _label(x, default):
    m = getattr(x, "measure", None)
    return str(m) if m is not None else default


def _check(R, S, uniforms):
    if not (len(R) == len(S) == len(uniforms)):
        raise ValueError(f"length mismatch: R={len(R)}, S={len(S)}, "
                         f"uniforms={len(uniforms)}")


def _uniforms_id(u):
    return hashlib.sha1(u.tobytes()).hexdigest()[:12]


def _descending(*keys):
    """Permutation sorting by the keys descending, left key most significant;
    exact duplicates fall back to ascending vertex id."""
    n = len(keys[0])
    ids = np.arange(n)
    # lexsort: last key is primary; negation turns ascending into descending
    return np.lexsort((ids,) + tuple(-k for k in reversed(keys)))


def induced_order(R, S, uniforms, seed=None) -> InducedOrder:
    """Order by descending ``(R(v), S(v), u_v)``; residual exact
    duplicates are broken by vertex id (lower id ranks higher)."""
    r, s, u = _as_array(R), _as_array(S), np.asarray(uniforms, dtype=np.float64)
    _check(r, s, u)
    perm = _descending(r, s, u)
    return InducedOrder(perm, f"({_label(R, 'R')},{_label(S, 'S')})", seed,
                        _uniforms_id(u))


def induced_order_degenerate(R, S, uniforms, rule, seed=None) -> InducedOrder:
    """Orderings that ignore the secondary measure, for diagnostics only.

    ``random_ties`` breaks ties in ``R`` by the uniforms alone;
    ``primary_only`` breaks them by vertex id.  ``hierarchical`` is
    accepted and forwards to :func:`induced_order`.
    """
    r, s, u = _as_array(R), _as_array(S), np.asarray(uniforms, dtype=np.float64)
    _check(r, s, u)
    key = f"({_label(R, 'R')})"
    if rule == "random_ties":
        return InducedOrder(_descending(r, u), key + "+uniform", seed, _uniforms_id(u))
    if rule == "primary_only":
        return InducedOrder(_descending(r), key + "+id", seed)
    if rule == "hierarchical":
        return induced_order(R, S, uniforms, seed)
    raise ValueError(f"unknown tie rule {rule!r}; choose from {TIE_RULES}")
