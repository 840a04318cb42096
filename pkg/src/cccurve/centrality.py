"""Centrality measures returning :class:`ScoreVector` objects.

Conventions shared by the kernels:

* degree, PageRank, Katz and eigenvector centrality use the adjacency
  matrix with multiplicities;
* closeness, harmonic, betweenness and load work on the simple projection
  (loops dropped, multiplicities ignored);
* on directed graphs, closeness and harmonic aggregate distances *into*
  the vertex unless ``incoming=False``;
* betweenness and load sum over ordered pairs ``(i, j)`` with
  ``i != j``, ``v`` not an endpoint, and ``j`` reachable from ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csgraph

from . import _kernels
from .errors import (ConvergenceError, DegenerateSpectrumError,
                     DivergenceError, ParseError)
from .graph import Graph
from .seeding import make_rng, sub_seed

__all__ = [
    "ScoreVector", "Measure", "parse_measure", "compute",
    "in_degree", "out_degree", "degree", "pagerank", "katz", "eigenvector",
    "closeness", "harmonic", "betweenness", "load", "random_scores",
    "spectral_radius", "MEASURES",
]


@dataclass(frozen=True)
class Measure:
    """Measure descriptor: a name plus its parameters.

    ``str(Measure("pagerank", {"c": 0.85}))`` gives ``"pagerank(c=0.85)"``.
    """

    name: str
    params: dict = field(default_factory=dict)

    def __str__(self):
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        return f"{self.name}({inner})"

    def __hash__(self):
        return hash(str(self))


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


@dataclass(frozen=True, eq=False)
class ScoreVector:
    """Per-vertex nonnegative scores of one measure on one graph."""

    graph_id: str
    measure: Measure
    scores: np.ndarray
    labels: np.ndarray | None = None

    def __post_init__(self):
        s = np.asarray(self.scores, dtype=np.float64)
        if s.ndim != 1:
            raise ValueError("scores must be one-dimensional")
        if not np.all(np.isfinite(s)) or (s.size and s.min() < 0):
            raise ValueError(f"{self.measure}: scores must be finite and nonnegative")
        s.setflags(write=False)
        object.__setattr__(self, "scores", s)

    def __len__(self):
        return len(self.scores)

    @property
    def descriptor(self) -> str:
        return str(self.measure)


def _vector(graph, name, params, scores):
    scores = np.asarray(scores, dtype=np.float64)
    # -0.0 and rounding noise below zero never carry rank information here
    scores = np.where(scores < 0, 0.0, scores) + 0.0
    return ScoreVector(graph.graph_id, Measure(name, dict(params)), scores, graph.labels)


# -- degree ---------------------------------------------------------------

def in_degree(graph: Graph) -> ScoreVector:
    return _vector(graph, "indegree", {}, graph.degrees("in"))


def out_degree(graph: Graph) -> ScoreVector:
    return _vector(graph, "outdegree", {}, graph.degrees("out"))


def degree(graph: Graph) -> ScoreVector:
    return _vector(graph, "degree", {}, graph.degrees("total"))


def random_scores(graph: Graph, seed: int = 0) -> ScoreVector:
    """Uniform scores independent of the graph; a baseline for comparisons.

    The stream is derived as ``sub_seed(seed, "random")`` so that reusing
    the seed that generated the graph does not correlate the scores with
    its degrees.
    """
    rng = make_rng(sub_seed(seed, "random"))
    return _vector(graph, "random", {"seed": seed}, rng.random(graph.n))


# -- spectral measures ----------------------------------------------------

def pagerank(graph: Graph, c: float = 0.85, tol: float = 1e-10,
             max_iter: int = 1000) -> ScoreVector:
    """PageRank as the fixed point of R = c * M^T R + (1 - c).

    ``M[j, i] = e_ji / d_j^+``.  Vertices without out-edges pass nothing
    on, so total mass is not conserved.  Iteration starts from all ones.
    Undirected edges count as two arcs (a loop as two arcs from ``v`` to
    itself).
    """
    if not 0 < c < 1:
        raise ValueError("damping factor c must lie in (0, 1)")
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be positive and max_iter at least 1")
    A = graph.adjacency_matrix()
    dout = np.asarray(A.sum(axis=1)).ravel()
    inv = np.divide(1.0, dout, out=np.zeros_like(dout), where=dout > 0)
    Mt = (A.multiply(inv[:, None])).T.tocsr()
    x = np.ones(graph.n)
    resid = np.inf
    for _ in range(max_iter):
        x_new = c * (Mt @ x) + (1.0 - c)
        resid = float(np.max(np.abs(x_new - x))) if graph.n else 0.0
        if resid <= tol:
            # resid is the fixed-point residual of x itself, so return x
            return _vector(graph, "pagerank", {"c": float(c), "tol": float(tol)}, x)
        x = x_new
    raise ConvergenceError(
        f"pagerank did not converge in {max_iter} iterations "
        f"(last residual {resid:.3e})", residual=resid)


def _has_cycle(graph: Graph) -> bool:
    if graph.m == 0:
        return False
    if not graph.directed:
        return True
    src, dst, _ = graph.edges()
    if np.any(src == dst):
        return True
    ncomp, _ = csgraph.connected_components(graph.adjacency_matrix(),
                                            directed=True, connection="strong")
    return ncomp < graph.n


def spectral_radius(graph: Graph, rtol: float = 1e-10, max_iter: int = 20000) -> float:
    """Estimate the spectral radius of the adjacency matrix.

    Acyclic graphs return exactly 0.  Otherwise power iteration on
    ``A + I`` (the shift removes periodicity) from the all-ones vector,
    using the growth ratio of the 1-norm.
    """
    if not _has_cycle(graph):
        return 0.0
    A = graph.adjacency_matrix()
    x = np.full(graph.n, 1.0 / graph.n)
    prev = np.inf
    ratio = 0.0
    for _ in range(max_iter):
        y = A @ x + x
        ratio = float(y.sum())
        x = y / ratio
        if abs(ratio - prev) <= rtol * ratio:
            break
        prev = ratio
    return ratio - 1.0


def katz(graph: Graph, alpha="auto", direction: str = "in",
         tol: float = 1e-12, max_iter: int = 100000) -> ScoreVector:
    """Katz centrality, the attenuated count of walks of length >= 1.

    With ``direction="in"`` walks ending at a vertex are counted
    (``sum_k alpha^k (A^T)^k 1``); ``"out"`` counts walks starting at it.
    ``alpha="auto"`` uses ``0.85 / lambda_max``; on acyclic graphs, where
    ``lambda_max = 0``, "auto" returns all zeros.
    """
    if direction not in ("in", "out"):
        raise ValueError("direction must be 'in' or 'out'")
    lam = spectral_radius(graph)
    params = {"alpha": alpha, "direction": direction, "tol": float(tol)}
    if alpha == "auto":
        if lam == 0.0:
            return _vector(graph, "katz", params, np.zeros(graph.n))
        a = 0.85 / lam
    else:
        a = float(alpha)
        params["alpha"] = a
        if a <= 0:
            raise ValueError("alpha must be positive")
        if a * lam >= 1.0:
            raise DivergenceError(
                f"alpha={a:g} with estimated spectral radius {lam:.6g}: "
                f"alpha * lambda_max = {a * lam:.6g} >= 1")
    A = graph.adjacency_matrix()
    M = (A.T.tocsr() if direction == "in" else A) * a
    k = np.zeros(graph.n)
    resid = np.inf
    for _ in range(max_iter):
        k_new = M @ (k + 1.0)
        resid = float(np.max(np.abs(k_new - k))) if graph.n else 0.0
        k = k_new
        if resid <= tol * max(1.0, float(k.max(initial=0.0))):
            return _vector(graph, "katz", params, k)
    raise ConvergenceError(
        f"katz did not converge in {max_iter} iterations "
        f"(last residual {resid:.3e})", residual=resid)


def eigenvector(graph: Graph, tol: float = 1e-12, max_iter: int = 100000) -> ScoreVector:
    """Left Perron eigenvector ``x^T A = lambda x^T``, unit Euclidean norm.

    Computed by power iteration on ``A^T + I`` from the all-ones vector;
    convergence is declared when ``max|A^T x - lambda x| <= tol``.
    """
    if not _has_cycle(graph):
        raise DegenerateSpectrumError(
            "adjacency matrix has spectral radius 0; eigenvector centrality undefined")
    At = graph.adjacency_matrix().T.tocsr()
    x = np.full(graph.n, 1.0 / np.sqrt(graph.n))
    resid = np.inf
    for _ in range(max_iter):
        y = At @ x
        lam = float(x @ y)
        resid = float(np.max(np.abs(y - lam * x)))
        if resid <= tol:
            return _vector(graph, "eigenvector", {"tol": float(tol)}, x)
        z = y + x
        x = z / np.linalg.norm(z)
    raise ConvergenceError(
        f"eigenvector did not converge in {max_iter} iterations "
        f"(last residual {resid:.3e})", residual=resid)


# -- distance measures ----------------------------------------------------

def _distance_sums(graph, incoming):
    # distances u -> v aggregated at v: traverse reversed arcs from v
    direction = "in" if (incoming and graph.directed) else "out"
    ptr, idx = graph.simple_csr(direction)
    return _kernels.bfs_distance_sums(ptr, idx, graph.n, _kernels.n_blocks(graph.n))


def closeness(graph: Graph, incoming: bool = True) -> ScoreVector:
    """Closeness with Wasserman-Faust scaling for partial reachability.

    With ``r`` vertices (including ``v``) at finite distance,
    ``c(v) = (r-1)/(n-1) * (r-1)/sum_u d(u, v)``, and 0 when ``r <= 1``.
    """
    n = graph.n
    reach, dsum, _ = _distance_sums(graph, incoming)
    r1 = (reach - 1).astype(np.float64)
    scores = np.zeros(n)
    ok = reach > 1
    scores[ok] = (r1[ok] / (n - 1)) * (r1[ok] / dsum[ok])
    return _vector(graph, "closeness", {"incoming": bool(incoming)}, scores)


def harmonic(graph: Graph, incoming: bool = True) -> ScoreVector:
    """Sum of reciprocal distances ``1/d(u, v)`` over ``u != v``."""
    _, _, hsum = _distance_sums(graph, incoming)
    return _vector(graph, "harmonic", {"incoming": bool(incoming)}, hsum)


def _path_counts(graph, k):
    if k is not None and k < 1:
        raise ValueError("truncation radius k must be at least 1")
    ptr, idx = graph.simple_csr("out")
    kmax = -1 if k is None else int(k)
    return _kernels.brandes(ptr, idx, graph.n, kmax, _kernels.n_blocks(graph.n))


def betweenness(graph: Graph, k: int | None = None) -> ScoreVector:
    """Betweenness over ordered pairs; ``k`` keeps only pairs at distance <= k."""
    between, _, _ = _path_counts(graph, k)
    return _vector(graph, "betweenness", {} if k is None else {"k": int(k)}, between)


def load(graph: Graph, k: int | None = None) -> ScoreVector:
    """Share of all shortest paths that pass through each vertex.

    ``l(v) = sum sigma_ij(v) / sum sigma_ij`` over the admissible pairs;
    all zeros when no pair is connected.
    """
    _, through, total = _path_counts(graph, k)
    scores = through / total if total > 0 else np.zeros(graph.n)
    return _vector(graph, "load", {} if k is None else {"k": int(k)}, scores)


# -- descriptor registry --------------------------------------------------

def _bool(s):
    if s.lower() in ("1", "true", "yes"):
        return True
    if s.lower() in ("0", "false", "no"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


def _alpha(s):
    return "auto" if s == "auto" else float(s)


def _direction(s):
    if s not in ("in", "out"):
        raise ValueError("direction must be 'in' or 'out'")
    return s


MEASURES = {
    "indegree": (in_degree, {}),
    "outdegree": (out_degree, {}),
    "degree": (degree, {}),
    "pagerank": (pagerank, {"c": float, "tol": float, "max_iter": int}),
    "katz": (katz, {"alpha": _alpha, "direction": _direction,
                    "tol": float, "max_iter": int}),
    "eigenvector": (eigenvector, {"tol": float, "max_iter": int}),
    "closeness": (closeness, {"incoming": _bool}),
    "harmonic": (harmonic, {"incoming": _bool}),
    "betweenness": (betweenness, {"k": int}),
    "load": (load, {"k": int}),
    "random": (random_scores, {"seed": int}),
}


def parse_measure(text: str) -> tuple[str, dict]:
    """Parse ``name[:key=value,...]`` into ``(name, kwargs)``.

    Unknown measures and parameters raise :class:`ParseError`.
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if name not in MEASURES:
        raise ParseError(f"unknown measure {name!r}; choose from {sorted(MEASURES)}")
    allowed = MEASURES[name][1]
    kwargs = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, value = item.partition("=")
        key = key.strip()
        if not eq:
            raise ParseError(f"parameter {item!r} of {name} must be key=value")
        if key not in allowed:
            raise ParseError(f"unknown parameter {key!r} for {name}; "
                             f"allowed: {sorted(allowed) or 'none'}")
        try:
            kwargs[key] = allowed[key](value.strip())
        except ValueError as exc:
            raise ParseError(f"bad value for {name}:{key}: {exc}") from None
    return name, kwargs


def compute(graph: Graph, descriptor) -> ScoreVector:
    """Evaluate a measure given as a descriptor string or ``(name, kwargs)``."""
    name, kwargs = parse_measure(descriptor) if isinstance(descriptor, str) else descriptor
    return MEASURES[name][0](graph, **kwargs)
