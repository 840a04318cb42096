"""Random graph models: power-law configuration models and graphon samples.

All generators take a ``numpy.random.Generator`` (or an integer seed) and
are deterministic functions of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import GenerationError, KernelError, ParseError
from .graph import Graph
from .seeding import make_rng

__all__ = [
    "pareto_degrees_from_uniforms", "pareto_degree_sequence",
    "undirected_config_model", "directed_stub_matching",
    "directed_config_model", "Graphon", "named_graphon", "graphon_sample",
    "ModelSpec", "generate", "GRAPHONS",
]

MAX_ATTEMPTS = 10**6


def _check_powerlaw(alpha, d_min):
    if not alpha > 1:
        raise ValueError(f"power-law exponent alpha must exceed 1, got {alpha}")
    if d_min < 1:
        raise ValueError(f"d_min must be at least 1, got {d_min}")


def pareto_degrees_from_uniforms(u, alpha, d_min=1):
    """Map uniforms ``U`` to degrees ``floor(d_min + (1-U)^(-1/(alpha-1)))``.

    ``Y = (1-U)^(-1/(alpha-1))`` has ``P(Y > y) = y^-(alpha-1)`` for
    ``y >= 1``, so the degree probabilities decay like ``d^-alpha``.
    """
    _check_powerlaw(alpha, d_min)
    u = np.asarray(u, dtype=np.float64)
    y = (1.0 - u) ** (-1.0 / (alpha - 1.0))
    deg = np.floor(d_min + y)
    if not np.all(np.isfinite(deg)) or (deg.size and deg.max() > 2.0**53):
        raise GenerationError("degree sample overflowed; alpha too close to 1")
    return deg.astype(np.int64)


def pareto_degree_sequence(n, alpha, d_min=1, rng=None):
    rng = make_rng(rng)
    return pareto_degrees_from_uniforms(rng.random(n), alpha, d_min)


def undirected_config_model(degrees, rng=None) -> Graph:
    """Uniform stub matching; loops and multi-edges are kept.

    An odd degree sum is repaired by giving one extra stub to a uniformly
    chosen vertex.
    """
    rng = make_rng(rng)
    degrees = np.array(degrees, dtype=np.int64)
    if degrees.size and degrees.min() < 0:
        raise ValueError("degrees must be nonnegative")
    n = len(degrees)
    if degrees.sum() % 2:
        degrees[rng.integers(n)] += 1
    stubs = rng.permutation(np.repeat(np.arange(n, dtype=np.int64), degrees))
    return Graph.from_arrays(n, stubs[0::2], stubs[1::2], directed=False)


def directed_stub_matching(in_degrees, out_degrees, rng=None) -> Graph:
    """Match out-stubs to a uniformly shuffled list of in-stubs."""
    rng = make_rng(rng)
    din = np.asarray(in_degrees, dtype=np.int64)
    dout = np.asarray(out_degrees, dtype=np.int64)
    if len(din) != len(dout):
        raise ValueError("in- and out-degree sequences differ in length")
    if din.sum() != dout.sum():
        raise ValueError(f"degree sums differ: in={din.sum()}, out={dout.sum()}")
    n = len(din)
    tails = np.repeat(np.arange(n, dtype=np.int64), dout)
    heads = rng.permutation(np.repeat(np.arange(n, dtype=np.int64), din))
    return Graph.from_arrays(n, tails, heads, directed=True)


def directed_config_model(n, alpha, d_min=1, rng=None,
                          max_attempts=MAX_ATTEMPTS) -> Graph:
    """Directed configuration model with power-law in- and out-degrees.

    The in-degree sequence is drawn once; whole out-degree sequences are
    redrawn until their sum equals the in-degree sum.
    """
    rng = make_rng(rng)
    din = pareto_degree_sequence(n, alpha, d_min, rng)
    target = din.sum()
    for _ in range(max_attempts):
        dout = pareto_degree_sequence(n, alpha, d_min, rng)
        if dout.sum() == target:
            return directed_stub_matching(din, dout, rng)
    raise GenerationError(
        f"no out-degree sequence matched in-degree sum {target} "
        f"after {max_attempts} attempts")


# -- graphons -------------------------------------------------------------

@dataclass(frozen=True)
class Graphon:
    """Edge-probability kernel.

    For a pair ``i < j`` with latent positions ``xi, xj``: an undirected
    graphon links them with probability ``w01(xi, xj)``; a directed one adds
    ``i -> j`` with probability ``w01(xi, xj)`` and, independently,
    ``j -> i`` with probability ``w10(xi, xj)``.
    """

    name: str
    w01: Callable
    w10: Callable | None = None
    directed: bool = False
    constants: dict = field(default_factory=dict)

    def __call__(self, x, y):
        return self.w01(x, y)


def _product(c=0.5):
    if not 0 <= c < 1:
        raise ValueError("product graphon needs 0 <= c < 1")
    return Graphon("product", lambda x, y: c * x * y, constants={"c": c})


def _sum(c=0.25):
    if not 0 <= c < 0.5:
        raise ValueError("sum graphon needs 0 <= c < 1/2")
    return Graphon("sum", lambda x, y: c * (x + y), constants={"c": c})


def _directed_opposed(c=0.9):
    if not 0 <= c < 1:
        raise ValueError("directed_opposed graphon needs 0 <= c < 1")
    return Graphon("directed_opposed",
                   lambda xi, xj: c * xi * xj,
                   lambda xi, xj: c * (1 - xi) * (1 - xj),
                   directed=True, constants={"c": c})


def _threshold(c_high=0.9, c_low=0.05, p=0.15):
    for name, v in (("c_high", c_high), ("c_low", c_low), ("p", p)):
        if not 0 <= v <= 1:
            raise ValueError(f"threshold graphon constant {name}={v} outside [0, 1]")

    # edge probability depends on the latent position of its target
    def into_j(xi, xj):
        return np.where(np.asarray(xj) < p, c_high, c_low)

    def into_i(xi, xj):
        return np.where(np.asarray(xi) < p, c_high, c_low)

    return Graphon("threshold", into_j, into_i, directed=True,
                   constants={"c_high": c_high, "c_low": c_low, "p": p})


GRAPHONS = {
    "product": _product,
    "sum": _sum,
    "directed_opposed": _directed_opposed,
    "threshold": _threshold,
}


def named_graphon(name: str, **constants) -> Graphon:
    """One of ``product``, ``sum``, ``directed_opposed``, ``threshold``.

    Defaults: product ``c=0.5``, sum ``c=0.25``, directed_opposed ``c=0.9``,
    threshold ``c_high=0.9, c_low=0.05, p=0.15``.
    """
    try:
        factory = GRAPHONS[name]
    except KeyError:
        raise ValueError(f"unknown graphon {name!r}; choose from {sorted(GRAPHONS)}") from None
    return factory(**constants)


def _probabilities(w, xi, xj):
    p = np.broadcast_to(np.asarray(w(xi, xj), dtype=np.float64), xj.shape)
    if p.size and (not np.all(np.isfinite(p)) or p.min() < 0 or p.max() > 1):
        raise KernelError(f"graphon value outside [0, 1]: range [{p.min()}, {p.max()}]")
    return p


def graphon_sample(n, W, directed=None, rng=None) -> Graph:
    """Sample ``G(W, n)``: latent ``x_v ~ U(0, 1)``, independent edges.

    ``W`` is a :class:`Graphon` or a plain symmetric callable ``W(x, y)``.
    Rows ``i = 0..n-2`` are processed in order, each drawing the latent
    pairs ``(i, j > i)`` in one vectorised step.
    """
    rng = make_rng(rng)
    if not isinstance(W, Graphon):
        W = Graphon("custom", W)
    directed = W.directed if directed is None else bool(directed)
    w10 = W.w10 if W.w10 is not None else W.w01
    x = rng.random(n)
    src, dst = [], []
    for i in range(n - 1):
        js = np.arange(i + 1, n)
        xi, xj = x[i], x[js]
        hit = rng.random(len(js)) < _probabilities(W.w01, xi, xj)
        src.append(np.full(hit.sum(), i))
        dst.append(js[hit])
        if directed:
            back = rng.random(len(js)) < _probabilities(w10, xi, xj)
            src.append(js[back])
            dst.append(np.full(back.sum(), i))
    if src:
        src, dst = np.concatenate(src), np.concatenate(dst)
    return Graph.from_arrays(n, src, dst, directed=directed)


# -- model descriptors ----------------------------------------------------

MODEL_KINDS = ("undirected_cm", "directed_cm", "graphon")


@dataclass(frozen=True)
class ModelSpec:
    """Parameters of a generative model (the seed is supplied separately)."""

    kind: str
    n: int
    alpha: float = 3.0
    d_min: int = 1
    graphon: str | None = None
    constants: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}; choose from {MODEL_KINDS}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.kind == "graphon":
            named_graphon(self.graphon or "", **self.constants)
        else:
            _check_powerlaw(self.alpha, self.d_min)

    def __str__(self):
        if self.kind == "graphon":
            extra = "".join(f",{k}={v}" for k, v in self.constants.items())
            return f"graphon:id={self.graphon},n={self.n}{extra}"
        return f"{self.kind}:n={self.n},alpha={self.alpha},d_min={self.d_min}"

    @classmethod
    def parse(cls, text: str) -> "ModelSpec":
        """Parse ``kind:key=value,...``, e.g. ``directed_cm:n=1000,alpha=3``
        or ``graphon:id=threshold,n=2000,c_high=0.9``."""
        kind, _, rest = text.strip().partition(":")
        kv = {}
        for item in filter(None, (p.strip() for p in rest.split(","))):
            key, eq, value = item.partition("=")
            if not eq:
                raise ParseError(f"model parameter {item!r} must be key=value")
            kv[key.strip()] = value.strip()
        if "n" not in kv:
            raise ParseError("model descriptor needs n=...")
        try:
            n = int(kv.pop("n"))
            if kind == "graphon":
                name = kv.pop("id", None)
                if name is None:
                    raise ParseError("graphon descriptor needs id=...")
                return cls("graphon", n, graphon=name,
                           constants={k: float(v) for k, v in kv.items()})
            spec = cls(kind, n, alpha=float(kv.pop("alpha", 3.0)),
                       d_min=int(kv.pop("d_min", 1)))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad model descriptor {text!r}: {exc}") from None
        if kv:
            raise ParseError(f"unknown model parameters {sorted(kv)} for {kind}")
        return spec


def generate(spec: ModelSpec, seed) -> Graph:
    """Draw one graph from ``spec``."""
    rng = make_rng(seed)
    if spec.kind == "directed_cm":
        return directed_config_model(spec.n, spec.alpha, spec.d_min, rng)
    if spec.kind == "undirected_cm":
        return undirected_config_model(
            pareto_degree_sequence(spec.n, spec.alpha, spec.d_min, rng), rng)
    return graphon_sample(spec.n, named_graphon(spec.graphon, **spec.constants), rng=rng)
