"""Immutable multigraph storage in compressed sparse row form.

Vertices are the dense ids ``0..n-1``.  Edges keep their multiplicity;
self-loops are allowed.  For undirected graphs each edge ``{u, v}`` with
``u != v`` appears in both adjacency lists, while a loop ``{v, v}`` appears
once in the list of ``v`` and contributes 2 to its degree.
"""

from __future__ import annotations

import hashlib
import io
import os
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from .errors import ParseError

__all__ = ["Graph", "from_edge_list", "parse_snap", "read_snap", "load_graph"]

_DEGREE_MODES = ("in", "out", "total")


def _readonly(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def _csr_from_sorted(rows, n):
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=ptr[1:])
    return ptr


class Graph:
    """Directed or undirected multigraph with CSR adjacency.

    Build instances with :func:`from_edge_list` (sparse ids are remapped)
    or :meth:`Graph.from_arrays` (ids already dense, isolated vertices kept).

    Attributes
    ----------
    n : int
        Number of vertices.
    directed : bool
    out_ptr, out_idx, out_mult : ndarray
        CSR adjacency: neighbours of ``v`` are
        ``out_idx[out_ptr[v]:out_ptr[v+1]]``, sorted, with multiplicities.
    in_ptr, in_idx, in_mult : ndarray or None
        Incoming adjacency; ``None`` for undirected graphs.
    labels : ndarray
        Original vertex id of each dense id.
    """

    def __init__(self, n, directed, out_ptr, out_idx, out_mult,
                 in_ptr=None, in_idx=None, in_mult=None, labels=None):
        self.n = int(n)
        self.directed = bool(directed)
        self.out_ptr = _readonly(np.asarray(out_ptr, dtype=np.int64))
        self.out_idx = _readonly(np.asarray(out_idx, dtype=np.int64))
        self.out_mult = _readonly(np.asarray(out_mult, dtype=np.int64))
        if self.directed:
            self.in_ptr = _readonly(np.asarray(in_ptr, dtype=np.int64))
            self.in_idx = _readonly(np.asarray(in_idx, dtype=np.int64))
            self.in_mult = _readonly(np.asarray(in_mult, dtype=np.int64))
        else:
            self.in_ptr = self.in_idx = self.in_mult = None
        if labels is None:
            labels = np.arange(self.n, dtype=np.int64)
        self.labels = _readonly(np.asarray(labels, dtype=np.int64))
        if len(self.labels) != self.n or len(self.out_ptr) != self.n + 1:
            raise ValueError("inconsistent graph arrays")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_arrays(cls, n, src, dst, directed, labels=None):
        """Build a graph on vertices ``0..n-1`` from parallel endpoint arrays.

        Repeated pairs accumulate multiplicity.  For undirected graphs
        ``(u, v)`` and ``(v, u)`` denote the same edge.
        """
        n = int(n)
        src = np.asarray(src, dtype=np.int64).ravel()
        dst = np.asarray(dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise ValueError("src and dst must have the same length")
        if src.size and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= n):
            raise ValueError("vertex id out of range")

        if directed:
            key = src * n + dst
            ukey, cnt = np.unique(key, return_counts=True)
            rows, cols = np.divmod(ukey, n) if n else (ukey, ukey)
            out_ptr = _csr_from_sorted(rows, n)
            order = np.lexsort((rows, cols))
            in_ptr = _csr_from_sorted(cols[order], n)
            return cls(n, True, out_ptr, cols, cnt,
                       in_ptr, rows[order], cnt[order], labels)

        a = np.minimum(src, dst)
        b = np.maximum(src, dst)
        ukey, cnt = np.unique(a * n + b, return_counts=True)
        a, b = np.divmod(ukey, n) if n else (ukey, ukey)
        off = a != b
        rows = np.concatenate([a, b[off]])
        cols = np.concatenate([b, a[off]])
        mult = np.concatenate([cnt, cnt[off]])
        order = np.lexsort((cols, rows))
        return cls(n, False, _csr_from_sorted(rows[order], n),
                   cols[order], mult[order], labels=labels)

    # -- basic queries ----------------------------------------------------

    @cached_property
    def m(self) -> int:
        """Number of edges counted with multiplicity (a loop counts once)."""
        total = int(self.out_mult.sum())
        if self.directed:
            return total
        return (total + int(self._loop_mult.sum())) // 2

    @cached_property
    def _loop_mult(self):
        loops = np.zeros(self.n, dtype=np.int64)
        rows = self._rows
        hit = rows == self.out_idx
        loops[rows[hit]] = self.out_mult[hit]
        return loops

    def out_neighbors(self, v):
        """Return ``(neighbours, multiplicities)`` of the out-list of ``v``."""
        lo, hi = self.out_ptr[v], self.out_ptr[v + 1]
        return self.out_idx[lo:hi], self.out_mult[lo:hi]

    def in_neighbors(self, v):
        if not self.directed:
            return self.out_neighbors(v)
        lo, hi = self.in_ptr[v], self.in_ptr[v + 1]
        return self.in_idx[lo:hi], self.in_mult[lo:hi]

    def degrees(self, mode="total"):
        """Multiplicity-weighted degree of every vertex.

        For undirected graphs all modes return the plain degree, where a
        self-loop counts twice.
        """
        if mode not in _DEGREE_MODES:
            raise ValueError(f"mode must be one of {_DEGREE_MODES}, got {mode!r}")
        if not self.directed:
            return self._undirected_degrees
        if mode == "out":
            return self._out_degrees
        if mode == "in":
            return self._in_degrees
        return self._out_degrees + self._in_degrees

    @cached_property
    def _rows(self):
        return np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.out_ptr))

    @cached_property
    def _out_degrees(self):
        return _readonly(np.bincount(self._rows, weights=self.out_mult,
                                     minlength=self.n).astype(np.int64))

    @cached_property
    def _in_degrees(self):
        return _readonly(np.bincount(self.out_idx, weights=self.out_mult,
                                     minlength=self.n).astype(np.int64))

    @cached_property
    def _undirected_degrees(self):
        return _readonly(self._out_degrees + self._loop_mult)

    def degree(self, v, mode="total") -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return int(self.degrees(mode)[v])

    # -- derived structures ----------------------------------------------

    def adjacency_matrix(self) -> sp.csr_matrix:
        """Adjacency matrix with multiplicities, ``A[u, v]`` = edges u->v.

        Undirected loops are entered as 2 on the diagonal so that row sums
        equal degrees.
        """
        data = self.out_mult.astype(np.float64)
        if not self.directed:
            rows = np.repeat(np.arange(self.n), np.diff(self.out_ptr))
            data = np.where(rows == self.out_idx, 2.0 * data, data)
        return sp.csr_matrix((data, self.out_idx, self.out_ptr),
                             shape=(self.n, self.n))

    def simple_csr(self, direction="out"):
        """CSR ``(ptr, idx)`` of the simple projection: loops dropped,
        multiplicities ignored.  ``direction="in"`` gives reversed arcs."""
        if direction == "in" and self.directed:
            ptr, idx = self.in_ptr, self.in_idx
        elif direction in ("in", "out"):
            ptr, idx = self.out_ptr, self.out_idx
        else:
            raise ValueError("direction must be 'in' or 'out'")
        rows = np.repeat(np.arange(self.n), np.diff(ptr))
        keep = rows != idx
        return _csr_from_sorted(rows[keep], self.n), np.ascontiguousarray(idx[keep])

    def edges(self):
        """Edge multiset as ``(src, dst, mult)`` arrays, each edge once."""
        rows = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.out_ptr))
        cols, mult = self.out_idx, self.out_mult
        if not self.directed:
            keep = rows <= cols
            rows, cols, mult = rows[keep], cols[keep], mult[keep]
        return rows, np.asarray(cols), np.asarray(mult)

    def to_edge_list(self, original_ids=True):
        """Expand the edge multiset into a list of ``(u, v)`` pairs."""
        src, dst, mult = self.edges()
        src = np.repeat(src, mult)
        dst = np.repeat(dst, mult)
        if original_ids:
            src, dst = self.labels[src], self.labels[dst]
        return list(zip(src.tolist(), dst.tolist()))

    @cached_property
    def graph_id(self) -> str:
        """Content hash identifying the graph structure and labels."""
        h = hashlib.sha256()
        h.update(f"{self.n}:{int(self.directed)}".encode())
        for a in (self.out_ptr, self.out_idx, self.out_mult, self.labels):
            h.update(a.tobytes())
        return h.hexdigest()[:16]

    @cached_property
    def structure_id(self) -> str:
        """Hash of the labelled edge multiset, independent of internal
        vertex numbering, so a graph keeps it across a SNAP round trip
        (unlike :attr:`graph_id`, which also pins the indexing that score
        vectors rely on)."""
        src, dst, mult = self.edges()
        a, b = self.labels[src], self.labels[dst]
        if not self.directed:
            a, b = np.minimum(a, b), np.maximum(a, b)
        order = np.lexsort((b, a))
        h = hashlib.sha256()
        h.update(f"{self.n}:{int(self.directed)}".encode())
        for arr in (np.sort(self.labels), a[order], b[order], mult[order]):
            h.update(np.ascontiguousarray(arr, dtype=np.int64).tobytes())
        return h.hexdigest()[:16]

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind}, id={self.graph_id})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.directed == other.directed
                and all(np.array_equal(x, y) for x, y in zip(
                    (self.out_ptr, self.out_idx, self.out_mult, self.labels),
                    (other.out_ptr, other.out_idx, other.out_mult, other.labels))))

    __hash__ = None

    # -- persistence -----------------------------------------------------

    def write_snap(self, fh, original_ids=True):
        """Write the graph as a SNAP edge list (one line per edge copy)."""
        kind = "Directed" if self.directed else "Undirected"
        lines = [f"# {kind} graph: n={self.n} m={self.m}\n", "# FromNodeId\tToNodeId\n"]
        lines += [f"{u}\t{v}\n" for u, v in self.to_edge_list(original_ids)]
        fh.write("".join(lines))

    def save_npz(self, path):
        """Binary cache; :func:`load_graph` restores an equal graph."""
        arrays = dict(n=np.int64(self.n), directed=np.bool_(self.directed),
                      out_ptr=self.out_ptr, out_idx=self.out_idx,
                      out_mult=self.out_mult, labels=self.labels)
        if self.directed:
            arrays.update(in_ptr=self.in_ptr, in_idx=self.in_idx, in_mult=self.in_mult)
        np.savez(path, **arrays)

    @classmethod
    def load_npz(cls, path):
        with np.load(path) as z:
            directed = bool(z["directed"])
            extra = (z["in_ptr"], z["in_idx"], z["in_mult"]) if directed else (None,) * 3
            return cls(int(z["n"]), directed, z["out_ptr"], z["out_idx"],
                       z["out_mult"], *extra, labels=z["labels"])


def from_edge_list(pairs, directed) -> Graph:
    """Build a graph from ``(u, v)`` pairs with arbitrary nonnegative ids.

    Ids are remapped to ``0..n-1`` in order of first appearance (scanning
    ``u`` then ``v`` of each pair); the original ids are kept in
    ``Graph.labels``.
    """
    arr = np.asarray(pairs, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("pairs must be a sequence of (u, v) integer pairs")
    if arr.size and arr.min() < 0:
        raise ValueError("vertex ids must be nonnegative")
    flat = arr.ravel()
    uniq, first, inverse = np.unique(flat, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    dense = rank[inverse].reshape(-1, 2)
    return Graph.from_arrays(len(uniq), dense[:, 0], dense[:, 1], directed,
                             labels=uniq[order])


def parse_snap(text) -> list[tuple[int, int]]:
    """Parse a SNAP plain-text edge list.

    ``text`` may be ``bytes``, ``str`` or a binary/text file object.  Lines
    starting with ``#`` and blank lines are skipped; every other line must
    hold exactly two nonnegative integers.
    """
    if hasattr(text, "read"):
        text = text.read()
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    pairs = []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(f"expected 2 fields, found {len(parts)}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {s!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {s!r}", lineno)
        pairs.append((u, v))
    return pairs


def read_snap(path, directed=True) -> Graph:
    with open(path, "rb") as fh:
        return from_edge_list(parse_snap(fh), directed)


def load_graph(path, directed=True) -> Graph:
    """Load a ``.npz`` cache or a SNAP text file (``directed`` applies to text)."""
    if os.fspath(path).endswith(".npz"):
        return Graph.load_npz(path)
    return read_snap(path, directed=directed)
