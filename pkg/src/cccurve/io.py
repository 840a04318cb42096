"""CSV and JSON serialisation of scores, curves and ensemble summaries.

Floats are written with 17 significant digits so they round-trip exactly.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .errors import ParseError

__all__ = ["fmt", "scores_to_csv", "curve_to_csv", "summary_to_csv",
           "order_to_csv", "read_csv_table", "write_sidecar", "sidecar_path"]


def fmt(x) -> str:
    return format(float(x), ".17g")


def _write(rows, header, fh=None):
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(row) + "\n")
    text = buf.getvalue()
    if fh is not None:
        fh.write(text)
    return text


def scores_to_csv(sv, fh=None) -> str:
    """``vertex,score`` with original vertex ids."""
    labels = sv.labels if sv.labels is not None else np.arange(len(sv.scores))
    return _write(((str(int(v)), fmt(s)) for v, s in zip(labels, sv.scores)),
                  ("vertex", "score"), fh)


def curve_to_csv(curve, fh=None) -> str:
    """``x,ccc`` at every ``k/n``."""
    return _write(((fmt(x), fmt(y)) for x, y in zip(curve.x, curve.values)),
                  ("x", "ccc"), fh)


def summary_to_csv(summary, fh=None) -> str:
    """``x,mean,std`` at every ``k/n``."""
    return _write(((fmt(x), fmt(m), fmt(s))
                   for x, m, s in zip(summary.x, summary.mean, summary.std)),
                  ("x", "mean", "std"), fh)


def order_to_csv(order, graph=None, fh=None) -> str:
    """``rank,vertex`` listing of an induced ordering (rank 1 = most central)."""
    perm = order.permutation
    ids = graph.labels[perm] if graph is not None else perm
    return _write(((str(r), str(int(v))) for r, v in enumerate(ids, start=1)),
                  ("rank", "vertex"), fh)


def read_csv_table(path) -> tuple[list[str], np.ndarray]:
    """Read a numeric CSV with a header row; returns ``(header, array)``."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError(f"{path}: empty file") from None
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(f"{path}: expected {len(header)} fields", lineno)
            try:
                rows.append([float(v) for v in row])
            except ValueError:
                raise ParseError(f"{path}: non-numeric field in {row}", lineno) from None
    return header, np.array(rows, dtype=np.float64).reshape(-1, len(header))


def sidecar_path(csv_path) -> Path:
    return Path(csv_path).with_suffix(".json")


def write_sidecar(csv_path, metadata: dict) -> Path:
    """Write metadata as sorted-key JSON next to ``csv_path``."""
    path = sidecar_path(csv_path)
    path.write_text(json.dumps(metadata, indent=2, sort_keys=True, default=str) + "\n")
    return path
