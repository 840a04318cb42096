"""
Comparing two centrality measures on a small graph
==================================================

Build a graph from an edge list, score its vertices two ways and draw the
comparison curve next to the reference curves.
"""

from pathlib import Path

import numpy as np

import cccurve as cc
from cccurve.plotting import PlotSpec, emit_svg, series_from_curve

out = Path("demo_output")
out.mkdir(exist_ok=True)

# a directed "bow tie": two feeder groups pointing into a core triangle
edges = [(0, 1), (1, 2), (2, 0)]
edges += [(v, 0) for v in range(3, 8)] + [(v, 1) for v in range(8, 11)]
edges += [(2, v) for v in range(11, 15)]
g = cc.from_edge_list(edges, directed=True)
print(g.n, "vertices,", g.m, "edges")

# scores are plain arrays wrapped with the measure that produced them
pr = cc.pagerank(g, c=0.85)
indeg = cc.in_degree(g)
print(np.round(pr.scores, 3))

# CCC(k/n) is the shared fraction of the two top-k sets
curve = cc.ccc(pr, indeg, seed=1)
print("CCC at x = 0.2:", curve.at(0.2))
print("distance to identity:", cc.curve_distance(curve, "identity"))

svg = emit_svg(PlotSpec([series_from_curve(curve)],
                        show_references=("identity", "square", "opposed"),
                        title="PageRank vs in-degree"))
(out / "basics.svg").write_bytes(svg)
