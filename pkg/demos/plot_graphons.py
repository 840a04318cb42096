"""
Dense graphs sampled from graphons
==================================

Three kernels with very different behaviour: a product graphon where all
measures agree, an opposed directed graphon where in- and out-degree
disagree, and a threshold graphon where PageRank follows in-degree.
"""

from pathlib import Path

import cccurve as cc
from cccurve.plotting import PlotSpec, emit_svg, series_from_curve

out = Path("demo_output")
out.mkdir(exist_ok=True)
n, seed = 2000, 3

g = cc.generate(cc.ModelSpec.parse(f"graphon:id=product,n={n},c=0.5"), seed)
c1 = cc.ccc(cc.in_degree(g), cc.pagerank(g), seed)
print("product: degree vs PageRank, distance to identity", cc.curve_distance(c1))

g = cc.generate(cc.ModelSpec.parse(f"graphon:id=directed_opposed,n={n}"), seed)
c2 = cc.ccc(cc.in_degree(g), cc.out_degree(g), seed)
print("opposed: in vs out, distance to max(0, 2x-1)", cc.curve_distance(c2, "opposed"))

g = cc.generate(cc.ModelSpec.parse(f"graphon:id=threshold,n={n}"), seed)
pr = cc.pagerank(g)
c3 = cc.ccc(cc.in_degree(g), pr, seed)
c4 = cc.ccc(cc.out_degree(g), pr, seed)
print("threshold: in vs PageRank", cc.curve_distance(c3),
      " out vs PageRank", cc.curve_distance(c4))

series = [series_from_curve(c1, "product: in-degree vs PR"),
          series_from_curve(c2, "opposed: in vs out"),
          series_from_curve(c3, "threshold: in-degree vs PR"),
          series_from_curve(c4, "threshold: out-degree vs PR")]
svg = emit_svg(PlotSpec(series, show_references=("identity", "opposed")))
(out / "graphons.svg").write_bytes(svg)
