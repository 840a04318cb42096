"""Command-line front end: ``cccurve <subcommand> ...``.

Subcommands: ingest, generate, centrality, ccc, ensemble, plot.  Every
CSV written is accompanied by a JSON sidecar with the same stem.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .centrality import compute, parse_measure
from .curve import REFERENCES, ccc
from .ensemble import run_ensemble
from .errors import CCCError
from .generators import ModelSpec, generate
from .graph import Graph, load_graph, read_snap
from .io import (curve_to_csv, read_csv_table, scores_to_csv, summary_to_csv,
                 write_sidecar)
from .ordering import TIE_RULES
from .plotting import PlotSeries, PlotSpec, emit_svg


def _measure(text):
    try:
        parse_measure(text)
    except CCCError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _model(text):
    try:
        return ModelSpec.parse(text)
    except (CCCError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _refs(text):
    names = tuple(filter(None, (t.strip() for t in text.split(","))))
    bad = [t for t in names if t not in REFERENCES]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown reference(s) {bad}; choose from {REFERENCES}")
    return names


def _seed(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be nonnegative")
    return value


def _graph_meta(g: Graph):
    return {"graph_id": g.graph_id, "structure_id": g.structure_id,
            "n": g.n, "m": g.m, "directed": g.directed}


def _write_graph(g: Graph, out: Path):
    if out.suffix == ".npz":
        g.save_npz(out)
    else:
        with open(out, "w") as fh:
            g.write_snap(fh)


def cmd_ingest(args):
    g = read_snap(args.input, directed=not args.undirected)
    _write_graph(g, Path(args.out))
    print(json.dumps(_graph_meta(g), sort_keys=True))


def cmd_generate(args):
    g = generate(args.model, args.seed)
    _write_graph(g, Path(args.out))
    print(json.dumps({**_graph_meta(g), "model": str(args.model), "seed": args.seed},
                     sort_keys=True))


def cmd_centrality(args):
    g = load_graph(args.graph, directed=not args.undirected)
    sv = compute(g, args.measure)
    with open(args.out, "w") as fh:
        scores_to_csv(sv, fh)
    write_sidecar(args.out, {"command": "centrality", "measure": sv.descriptor,
                             "version": __version__, **_graph_meta(g)})


def cmd_ccc(args):
    g = load_graph(args.graph, directed=not args.undirected)
    a = compute(g, args.measure_a)
    b = compute(g, args.measure_b)
    curve = ccc(a, b, args.seed, rule=args.tie_rule)
    with open(args.out, "w") as fh:
        curve_to_csv(curve, fh)
    write_sidecar(args.out, {"command": "ccc", "measure_a": a.descriptor,
                             "measure_b": b.descriptor, "seed": args.seed,
                             "tie_rule": args.tie_rule, "version": __version__,
                             **_graph_meta(g)})


def cmd_ensemble(args):
    summary = run_ensemble(args.model, args.measure_a, args.measure_b,
                           args.replicates, args.seed, workers=args.workers)
    with open(args.out, "w") as fh:
        summary_to_csv(summary, fh)
    write_sidecar(args.out, {"command": "ensemble", "model": str(args.model),
                             "measure_a": args.measure_a, "measure_b": args.measure_b,
                             "replicates": args.replicates, "seed": args.seed,
                             "n": summary.n, "version": __version__})


def cmd_plot(args):
    series = []
    for path in args.curve or []:
        header, data = read_csv_table(path)
        if header[:2] != ["x", "ccc"]:
            raise CCCError(f"{path}: expected columns x,ccc, found {header}")
        series.append(PlotSeries(data[:, 0], data[:, 1], Path(path).stem))
    for path in args.summary or []:
        header, data = read_csv_table(path)
        if header[:3] != ["x", "mean", "std"]:
            raise CCCError(f"{path}: expected columns x,mean,std, found {header}")
        series.append(PlotSeries(data[:, 0], data[:, 1], Path(path).stem, std=data[:, 2]))
    svg = emit_svg(PlotSpec(series, args.refs, args.title or "", args.out))
    Path(args.out).write_bytes(svg)


def build_parser():
    p = argparse.ArgumentParser(prog="cccurve", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ingest", help="parse a SNAP edge list and cache it")
    s.add_argument("--input", required=True)
    s.add_argument("--out", required=True, help=".npz cache or SNAP text")
    s.add_argument("--undirected", action="store_true")
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("generate", help="sample a random graph")
    s.add_argument("--model", required=True, type=_model,
                   help="e.g. directed_cm:n=1000,alpha=3 or graphon:id=product,n=500,c=0.5")
    s.add_argument("--seed", required=True, type=_seed)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("centrality", help="compute one centrality measure")
    s.add_argument("--graph", required=True)
    s.add_argument("--undirected", action="store_true",
                   help="read a SNAP text graph as undirected")
    s.add_argument("--measure", required=True, type=_measure)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_centrality)

    s = sub.add_parser("ccc", help="comparison curve of two measures")
    s.add_argument("--graph", required=True)
    s.add_argument("--undirected", action="store_true")
    s.add_argument("--measure-a", required=True, type=_measure)
    s.add_argument("--measure-b", required=True, type=_measure)
    s.add_argument("--seed", required=True, type=_seed)
    s.add_argument("--tie-rule", choices=TIE_RULES, default="hierarchical")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_ccc)

    s = sub.add_parser("ensemble", help="mean/std bands over model replicates")
    s.add_argument("--model", required=True, type=_model)
    s.add_argument("--measure-a", required=True, type=_measure)
    s.add_argument("--measure-b", required=True, type=_measure)
    s.add_argument("--replicates", required=True, type=int)
    s.add_argument("--seed", required=True, type=_seed)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_ensemble)

    s = sub.add_parser("plot", help="render curve/summary CSVs as SVG")
    s.add_argument("--curve", action="append", help="x,ccc CSV (repeatable)")
    s.add_argument("--summary", action="append", help="x,mean,std CSV (repeatable)")
    s.add_argument("--refs", type=_refs, default=(), help="comma list of " + ",".join(REFERENCES))
    s.add_argument("--title")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (OSError, CCCError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "command": args.command}
        print(json.dumps(err), file=sys.stderr)
        return 1
    return 0
