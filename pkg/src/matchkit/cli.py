"""Command-line interface.

Subcommands: gen, poly, spectrum, entropy, series, verify, limits,
degenerate.  Artifacts are deterministic: fixed JSON key order, rationals
as "num/den", floats at 12 significant digits.  When a CSV report is
written to a file, a rendered figure lands next to it with a .png suffix.

Exit codes: 0 success (and all checks passing), 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction
from typing import Optional

from . import entropy as ent
from . import limits as lim
from .degenerate import degenerate_report
from .graphs import Graph, from_edge_list, from_json, generate, girth, to_edge_list, to_json
from .ioutil import fmt_float, fmt_frac, parse_rational, stable_json, write_or_print
from .matchpoly import matching_count_prefix, matching_polynomial
from .spectra import (isolate_spectrum, kesten_mckay_density, matching_measure,
                      DEFAULT_PRECISION_BITS)
from .verify import CHECK_IDS, default_corpus, reports_to_jsonl, run_corpus

__all__ = ["main"]


def _load_graph(args) -> Graph:
    if getattr(args, "family", None):
        return generate(args.family)
    path = getattr(args, "input", None)
    if not path:
        raise ValueError("give --family or --input")
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise ValueError(f"cannot read {path}: {e}") from None
    if path.endswith(".json"):
        return from_json(text)
    return from_edge_list(text)


def _require_degree(g: Graph) -> int:
    d = g.regular_degree
    if d is None:
        raise ValueError(f"{g.label or 'graph'} is not regular")
    return d


def _figure_path(out: Optional[str]) -> Optional[str]:
    if out is None:
        return None
    return os.path.splitext(out)[0] + ".png"


def _add_graph_args(sub):
    sub.add_argument("--family", help="family spec, e.g. c8 k33 q3 heawood t6x6 "
                                      "torus:4x6 cycle:12 path:5 rrb:8,3,7")
    sub.add_argument("--input", help="edge-list or .json graph file")
    sub.add_argument("--out", help="output file (default stdout)")


def _cmd_gen(args) -> int:
    g = _load_graph(args)
    write_or_print(to_json(g) if args.json else to_edge_list(g), args.out)
    return 0


def _cmd_poly(args) -> int:
    g = _load_graph(args)
    if args.prefix is not None:
        if args.prefix < 0:
            raise ValueError("prefix length must be nonnegative")
        coeffs = matching_count_prefix(g, args.prefix)
        obj = {"v": g.vertex_count, "prefix": args.prefix,
               "coeffs": [str(c) for c in coeffs], "label": g.label}
    else:
        poly = matching_polynomial(g, strategy=args.strategy)
        obj = {"v": poly.v, "coeffs": [str(c) for c in poly.coeffs],
               "label": poly.label}
    write_or_print(stable_json(obj), args.out)
    return 0


def _cmd_spectrum(args) -> int:
    g = _load_graph(args)
    poly = matching_polynomial(g)
    spec = isolate_spectrum(poly, precision_bits=args.bits)
    if args.measure:
        meas = matching_measure(spec)
        write_or_print(meas.to_csv(), args.out)
        fig = _figure_path(args.out)
        if fig:
            from .render import save_measure_figure
            density = None
            d = g.regular_degree
            if d and d >= 2:
                lim_x = 2 * math.sqrt(d - 1)
                xs = [-lim_x + i * (2 * lim_x) / 400 for i in range(401)]
                density = [(x, kesten_mckay_density(d, x)) for x in xs]
            save_measure_figure(meas.atoms(), fig, density=density, label=g.label)
        return 0
    write_or_print(spec.to_json(), args.out)
    return 0


def _entropy_point_json(spec, d, label, p=None, t=None, tol=1e-12):
    if p is not None:
        pt = ent.entropy_point(spec, d, p=float(p))
    else:
        pt = ent.entropy_point(spec, d, t=float(t))
    return stable_json({
        "label": label, "d": d, "p": pt.p, "t": pt.t,
        "lambda": pt.entropy, "gurvits": pt.gurvits, "gap": pt.gap,
        "q": pt.q, "r": pt.r,
    })


def _cmd_entropy(args) -> int:
    g = _load_graph(args)
    d = _require_degree(g)
    poly = matching_polynomial(g)
    spec = isolate_spectrum(poly)
    if args.curve:
        pts = ent.entropy_curve(spec, d, ent.default_p_grid(args.grid))
        lines = ["t,p,F,lambda,gurvits,gap,q,r"]
        for pt in pts:
            lines.append(",".join(fmt_float(x) for x in
                                  (pt.t, pt.p, pt.free_energy, pt.entropy,
                                   pt.gurvits, pt.gap, pt.q, pt.r)))
        write_or_print("\n".join(lines) + "\n", args.out)
        fig = _figure_path(args.out)
        if fig:
            from .render import save_entropy_figure
            save_entropy_figure(pts, d, g.label, fig)
        return 0
    if (args.p is None) == (args.t is None):
        raise ValueError("give exactly one of --p, --t (or --curve)")
    if args.p is not None:
        p = float(parse_rational(args.p))
        write_or_print(_entropy_point_json(spec, d, g.label, p=p, tol=args.tol),
                       args.out)
    else:
        t = float(parse_rational(args.t))
        write_or_print(_entropy_point_json(spec, d, g.label, t=t, tol=args.tol),
                       args.out)
    return 0


def _cmd_series(args) -> int:
    g = _load_graph(args)
    d = _require_degree(g)
    if args.prefix is not None:
        coeffs = matching_count_prefix(g, max(args.order, args.prefix))
        fs = ent.federbush_series(coeffs, d, order=args.order, v=g.vertex_count)
    else:
        fs = ent.federbush_series(matching_polynomial(g), d, order=args.order)
    ks = sorted(fs.a)
    obj = {"label": g.label, "d": fs.d, "K": fs.order,
           "a": [fmt_frac(fs.a[k]) for k in ks],
           "b": [fmt_frac(fs.b[k]) for k in ks]}
    write_or_print(stable_json(obj), args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.corpus == "default":
        corpus = default_corpus()
    else:
        corpus = [generate(s) for s in args.corpus.split(",") if s]
    checks = None if args.checks == "all" else \
        [c for c in args.checks.split(",") if c]
    params = {}
    if args.grid is not None:
        params["points"] = args.grid
    reports = run_corpus(corpus, checks, **params)
    write_or_print(reports_to_jsonl(reports), args.out)
    fails = sum(r.verdict == "fail" for r in reports)
    skips = sum(r.verdict == "skip" for r in reports)
    passes = sum(r.verdict == "pass" for r in reports)
    print(f"{passes} pass, {fails} fail, {skips} skip", file=sys.stderr)
    return 1 if fails else 0


def _cmd_limits(args) -> int:
    modes = sum(x is not None for x in (args.sequence, args.moments, args.girth_gap))
    if modes != 1:
        raise ValueError("give exactly one of --sequence, --moments, --girth-gap")
    if args.sequence is not None:
        sizes = [int(s) for s in args.sequence.split(",") if s]
        rows = lim.torus_entropy_sequence(sizes)
        write_or_print(lim.torus_sequence_csv(rows), args.out)
        fig = _figure_path(args.out)
        if fig:
            from .render import save_torus_sequence_figure
            save_torus_sequence_figure(rows, lim.catalan_over_pi(), fig)
        return 0
    if args.moments is not None:
        if not args.sizes or not args.orders:
            raise ValueError("--moments needs --sizes and --orders")
        sizes = [int(s) for s in args.sizes.split(",") if s]
        orders = [int(s) for s in args.orders.split(",") if s]
        table = lim.moment_convergence(args.moments, sizes, orders)
        write_or_print(lim.moment_table_csv(table), args.out)
        fig = _figure_path(args.out)
        if fig:
            from .render import save_moment_figure
            save_moment_figure(table.rows, fig, family=table.family)
        return 0
    g = generate(args.girth_gap)
    rep = lim.girth_entropy_gap(g)
    write_or_print(stable_json({
        "label": rep.graph_label, "d": rep.degree, "girth": rep.girth,
        "lambda1": rep.lambda1, "floor": rep.floor, "gap": rep.gap,
        "floor_exact_ok": rep.floor_exact_ok,
    }), args.out)
    return 0


def _cmd_degenerate(args) -> int:
    g = _load_graph(args)
    try:
        u, v = (int(x) for x in args.edge.split(","))
    except ValueError:
        raise ValueError("--edge expects two comma-separated vertex ids") from None
    rep = degenerate_report(g, (u, v))
    obj = {
        "base": rep.base_label, "edge": list(rep.edge), "d": rep.d,
        "p_edge": rep.p_edge, "s_base": rep.s_base,
        "star": rep.star_label, "star_v": rep.star_v,
        "pm_star": str(rep.pm_star), "pm_product": str(rep.pm_product),
        "product_ok": rep.product_ok, "top_slice_ok": rep.top_slice_ok,
        "s_star": rep.s_star, "s_floor": rep.s_floor,
        "s_bound_ok": rep.s_bound_ok,
    }
    write_or_print(stable_json(obj), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matchkit",
                                 description="exact matching polynomials, "
                                             "matching measures, and entropy checks")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a graph as an edge list or JSON")
    _add_graph_args(p)
    p.add_argument("--json", action="store_true", help="JSON instead of edge list")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("poly", help="matching polynomial coefficients")
    _add_graph_args(p)
    p.add_argument("--strategy", choices=("auto", "elimination", "profile"),
                   default="auto")
    p.add_argument("--prefix", type=int, help="only m_0..m_K")
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("spectrum", help="certified root enclosures / measure")
    _add_graph_args(p)
    p.add_argument("--bits", type=int, default=DEFAULT_PRECISION_BITS,
                   help="enclosure width 2^-bits")
    p.add_argument("--measure", action="store_true",
                   help="CSV of measure atoms instead of root JSON")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("entropy", help="entropy at a point or along a curve")
    _add_graph_args(p)
    p.add_argument("--p", help="occupied fraction (float or num/den)")
    p.add_argument("--t", help="activity (float or num/den)")
    p.add_argument("--curve", action="store_true", help="CSV over a p grid")
    p.add_argument("--grid", type=int, default=ent.CURVE_POINTS)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(fn=_cmd_entropy)

    p = sub.add_parser("series", help="dimer series coefficients a_k, b_k")
    _add_graph_args(p)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--prefix", type=int,
                   help="compute from a coefficient prefix of this length")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("verify", help="run the inequality checks")
    p.add_argument("--corpus", default="default",
                   help='"default" or comma-separated family specs')
    p.add_argument("--checks", default="all",
                   help=f'"all" or comma-separated from: {", ".join(CHECK_IDS)}')
    p.add_argument("--grid", type=int, help="grid points for continuum checks")
    p.add_argument("--out", help="JSONL output file (default stdout)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("limits", help="convergence experiments")
    p.add_argument("--sequence", help="torus sides, e.g. 4,6,8,10")
    p.add_argument("--moments", help="family name (cycle | torus)")
    p.add_argument("--sizes", help="sizes for --moments")
    p.add_argument("--orders", help="even orders for --moments")
    p.add_argument("--girth-gap", dest="girth_gap",
                   help="family spec for the entropy-vs-girth report")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=_cmd_limits)

    p = sub.add_parser("degenerate", help="audit the G* construction at an edge")
    _add_graph_args(p)
    p.add_argument("--edge", required=True, help="edge as u,v")
    p.set_defaults(fn=_cmd_degenerate)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
