"""Verification harness: each named inequality as a runnable check.

A check receives a graph, tests its hypotheses (regular, bipartite,
vertex-transitive as needed), and returns a CheckReport with verdict
pass/fail/skip plus numeric witnesses.  Comparisons between rationals are
exact; continuum statements are sampled on documented grids, and a failure
that lands within 1e-9 of zero is re-evaluated at higher precision before
the verdict is final.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional, Sequence

from . import entropy as ent
from .graphs import (Graph, TRANSITIVITY_SEARCH_BOUND, cycle, complete_bipartite,
                     delete_vertices, girth, heawood, hypercube, torus,
                     verify_edge_transitivity, verify_transitivity)
from .matchpoly import MatchPoly, matching_polynomial, top_match_counts
from .spectra import Spectrum, isolate_spectrum

__all__ = [
    "CheckReport",
    "GraphContext",
    "CHECK_IDS",
    "run_check",
    "run_corpus",
    "default_corpus",
    "reports_to_jsonl",
]

GRID_POINTS = 512
GRID_TOL = 1e-9
RECHECK_WINDOW = 1e-6
RECHECK_DPS = 60

# rational activities for the exact pointwise inequalities
DEFAULT_T_GRID = (Fraction(1, 100), Fraction(1, 8), Fraction(1, 4),
                  Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4),
                  Fraction(8), Fraction(100))


@dataclass
class CheckReport:
    check_id: str
    graph_label: str
    verdict: str  # pass | fail | skip
    witnesses: list = field(default_factory=list)
    notes: str = ""

    def to_json(self) -> str:
        obj = {"check": self.check_id, "graph": self.graph_label,
               "verdict": self.verdict, "witnesses": self.witnesses,
               "notes": self.notes}
        return json.dumps(obj)


def _wit(point, lhs, rhs, margin) -> dict:
    return {"point": point, "lhs": _fmt(lhs), "rhs": _fmt(rhs),
            "margin": float(margin)}


def _fmt(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return float(f"{x:.12g}")
    return x


def _rel_margin(lhs: Fraction, rhs: Fraction) -> float:
    scale = max(abs(rhs), Fraction(1))
    return float((lhs - rhs) / scale)


class GraphContext:
    """Caches the polynomial, spectrum, and structure flags for one graph."""

    def __init__(self, graph: Graph):
        self.graph = graph

    @cached_property
    def poly(self) -> MatchPoly:
        return matching_polynomial(self.graph)

    @cached_property
    def spectrum(self) -> Spectrum:
        return isolate_spectrum(self.poly)

    @cached_property
    def girth(self) -> Optional[int]:
        return girth(self.graph)

    @property
    def degree(self) -> Optional[int]:
        return self.graph.regular_degree

    @property
    def bipartite(self) -> bool:
        return self.graph.bipartition is not None

    @cached_property
    def vertex_transitive(self) -> Optional[bool]:
        """True/False when known; None when too large to decide and undeclared."""
        g = self.graph
        if g.declared_vertex_transitive:
            return True
        if g.vertex_count <= TRANSITIVITY_SEARCH_BOUND:
            return verify_transitivity(g).transitive
        return None

    @cached_property
    def edge_transitive(self) -> Optional[bool]:
        g = self.graph
        if g.declared_edge_transitive:
            return True
        if g.vertex_count <= TRANSITIVITY_SEARCH_BOUND:
            return verify_edge_transitivity(g)
        return None

    @cached_property
    def entropy_grid(self) -> list[ent.EntropyPoint]:
        return ent.entropy_curve(self.spectrum, self.degree,
                                 ent.default_p_grid(GRID_POINTS))


_context_cache: dict[Graph, GraphContext] = {}


def _context(g) -> GraphContext:
    if isinstance(g, GraphContext):
        return g
    ctx = _context_cache.get(g)
    if ctx is None:
        ctx = _context_cache[g] = GraphContext(g)
    return ctx


def _skip(check_id, ctx, reason) -> CheckReport:
    return CheckReport(check_id, ctx.graph.label, "skip", [], reason)


def _needs(ctx, *, regular=False, min_degree=None, bipartite=False,
           transitive=False, perfect=False) -> Optional[str]:
    if regular and ctx.degree is None:
        return "not regular"
    if min_degree is not None and (ctx.degree or 0) < min_degree:
        return f"degree below {min_degree}"
    if bipartite and not ctx.bipartite:
        return "not bipartite"
    if transitive:
        vt = ctx.vertex_transitive
        if vt is None:
            return "vertex-transitivity unknown at this size"
        if not vt:
            return "not vertex-transitive"
    if perfect:
        if ctx.graph.vertex_count % 2:
            return "odd vertex count"
        if ctx.poly.perfect_count == 0:
            return "no perfect matching"
    return None


# ------------------------------------------------------------ mp re-check

def _lambda_mp(poly: MatchPoly, p: float, dps: int = RECHECK_DPS):
    """Entropy at p with mpmath at dps digits; used to re-judge close calls."""
    import mpmath as mp
    with mp.workdps(dps):
        coeffs = [mp.mpf(c) for c in poly.coeffs]
        n = poly.n
        pm = mp.mpf(p)

        def dens(t):
            num = mp.mpf(0)
            den = mp.mpf(0)
            for k in range(poly.nu, -1, -1):
                num = num * t + k * coeffs[k]
                den = den * t + coeffs[k]
            return num / (n * den)

        lo, hi = mp.mpf(-300), mp.mpf(1)
        while dens(mp.e ** hi) < pm:
            hi += 10
            if hi > 3000:
                raise RuntimeError("failed to bracket the activity")
        for _ in range(dps * 4):
            mid = (lo + hi) / 2
            if dens(mp.e ** mid) < pm:
                lo = mid
            else:
                hi = mid
        t = mp.e ** ((lo + hi) / 2)
        big_m = mp.mpf(0)
        for c in reversed(coeffs):
            big_m = big_m * t + c
        return float(mp.log(big_m) / poly.v - pm / 2 * mp.log(t))


def _gurvits_mp(d: int, p: float, dps: int = RECHECK_DPS) -> float:
    import mpmath as mp
    with mp.workdps(dps):
        pm = mp.mpf(p)
        s = mp.mpf(0)
        if pm > 0:
            s += pm * mp.log(d / pm)
        s += (d - pm) * mp.log(1 - pm / d)
        if pm < 1:
            s -= 2 * (1 - pm) * mp.log(1 - pm)
        return float(s / 2)


# ----------------------------------------------------------------- checks

def _check_schrijver(ctx: GraphContext, **_) -> CheckReport:
    why = _needs(ctx, regular=True, bipartite=True)
    if why:
        return _skip("schrijver", ctx, why)
    if ctx.graph.vertex_count % 2:
        return _skip("schrijver", ctx, "odd vertex count")
    d = ctx.degree
    n = ctx.poly.n
    pm = ctx.poly.perfect_count
    if d == 1:
        lhs, rhs = pm, 1
    else:
        lhs = pm * d ** ((d - 2) * n)
        rhs = (d - 1) ** ((d - 1) * n)
    margin = _rel_margin(Fraction(lhs), Fraction(rhs))
    wit = [_wit(f"n={n}", Fraction(pm),
                Fraction((d - 1) ** ((d - 1) * n), d ** ((d - 2) * n)) if d > 1 else Fraction(1),
                margin)]
    verdict = "pass" if lhs >= rhs else "fail"
    return CheckReport("schrijver", ctx.graph.label, verdict, wit,
                       f"exact integers, d={d}")


def _check_gurvits(ctx: GraphContext, points: int = GRID_POINTS, **_) -> CheckReport:
    why = _needs(ctx, regular=True, bipartite=True)
    if why:
        return _skip("gurvits", ctx, why)
    d = ctx.degree
    grid = ctx.entropy_grid if points == GRID_POINTS else \
        ent.entropy_curve(ctx.spectrum, d, ent.default_p_grid(points))
    worst = None
    rechecked = 0
    fails = []
    for pt in grid:
        margin = pt.gap
        if margin < -GRID_TOL and margin > -RECHECK_WINDOW:
            margin = _lambda_mp(ctx.poly, pt.p) - _gurvits_mp(d, pt.p)
            rechecked += 1
        if margin < -GRID_TOL:
            fails.append(_wit(f"p={pt.p:.12g}", pt.entropy, pt.gurvits, margin))
        if worst is None or margin < worst[1]:
            worst = (pt, margin)
    notes = f"{len(grid)}-point grid, tol {GRID_TOL:g}"
    if rechecked:
        notes += f", {rechecked} points re-evaluated at {RECHECK_DPS} digits"
    if fails:
        return CheckReport("gurvits", ctx.graph.label, "fail", fails, notes)
    pt, margin = worst
    return CheckReport("gurvits", ctx.graph.label, "pass",
                       [_wit(f"p={pt.p:.12g}", pt.entropy, pt.gurvits, margin)],
                       notes)


def _check_zero_estimation(ctx: GraphContext, **_) -> CheckReport:
    why = _needs(ctx, regular=True, min_degree=2, bipartite=True, transitive=True)
    if why:
        return _skip("zero_estimation", ctx, why)
    d = ctx.degree
    n = ctx.poly.n
    nu = ctx.poly.nu
    spec = ctx.spectrum
    wits = []
    bad = False
    roots = []
    for e in spec.entries:
        roots.extend([e] * e.multiplicity)
    for k in range(1, nu + 1):
        bound = Fraction(d * d * k * k, 4 * (d - 1) * n * n)
        ok = spec.count_leq(bound, strict=True) <= k - 1
        margin = float(roots[k - 1].lo - bound) if ok else \
            float(roots[k - 1].hi - bound)
        wits.append(_wit(f"k={k}", roots[k - 1].midpoint, bound, margin))
        if not ok:
            bad = True
    verdict = "fail" if bad else "pass"
    return CheckReport("zero_estimation", ctx.graph.label, verdict, wits,
                       "certified by exact root counting")


def _check_ratio(ctx: GraphContext, **_) -> CheckReport:
    why = _needs(ctx, regular=True, bipartite=True, transitive=True, perfect=True)
    if why:
        return _skip("ratio", ctx, why)
    d = ctx.degree
    n = ctx.poly.n
    lhs = Fraction(ctx.poly.coeffs[n - 1], ctx.poly.coeffs[n])
    rhs = Fraction(2 * n * n, d)
    verdict = "pass" if lhs <= rhs else "fail"
    return CheckReport("ratio", ctx.graph.label, verdict,
                       [_wit(f"n={n}", lhs, rhs, _rel_margin(rhs, lhs))],
                       "exact rational comparison")


def _check_krs(ctx: GraphContext, **_) -> CheckReport:
    why = _needs(ctx, bipartite=True, transitive=True, perfect=True)
    if why:
        return _skip("krs", ctx, why)
    n = ctx.poly.n
    lhs = Fraction(ctx.poly.coeffs[n - 1], ctx.poly.coeffs[n])
    rhs = Fraction(n * n)
    verdict = "pass" if lhs <= rhs else "fail"
    return CheckReport("krs", ctx.graph.label, verdict,
                       [_wit(f"n={n}", lhs, rhs, _rel_margin(rhs, lhs))],
                       "exact rational comparison")


def _gap_grid(ctx: GraphContext, points: int):
    grid = ctx.entropy_grid if points == GRID_POINTS else \
        ent.entropy_curve(ctx.spectrum, ctx.degree, ent.default_p_grid(points))
    return grid


def _recheck_gap(ctx: GraphContext, p: float) -> float:
    return _lambda_mp(ctx.poly, p) - _gurvits_mp(ctx.degree, p)


def _check_stability_monotone(ctx: GraphContext, points: int = GRID_POINTS,
                              **_) -> CheckReport:
    why = _needs(ctx, regular=True, min_degree=2, bipartite=True, transitive=True)
    if why:
        return _skip("stability_monotone", ctx, why)
    grid = _gap_grid(ctx, points)
    fails = []
    worst = math.inf
    rechecked = 0
    for a, b in zip(grid, grid[1:]):
        step = b.gap - a.gap
        if step < -GRID_TOL and step > -RECHECK_WINDOW:
            step = _recheck_gap(ctx, b.p) - _recheck_gap(ctx, a.p)
            rechecked += 1
        worst = min(worst, step)
        if step < -GRID_TOL:
            fails.append(_wit(f"p={a.p:.12g}->{b.p:.12g}", b.gap, a.gap, step))
    notes = f"{len(grid)}-point grid, tol {GRID_TOL:g}"
    if rechecked:
        notes += f", {rechecked} steps re-evaluated at {RECHECK_DPS} digits"
    if fails:
        return CheckReport("stability_monotone", ctx.graph.label, "fail",
                           fails, notes)
    return CheckReport("stability_monotone", ctx.graph.label, "pass",
                       [_wit("min step", worst, 0.0, worst)], notes)


def _check_stability_cycle(ctx: GraphContext, points: int = GRID_POINTS,
                           cycle_len: Optional[int] = None, **_) -> CheckReport:
    why = _needs(ctx, regular=True, min_degree=2, bipartite=True, transitive=True)
    if why:
        return _skip("stability_cycle", ctx, why)
    ell = cycle_len if cycle_len is not None else ctx.girth
    if ell is None:
        return _skip("stability_cycle", ctx, "acyclic")
    if ell % 2 or ell < 4:
        return _skip("stability_cycle", ctx, f"cycle length {ell} unusable")
    d = ctx.degree
    grid = _gap_grid(ctx, points)
    fails = []
    worst = None
    rechecked = 0
    for pt in grid:
        bound = ent.cycle_gap_lower_bound(d, ell, pt.p)
        margin = pt.gap - bound
        if margin < -GRID_TOL and margin > -RECHECK_WINDOW:
            margin = _recheck_gap(ctx, pt.p) - bound
            rechecked += 1
        if margin < -GRID_TOL:
            fails.append(_wit(f"p={pt.p:.12g}", pt.gap, bound, margin))
        if worst is None or margin < worst[1]:
            worst = (pt, bound, margin)
    notes = f"cycle length {ell}, {len(grid)}-point grid"
    if rechecked:
        notes += f", {rechecked} points re-evaluated at {RECHECK_DPS} digits"
    if fails:
        return CheckReport("stability_cycle", ctx.graph.label, "fail", fails, notes)
    pt, bound, margin = worst
    return CheckReport("stability_cycle", ctx.graph.label, "pass",
                       [_wit(f"p={pt.p:.12g}", pt.gap, bound, margin)], notes)


def _check_ineq_b(ctx: GraphContext, t_grid: Sequence[Fraction] = DEFAULT_T_GRID,
                  **_) -> CheckReport:
    why = _needs(ctx, regular=True)
    if why:
        return _skip("ineq_b", ctx, why)
    d = ctx.degree
    et = ctx.edge_transitive
    wits = []
    bad = False
    for t in t_grid:
        p = ent.density(ctx.poly, t)
        rhs = Fraction(d) * t / (1 + t)
        ok = p <= rhs
        wits.append(_wit(f"t={_fmt(t)}", p, rhs, _rel_margin(rhs, p)))
        bad = bad or not ok
        if et:
            rhs2 = Fraction(d) * t / (1 + d * t)
            ok2 = p <= rhs2
            wits.append(_wit(f"t={_fmt(t)} (edge-transitive)", p, rhs2,
                             _rel_margin(rhs2, p)))
            bad = bad or not ok2
    verdict = "fail" if bad else "pass"
    notes = "exact at rational activities" + \
        ("; edge-transitive refinement included" if et else "")
    return CheckReport("ineq_b", ctx.graph.label, verdict, wits, notes)


def _check_ineq_c(ctx: GraphContext, t_grid: Sequence[Fraction] = DEFAULT_T_GRID,
                  **_) -> CheckReport:
    why = _needs(ctx, regular=True, bipartite=True, transitive=True)
    if why:
        return _skip("ineq_c", ctx, why)
    d = ctx.degree
    wits = []
    bad = False
    for t in t_grid:
        cert = ent.gap_certificate(ctx.poly, d, t)
        wits.append(_wit(f"t={_fmt(t)}", cert.r, Fraction(0), float(cert.r)))
        bad = bad or not cert.r_nonneg
    verdict = "fail" if bad else "pass"
    return CheckReport("ineq_c", ctx.graph.label, verdict, wits,
                       "exact at rational activities")


def _check_balanced(ctx: GraphContext, **_) -> CheckReport:
    if not ctx.bipartite:
        return _skip("balanced", ctx, "not bipartite")
    a_side, b_side = ctx.graph.bipartition
    if len(a_side) != len(b_side):
        return _skip("balanced", ctx, "parts of unequal size")
    g = ctx.graph
    sum_a = None
    sum_b = None
    for side, acc_name in ((a_side, "a"), (b_side, "b")):
        acc = [0] * (ctx.poly.nu + 1)
        for u in sorted(side):
            cs = matching_polynomial(delete_vertices(g, [u])).coeffs
            for i, c in enumerate(cs):
                acc[i] += c
        if acc_name == "a":
            sum_a = acc
        else:
            sum_b = acc
    ok = sum_a == sum_b
    wits = [_wit("coefficient sums", str(sum_a), str(sum_b),
                 0.0 if ok else -1.0)]
    return CheckReport("balanced", ctx.graph.label, "pass" if ok else "fail",
                       wits, "exact polynomial identity over one-vertex deletions")


def _check_asymp_d(ctx: GraphContext, **_) -> CheckReport:
    poly = ctx.poly
    v = poly.v
    if v % 2:
        return _skip("asymp_d", ctx, "odd vertex count")
    n = poly.n
    allowance = math.log(v) / v
    wits = []
    bad = False
    for k in range(poly.nu + 1):
        lam = ent.entropy_value(ctx.spectrum, k / n)
        ref = math.log(poly.coeffs[k]) / v
        err = abs(lam - ref)
        wits.append(_wit(f"k={k}", lam, ref, allowance - err))
        if err > allowance + GRID_TOL:
            bad = True
    return CheckReport("asymp_d", ctx.graph.label, "fail" if bad else "pass",
                       wits, f"allowance ln(v)/v = {allowance:.12g}")


def _check_vt_slice(ctx: GraphContext, **_) -> CheckReport:
    why = _needs(ctx, bipartite=True, transitive=True, perfect=True)
    if why:
        return _skip("vt_slice", ctx, why)
    g = ctx.graph
    n = ctx.poly.n
    total = ctx.poly.coeffs[n - 1]
    if total % n:
        return CheckReport("vt_slice", ctx.graph.label, "fail",
                           [_wit("divisibility", Fraction(total), Fraction(n), -1.0)],
                           "m_{n-1} not divisible by n")
    share = total // n
    wits = []
    bad = False
    for u in range(g.vertex_count):
        hole = delete_vertices(g, [u])
        if hole.vertex_count > 24 and hole.meta and hole.meta[0] == "torus":
            got = top_match_counts(hole, 1).get(1, 0)
        else:
            cs = matching_polynomial(hole).coeffs
            got = cs[n - 1] if len(cs) > n - 1 else 0
        if got != share:
            bad = True
            wits.append(_wit(f"u={u}", Fraction(got), Fraction(share),
                             _rel_margin(Fraction(got), Fraction(share))))
    if not bad:
        wits.append(_wit("all vertices", Fraction(share), Fraction(share), 0.0))
    return CheckReport("vt_slice", ctx.graph.label, "fail" if bad else "pass",
                       wits, f"m_(n-1) slice = {share} per vertex")


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "schrijver": _check_schrijver,
    "gurvits": _check_gurvits,
    "zero_estimation": _check_zero_estimation,
    "ratio": _check_ratio,
    "krs": _check_krs,
    "stability_monotone": _check_stability_monotone,
    "stability_cycle": _check_stability_cycle,
    "ineq_b": _check_ineq_b,
    "ineq_c": _check_ineq_c,
    "balanced": _check_balanced,
    "asymp_d": _check_asymp_d,
    "vt_slice": _check_vt_slice,
}

CHECK_IDS = tuple(CHECKS)


def run_check(check_id: str, g, **params) -> CheckReport:
    if check_id not in CHECKS:
        raise ValueError(f"unknown check {check_id!r}; known: {', '.join(CHECK_IDS)}")
    return CHECKS[check_id](_context(g), **params)


def default_corpus() -> list[Graph]:
    return [cycle(4), cycle(6), cycle(8),
            complete_bipartite(2), complete_bipartite(3), complete_bipartite(4),
            hypercube(3), hypercube(4), heawood(),
            torus((4, 4)), torus((6, 6))]


def run_corpus(corpus: Optional[Sequence[Graph]] = None,
               checks: Optional[Sequence[str]] = None,
               **params) -> list[CheckReport]:
    if corpus is None:
        corpus = default_corpus()
    if not corpus:
        raise ValueError("empty corpus")
    if checks is None:
        checks = CHECK_IDS
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}")
    reports = []
    for g in corpus:
        ctx = _context(g)
        for c in checks:
            reports.append(CHECKS[c](ctx, **params))
    reports.sort(key=lambda r: (r.graph_label, r.check_id))
    return reports


def reports_to_jsonl(reports: Sequence[CheckReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)
