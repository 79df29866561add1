"""Edge probabilities, s(G), and the degenerate-edge amplifier G*.

For a graph with perfect matchings, p(e) is the fraction of perfect
matchings using edge e and s(G) = m_{n-1}/(n m_n) measures how far the
near-perfect count dominates.  Vertex-transitive graphs keep s(G) of
order 1; the G* construction glues d copies of G - e behind a fresh edge
pair (u*, v*) and drives s up whenever p(e) is small, which is the
mechanism breaking the transitive-case bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Graph, delete_edge, delete_vertices
from .matchpoly import MatchPoly, matching_polynomial
from .spectra import Spectrum

__all__ = [
    "edge_probability",
    "vertex_probability_sum",
    "s_value",
    "build_degenerate",
    "DegenerateReport",
    "degenerate_report",
    "TrivialReport",
    "check_trivial",
]


def _require_pm(poly: MatchPoly, what: str) -> int:
    if poly.v % 2:
        raise ValueError(f"{what}: odd vertex count")
    if poly.perfect_count == 0:
        raise ValueError(f"{what}: no perfect matching")
    return poly.n


def edge_probability(g: Graph, edge: tuple[int, int],
                     poly: Optional[MatchPoly] = None) -> Fraction:
    """Fraction of perfect matchings containing the edge, exact."""
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    if poly is None:
        poly = matching_polynomial(g)
    n = _require_pm(poly, "edge_probability")
    reduced = matching_polynomial(delete_vertices(g, [u, v]))
    used = reduced.coeffs[n - 1] if reduced.nu >= n - 1 else 0
    return Fraction(used, poly.perfect_count)


def vertex_probability_sum(g: Graph, u: int,
                           poly: Optional[MatchPoly] = None) -> Fraction:
    """Sum of p(e) over edges at u; equals 1 when perfect matchings exist."""
    if poly is None:
        poly = matching_polynomial(g)
    total = Fraction(0)
    for w in g.adjacency()[u]:
        total += edge_probability(g, (u, w), poly)
    return total


def s_value(poly: MatchPoly) -> Fraction:
    """m_{n-1} / (n m_n), exact."""
    n = _require_pm(poly, "s_value")
    return Fraction(poly.coeffs[n - 1], n * poly.coeffs[n])


def build_degenerate(g: Graph, edge: tuple[int, int]) -> Graph:
    """d copies of G - e plus a fresh edge pair: u* sees every copy's v,
    v* sees every copy's u.  Output is simple, bipartite, d-regular on
    2(dn+1) vertices; copy i occupies [i*v, (i+1)*v), u* and v* come last.
    """
    d = g.regular_degree
    if d is None:
        raise ValueError("graph must be regular")
    if g.bipartition is None:
        raise ValueError("graph must be bipartite")
    if g.vertex_count % 2:
        raise ValueError("graph must have even order")
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    vcount = g.vertex_count
    a_side, b_side = g.bipartition
    if u not in a_side:
        u, v = v, u
    edges = []
    for i in range(d):
        off = i * vcount
        for (x, y) in sorted(g.edges):
            if {x, y} == {u, v}:
                continue
            edges.append((x + off, y + off))
    u_star = d * vcount
    v_star = u_star + 1
    for i in range(d):
        off = i * vcount
        edges.append((v + off, u_star))
        edges.append((u + off, v_star))
    new_a = frozenset(x + i * vcount for i in range(d) for x in a_side) | {u_star}
    new_b = frozenset(x + i * vcount for i in range(d) for x in b_side) | {v_star}
    return Graph(
        vertex_count=d * vcount + 2,
        edges=frozenset(tuple(sorted(e)) for e in edges),
        bipartition=(new_a, new_b),
        regular_degree=d,
        label=f"{g.label}*({u},{v})",
    )


@dataclass(frozen=True)
class DegenerateReport:
    """Exact audit of one G* build."""

    base_label: str
    edge: tuple
    d: int
    p_edge: Fraction
    s_base: Fraction
    star_label: str
    star_v: int
    pm_star: int
    pm_product: int          # d * m_{n-1}(G-{u,v}) * m_n(G-e)^(d-1)
    product_ok: bool
    top_slice_ok: bool       # m_{dn}(G*) >= m_n(G-e)^d
    s_star: Fraction
    s_floor: Fraction        # (1/(d(dn+1))) (1/p(e) - 1)
    s_bound_ok: bool


def degenerate_report(g: Graph, edge: tuple[int, int]) -> DegenerateReport:
    """Build G*, count everything exactly, and audit the advertised bounds."""
    poly = matching_polynomial(g)
    n = _require_pm(poly, "degenerate_report")
    d = g.regular_degree
    u, v = edge
    p_e = edge_probability(g, edge, poly)
    if p_e == 0:
        raise ValueError("edge lies in no perfect matching")
    star = build_degenerate(g, edge)
    star_poly = matching_polynomial(star)
    n_star = star_poly.n
    pm_star = star_poly.perfect_count

    minus_uv = matching_polynomial(delete_vertices(g, [u, v]))
    minus_e = matching_polynomial(delete_edge(g, u, v))
    near = minus_uv.coeffs[n - 1] if minus_uv.nu >= n - 1 else 0
    pm_product = d * near * minus_e.coeffs[n] ** (d - 1)

    top_slice_ok = star_poly.coeffs[n_star - 1] >= minus_e.coeffs[n] ** d
    s_star = s_value(star_poly)
    s_floor = Fraction(1, d * (d * n + 1)) * (1 / p_e - 1)
    return DegenerateReport(
        base_label=g.label, edge=(u, v), d=d,
        p_edge=p_e, s_base=s_value(poly),
        star_label=star.label, star_v=star.vertex_count,
        pm_star=pm_star, pm_product=pm_product,
        product_ok=pm_star == pm_product,
        top_slice_ok=top_slice_ok,
        s_star=s_star, s_floor=s_floor,
        s_bound_ok=s_star >= s_floor,
    )


@dataclass(frozen=True)
class TrivialReport:
    """gamma_1 <= 1/s(G) <= n gamma_1, certified by exact root counting."""

    graph_label: str
    s: Fraction
    gamma1_lo: float
    gamma1_hi: float
    lower_ok: bool   # gamma_1 <= 1/s
    upper_ok: bool   # 1/s <= n gamma_1

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def check_trivial(poly: MatchPoly, spectrum: Spectrum) -> TrivialReport:
    n = _require_pm(poly, "check_trivial")
    s = s_value(poly)
    inv = 1 / s
    # gamma_1 <= 1/s  <=>  at least one root is <= 1/s
    lower_ok = spectrum.count_leq(inv) >= 1
    # 1/s <= n gamma_1  <=>  no root lies strictly below 1/(n s)
    upper_ok = spectrum.count_leq(inv / n, strict=True) == 0
    g1 = spectrum.smallest()
    return TrivialReport(graph_label=poly.label, s=s,
                         gamma1_lo=float(g1.lo), gamma1_hi=float(g1.hi),
                         lower_ok=lower_ok, upper_ok=upper_ok)
