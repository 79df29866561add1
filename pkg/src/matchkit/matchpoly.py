"""Exact matching generating polynomials and the deletion identities.

M(G,t) = sum_k m_k t^k where m_k counts k-edge matchings.  Coefficients are
arbitrary-precision integers throughout.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .graphs import Graph, delete_vertices
from .profile_dp import torus_match_counts, torus_defect_counts
from .seriesops import poly_add, poly_eval, poly_mul, poly_sub, poly_trim

__all__ = [
    "MatchPoly",
    "matching_polynomial",
    "matching_count_prefix",
    "top_match_counts",
    "brute_force_match_counts",
    "check_identity",
    "path_residual_oracle",
    "IdentityReport",
]

DEFAULT_MAX_VERTICES = 64
_ENV_MAX = "MATCHKIT_MAX_VERTICES"


def _max_vertices() -> int:
    raw = os.environ.get(_ENV_MAX)
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_MAX} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class MatchPoly:
    """Matching counts of one graph: coeffs[k] = number of k-edge matchings."""

    v: int
    coeffs: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        if self.v < 1:
            raise ValueError("v must be positive")
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("coefficients must start with m_0 = 1")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("matching counts cannot be negative")
        if len(self.coeffs) - 1 > self.v // 2:
            raise ValueError("more coefficients than v//2 matchings allow")
        if self.coeffs[-1] == 0 and len(self.coeffs) > 1:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def nu(self) -> int:
        """Maximum matching size."""
        return len(self.coeffs) - 1

    @property
    def n(self) -> int:
        return self.v // 2

    @property
    def p_star(self) -> Fraction:
        return Fraction(2 * self.nu, self.v)

    @property
    def perfect_count(self) -> int:
        return self.coeffs[self.nu] if (self.v % 2 == 0 and self.nu == self.n) else 0

    def derivative(self) -> list[int]:
        return [k * self.coeffs[k] for k in range(1, len(self.coeffs))]

    def evaluate(self, t):
        return poly_eval(self.coeffs, t)

    def is_ultra_log_concave(self) -> bool:
        c = self.coeffs
        return all(c[k] * c[k] >= c[k - 1] * c[k + 1] for k in range(1, len(c) - 1))

    def to_json(self) -> str:
        obj = {"v": self.v, "coeffs": [str(c) for c in self.coeffs],
               "label": self.label}
        return json.dumps(obj, indent=2) + "\n"

    @staticmethod
    def from_json(text: str) -> "MatchPoly":
        obj = json.loads(text)
        return MatchPoly(obj["v"], tuple(int(c) for c in obj["coeffs"]),
                         obj.get("label", ""))


# ------------------------------------------------------------- elimination

def _rcm_order(g: Graph) -> list[int]:
    """Reverse Cuthill-McKee ordering to keep the elimination frontier narrow."""
    adj = g.adjacency()
    deg = [len(a) for a in adj]
    visited = [False] * g.vertex_count
    order: list[int] = []
    for start in sorted(range(g.vertex_count), key=lambda x: deg[x]):
        if visited[start]:
            continue
        visited[start] = True
        queue = [start]
        while queue:
            x = queue.pop(0)
            order.append(x)
            nxt = sorted((y for y in adj[x] if not visited[y]),
                         key=lambda y: deg[y])
            for y in nxt:
                visited[y] = True
            queue.extend(nxt)
    order.reverse()
    return order


def _eliminate_counts(g: Graph) -> list[int]:
    v = g.vertex_count
    order = _rcm_order(g)
    pos = {u: i for i, u in enumerate(order)}
    masks = [0] * v
    for (a, b) in g.edges:
        masks[pos[a]] |= 1 << pos[b]
        masks[pos[b]] |= 1 << pos[a]
    memo: dict[int, list[int]] = {0: [1]}

    def rec(mask: int) -> list[int]:
        got = memo.get(mask)
        if got is not None:
            return got
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        out = list(rec(rest))
        nb = masks[low] & rest
        while nb:
            ubit = nb & -nb
            nb ^= ubit
            sub = rec(rest & ~ubit)
            if len(out) < len(sub) + 1:
                out.extend([0] * (len(sub) + 1 - len(out)))
            for i, x in enumerate(sub):
                out[i + 1] += x
        memo[mask] = out
        return out

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, v * 4 + 100))
    try:
        return rec((1 << v) - 1)
    finally:
        sys.setrecursionlimit(old)


def _torus_meta(g: Graph):
    if g.meta and g.meta[0] == "torus" and len(g.meta[1]) == 2:
        dims = g.meta[1]
        removed_flat = g.meta[2] if len(g.meta) > 2 else frozenset()
        m, n = dims
        removed = frozenset((i % m, i // m) for i in removed_flat)
        return (m, n), removed
    return None


@lru_cache(maxsize=512)
def _counts_for(g: Graph, use_profile: bool) -> tuple[int, ...]:
    # keyed by graph value; compare=False fields (meta, declared flags)
    # never change the counts, only how they are computed
    if use_profile:
        dims, removed = _torus_meta(g)
        return tuple(poly_trim(torus_match_counts(dims, removed)))
    cap = _max_vertices()
    if g.vertex_count > cap:
        raise ValueError(
            f"graph has {g.vertex_count} vertices; elimination cap is {cap} "
            f"(set {_ENV_MAX} to raise)")
    return tuple(poly_trim(_eliminate_counts(g)))


def matching_polynomial(g: Graph, strategy: str = "auto") -> MatchPoly:
    """All matching counts of g.

    strategy 'elimination' is the memoized vertex-removal recursion (size
    capped by MATCHKIT_MAX_VERTICES, default 64); 'profile' is the frontier
    sweep and needs a two-dimensional torus, possibly with removed cells;
    'auto' picks the sweep for tori above 48 vertices, where the frontier
    is narrower than any elimination ordering.  Results are cached by
    graph value.
    """
    if strategy not in ("auto", "elimination", "profile"):
        raise ValueError(f"unknown strategy {strategy!r}")
    tm = _torus_meta(g)
    if strategy == "profile" and tm is None:
        raise ValueError("profile strategy needs a torus graph")
    use_profile = strategy == "profile" or \
        (strategy == "auto" and tm is not None and g.vertex_count > 48)
    return MatchPoly(g.vertex_count, _counts_for(g, use_profile), g.label)


def matching_count_prefix(g: Graph, max_k: int) -> list[int]:
    """m_0..m_max_k without computing the full polynomial (tori use the sweep)."""
    tm = _torus_meta(g)
    if tm is not None:
        return torus_match_counts(tm[0], tm[1], max_k=max_k)
    return list(matching_polynomial(g).coeffs[: max_k + 1])


def top_match_counts(g: Graph, max_defect: int = 0) -> dict[int, int]:
    """Counts m_k near the top: defect d -> count of matchings missing d vertices."""
    tm = _torus_meta(g)
    if tm is not None:
        live = g.vertex_count
        vec = torus_defect_counts(tm[0], tm[1], max_defect=max_defect)
        return {d: vec[d] for d in range(max_defect + 1)
                if (live - d) % 2 == 0 and vec[d]}
    poly = matching_polynomial(g)
    out = {}
    for d in range(max_defect + 1):
        if (g.vertex_count - d) % 2 == 0:
            k = (g.vertex_count - d) // 2
            if 0 <= k <= poly.nu and poly.coeffs[k]:
                out[d] = poly.coeffs[k]
    return out


# ------------------------------------------------------------- brute force

def brute_force_match_counts(g: Graph) -> MatchPoly:
    """Oracle: enumerate every matching once; only for graphs up to 24 vertices."""
    v = g.vertex_count
    if v > 24:
        raise ValueError(f"brute force capped at 24 vertices, got {v}")
    masks = g.adjacency_masks()
    counts = [0] * (v // 2 + 1)
    full = (1 << v) - 1

    def rec(free: int, k: int):
        if not free:
            counts[k] += 1
            return
        lowbit = free & -free
        low = lowbit.bit_length() - 1
        rest = free & ~lowbit
        rec(rest, k)  # low stays unmatched
        nb = masks[low] & rest
        while nb:
            ubit = nb & -nb
            nb ^= ubit
            rec(rest & ~ubit, k + 1)

    rec(full, 0)
    return MatchPoly(v, tuple(poly_trim(counts)), g.label)


# --------------------------------------------------------------- identities

@dataclass(frozen=True)
class IdentityReport:
    which: str
    holds: bool
    residual: Optional[tuple[int, ...]] = None  # identity (c) only
    nonnegative: Optional[bool] = None


def _poly(g: Graph) -> list[int]:
    return list(matching_polynomial(g).coeffs)


def _poly_minus(g: Graph, drop) -> list[int]:
    """M(G - drop) as a coefficient list; removing everything leaves M = 1."""
    drop = list(drop)
    if len(drop) >= g.vertex_count:
        return [1]
    return _poly(delete_vertices(g, drop))


def check_identity(g: Graph, which: str, edge: Optional[tuple[int, int]] = None,
                   strategy: str = "auto") -> IdentityReport:
    """Exact deletion identities for M.

    (a)  sum_u M(G-u)            == v*M - 2t*M'
    (b)  sum_{(u,v) in E} M(G-{u,v}) == M'
    (c)  per edge (u,v):  M*M(G-{u,v}) - M(G-u)*M(G-v) - t*M(G-{u,v})^2
         has nonnegative coefficients exactly when every u-v path has an
         even number of vertices (always true in bipartite graphs).
    """
    if which not in ("a", "b", "c"):
        raise ValueError("which must be 'a', 'b' or 'c'")
    mp = matching_polynomial(g, strategy)
    base = list(mp.coeffs)
    if which == "a":
        lhs: list[int] = []
        for u in range(g.vertex_count):
            lhs = poly_add(lhs, _poly_minus(g, [u]))
        rhs = [g.vertex_count * c - 2 * k * c for k, c in enumerate(base)]
        return IdentityReport("a", poly_trim(lhs) == poly_trim(rhs))
    if which == "b":
        lhs = []
        for (a, b) in sorted(g.edges):
            lhs = poly_add(lhs, _poly_minus(g, [a, b]))
        rhs = [k * c for k, c in enumerate(base)][1:]
        return IdentityReport("b", poly_trim(lhs) == poly_trim(rhs))
    if edge is None:
        raise ValueError("identity 'c' needs an edge")
    u, w = edge
    if not g.has_edge(u, w):
        raise ValueError(f"({u},{w}) is not an edge")
    m_uv = _poly_minus(g, [u, w])
    m_u = _poly_minus(g, [u])
    m_w = _poly_minus(g, [w])
    residual = poly_sub(poly_sub(poly_mul(base, m_uv), poly_mul(m_u, m_w)),
                        [0] + poly_mul(m_uv, m_uv))
    residual = poly_trim(residual)
    nonneg = all(c >= 0 for c in residual)
    return IdentityReport("c", True, tuple(residual), nonneg)


def path_residual_oracle(g: Graph, edge: tuple[int, int]) -> tuple[int, ...]:
    """Independent identity-(c) residual: sum over u-v paths other than the
    edge itself of (-1)^|P| t^(|P|-1) M(G without P)^2, |P| = path vertices.

    Exponential path enumeration; capped at 14 vertices.
    """
    if g.vertex_count > 14:
        raise ValueError("path enumeration capped at 14 vertices")
    u, w = edge
    if not g.has_edge(u, w):
        raise ValueError(f"({u},{w}) is not an edge")
    adj = g.adjacency()
    total: list[int] = []
    stack = [(u, [u], {u})]
    while stack:
        x, seq, used = stack.pop()
        for y in adj[x]:
            if y == w:
                if len(seq) == 1:
                    continue  # the edge (u,w) itself
                pverts = seq + [w]
                sub = _poly_minus(g, pverts)
                term = [0] * (len(pverts) - 1) + poly_mul(sub, sub)
                if len(pverts) % 2:
                    term = [-c for c in term]
                total = poly_add(total, term)
            elif y not in used:
                stack.append((y, seq + [y], used | {y}))
    return tuple(poly_trim(total))
