"""Finite simple graphs: families, transitivity certificates, local statistics, I/O."""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "Graph",
    "cycle",
    "path",
    "complete_bipartite",
    "hypercube",
    "torus",
    "heawood",
    "random_regular_bipartite",
    "generate",
    "delete_vertices",
    "disjoint_union",
    "girth",
    "TransitivityReport",
    "verify_transitivity",
    "verify_edge_transitivity",
    "BallStatistics",
    "ball_statistics",
    "to_edge_list",
    "from_edge_list",
    "to_json",
    "from_json",
]

TRANSITIVITY_SEARCH_BOUND = 32
BALL_SIZE_BOUND = 20


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1.

    bipartition, regular_degree and the declared_* flags are optional
    provenance carried by generators; meta holds family parameters that
    specialised algorithms (the torus sweep) can exploit.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]] = None
    regular_degree: Optional[int] = None
    label: str = ""
    declared_vertex_transitive: bool = field(default=False, compare=False)
    declared_edge_transitive: bool = field(default=False, compare=False)
    meta: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        v = self.vertex_count
        if v < 1:
            raise ValueError("vertex_count must be positive")
        for (a, b) in self.edges:
            if not (0 <= a < b < v):
                raise ValueError(f"bad edge ({a},{b}) for vertex_count={v}")
        if self.bipartition is not None:
            left, right = self.bipartition
            if left | right != frozenset(range(v)) or left & right:
                raise ValueError("bipartition must partition the vertex set")
            for (a, b) in self.edges:
                if (a in left) == (b in left):
                    raise ValueError(f"edge ({a},{b}) inside one bipartition class")
        if self.regular_degree is not None:
            deg = self.degrees()
            if any(x != self.regular_degree for x in deg):
                raise ValueError("declared regular_degree does not match edge set")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for (a, b) in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for (a, b) in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for row in adj:
            row.sort()
        return adj

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.vertex_count
        for (a, b) in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return masks

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def is_bipartite(self) -> bool:
        return self.bipartition is not None or self._find_bipartition() is not None

    def _find_bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        color = [-1] * self.vertex_count
        adj = self.adjacency()
        for s in range(self.vertex_count):
            if color[s] >= 0:
                continue
            color[s] = 0
            dq = deque([s])
            while dq:
                x = dq.popleft()
                for y in adj[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        dq.append(y)
                    elif color[y] == color[x]:
                        return None
        left = frozenset(i for i, c in enumerate(color) if c == 0)
        right = frozenset(i for i, c in enumerate(color) if c != 0)
        return (left, right)

    def with_bipartition(self) -> "Graph":
        """Return a copy carrying a bipartition, computing one if possible."""
        if self.bipartition is not None:
            return self
        bp = self._find_bipartition()
        if bp is None:
            raise ValueError("graph is not bipartite")
        return Graph(self.vertex_count, self.edges, bp, self.regular_degree,
                     self.label, self.declared_vertex_transitive,
                     self.declared_edge_transitive, self.meta)


# ---------------------------------------------------------------- families

def cycle(n: int) -> Graph:
    """Even cycle on n vertices."""
    if n < 4 or n % 2:
        raise ValueError("cycle length must be even and at least 4")
    edges = frozenset(_norm_edge(i, (i + 1) % n) for i in range(n))
    bp = (frozenset(range(0, n, 2)), frozenset(range(1, n, 2)))
    return Graph(n, edges, bp, 2, f"C{n}",
                 declared_vertex_transitive=True, declared_edge_transitive=True,
                 meta=("cycle", n))


def path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    edges = frozenset((i, i + 1) for i in range(n - 1))
    bp = (frozenset(range(0, n, 2)), frozenset(range(1, n, 2)))
    if n == 1:
        bp = (frozenset({0}), frozenset())
    return Graph(n, edges, bp, None, f"P{n}", meta=("path", n))


def complete_bipartite(d: int) -> Graph:
    """K_{d,d}: classes {0..d-1} and {d..2d-1}."""
    if d < 1:
        raise ValueError("complete_bipartite needs d >= 1")
    edges = frozenset((i, d + j) for i in range(d) for j in range(d))
    bp = (frozenset(range(d)), frozenset(range(d, 2 * d)))
    return Graph(2 * d, edges, bp, d, f"K{d}{d}",
                 declared_vertex_transitive=True, declared_edge_transitive=True,
                 meta=("complete_bipartite", d))


def hypercube(k: int) -> Graph:
    """k-dimensional hypercube on 2^k vertices."""
    if k < 1:
        raise ValueError("hypercube needs k >= 1")
    n = 1 << k
    edges = frozenset(_norm_edge(x, x ^ (1 << b)) for x in range(n) for b in range(k))
    left = frozenset(x for x in range(n) if bin(x).count("1") % 2 == 0)
    right = frozenset(range(n)) - left
    return Graph(n, edges, (left, right), k, f"Q{k}",
                 declared_vertex_transitive=True, declared_edge_transitive=True,
                 meta=("hypercube", k))


def torus(dims: Sequence[int]) -> Graph:
    """Product of even cycles; dims like (4, 4) give the 4x4 discrete torus."""
    dims = tuple(int(m) for m in dims)
    if not dims:
        raise ValueError("torus needs at least one dimension")
    for m in dims:
        if m < 3:
            raise ValueError("torus sides below 3 would create multi-edges")
        if m % 2:
            raise ValueError("odd torus side breaks bipartiteness")
    strides = []
    s = 1
    for m in dims:
        strides.append(s)
        s *= m
    v = s

    def coord(i):
        return tuple((i // strides[k]) % dims[k] for k in range(len(dims)))

    edges = set()
    for i in range(v):
        c = coord(i)
        for k, m in enumerate(dims):
            j = i + strides[k] * ((c[k] + 1) % m - c[k])
            edges.add(_norm_edge(i, j))
    left = frozenset(i for i in range(v) if sum(coord(i)) % 2 == 0)
    right = frozenset(range(v)) - left
    dimlabel = "x".join(str(m) for m in dims)
    square = len(set(dims)) == 1
    return Graph(v, frozenset(edges), (left, right), 2 * len(dims), f"T{dimlabel}",
                 declared_vertex_transitive=True, declared_edge_transitive=square,
                 meta=("torus", dims))


# 14-cycle plus the chords {2j, 2j+5 mod 14}; 3-regular, bipartite, girth 6.
_HEAWOOD_CHORDS = [(2 * j, (2 * j + 5) % 14) for j in range(7)]


def heawood() -> Graph:
    edges = set(_norm_edge(i, (i + 1) % 14) for i in range(14))
    edges.update(_norm_edge(a, b) for a, b in _HEAWOOD_CHORDS)
    bp = (frozenset(range(0, 14, 2)), frozenset(range(1, 14, 2)))
    return Graph(14, frozenset(edges), bp, 3, "heawood",
                 declared_vertex_transitive=True, declared_edge_transitive=True,
                 meta=("heawood",))


def random_regular_bipartite(n: int, d: int, seed: int, max_retries: int = 1000) -> Graph:
    """Uniform-ish d-regular bipartite graph on n+n vertices.

    Configuration-model pairing with whole-sample rejection of multi-edges;
    deterministic for a fixed seed.  Raises after max_retries failures.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d > n:
        raise ValueError("degree d cannot exceed class size n")
    rng = random.Random(seed)
    half = list(range(n)) * d
    for _ in range(max_retries):
        stubs = half[:]
        rng.shuffle(stubs)
        pairs = set()
        ok = True
        for i, right in enumerate(stubs):
            e = (i // d, n + right)
            if e in pairs:
                ok = False
                break
            pairs.add(e)
        if ok:
            bp = (frozenset(range(n)), frozenset(range(n, 2 * n)))
            return Graph(2 * n, frozenset(pairs), bp, d, f"B{n}d{d}s{seed}",
                         meta=("random_regular_bipartite", n, d, seed))
    raise ValueError(f"no simple pairing found in {max_retries} retries")


_FAMILY_BUILDERS = {
    "cycle": lambda args: cycle(int(args[0])),
    "path": lambda args: path(int(args[0])),
    "complete_bipartite": lambda args: complete_bipartite(int(args[0])),
    "hypercube": lambda args: hypercube(int(args[0])),
    "torus": lambda args: torus([int(a) for a in args]),
    "heawood": lambda args: heawood(),
    "rrb": lambda args: random_regular_bipartite(int(args[0]), int(args[1]), int(args[2])),
}


def generate(spec: str) -> Graph:
    """Build a family member from a compact name.

    Accepts 'c8', 'k33', 'q3', 'heawood', 'torus:4x4', 'cycle:8', 'path:5',
    'rrb:6,3,42' and the like.
    """
    s = spec.strip().lower()
    if ":" in s:
        name, _, rest = s.partition(":")
        args = [a for chunk in rest.split(",") for a in chunk.split("x") if a]
        if name not in _FAMILY_BUILDERS:
            raise ValueError(f"unknown family {name!r}")
        return _FAMILY_BUILDERS[name](args)
    if s == "heawood":
        return heawood()
    if s.startswith("c") and s[1:].isdigit():
        return cycle(int(s[1:]))
    if s.startswith("p") and s[1:].isdigit():
        return path(int(s[1:]))
    if s.startswith("q") and s[1:].isdigit():
        return hypercube(int(s[1:]))
    if s.startswith("k") and s[1:].isdigit():
        digits = s[1:]
        if len(digits) == 2 and digits[0] == digits[1]:
            return complete_bipartite(int(digits[0]))
        raise ValueError(f"complete bipartite shorthand must be balanced, got {spec!r}")
    if s.startswith("t") and "x" in s:
        dims = s[1:].split("x")
        if all(part.isdigit() for part in dims):
            return torus([int(p) for p in dims])
    raise ValueError(f"cannot parse family spec {spec!r}")


# ------------------------------------------------------- derived graphs

def delete_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of drop, vertices renumbered."""
    dropset = set(drop)
    for u in dropset:
        if not (0 <= u < g.vertex_count):
            raise ValueError(f"vertex {u} out of range")
    keep = [u for u in range(g.vertex_count) if u not in dropset]
    index = {u: i for i, u in enumerate(keep)}
    edges = frozenset(_norm_edge(index[a], index[b])
                      for (a, b) in g.edges if a in index and b in index)
    bp = None
    if g.bipartition is not None:
        left, right = g.bipartition
        bp = (frozenset(index[u] for u in left if u in index),
              frozenset(index[u] for u in right if u in index))
    meta = None
    if g.meta and g.meta[0] == "torus":
        dims = g.meta[1]
        removed = set(g.meta[2]) if len(g.meta) > 2 else set()
        strides = [1] * len(dims)
        for k in range(1, len(dims)):
            strides[k] = strides[k - 1] * dims[k - 1]
        live = [i for i in range(_prod(dims)) if i not in removed]
        removed.update(live[u] for u in dropset)
        meta = ("torus", dims, frozenset(removed))
    label = g.label + "-" + ",".join(str(u) for u in sorted(dropset))
    return Graph(len(keep), edges, bp, None, label, meta=meta)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    e = _norm_edge(u, v)
    if e not in g.edges:
        raise ValueError(f"({u},{v}) is not an edge")
    return Graph(g.vertex_count, g.edges - {e}, g.bipartition, None,
                 g.label + f"-e{u},{v}")


def disjoint_union(a: Graph, b: Graph) -> Graph:
    off = a.vertex_count
    edges = set(a.edges)
    edges.update(_norm_edge(x + off, y + off) for (x, y) in b.edges)
    bp = None
    if a.bipartition is not None and b.bipartition is not None:
        bp = (a.bipartition[0] | frozenset(x + off for x in b.bipartition[0]),
              a.bipartition[1] | frozenset(x + off for x in b.bipartition[1]))
    deg = a.regular_degree if a.regular_degree == b.regular_degree else None
    return Graph(off + b.vertex_count, frozenset(edges), bp, deg,
                 f"{a.label}+{b.label}")


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests."""
    adj = g.adjacency()
    best = None
    for s in range(g.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    dq.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
        if best is not None and best <= 3:
            break
    return best


# ----------------------------------------------- automorphisms and orbits

def _find_automorphism(adj: list[set[int]], deg: list[int],
                       pins: list[tuple[int, int]]) -> Optional[list[int]]:
    """Backtracking search for an automorphism extending the pinned pairs."""
    v = len(adj)
    img = [-1] * v
    used = [False] * v
    for a, b in pins:
        if deg[a] != deg[b]:
            return None
        if img[a] == b:
            continue
        if img[a] != -1 or used[b]:
            return None
        img[a] = b
        used[b] = True
    # order: BFS from pinned sources for early adjacency constraints
    order = []
    seen = [False] * v
    dq = deque()
    for a, _ in pins:
        if not seen[a]:
            seen[a] = True
            dq.append(a)
    while dq or not all(seen):
        if not dq:
            nxt = seen.index(False)
            seen[nxt] = True
            dq.append(nxt)
        x = dq.popleft()
        order.append(x)
        for y in sorted(adj[x]):
            if not seen[y]:
                seen[y] = True
                dq.append(y)
    order = [x for x in order if img[x] == -1]

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in range(v):
            if used[y] or deg[y] != deg[x]:
                continue
            good = True
            for z in adj[x]:
                w = img[z]
                if w != -1 and w not in adj[y]:
                    good = False
                    break
            if good:
                for z in range(v):
                    if img[z] != -1 and z not in adj[x] and img[z] in adj[y]:
                        good = False
                        break
            if good:
                img[x] = y
                used[y] = True
                if extend(i + 1):
                    return True
                img[x] = -1
                used[y] = False
        return False

    if extend(0):
        return img
    return None


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb


@dataclass(frozen=True)
class TransitivityReport:
    mode: str
    transitive: bool
    orbits: tuple[tuple[int, ...], ...]


def _vertex_orbits(g: Graph) -> list[list[int]]:
    v = g.vertex_count
    adj = [set(row) for row in g.adjacency()]
    deg = [len(a) for a in adj]
    uf = _UnionFind(v)
    separated: set[tuple[int, int]] = set()
    merged = True
    while merged:
        merged = False
        reps = sorted({uf.find(x) for x in range(v)})
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                a, b = uf.find(reps[i]), uf.find(reps[j])
                if a == b or (a, b) in separated:
                    continue
                auto = _find_automorphism(adj, deg, [(a, b)])
                if auto is None:
                    separated.add((a, b))
                    separated.add((b, a))
                else:
                    for x, y in enumerate(auto):
                        uf.union(x, y)
                    merged = True
    groups: dict[int, list[int]] = {}
    for x in range(v):
        groups.setdefault(uf.find(x), []).append(x)
    return sorted(groups.values())


def verify_transitivity(g: Graph, mode: str = "full",
                        max_vertices: int = TRANSITIVITY_SEARCH_BOUND) -> TransitivityReport:
    """Exact vertex-orbit computation by automorphism search.

    mode 'full' asks for a single vertex orbit; mode 'classes' (bipartite
    graphs only) asks for each bipartition class to be a single orbit.
    Raises for graphs above max_vertices; generators mark large family
    members with declared_vertex_transitive instead.
    """
    if mode not in ("full", "classes"):
        raise ValueError("mode must be 'full' or 'classes'")
    if g.vertex_count > max_vertices:
        raise ValueError(
            f"graph too large for exact transitivity search "
            f"({g.vertex_count} > {max_vertices})")
    if mode == "classes" and g.bipartition is None:
        raise ValueError("mode 'classes' needs a bipartition")
    orbits = _vertex_orbits(g)
    if mode == "full":
        ok = len(orbits) == 1
    else:
        left, right = g.bipartition
        ok = all(set(o) in (set(left), set(right)) for o in orbits) and len(orbits) <= 2
    return TransitivityReport(mode, ok, tuple(tuple(o) for o in orbits))


def verify_edge_transitivity(g: Graph,
                             max_vertices: int = TRANSITIVITY_SEARCH_BOUND) -> bool:
    """Whether the automorphism group moves every edge to every other."""
    if g.vertex_count > max_vertices:
        raise ValueError(
            f"graph too large for exact transitivity search "
            f"({g.vertex_count} > {max_vertices})")
    edges = sorted(g.edges)
    if not edges:
        return True
    adj = [set(row) for row in g.adjacency()]
    deg = [len(a) for a in adj]
    uf = _UnionFind(len(edges))
    eindex = {e: i for i, e in enumerate(edges)}

    def apply(auto):
        for k, (a, b) in enumerate(edges):
            uf.union(k, eindex[_norm_edge(auto[a], auto[b])])

    e0 = edges[0]
    for k, e in enumerate(edges):
        if uf.find(k) == uf.find(0):
            continue
        auto = _find_automorphism(adj, deg, [(e0[0], e[0]), (e0[1], e[1])])
        if auto is None:
            auto = _find_automorphism(adj, deg, [(e0[0], e[1]), (e0[1], e[0])])
        if auto is None:
            return False
        apply(auto)
    return all(uf.find(k) == uf.find(0) for k in range(len(edges)))


# ------------------------------------------------------- rooted ball codes

def _refine(colors: list[int], adj: list[set[int]]) -> list[int]:
    n = len(colors)
    while True:
        sig = []
        for x in range(n):
            sig.append((colors[x], tuple(sorted(colors[y] for y in adj[x]))))
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _canonical_rooted_bits(adj: list[set[int]], root: int,
                           dist: list[int]) -> tuple[int, ...]:
    """Lexicographically minimal placement code over root-fixing labelings.

    Individualize-and-refine backtracking; cells are explored in stable
    color order so the minimum is a rooted-isomorphism invariant.
    """
    n = len(adj)
    base = _refine([dist[x] * (n + 1) for x in range(n)], adj)
    best: list[Optional[tuple[int, ...]]] = [None]

    def rec(colors: list[int], placed: list[int], code: list[int]):
        if best[0] is not None:
            b = best[0]
            k = len(code)
            if tuple(code) > b[:k]:
                return
        if len(placed) == n:
            cand = tuple(code)
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        placedset = set(placed)
        live = [x for x in range(n) if x not in placedset]
        cmin = min(colors[x] for x in live)
        cell = [x for x in live if colors[x] == cmin]
        for x in cell:
            row = 0
            for i, p in enumerate(placed):
                if p in adj[x]:
                    row |= 1 << i
            nc = list(colors)
            nc[x] = -len(placed) - 1  # unique color, stable under relabeling
            rec(_refine(nc, adj), placed + [x], code + [row])

    rec(base, [root], [])
    assert best[0] is not None
    return best[0]


@dataclass(frozen=True)
class BallStatistics:
    radius: int
    vertex_count: int
    counts: tuple[tuple[tuple[int, ...], int], ...]  # (ball code, multiplicity)

    @property
    def class_count(self) -> int:
        return len(self.counts)

    def frequencies(self) -> dict[tuple[int, ...], Fraction]:
        return {code: Fraction(c, self.vertex_count) for code, c in self.counts}


def ball_statistics(g: Graph, radius: int,
                    max_ball: int = BALL_SIZE_BOUND) -> BallStatistics:
    """Frequencies of rooted-isomorphism types of radius-r balls.

    The code of a ball is a canonical adjacency encoding with the root
    first, so two vertices share a code exactly when their balls are
    isomorphic as rooted graphs.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    adj = g.adjacency()
    tally: dict[tuple[int, ...], int] = {}
    for s in range(g.vertex_count):
        dist = {s: 0}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            if dist[x] == radius:
                continue
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    dq.append(y)
        ball = sorted(dist)
        if len(ball) > max_ball:
            raise ValueError(
                f"radius-{radius} ball has {len(ball)} vertices "
                f"(bound {max_ball})")
        index = {u: i for i, u in enumerate(ball)}
        ladj = [set() for _ in ball]
        for u in ball:
            for w in adj[u]:
                if w in index:
                    ladj[index[u]].add(index[w])
        ldist = [dist[u] for u in ball]
        code = (len(ball),) + _canonical_rooted_bits(ladj, index[s], ldist)
        tally[code] = tally.get(code, 0) + 1
    counts = tuple(sorted(tally.items()))
    return BallStatistics(radius, g.vertex_count, counts)


# ---------------------------------------------------------------- I/O

def to_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{a} {b}" for a, b in sorted(g.edges))
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, label: str = "input") -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("first line must be '<vertices> <edges>'")
    v, e = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != e:
        raise ValueError(f"expected {e} edge lines, found {len(rows) - 1}")
    edges = set()
    for a, b in rows[1:]:
        x, y = int(a), int(b)
        if x == y:
            raise ValueError(f"loop at vertex {x}")
        edges.add(_norm_edge(x, y))
    if len(edges) != e:
        raise ValueError("duplicate edges in input")
    g = Graph(v, frozenset(edges), None, None, label)
    try:
        return g.with_bipartition()
    except ValueError:
        return g


def to_json(g: Graph) -> str:
    obj = {
        "v": g.vertex_count,
        "edges": [list(e) for e in sorted(g.edges)],
        "bipartition": ([sorted(g.bipartition[0]), sorted(g.bipartition[1])]
                        if g.bipartition else None),
        "degree": g.regular_degree,
        "label": g.label,
    }
    return json.dumps(obj, indent=2) + "\n"


def from_json(text: str) -> Graph:
    obj = json.loads(text)
    edges = frozenset(_norm_edge(a, b) for a, b in obj["edges"])
    bp = None
    if obj.get("bipartition"):
        bp = (frozenset(obj["bipartition"][0]), frozenset(obj["bipartition"][1]))
    return Graph(obj["v"], edges, bp, obj.get("degree"), obj.get("label", "input"))
