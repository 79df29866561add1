"""Frontier-sweep torus counts checked against independent references."""

from functools import lru_cache

import numpy as np
import pytest

from matchkit.graphs import Graph, cycle, delete_vertices, torus
from matchkit.matchpoly import (
    brute_force_match_counts,
    matching_count_prefix,
    matching_polynomial,
    top_match_counts,
)
from matchkit.profile_dp import torus_defect_counts, torus_match_counts


def _torus_edges(m, n):
    edges = set()
    for c in range(n):
        for r in range(m):
            a = c * m + r
            edges.add(tuple(sorted((a, c * m + (r + 1) % m))))
            edges.add(tuple(sorted((a, ((c + 1) % n) * m + r))))
    return frozenset(edges)


def _pad(vec, length):
    return list(vec[:length]) + [0] * (length - len(vec))


# removals are flat vertex ids of the generated torus (cell (r, c) is c*m + r)
REMOVAL_CASES = [
    ((4, 4), ()),
    ((4, 4), (0,)),
    ((4, 4), (0, 5)),
    ((4, 4), (0, 1)),
    ((4, 4), (0, 4)),
    ((4, 4), (0, 1, 4, 5)),
    ((4, 4), (0, 2, 8, 10)),
    ((4, 4), (1, 2, 3, 4, 5)),
    ((4, 4), (0, 1, 2, 3)),
    ((4, 6), (0, 7)),
    ((4, 6), (0, 1, 2, 3, 20, 21, 22, 23)),
    ((6, 4), (5, 12)),
]


@pytest.mark.parametrize("dims,removed", REMOVAL_CASES)
def test_sweep_matches_elimination_after_removals(dims, removed):
    g = delete_vertices(torus(dims), list(removed)) if removed else torus(dims)
    elim = matching_polynomial(g, strategy="elimination")
    prof = matching_polynomial(g, strategy="profile")
    assert prof.coeffs == elim.coeffs
    assert prof.v == g.vertex_count
    m = dims[0]
    cells = frozenset((f % m, f // m) for f in removed)
    direct = torus_match_counts(dims, removed=cells)
    assert _pad(direct, len(elim.coeffs)) == list(elim.coeffs)


@pytest.mark.parametrize("dims", [(3, 3), (3, 4), (5, 3)])
def test_sweep_handles_odd_sides(dims):
    m, n = dims
    g = Graph(vertex_count=m * n, edges=_torus_edges(m, n))
    ref = list(brute_force_match_counts(g).coeffs)
    assert _pad(torus_match_counts(dims), len(ref)) == ref


def test_rectangular_four_by_six():
    g = torus((4, 6))
    elim = matching_polynomial(g, strategy="elimination")
    prof = matching_polynomial(g, strategy="profile")
    assert prof.coeffs == elim.coeffs
    assert prof.coeffs[0] == 1
    assert prof.coeffs[1] == g.edge_count
    # transposed dimensions give an isomorphic graph
    assert torus_match_counts((6, 4)) == torus_match_counts((4, 6))


def test_six_by_six_perfect_and_near_perfect():
    counts = torus_match_counts((6, 6))
    assert len(counts) == 19
    assert counts[0] == 1
    assert counts[1] == 72
    assert counts[18] == 90176
    defects = torus_defect_counts((6, 6), max_defect=2)
    assert defects[0] == counts[18]
    assert defects[1] == 0
    assert defects[2] == counts[17] == 5415552


def test_prefix_truncation_agrees_with_full_run():
    full = torus_match_counts((4, 4))
    assert torus_match_counts((4, 4), max_k=3) == full[:4]
    assert torus_match_counts((4, 4), max_k=0) == [1]
    # asking past the top pads with zeros
    assert torus_match_counts((4, 4), max_k=10) == full + [0, 0]
    cells = frozenset({(0, 0), (1, 1)})
    trimmed = torus_match_counts((4, 4), removed=cells, max_k=2)
    assert trimmed == torus_match_counts((4, 4), removed=cells)[:3]


def test_defect_counts_match_polynomial():
    counts = torus_match_counts((4, 4))
    vec = torus_defect_counts((4, 4), max_defect=4)
    live = 16
    for d in range(5):
        if (live - d) % 2:
            assert vec[d] == 0
        else:
            assert vec[d] == counts[(live - d) // 2]
    assert vec[0] == 272 and vec[2] == 3712 and vec[4] == 11648
    # one removed cell flips the parity of reachable defects
    gd = delete_vertices(torus((4, 4)), [0])
    poly = matching_polynomial(gd, strategy="elimination")
    odd = torus_defect_counts((4, 4), removed=frozenset({(0, 0)}), max_defect=3)
    assert odd[0] == 0 and odd[2] == 0
    assert odd[1] == poly.coeffs[7]
    assert odd[3] == poly.coeffs[6]


@lru_cache(maxsize=None)
def _cycle_pairings(m, mask):
    """Perfect matchings of the cycle on m rows induced on the rows in mask."""
    if mask == 0:
        return 1
    r = (mask & -mask).bit_length() - 1
    total = 0
    for s in ((r + 1) % m, (r - 1) % m):
        if s != r and mask >> s & 1:
            total += _cycle_pairings(m, mask & ~(1 << r) & ~(1 << s))
    return total


def _transfer_trace(m, n):
    """Perfect matchings of the m-by-n torus via a column transfer matrix."""
    full = (1 << m) - 1
    dim = 1 << m
    T = np.zeros((dim, dim), dtype=np.int64)
    for a in range(dim):
        rest = full & ~a
        b = rest
        while True:
            T[a, b] = _cycle_pairings(m, full & ~a & ~b)
            if b == 0:
                break
            b = (b - 1) & rest
    result = None
    base = T
    k = n
    while k:
        if k & 1:
            if result is None:
                result = base.copy()
            else:
                assert float(result.max()) * float(base.max()) * dim < 2 ** 62
                result = result @ base
        k >>= 1
        if k:
            assert float(base.max()) * float(base.max()) * dim < 2 ** 62
            base = base @ base
    return int(np.trace(result))


@pytest.mark.parametrize("m,n,expected", [
    (4, 4, 272),
    (6, 6, 90176),
    (8, 8, 311853312),
])
def test_transfer_matrix_oracle(m, n, expected):
    assert _transfer_trace(m, n) == expected
    assert torus_defect_counts((m, n))[0] == expected


def test_ten_by_ten_perfect_count():
    assert torus_defect_counts((10, 10))[0] == 11203604497408


def test_prefix_and_top_wrappers():
    assert matching_count_prefix(torus((4, 4)), 3) == [1, 32, 400, 2496]
    assert matching_count_prefix(cycle(8), 2) == [1, 8, 20]
    assert top_match_counts(torus((4, 4)), 2) == {0: 272, 2: 3712}
    assert top_match_counts(cycle(8), 3) == {0: 2, 2: 16}


def test_small_sides_rejected():
    with pytest.raises(ValueError):
        torus_match_counts((2, 4))
    with pytest.raises(ValueError):
        torus_defect_counts((4, 2))
