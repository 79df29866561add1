"""Acceptance gate: the eleven headline guarantees, one test each.

Each test prints a single summary line (visible with -s) and enforces the
stated tolerance or runtime budget.  Nothing here may be weakened; a red
line means the library broke.
"""

import math
import time
from fractions import Fraction

from matchkit.degenerate import check_trivial, degenerate_report
from matchkit.entropy import federbush_series
from matchkit.graphs import generate, girth
from matchkit.limits import catalan_over_pi, torus_entropy_sequence
from matchkit.matchpoly import (brute_force_match_counts, check_identity,
                                matching_count_prefix, matching_polynomial,
                                path_residual_oracle)
from matchkit.spectra import measure_moments, tree_moment
from matchkit.verify import run_check


def test_ac01_brute_force_equivalence(corpus):
    start = time.monotonic()
    checked = []
    for g in corpus:
        if g.vertex_count > 24:
            continue
        fast = matching_polynomial(g)
        slow = brute_force_match_counts(g)
        assert fast.coeffs == slow.coeffs
        assert fast.v == slow.v
        checked.append(g.label)
    elapsed = time.monotonic() - start
    assert len(checked) >= 9
    assert elapsed < 10.0
    print(f"AC1 PASS: exact brute-force agreement on {len(checked)} graphs "
          f"({elapsed:.1f}s)")


def test_ac02_deletion_identities(corpus):
    start = time.monotonic()
    edges_checked = 0
    oracle_checked = 0
    for g in corpus:
        assert check_identity(g, "a").holds
        assert check_identity(g, "b").holds
        for e in sorted(g.edges):
            rep = check_identity(g, "c", edge=e)
            assert rep.holds and rep.nonnegative
            edges_checked += 1
            if g.vertex_count <= 14:
                assert rep.residual == path_residual_oracle(g, e)
                oracle_checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"AC2 PASS: identities a/b exact, c residual >= 0 on "
          f"{edges_checked} edges, {oracle_checked} path-sum matches "
          f"({elapsed:.1f}s)")


def test_ac03_zero_estimation(corpus, corpus_spectra):
    for g in corpus:
        rep = run_check("zero_estimation", g)
        assert rep.verdict == "pass", (g.label, rep.notes)
    # smallest root of C4 is 2-sqrt(2), floor d^2 k^2/(4(d-1)n^2) = 1/4
    root = corpus_spectra["C4"][2].smallest()
    assert root.lo >= Fraction(1, 4)
    assert abs(root.midpoint - 0.585786) < 1e-5
    print("AC3 PASS: certified root floors on all 11 graphs, "
          "C4 root 0.585786 >= 0.25")


def test_ac04_ratio_and_krs(corpus, corpus_polys):
    for g in corpus:
        assert run_check("ratio", g).verdict == "pass"
        assert run_check("krs", g).verdict == "pass"
    poly = corpus_polys["C4"][1]
    n = poly.n
    ratio = Fraction(poly.coeffs[n - 1], poly.coeffs[n])
    assert ratio == 2
    assert ratio <= Fraction(2, 2) * n * n == 4
    assert ratio <= n * n
    print("AC4 PASS: ratio and KRS exact on all 11 graphs, C4 witness 2 <= 4")


def test_ac05_schrijver(corpus, corpus_polys):
    for g in corpus:
        assert run_check("schrijver", g).verdict == "pass"
    poly = corpus_polys["K33"][1]
    assert poly.perfect_count == 6
    assert Fraction(6) >= Fraction(2 ** 2, 3) ** 3 == Fraction(64, 27)
    print("AC5 PASS: perfect matching floors exact on all 11 graphs, "
          "K33 witness 6 >= 64/27")


def test_ac06_gurvits_grid(corpus):
    labels = []
    for g in corpus:
        rep = run_check("gurvits", g)
        assert rep.verdict == "pass", (g.label, rep.notes)
        labels.append(g.label)
    for seed in (1, 2, 7):
        g = generate(f"rrb:8,3,{seed}")
        rep = run_check("gurvits", g)
        assert rep.verdict == "pass", (g.label, rep.notes)
        labels.append(g.label)
    print(f"AC6 PASS: 512-point entropy floor on {len(labels)} graphs "
          f"including random regular instances")


def test_ac07_stability():
    cases = [("c4", 4), ("k33", 4), ("t6x6", 4), ("heawood", 6)]
    for spec, ell in cases:
        g = generate(spec)
        assert girth(g) == ell
        mono = run_check("stability_monotone", g)
        assert mono.verdict == "pass", (spec, mono.notes)
        cyc = run_check("stability_cycle", g, cycle_len=ell)
        assert cyc.verdict == "pass", (spec, cyc.notes)
    print("AC7 PASS: gap monotone and above the cycle integral for "
          "C4, K33, T6x6, heawood")


def test_ac08_dimer_series():
    start = time.monotonic()
    want = {2: 1, 3: 1, 4: 7, 5: 41, 6: 181, 7: 757}
    results = {}
    for m in (8, 10):
        g = generate(f"torus:{m}x{m}")
        prefix = matching_count_prefix(g, 7)
        fs = federbush_series(prefix, 4, order=7, v=g.vertex_count)
        results[m] = {k: fs.a[k] for k in sorted(fs.a)}
        assert results[m] == want, (m, results[m])
    assert results[8] == results[10]
    fs = federbush_series(matching_polynomial(generate("c8")), 2, order=7)
    assert all(fs.b[k] == 0 for k in range(2, 8))
    fs = federbush_series(matching_polynomial(generate("c4")), 2, order=10)
    neg = [k for k in sorted(fs.a) if fs.a[k] < 0]
    assert neg and neg[0] == 9
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    print(f"AC8 PASS: torus series a_2..a_7 = 1,1,7,41,181,757 stable at "
          f"8x8 and 10x10, C8 b zero, C4 a_9 < 0 ({elapsed:.1f}s)")


def test_ac09_entropy_convergence():
    rows = torus_entropy_sequence([4, 6, 8, 10])
    errs = [r[2] for r in rows]
    for a, b in zip(errs, errs[1:]):
        assert b <= a + 1e-9
    assert errs[-1] < 0.05
    assert abs(catalan_over_pi() - 0.2915609) < 5e-8
    print(f"AC9 PASS: torus entropy errors {', '.join(f'{e:.4f}' for e in errs)} "
          f"shrink toward the planar limit")


def test_ac10_degenerate_construction(corpus_spectra):
    rep = degenerate_report(generate("k33"), (0, 3))
    assert rep.pm_star == 96
    assert rep.pm_product == 96
    assert rep.product_ok and rep.top_slice_ok
    assert rep.s_floor == Fraction(1, 15)
    assert rep.s_star >= Fraction(1, 15)
    assert rep.s_bound_ok
    for label, (g, poly, spec) in sorted(corpus_spectra.items()):
        assert check_trivial(poly, spec).ok, label
    print("AC10 PASS: K33 star graph has 96 perfect matchings by exact "
          "count, s >= 1/15, trivial bound holds corpus-wide")


def test_ac11_moment_locality(corpus_polys):
    matched = 0
    for label, (g, poly) in sorted(corpus_polys.items()):
        d = g.regular_degree
        gi = girth(g)
        for order in range(2, gi, 2):
            assert measure_moments(poly, order) == tree_moment(d, order), \
                (label, order)
            matched += 1
        assert run_check("asymp_d", g).verdict == "pass", label
    hw = corpus_polys["heawood"][1]
    assert measure_moments(hw, 2) == 3
    assert measure_moments(hw, 4) == 15
    assert matched >= 12
    print(f"AC11 PASS: {matched} moments match the infinite tree below the "
          f"girth, entropy-vs-count bound holds corpus-wide")
