"""Entropy curve, lower bounds, gap certificates and the infinite tree."""

import math
from fractions import Fraction

import pytest
from scipy.integrate import quad

from matchkit.entropy import (
    cycle_gap_lower_bound,
    default_p_grid,
    density,
    density_from_roots,
    entropy_at_pstar,
    entropy_curve,
    entropy_point,
    entropy_value,
    gap_certificate,
    gurvits_bound,
    gurvits_perfect,
    invert_density,
    tree_activity,
    tree_density,
)
from matchkit.graphs import path
from matchkit.matchpoly import matching_polynomial


def test_density_exact(corpus_polys):
    c4 = corpus_polys["C4"][1]
    assert density(c4, 1) == Fraction(4, 7)
    assert density(c4, Fraction(1, 3)) == Fraction(8, 23)
    assert density(c4, 0) == 0
    assert density(c4, 2) > density(c4, 1)
    k33 = corpus_polys["K33"][1]
    assert density(k33, 1) == Fraction(21, 34)
    with pytest.raises(ValueError):
        density(c4, -1)


def test_density_from_roots_matches_exact(corpus_spectra):
    g, poly, spec = corpus_spectra["heawood"]
    gammas = spec.floats()
    for t in (0.1, 0.7, 2.5):
        exact = float(density(poly, Fraction(t)))
        assert density_from_roots(gammas, poly.v, t) == pytest.approx(exact)


def test_invert_density_round_trip(corpus_spectra):
    for label in ("C4", "heawood", "T4x4"):
        _, poly, spec = corpus_spectra[label]
        gammas = spec.floats()
        for p in (0.05, 0.3, 0.6, 0.9, 0.97):
            t = invert_density(spec, p)
            assert density_from_roots(gammas, poly.v, t) == pytest.approx(p, abs=1e-10)
    spec = corpus_spectra["C4"][2]
    assert invert_density(spec, 0.0) == 0.0
    with pytest.raises(ValueError):
        invert_density(spec, 1.0)
    with pytest.raises(ValueError):
        invert_density(spec, -0.1)


def test_entropy_value_edge_cases(corpus_spectra):
    for d in (2, 3, 4):
        label = f"K{d}{d}"
        spec = corpus_spectra[label][2]
        expected = math.log(math.factorial(d)) / (2 * d)
        assert entropy_value(spec, 1.0) == pytest.approx(expected, abs=1e-12)
    spec = corpus_spectra["C4"][2]
    assert entropy_value(spec, 0.0) == 0.0
    assert entropy_value(spec, 1.0 - 1e-14) == pytest.approx(math.log(2) / 4)
    assert entropy_at_pstar(spec.poly) == pytest.approx(math.log(2) / 4)
    with pytest.raises(ValueError):
        entropy_value(spec, 1.5)
    # past the maximum density the rate is zero
    stub = matching_polynomial(path(3))
    assert entropy_value(stub, 0.9) == 0.0


def test_entropy_value_accepts_poly(corpus_spectra):
    _, poly, spec = corpus_spectra["C4"]
    assert entropy_value(poly, 0.5) == pytest.approx(entropy_value(spec, 0.5))


def test_entropy_point_values(corpus_spectra):
    spec = corpus_spectra["C4"][2]
    ep = entropy_point(spec, 2, t=1.0)
    assert ep.p == pytest.approx(4 / 7)
    assert ep.entropy == pytest.approx(math.log(7) / 4)
    assert ep.q == pytest.approx(2 / 7)
    assert ep.r == pytest.approx(1 / 49)
    assert ep.gap == pytest.approx(ep.entropy - ep.gurvits)
    back = entropy_point(spec, 2, p=ep.p)
    assert back.t == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(ValueError):
        entropy_point(spec, 2, p=0.5, t=1.0)
    with pytest.raises(ValueError):
        entropy_point(spec, 2)


def test_entropy_curve_grid(corpus_spectra):
    spec = corpus_spectra["K33"][2]
    pts = entropy_curve(spec, 3, p_grid=[0.1, 0.5, 0.9])
    assert [pt.p for pt in pts] == pytest.approx([0.1, 0.5, 0.9])
    assert all(pt.gap > -1e-12 for pt in pts)
    grid = default_p_grid()
    assert len(grid) == 512
    assert grid[0] == pytest.approx(1e-4)
    assert grid[-1] == pytest.approx(1 - 1e-4)
    with pytest.raises(ValueError):
        default_p_grid(1)


def test_gurvits_formulas():
    assert gurvits_bound(3, 0.0) == 0.0
    assert gurvits_bound(3, 1.0) == pytest.approx(0.5 * math.log(4 / 3))
    assert gurvits_perfect(3) == pytest.approx(0.5 * math.log(4 / 3))
    assert gurvits_perfect(2) == 0.0
    assert gurvits_perfect(1) == 0.0
    assert gurvits_bound(7, 1.0) == pytest.approx(gurvits_perfect(7))
    with pytest.raises(ValueError):
        gurvits_bound(0, 0.5)
    with pytest.raises(ValueError):
        gurvits_bound(3, 1.5)
    with pytest.raises(ValueError):
        gurvits_perfect(0)


def test_entropy_dominates_gurvits_sample(corpus_spectra):
    _, poly, spec = corpus_spectra["K33"]
    for p in (0.25, 0.5, 0.75, 0.9):
        assert entropy_value(spec, p) >= gurvits_bound(3, p) - 1e-12


def test_gap_certificate_exact(corpus_polys):
    c4 = corpus_polys["C4"][1]
    cert = gap_certificate(c4, 2, Fraction(1, 3), cycle_len=4)
    assert cert.p == Fraction(8, 23)
    assert cert.q == Fraction(4, 23)
    assert cert.r == Fraction(1, 529)
    assert cert.r_nonneg
    assert cert.cycle_lhs == Fraction(1, 529)
    assert cert.cycle_rhs == Fraction(81, 390625)
    assert cert.cycle_ok
    k33 = corpus_polys["K33"][1]
    for t in (Fraction(1, 8), Fraction(1), Fraction(8)):
        c = gap_certificate(k33, 3, t, cycle_len=4)
        assert c.r >= 0
        assert c.cycle_ok
    with pytest.raises(ValueError):
        gap_certificate(c4, 2, Fraction(1, 3), cycle_len=2)
    with pytest.raises(ValueError):
        gap_certificate(c4, 0, Fraction(1, 3))


def test_cycle_gap_lower_bound_matches_integral():
    for d, ell, p in ((2, 4, 0.3), (3, 4, 0.9), (3, 6, 0.5), (7, 8, 0.97)):
        def f(x):
            return (min(x, (1 - x) ** 2) / (4 * d)) ** ell
        ref, _ = quad(f, 0, p, epsabs=1e-18, epsrel=1e-12)
        assert cycle_gap_lower_bound(d, ell, p) == pytest.approx(ref, rel=1e-9)
    assert cycle_gap_lower_bound(3, 4, 0.0) == 0.0
    assert cycle_gap_lower_bound(3, 4, 0.9) > cycle_gap_lower_bound(3, 4, 0.5)
    with pytest.raises(ValueError):
        cycle_gap_lower_bound(3, 5, 0.5)
    with pytest.raises(ValueError):
        cycle_gap_lower_bound(3, 2, 0.5)
    with pytest.raises(ValueError):
        cycle_gap_lower_bound(1, 4, 0.5)


def test_tree_closed_forms():
    assert tree_activity(3, Fraction(1, 2)) == Fraction(5, 9)
    out = tree_density(3, Fraction(5, 9))
    assert isinstance(out, Fraction) and out == Fraction(1, 2)
    # non-square discriminant falls back to float
    out = tree_density(2, Fraction(1, 4))
    assert isinstance(out, float)
    assert tree_density(3, tree_activity(3, 0.37)) == pytest.approx(0.37)
    assert tree_density(3, 0) == 0
    with pytest.raises(ValueError):
        tree_activity(3, 1)
    with pytest.raises(ValueError):
        tree_density(3, -1)
    with pytest.raises(ValueError):
        tree_activity(0, Fraction(1, 2))


def test_tree_activity_is_gap_zero_locus():
    # at the tree activity the certificate quantity r vanishes identically
    for d in (2, 3, 5):
        for p in (Fraction(1, 3), Fraction(2, 3), Fraction(9, 10)):
            t = tree_activity(d, p)
            q = p / d
            assert q * (1 - q) - t * (1 - d * q) ** 2 == 0
