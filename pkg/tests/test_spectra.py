"""Root isolation, exact counting, moments and the matching measure."""

import json
import math
from fractions import Fraction

import pytest
from scipy.integrate import quad

from matchkit.graphs import cycle, disjoint_union, path
from matchkit.matchpoly import MatchPoly, matching_polynomial
from matchkit.spectra import (
    MAX_REFINE_BITS,
    gamma_polynomial,
    heilmann_lieb_check,
    isolate_spectrum,
    kesten_mckay_density,
    matching_measure,
    measure_moments,
    newton_power_sums,
    tree_moment,
)


def _c4_char(x):
    # the roots of C4 are 2 +- sqrt(2)
    return x * x - 4 * x + 2


def test_gamma_polynomial_c4():
    poly = matching_polynomial(cycle(4))
    assert gamma_polynomial(poly) == [2, -4, 1]


def test_c4_roots_closed_form():
    spec = isolate_spectrum(matching_polynomial(cycle(4)))
    assert len(spec.entries) == 2
    for e in spec.entries:
        assert e.multiplicity == 1
        assert e.width <= Fraction(1, 2 ** 60)
        assert _c4_char(e.lo) * _c4_char(e.hi) <= 0
    assert spec.floats() == pytest.approx([2 - math.sqrt(2), 2 + math.sqrt(2)])
    assert spec.count_leq(Fraction(1, 2)) == 0
    assert spec.count_leq(1) == 1
    assert spec.count_leq(2) == 1
    assert spec.count_leq(4) == 2
    assert spec.count_leq(-3) == 0


def test_exact_rational_roots():
    spec = isolate_spectrum(matching_polynomial(path(2)))
    (e,) = spec.entries
    assert (e.lo, e.hi, e.multiplicity) == (1, 1, 1)
    assert spec.count_leq(1) == 1
    assert spec.count_leq(1, strict=True) == 0
    star = isolate_spectrum(matching_polynomial(path(3)))
    (e,) = star.entries
    assert e.lo <= 2 <= e.hi
    assert e.width <= Fraction(1, 2 ** 60)
    snapped = star.split_at(2)
    assert (snapped.entries[0].lo, snapped.entries[0].hi) == (2, 2)


def test_multiplicity_from_disjoint_copies():
    g = disjoint_union(cycle(4), cycle(4))
    spec = isolate_spectrum(matching_polynomial(g))
    assert [e.multiplicity for e in spec.entries] == [2, 2]
    assert len(spec.floats()) == 4
    assert spec.reciprocal_sum() == 4


def test_refine_and_split():
    spec = isolate_spectrum(matching_polynomial(cycle(4)))
    fine = spec.refine(100)
    for e in fine.entries:
        assert e.width <= Fraction(1, 2 ** 100)
        assert _c4_char(e.lo) * _c4_char(e.hi) <= 0
    with pytest.raises(ValueError):
        spec.refine(MAX_REFINE_BITS + 1)
    for x in (1, 2, 3):
        cut = spec.split_at(x)
        assert all(e.hi <= x or e.lo >= x for e in cut.entries)
        assert [e.multiplicity for e in cut.entries] == [1, 1]
    edge = isolate_spectrum(matching_polynomial(path(2))).split_at(1)
    assert (edge.entries[0].lo, edge.entries[0].hi) == (1, 1)


def test_root_bound_on_corpus(corpus_spectra):
    for label, (g, poly, spec) in corpus_spectra.items():
        d = g.regular_degree
        ok, margin = heilmann_lieb_check(spec, d)
        assert ok, label
        assert margin > 0, label
        assert spec.count_leq(4 * (d - 1)) == poly.nu, label


def test_root_bound_rejects_degree_one():
    spec = isolate_spectrum(matching_polynomial(cycle(4)))
    with pytest.raises(ValueError):
        heilmann_lieb_check(spec, 1)


def test_reciprocal_sum(corpus_spectra):
    assert corpus_spectra["C4"][2].reciprocal_sum() == 2
    assert corpus_spectra["K33"][2].reciprocal_sum() == 3
    assert corpus_spectra["heawood"][2].reciprocal_sum() == 14


def test_newton_power_sums():
    assert newton_power_sums([1, 4, 2], 3) == [4, 12, 40]
    assert newton_power_sums([1, 9, 18, 6], 1) == [9]


def test_measure_moments_closed_forms(corpus_polys):
    c4 = corpus_polys["C4"][1]
    assert measure_moments(c4, 0) == 1
    assert measure_moments(c4, 2) == 2
    assert measure_moments(c4, 4) == 6
    hw = corpus_polys["heawood"][1]
    assert measure_moments(hw, 2) == 3
    assert measure_moments(hw, 4) == 15
    q3 = corpus_polys["Q3"][1]
    assert measure_moments(q3, 2) == 3
    for label, (g, poly) in corpus_polys.items():
        assert measure_moments(poly, 2) == g.regular_degree, label


def test_measure_moments_prefix(corpus_polys):
    full = corpus_polys["T6x6"][1]
    pref = list(full.coeffs[:3])
    assert measure_moments(pref, 4, v=36) == measure_moments(full, 4)
    with pytest.raises(ValueError):
        measure_moments([1, 72], 4, v=36)
    with pytest.raises(ValueError):
        measure_moments(pref, 4)
    with pytest.raises(ValueError):
        measure_moments(full, 3)
    # a full polynomial may be queried past nu; missing e_k are zero
    assert measure_moments(corpus_polys["C4"][1], 8) == 68


def test_tree_moments():
    assert tree_moment(3, 0) == 1
    assert tree_moment(3, 2) == 3
    assert tree_moment(3, 4) == 15
    for k in range(1, 6):
        assert tree_moment(2, 2 * k) == math.comb(2 * k, k)
    assert tree_moment(7, 2) == 7
    with pytest.raises(ValueError):
        tree_moment(3, 3)
    with pytest.raises(ValueError):
        tree_moment(0, 2)


def test_kesten_mckay_density():
    lim = 2 * math.sqrt(2)
    mass, _ = quad(lambda x: kesten_mckay_density(3, x), -lim, lim)
    assert mass == pytest.approx(1.0, abs=1e-9)
    m2, _ = quad(lambda x: x * x * kesten_mckay_density(3, x), -lim, lim)
    assert m2 == pytest.approx(3.0, abs=1e-8)
    m4, _ = quad(lambda x: x ** 4 * kesten_mckay_density(3, x), -lim, lim)
    assert m4 == pytest.approx(15.0, abs=1e-7)
    assert kesten_mckay_density(3, 3.0) == 0.0
    assert kesten_mckay_density(3, -3.0) == 0.0
    with pytest.raises(ValueError):
        kesten_mckay_density(1, 0.0)


def test_matching_measure_c4():
    mu = matching_measure(isolate_spectrum(matching_polynomial(cycle(4))))
    assert mu.zero_mass == 0
    atoms = mu.atoms()
    locs = [a for a, _ in atoms]
    expected = sorted([math.sqrt(2 - math.sqrt(2)), math.sqrt(2 + math.sqrt(2)),
                       -math.sqrt(2 - math.sqrt(2)), -math.sqrt(2 + math.sqrt(2))])
    assert locs == pytest.approx(expected)
    assert all(m == Fraction(1, 4) for _, m in atoms)
    assert mu.interval_mass(0) == 0
    assert mu.interval_mass(1) == Fraction(1, 2)
    assert mu.interval_mass(2) == 1
    csv = mu.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "location,mass"
    assert len(lines) == 5
    with pytest.raises(ValueError):
        mu.interval_mass(-1)


def test_matching_measure_zero_atom():
    mu = matching_measure(isolate_spectrum(matching_polynomial(path(3))))
    assert mu.zero_mass == Fraction(1, 3)
    atoms = mu.atoms()
    assert len(atoms) == 3
    assert atoms[1] == (0.0, Fraction(1, 3))
    assert atoms[0][0] == pytest.approx(-math.sqrt(2))
    assert mu.interval_mass(1) == Fraction(1, 3)
    assert sum(m for _, m in atoms) == 1


def test_measure_total_mass_on_corpus(corpus_spectra):
    for label, (g, poly, spec) in corpus_spectra.items():
        mu = matching_measure(spec)
        assert sum(m for _, m in mu.atoms()) == 1, label
        assert mu.interval_mass(2 * math.isqrt(g.regular_degree) + 2) == 1, label


def test_non_matching_polynomial_rejected():
    fake = MatchPoly(v=4, coeffs=(1, 2, 2))
    with pytest.raises(RuntimeError):
        isolate_spectrum(fake)


def test_spectrum_json():
    spec = isolate_spectrum(matching_polynomial(cycle(6)))
    obj = json.loads(spec.to_json())
    assert obj["v"] == 6
    assert len(obj["roots"]) == 3
    total = 0
    for r in obj["roots"]:
        lo = Fraction(r["lo"])
        hi = Fraction(r["hi"])
        assert lo <= hi
        total += r["multiplicity"]
    assert total == 3
