"""Monomer-dimer free energy, entropy curves, and dimer series expansions.

Everything runs off the matching generating function M(G,t) = sum m_k t^k
of a finite graph on v vertices (n = v/2).  The occupied fraction at
activity t is p(t) = t M'(t) / (n M(t)), and the normalized free energy is

    F(t) = ln M(t) / v - (p(t)/2) ln t,

with lambda(p) = F(t(p)) on 0 <= p < p_star and lambda(p_star) its limit
ln(m_nu)/v.  Density inversion, a lower bound of Gurvits type for regular
graphs, exact certificates for the gap's monotonicity argument, and an
exact power series for the entropy defect are provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .matchpoly import MatchPoly
from .seriesops import series_compose, series_inv, series_log, series_mul, series_reverse
from .spectra import Spectrum

__all__ = [
    "density",
    "density_from_roots",
    "invert_density",
    "entropy_value",
    "entropy_at_pstar",
    "gurvits_bound",
    "gurvits_perfect",
    "EntropyPoint",
    "entropy_point",
    "entropy_curve",
    "default_p_grid",
    "GapCertificate",
    "gap_certificate",
    "cycle_gap_lower_bound",
    "tree_activity",
    "tree_density",
    "FederbushSeries",
    "federbush_series",
]

CURVE_POINTS = 512
P_EDGE = 1e-4


# ------------------------------------------------------------- density

def density(poly: MatchPoly, t: Fraction) -> Fraction:
    """Occupied fraction p(t) = t M'(t) / (n M(t)), exact."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("activity must be nonnegative")
    num = Fraction(0)
    den = Fraction(0)
    for k in range(poly.nu, -1, -1):
        num = num * t + k * poly.coeffs[k]
        den = den * t + poly.coeffs[k]
    return num / (poly.n * den)


def density_from_roots(gammas: Sequence[float], v: int, t: float) -> float:
    """p(t) from the root list, float arithmetic: (2/v) sum g t/(1+g t)."""
    if t < 0:
        raise ValueError("activity must be nonnegative")
    return (2.0 / v) * sum(g * t / (1.0 + g * t) for g in gammas)


def invert_density(source: Union[MatchPoly, Spectrum], p: float,
                   tol: float = 1e-12) -> float:
    """Activity t with p(t) = p, for 0 <= p < p_star.  Monotone bisection."""
    if isinstance(source, Spectrum):
        gammas, v, nu = source.floats(), source.v, source.nu
        pt = lambda t: density_from_roots(gammas, v, t)
    else:
        poly = source
        v, nu = poly.v, poly.nu
        pt = lambda t: float(density(poly, Fraction(t)))
    p_star = 2 * nu / v
    if p < 0 or p >= p_star:
        raise ValueError(f"density {p} outside [0, {p_star})")
    if p == 0:
        return 0.0
    lo, hi = -80.0, 1.0
    while pt(math.exp(hi)) < p:
        hi += 10.0
        if hi > 800.0:
            raise RuntimeError("failed to bracket the activity")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if pt(math.exp(mid)) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo < tol * max(1.0, abs(hi)):
            break
    return math.exp(0.5 * (lo + hi))


# -------------------------------------------------------------- entropy

def entropy_at_pstar(poly: MatchPoly) -> float:
    return math.log(poly.coeffs[poly.nu]) / poly.v


def _free_energy(gammas: Sequence[float], v: int, t: float, p: float) -> float:
    """F(t) in a form stable for large t: the ln t parts are combined first."""
    p_star = 2 * len(gammas) / v
    if t >= 1.0:
        s = sum(math.log(g + 1.0 / t) for g in gammas)
        return 0.5 * (p_star - p) * math.log(t) + s / v
    s = sum(math.log1p(g * t) for g in gammas)
    return s / v - 0.5 * p * (math.log(t) if t > 0 else 0.0)


def entropy_value(source: Union[MatchPoly, Spectrum], p: float,
                  spectrum: Optional[Spectrum] = None,
                  tol: float = 1e-12) -> float:
    """lambda(p): entropy per vertex at occupied fraction p; 0 beyond p_star."""
    if isinstance(source, Spectrum):
        spectrum = source
        poly = source.poly
    else:
        poly = source
        if spectrum is None:
            from .spectra import isolate_spectrum
            spectrum = isolate_spectrum(poly)
    if p < 0 or p > 1:
        raise ValueError("occupied fraction must lie in [0, 1]")
    p_star = poly.p_star
    if p > p_star:
        return 0.0
    if p == 0:
        return 0.0
    if 1 - p / p_star < 1e-13:
        return entropy_at_pstar(poly)
    t = invert_density(spectrum, p, tol=tol)
    return _free_energy(spectrum.floats(), poly.v, t, p)


def gurvits_bound(d: int, p: float) -> float:
    """Entropy lower bound for d-regular bipartite graphs at fraction p."""
    if d < 1:
        raise ValueError("degree must be positive")
    if p < 0 or p > 1:
        raise ValueError("occupied fraction must lie in [0, 1]")
    s = 0.0
    if p > 0:
        s += p * math.log(d / p)
    if p < d:
        s += (d - p) * math.log1p(-p / d)
    if p < 1:
        s -= 2 * (1 - p) * math.log1p(-p)
    return 0.5 * s


def gurvits_perfect(d: int) -> float:
    """The p = 1 value: (1/2) ln((d-1)^(d-1) / d^(d-2))."""
    if d < 1:
        raise ValueError("degree must be positive")
    if d == 1:
        return 0.0
    return 0.5 * ((d - 1) * math.log(d - 1) - (d - 2) * math.log(d))


# --------------------------------------------------------- curve points

@dataclass(frozen=True)
class EntropyPoint:
    t: float
    p: float
    free_energy: float
    entropy: float
    gurvits: float
    gap: float
    q: float
    r: float


def default_p_grid(points: int = CURVE_POINTS) -> list[float]:
    if points < 2:
        raise ValueError("grid needs at least two points")
    lo, hi = P_EDGE, 1.0 - P_EDGE
    step = (hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


def entropy_point(spectrum: Spectrum, d: int, *, p: Optional[float] = None,
                  t: Optional[float] = None) -> EntropyPoint:
    """All curve quantities at one point, from either coordinate."""
    if (p is None) == (t is None):
        raise ValueError("give exactly one of p, t")
    gammas = spectrum.floats()
    v = spectrum.v
    if t is None:
        t = invert_density(spectrum, p)
    else:
        if t < 0:
            raise ValueError("activity must be nonnegative")
        p = density_from_roots(gammas, v, t)
    big_f = _free_energy(gammas, v, t, p) if t > 0 else 0.0
    lam = big_f
    gur = gurvits_bound(d, p)
    q = p / d
    r = q * (1 - q) - t * (1 - d * q) ** 2
    return EntropyPoint(t=t, p=p, free_energy=big_f, entropy=lam,
                        gurvits=gur, gap=lam - gur, q=q, r=r)


def entropy_curve(spectrum: Spectrum, d: int,
                  p_grid: Optional[Sequence[float]] = None) -> list[EntropyPoint]:
    if p_grid is None:
        p_grid = default_p_grid()
    return [entropy_point(spectrum, d, p=p) for p in p_grid]


# --------------------------------------------------- gap certificates

@dataclass(frozen=True)
class GapCertificate:
    """Exact data behind the gap-monotonicity argument at rational activity t.

    r = q(1-q) - t(1-dq)^2 with q = p/d; the derivative of the gap in p is
    at least (d/2) r, and a cycle of length ell forces
    (d/2) r >= (t/(1+dt)^2)^ell.
    """

    t: Fraction
    p: Fraction
    q: Fraction
    r: Fraction
    r_nonneg: bool
    cycle_len: Optional[int] = None
    cycle_lhs: Optional[Fraction] = None
    cycle_rhs: Optional[Fraction] = None
    cycle_ok: Optional[bool] = None


def gap_certificate(poly: MatchPoly, d: int, t: Fraction,
                    cycle_len: Optional[int] = None) -> GapCertificate:
    t = Fraction(t)
    if d < 1:
        raise ValueError("degree must be positive")
    p = density(poly, t)
    q = p / d
    r = q * (1 - q) - t * (1 - d * q) ** 2
    cert = dict(t=t, p=p, q=q, r=r, r_nonneg=r >= 0)
    if cycle_len is not None:
        if cycle_len < 3:
            raise ValueError("cycle length must be at least 3")
        lhs = Fraction(d, 2) * r
        rhs = (t / (1 + d * t) ** 2) ** cycle_len
        cert.update(cycle_len=cycle_len, cycle_lhs=lhs, cycle_rhs=rhs,
                    cycle_ok=lhs >= rhs)
    return GapCertificate(**cert)


_X_KINK = (3.0 - math.sqrt(5.0)) / 2.0


def cycle_gap_lower_bound(d: int, ell: int, p: float) -> float:
    """Closed-form integral of f(x)^ell with f(x) = min(x, (1-x)^2)/(4d).

    The two branches of f cross at x = (3-sqrt(5))/2.  For a d-regular
    vertex-transitive bipartite graph with a cycle of length ell through
    every vertex this integral bounds the gap lambda - Gurvits from below.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    if ell < 4 or ell % 2:
        raise ValueError("cycle length must be even and at least 4")
    if p < 0 or p > 1:
        raise ValueError("occupied fraction must lie in [0, 1]")
    c = (4.0 * d) ** (-ell)
    if p <= _X_KINK:
        return c * p ** (ell + 1) / (ell + 1)
    head = _X_KINK ** (ell + 1) / (ell + 1)
    tail = ((1.0 - _X_KINK) ** (2 * ell + 1) - (1.0 - p) ** (2 * ell + 1)) / (2 * ell + 1)
    return c * (head + tail)


# ------------------------------------------------------ infinite tree

def tree_activity(d: int, p):
    """t with density p on the infinite d-regular tree: p(d-p)/(d^2 (1-p)^2)."""
    if d < 1:
        raise ValueError("degree must be positive")
    if isinstance(p, (Fraction, int)):
        p = Fraction(p)
    if p < 0 or p >= 1:
        raise ValueError("density must lie in [0, 1)")
    return p * (d - p) / (d * d * (1 - p) ** 2)


def tree_density(d: int, t):
    """Density at activity t on the infinite d-regular tree.

    Exact Fraction when t is rational and the discriminant 1 + 4(d-1)t is a
    perfect square; float otherwise.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    if isinstance(t, (Fraction, int)):
        t = Fraction(t)
        if t < 0:
            raise ValueError("activity must be nonnegative")
        disc = 1 + 4 * (d - 1) * t
        rn = math.isqrt(disc.numerator)
        rd = math.isqrt(disc.denominator)
        if rn * rn == disc.numerator and rd * rd == disc.denominator:
            root = Fraction(rn, rd)
            return (2 * d * d * t + d - d * root) / (2 * d * d * t + 2)
        t = float(t)
    if t < 0:
        raise ValueError("activity must be nonnegative")
    root = math.sqrt(1.0 + 4.0 * (d - 1) * t)
    return (2 * d * d * t + d - d * root) / (2 * d * d * t + 2)


# ------------------------------------------------------ dimer series

@dataclass(frozen=True)
class FederbushSeries:
    """Exact expansion of the entropy around p = 0:

        2 lambda(p) = p ln(d/p) - p - 2(1-p) ln(1-p)
                      + d sum_{k>=2} a_k / (k(k-1)) (p/d)^k.

    The a_k are rational; b_k = a_k - 1 vanishes for k below the girth, so
    the analytic part with all a_k = 1 is the infinite-tree entropy.
    """

    d: int
    order: int
    a: dict  # k -> Fraction, k = 2..order

    @property
    def b(self) -> dict:
        return {k: ak - 1 for k, ak in self.a.items()}

    def first_nonpositive(self) -> Optional[int]:
        for k in sorted(self.a):
            if self.a[k] <= 0:
                return k
        return None

    def entropy_estimate(self, p: float) -> float:
        """Truncated series evaluated at p, float."""
        if p < 0 or p >= 1:
            raise ValueError("occupied fraction must lie in [0, 1)")
        if p == 0:
            return 0.0
        s = p * math.log(self.d / p) - p - 2 * (1 - p) * math.log1p(-p)
        for k, ak in self.a.items():
            s += self.d * float(ak) / (k * (k - 1)) * (p / self.d) ** k
        return 0.5 * s


def federbush_series(poly_or_coeffs, d: int, order: int = 10,
                     v: Optional[int] = None) -> FederbushSeries:
    """Series coefficients a_2..a_order from m_0..m_order.

    Accepts a full MatchPoly (padded with zeros past nu as needed) or a
    coefficient prefix with explicit v.  The graph must be d-regular:
    m_1 = v d / 2 is checked.
    """
    if isinstance(poly_or_coeffs, MatchPoly):
        coeffs = list(poly_or_coeffs.coeffs)
        v = poly_or_coeffs.v
    else:
        coeffs = list(poly_or_coeffs)
        if v is None:
            raise ValueError("coefficient prefix needs an explicit v")
        if len(coeffs) < order + 1:
            raise ValueError(f"need coefficients m_0..m_{order}")
    if d < 1:
        raise ValueError("degree must be positive")
    if order < 2:
        raise ValueError("order must be at least 2")
    if v % 2:
        raise ValueError("vertex count must be even")
    n = v // 2
    if len(coeffs) < 2 or coeffs[1] != n * d:
        raise ValueError("m_1 != v d / 2: graph is not d-regular")
    K = order
    m = [Fraction(c) for c in coeffs[:K + 1]]
    m.extend([Fraction(0)] * (K + 1 - len(m)))

    # p(t) = t M'/(n M) as a series in t, then revert to get t(p).
    ln_m = series_log(m, K)
    tdm = [Fraction(k) * m[k] for k in range(K + 1)]
    p_of_t = series_mul(tdm, series_inv(m, K), K)
    p_of_t = [c / n for c in p_of_t]
    if p_of_t[1] != d:
        raise ValueError("leading density coefficient is not d")
    t_of_p = series_reverse(p_of_t, K)

    # u(p) = d t(p)/p has constant term 1; ln u enters as p ln u.
    u = [d * t_of_p[j + 1] for j in range(K)]
    ln_u = series_log(u, K - 1)
    p_ln_u = [Fraction(0)] + ln_u

    # 2(1-p)ln(1-p) = -2p + sum_{k>=2} 2 p^k / (k(k-1))
    two_1p_log = [Fraction(0), Fraction(-2)] + \
        [Fraction(2, k * (k - 1)) for k in range(2, K + 1)]

    ln_m_of_p = series_compose(ln_m, t_of_p, K)
    rhs = [Fraction(0)] * (K + 1)
    for k in range(K + 1):
        rhs[k] = ln_m_of_p[k] / n - p_ln_u[k] + two_1p_log[k]
    rhs[1] += 1
    if rhs[0] != 0 or rhs[1] != 0:
        raise RuntimeError("series pipeline lost the first-order cancellation")
    a = {k: rhs[k] * k * (k - 1) * d ** (k - 1) for k in range(2, K + 1)}
    return FederbushSeries(d=d, order=K, a=a)
