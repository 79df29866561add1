"""Certified root data for matching polynomials and the matching measure.

With M(G,t) = prod_i (1 + g_i t), the g_i are the squares of the zeros of
the signed matching polynomial; they are real and positive.  This module
isolates them with Sturm sequences over exact rationals, exposes exact
root-counting queries, and computes matching-measure moments directly from
the coefficients by Newton's identities (no isolation required).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .matchpoly import MatchPoly

__all__ = [
    "RootInterval",
    "Spectrum",
    "isolate_spectrum",
    "heilmann_lieb_check",
    "measure_moments",
    "newton_power_sums",
    "tree_moment",
    "kesten_mckay_density",
    "MatchingMeasure",
    "matching_measure",
]

DEFAULT_PRECISION_BITS = 60
MAX_REFINE_BITS = 256


# ---------------------------------------------------- Fraction polynomials

def _trim(f):
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return f[:n]


def _deriv(f):
    return [i * f[i] for i in range(1, len(f))]


def _eval(f, x):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _monic(f):
    f = _trim(f)
    if not f:
        return f
    lead = f[-1]
    return [c / lead for c in f]


def _divmod(f, g):
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    inv = Fraction(1) / g[-1]
    for i in range(len(f) - len(g), -1, -1):
        c = f[i + len(g) - 1] * inv
        if c:
            q[i] = c
            for j, gj in enumerate(g):
                f[i + j] -= c * gj
    return q, _trim(f)


def _gcd(f, g):
    f, g = _monic(f), _monic(g)
    while g:
        f, g = g, _monic(_divmod(f, g)[1])
    return f if f else [Fraction(1)]


def _squarefree_factors(f) -> list[tuple[list[Fraction], int]]:
    """Yun decomposition: [(factor, multiplicity)] with factors monic, coprime."""
    f = _monic(f)
    if len(f) <= 1:
        return []
    df = _deriv(f)
    g = _gcd(f, df)
    if len(g) == 1:
        return [(f, 1)]
    b, _ = _divmod(f, g)
    c, _ = _divmod(df, g)
    d = _trim([ci - bi for ci, bi in
               zip(c + [Fraction(0)] * len(b), _deriv(b) + [Fraction(0)] * len(c))])
    out = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b, _ = _divmod(b, a)
        nd, _ = _divmod(d, a)
        d = _trim([x - y for x, y in
                   zip(nd + [Fraction(0)] * len(b), _deriv(b) + [Fraction(0)] * len(nd))])
        i += 1
    return out


def _pos_scale(f):
    # scale by a positive constant only; monic normalisation would flip
    # signs on negative leads and break the sign-variation invariant
    f = _trim(f)
    if not f:
        return f
    lead = abs(f[-1])
    return [c / lead for c in f]


def _sturm_chain(f):
    chain = [_pos_scale(f)]
    d = _pos_scale(_deriv(f))
    while d:
        chain.append(d)
        r = _divmod(chain[-2], chain[-1])[1]
        d = _pos_scale([-c for c in r])
    return chain


def _variations(chain, x):
    prev = 0
    count = 0
    for f in chain:
        s = _eval(f, x)
        s = (s > 0) - (s < 0)
        if s != 0:
            if prev != 0 and s != prev:
                count += 1
            prev = s
    return count


def _sturm_count(chain, a, b):
    """Number of distinct roots in (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


# ------------------------------------------------------------- spectrum

@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


class Spectrum:
    """Certified enclosures for the roots g_i, plus exact counting queries."""

    def __init__(self, poly: MatchPoly, entries: list[RootInterval],
                 factors: list[tuple[list[Fraction], int]]):
        self.poly = poly
        self.entries = sorted(entries, key=lambda e: (e.lo, e.hi))
        self._factors = factors
        self._chains = [(_sturm_chain(f), mult) for f, mult in factors]

    @property
    def v(self) -> int:
        return self.poly.v

    @property
    def nu(self) -> int:
        return self.poly.nu

    @property
    def label(self) -> str:
        return self.poly.label

    def floats(self) -> list[float]:
        """Root midpoints repeated with multiplicity, ascending."""
        out = []
        for e in self.entries:
            out.extend([e.midpoint] * e.multiplicity)
        return out

    def count_leq(self, x, strict: bool = False) -> int:
        """Exact number of roots (with multiplicity) that are <= x (or < x)."""
        x = Fraction(x)
        if x <= 0:
            return 0
        total = 0
        for (chain, mult), (f, _) in zip(self._chains, self._factors):
            c = _sturm_count(chain, Fraction(0), x)
            if strict and _eval(f, x) == 0:
                c -= 1
            total += mult * c
        return total

    def smallest(self) -> RootInterval:
        return self.entries[0]

    def largest(self) -> RootInterval:
        return self.entries[-1]

    def reciprocal_sum(self) -> Fraction:
        """sum_i 1/g_i, exact from the coefficients."""
        c = self.poly.coeffs
        return Fraction(c[self.nu - 1], c[self.nu]) if self.nu else Fraction(0)

    def refine(self, bits: int) -> "Spectrum":
        if bits > MAX_REFINE_BITS:
            raise ValueError(f"refinement beyond {MAX_REFINE_BITS} bits")
        width = Fraction(1, 1 << bits)
        new = []
        for e in self.entries:
            f = self._factor_for(e)
            lo, hi = _refine_interval(f, e.lo, e.hi, width)
            new.append(RootInterval(lo, hi, e.multiplicity))
        return Spectrum(self.poly, new, self._factors)

    def split_at(self, x) -> "Spectrum":
        """Shrink enclosures so none straddles x (exact sign test at x)."""
        x = Fraction(x)
        new = []
        for e in self.entries:
            if not (e.lo < x < e.hi):
                new.append(e)
                continue
            f = self._factor_for(e)
            s = _eval(f, x)
            if s == 0:
                new.append(RootInterval(x, x, e.multiplicity))
            else:
                sa = _eval(f, e.lo)
                if sa == 0 or (sa > 0) == (s > 0):
                    new.append(RootInterval(x, e.hi, e.multiplicity))
                else:
                    new.append(RootInterval(e.lo, x, e.multiplicity))
        return Spectrum(self.poly, new, self._factors)

    def _factor_for(self, e: RootInterval):
        for (f, _), (chain, _) in zip(self._factors, self._chains):
            if e.lo == e.hi:
                if _eval(f, e.lo) == 0:
                    return f
            elif _sturm_count(chain, e.lo, e.hi) == 1:
                return f
        raise RuntimeError("internal inconsistency: enclosure lost its factor")

    def to_json(self) -> str:
        obj = {
            "v": self.v,
            "label": self.label,
            "roots": [{"lo": _frac_str(e.lo), "hi": _frac_str(e.hi),
                       "multiplicity": e.multiplicity} for e in self.entries],
        }
        return json.dumps(obj, indent=2) + "\n"


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _refine_interval(f, lo, hi, width):
    if hi - lo <= 0:
        return lo, hi
    slo = _eval(f, lo)
    if slo == 0:
        return lo, lo
    shi = _eval(f, hi)
    if shi == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = _eval(f, mid)
        if sm == 0:
            return mid, mid
        if (sm > 0) == (slo > 0):
            lo, slo = mid, sm
        else:
            hi = mid
    return lo, hi


def gamma_polynomial(poly: MatchPoly) -> list[int]:
    """Monic integer polynomial whose roots are the g_i (ascending coeffs)."""
    nu = poly.nu
    return [(-1) ** (nu - j) * poly.coeffs[nu - j] for j in range(nu + 1)]


def isolate_spectrum(poly: MatchPoly,
                     precision_bits: int = DEFAULT_PRECISION_BITS) -> Spectrum:
    """Isolate all roots g_i into disjoint rational enclosures.

    Enclosures are refined to width 2^-precision_bits.  A total root count
    different from nu means the input was not a matching polynomial; that
    raises RuntimeError.
    """
    nu = poly.nu
    if nu == 0:
        return Spectrum(poly, [], [])
    f = [Fraction(c) for c in gamma_polynomial(poly)]
    factors = _squarefree_factors(f)
    radical = [Fraction(1)]
    from .seriesops import poly_mul
    for fac, _ in factors:
        radical = poly_mul(radical, fac)
    rad_chain = _sturm_chain(radical)
    bound = Fraction(1) + max(abs(c) for c in radical[:-1]) if len(radical) > 1 \
        else Fraction(1)
    total = _sturm_count(rad_chain, Fraction(0), bound)
    stack = [(Fraction(0), bound, total)]
    isolated: list[tuple[Fraction, Fraction]] = []
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            isolated.append((a, b))
            continue
        mid = (a + b) / 2
        left = _sturm_count(rad_chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    entries = []
    width = Fraction(1, 1 << precision_bits)
    mult_total = 0
    factor_chains = [(_sturm_chain(g), g, m) for g, m in factors]
    for a, b in isolated:
        mult = None
        fac = None
        for chain, g, m in factor_chains:
            if _sturm_count(chain, a, b) == 1:
                mult, fac = m, g
                break
        if mult is None:
            raise RuntimeError("internal inconsistency: isolated interval lost")
        lo, hi = _refine_interval(fac, a, b, width)
        entries.append(RootInterval(lo, hi, mult))
        mult_total += mult
    if mult_total != nu:
        raise RuntimeError(
            f"internal inconsistency: found {mult_total} roots, expected {nu}")
    return Spectrum(poly, entries, factors)


def heilmann_lieb_check(spectrum: Spectrum, degree: int) -> tuple[bool, float]:
    """Certify every root is at most 4(D-1); returns (ok, float margin)."""
    if degree < 2:
        raise ValueError("root bound check needs maximum degree at least 2")
    bound = Fraction(4 * (degree - 1))
    ok = spectrum.count_leq(bound) == spectrum.nu
    top = spectrum.split_at(bound).largest().hi if spectrum.entries else Fraction(0)
    return ok, float(bound - top)


# --------------------------------------------------------------- moments

def newton_power_sums(coeffs: Sequence[int], order: int) -> list[Fraction]:
    """Power sums p_1..p_order of the roots from elementary symmetric m_k."""
    e = [Fraction(c) for c in coeffs]

    def ek(k):
        return e[k] if k < len(e) else Fraction(0)

    p: list[Fraction] = []
    for k in range(1, order + 1):
        s = Fraction(-1) ** (k - 1) * k * ek(k)
        for i in range(1, k):
            s += Fraction(-1) ** (i - 1) * ek(i) * p[k - i - 1]
        p.append(s)
    return p


def measure_moments(poly_or_coeffs, order: int, v: Optional[int] = None) -> Fraction:
    """Even moment of the matching measure, exact.

    Accepts a MatchPoly or a coefficient prefix m_0..m_K (then v is needed,
    and order/2 <= K).  Odd orders are rejected rather than returning the
    trivial zero.
    """
    if isinstance(poly_or_coeffs, MatchPoly):
        coeffs, v = poly_or_coeffs.coeffs, poly_or_coeffs.v
        full = True
    else:
        coeffs = list(poly_or_coeffs)
        full = False
        if v is None:
            raise ValueError("coefficient prefix needs an explicit v")
    if order < 0 or order % 2:
        raise ValueError("matching-measure moments are defined for even order")
    if order == 0:
        return Fraction(1)
    k = order // 2
    if not full and k >= len(coeffs):
        raise ValueError(f"moment of order {order} needs coefficients up to m_{k}")
    return Fraction(2, v) * newton_power_sums(coeffs, k)[k - 1]


def tree_moment(d: int, order: int) -> int:
    """Closed-walk count of length `order` at the root of the infinite d-regular tree."""
    if d < 1:
        raise ValueError("degree must be positive")
    if order < 0 or order % 2:
        raise ValueError("odd moments vanish; order must be even")
    steps = order
    dist = {0: 1}
    for _ in range(steps):
        nxt: dict[int, int] = {}
        for j, ways in dist.items():
            up = d if j == 0 else d - 1
            if up:
                nxt[j + 1] = nxt.get(j + 1, 0) + ways * up
            if j > 0:
                nxt[j - 1] = nxt.get(j - 1, 0) + ways
        dist = nxt
    return dist.get(0, 0)


def kesten_mckay_density(d: int, x: float) -> float:
    """Spectral density of the infinite d-regular tree at x."""
    if d < 2:
        raise ValueError("density needs degree at least 2")
    lim = 4 * (d - 1)
    if x * x >= lim:
        return 0.0
    return d * math.sqrt(lim - x * x) / (2 * math.pi * (d * d - x * x))


# ------------------------------------------------------- matching measure

@dataclass(frozen=True)
class MatchingMeasure:
    """Atomic measure: mass mult/v at +-sqrt(g_i), the rest at zero."""

    spectrum: Spectrum

    @property
    def zero_mass(self) -> Fraction:
        p = self.spectrum.poly
        return Fraction(p.v - 2 * p.nu, p.v)

    def atoms(self) -> list[tuple[float, Fraction]]:
        """(location, mass) sorted by location; midpoint locations."""
        v = self.spectrum.v
        out = []
        for e in reversed(self.spectrum.entries):
            out.append((-math.sqrt(e.midpoint), Fraction(e.multiplicity, v)))
        if self.zero_mass:
            out.append((0.0, self.zero_mass))
        for e in self.spectrum.entries:
            out.append((math.sqrt(e.midpoint), Fraction(e.multiplicity, v)))
        return out

    def interval_mass(self, s) -> Fraction:
        """Exact mass of [-s, s]."""
        s = Fraction(s)
        if s < 0:
            raise ValueError("s must be nonnegative")
        inside = self.spectrum.count_leq(s * s)
        return Fraction(2 * inside, self.spectrum.v) + self.zero_mass

    def to_csv(self) -> str:
        lines = ["location,mass"]
        for loc, mass in self.atoms():
            lines.append(f"{loc:.12g},{_frac_str(mass)}")
        return "\n".join(lines) + "\n"


def matching_measure(spectrum: Spectrum) -> MatchingMeasure:
    return MatchingMeasure(spectrum)
