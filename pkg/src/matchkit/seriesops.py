"""Dense polynomial and truncated power-series arithmetic over exact numbers.

Polynomials and series are plain coefficient lists, index = degree.
Integer lists stay integer; series routines work over Fraction.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "poly_shift",
    "poly_eval",
    "poly_derivative",
    "poly_trim",
    "series_mul",
    "series_inv",
    "series_log",
    "series_compose",
    "series_reverse",
]


def poly_trim(a):
    n = len(a)
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return out


def poly_sub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return out


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_scale(a, c):
    return [c * x for x in a]


def poly_shift(a, k=1):
    """Multiply by t^k."""
    return [0] * k + list(a)


def poly_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_derivative(a):
    return [i * a[i] for i in range(1, len(a))]


def _trunc(a, order):
    out = list(a[: order + 1])
    out.extend([Fraction(0)] * (order + 1 - len(out)))
    return out


def series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        hi = order - i
        for j, y in enumerate(b[: hi + 1]):
            if y:
                out[i + j] += x * y
    return out


def series_inv(a, order):
    """Multiplicative inverse; a[0] must be nonzero."""
    if not a or a[0] == 0:
        raise ValueError("series has no multiplicative inverse")
    a = _trunc(a, order)
    inv = [Fraction(0)] * (order + 1)
    inv[0] = Fraction(1, 1) / a[0]
    for k in range(1, order + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            s += a[i] * inv[k - i]
        inv[k] = -s / a[0]
    return inv


def series_log(a, order):
    """log of a series with constant term 1, via (log a)' = a'/a."""
    if not a or a[0] != 1:
        raise ValueError("series_log needs constant term 1")
    a = _trunc(a, order)
    da = [Fraction(i + 1) * a[i + 1] for i in range(order)]
    q = series_mul(da, series_inv(a, order - 1) if order else [], max(order - 1, 0))
    out = [Fraction(0)] * (order + 1)
    for i in range(1, order + 1):
        out[i] = q[i - 1] / i
    return out


def series_compose(a, b, order):
    """a(b(p)) truncated; b must have zero constant term."""
    if b and b[0] != 0:
        raise ValueError("inner series must vanish at 0")
    out = [Fraction(0)] * (order + 1)
    for c in reversed(_trunc(a, order)):
        out = series_mul(out, b, order)
        out[0] += Fraction(c)
    return out


def series_reverse(a, order):
    """Compositional inverse of a series with a[0]=0, a[1] != 0."""
    if len(a) < 2 or a[0] != 0 or a[1] == 0:
        raise ValueError("series_reverse needs a[0]=0 and a[1] nonzero")
    a = _trunc(a, order)
    g = [Fraction(0), Fraction(1, 1) / a[1]]
    for k in range(2, order + 1):
        g.append(Fraction(0))
        comp = series_compose(a, g, k)
        g[k] = -comp[k] / a[1]
    return g
