"""Shared output formatting: stable floats, rationals, JSON, file writing."""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction

__all__ = ["fmt_float", "fmt_frac", "fmt_value", "stable_json",
           "write_or_print", "parse_rational"]


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def fmt_frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fmt_value(x):
    """Formatting used in JSON artifacts: rationals as num/den strings,
    floats trimmed to 12 significant digits, everything else untouched."""
    if isinstance(x, Fraction):
        return fmt_frac(x)
    if isinstance(x, float):
        return float(fmt_float(x))
    if isinstance(x, dict):
        return {k: fmt_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt_value(v) for v in x]
    return x


def stable_json(obj) -> str:
    """Insertion-ordered JSON with normalized values; byte-stable per input."""
    return json.dumps(fmt_value(obj), indent=2) + "\n"


def write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    d = os.path.dirname(out)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(out, "w") as fh:
        fh.write(text)


def parse_rational(s: str) -> Fraction:
    """Accepts "3/7", "0.25", or "2"."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(s)
