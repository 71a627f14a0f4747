"""Univariate exact polynomials: interpolation and rational-series numerators.

Polynomials are tuples of ``Fraction`` coefficients in ascending degree.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Sequence

from .errors import NotRationalOfClaimedFormError

UniPoly = tuple[Fraction, ...]


def trim(coeffs: Sequence) -> UniPoly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_eval(coeffs: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _mul_linear(coeffs: list[Fraction], root: int) -> list[Fraction]:
    """Multiply by ``(x - root)``."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        out[k + 1] += c
        out[k] -= root * c
    return out


def interpolate(values: Sequence[int]) -> UniPoly:
    """The polynomial of degree < len(values) through ``(d, values[d])``, via forward differences."""
    diffs = [Fraction(v) for v in values]
    leading = []
    while diffs:
        leading.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    result = [Fraction(0)] * len(values)
    falling = [Fraction(1)]  # x (x-1) ... (x-k+1)
    factorial = 1
    for k, delta in enumerate(leading):
        if k:
            falling = _mul_linear(falling, k - 1)
            factorial *= k
        for i, c in enumerate(falling):
            result[i] += delta * c / factorial
    return trim(result)


def format_poly(coeffs: Sequence, var: str = "d") -> str:
    """``(5d^3 + 11d^2 + 8d + 2)/2`` style rendering with a common denominator."""
    coeffs = trim(coeffs)
    if not coeffs:
        return "0"
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        num = coeffs[k] * den
        if num == 0:
            continue
        num = int(num)
        mag = abs(num)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append(("-" if num < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    if den != 1:
        text = f"({text})/{den}"
    return text


def series_numerator(values: Sequence[int], power: int) -> UniPoly:
    """Numerator ``N(t)`` with ``sum_d values[d] t^d = N(t) / (1-t)^power``.

    Coefficients of the truncated product beyond degree ``power - 1`` must
    vanish; at least ``power`` values are needed to determine ``N``.
    """
    if len(values) < power:
        raise NotRationalOfClaimedFormError(
            f"{len(values)} values cannot determine a numerator over (1-t)^{power}"
        )
    factor = [(-1) ** k * comb(power, k) for k in range(power + 1)]
    product = []
    for d in range(len(values)):
        product.append(sum(factor[k] * values[d - k] for k in range(min(d, power) + 1)))
    for d in range(power, len(values)):
        if product[d] != 0:
            raise NotRationalOfClaimedFormError(
                f"coefficient of t^{d} is {product[d]}, expected 0 for denominator (1-t)^{power}"
            )
    return trim(product[:power])
