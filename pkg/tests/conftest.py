"""Shared test helpers.

The dict-based series code here is a deliberately independent oracle: plain
{exponent: Fraction} arithmetic with hard truncation, sharing no code with
the package kernel.
"""

from fractions import Fraction

import pytest


def dict_mul(a: dict, b: dict, cap: Fraction) -> dict:
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e < cap:
                out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def dict_product_factor(series: dict, n: int, exponent: int, cap: Fraction) -> dict:
    """Multiply by (1 - q^n)^exponent, exponent any integer, truncating at cap."""
    out = dict(series)
    for _ in range(abs(exponent)):
        if exponent > 0:
            out = dict_mul(out, {Fraction(0): Fraction(1), Fraction(n): Fraction(-1)}, cap)
        else:
            # divide by (1 - q^n): multiply by the geometric series
            geo = {Fraction(0): Fraction(1)}
            k = n
            while k < cap:
                geo[Fraction(k)] = Fraction(1)
                k += n
            out = dict_mul(out, geo, cap)
    return out


def brute_force_product(factor_exponents, cap: Fraction, prefactor: Fraction = Fraction(0)) -> dict:
    """prod over (n, e) of (1-q^n)^e times q^prefactor, truncated at cap."""
    out = {Fraction(0): Fraction(1)}
    for n, e in factor_exponents:
        out = dict_product_factor(out, n, e, cap - prefactor)
    if prefactor:
        out = {e + prefactor: c for e, c in out.items()}
    return out


def series_coeff(series, e) -> Fraction:
    return series.coefficient(Fraction(e))


@pytest.fixture(scope="session")
def phi30():
    from bianchiq.modular import named_series

    return named_series("phi", 31)
