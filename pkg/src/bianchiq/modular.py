"""Exact q-expansions of the named modular functions.

Everything is built from the q-Pochhammer product kernel and exact series
arithmetic: the degree-5 hauptmodul phi, the three 2-torsion parameters
g1, g2, g3 and their discriminant delta, the eta quotients j5 and j10, and
the modular j-function.  A process-wide cache serves each name at the
highest order computed so far; callers always receive a view truncated to
exactly the order they asked for, so results do not depend on cache state.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .exact import PuiseuxSeries, pochhammer_product

NAMES = ("phi", "phi5", "g1", "g2", "g3", "delta", "j5", "j10", "j", "eta", "neg_g2_2tau")

ROGERS_RAMANUJAN_FACTORS = ((1, 5, 1), (4, 5, 1), (2, 5, -1), (3, 5, -1))


class UnknownName(KeyError):
    """A series name outside the published catalog."""


def phi_series(order) -> PuiseuxSeries:
    """q^(1/5) prod (1-q^(5n-1))(1-q^(5n-4)) / ((1-q^(5n-2))(1-q^(5n-3)))."""
    order = Fraction(order)
    if order <= Fraction(1, 5):
        raise ValueError("order must exceed 1/5")
    return pochhammer_product(ROGERS_RAMANUJAN_FACTORS, Fraction(1, 5), order)


def eta_series(order) -> PuiseuxSeries:
    """Dedekind eta: q^(1/24) prod (1-q^n)."""
    return pochhammer_product([(0, 1, 1)], Fraction(1, 24), order)


def gi_series(i: int, order) -> PuiseuxSeries:
    """The three cubic roots as functions of tau:

    g1 = phi(tau)^2 / phi(2 tau)
    g2 = -phi(tau/2) phi(tau)^2
    g3 = phi(tau) phi(2 tau) / phi(tau/2)

    assembled by exponent substitution, never by solving the cubic, so the
    root property stays a genuine downstream check.
    """
    if i not in (1, 2, 3):
        raise ValueError("root index must be 1, 2, or 3")
    order = Fraction(order)
    if order <= 0:
        raise ValueError("order must be positive")
    phi = phi_series(2 * order + 2)
    if i == 1:
        g = phi ** 2 / phi.subst_q_power(2)
    elif i == 2:
        g = -(phi.subst_q_power(Fraction(1, 2)) * phi ** 2)
    else:
        g = phi * phi.subst_q_power(2) / phi.subst_q_power(Fraction(1, 2))
    return g.reduce_ram().truncate(order)


def delta_series(order) -> PuiseuxSeries:
    """(g1-g2)(g2-g3)(g3-g1), the square root of the cubic discriminant."""
    order = Fraction(order)
    g1, g2, g3 = (gi_series(i, order + 2) for i in (1, 2, 3))
    return ((g1 - g2) * (g2 - g3) * (g3 - g1)).reduce_ram().truncate(order)


def eta_quotient_series(spec, order) -> PuiseuxSeries:
    """prod over (scale m, exponent e) of eta(m tau)^e.

    The integer-exponent product parts are combined at ramification 1 and
    the q^(sum m*e/24) prefactor is attached once at the end, which keeps
    the arithmetic off the 24-fold grid whenever the weights cancel.
    """
    order = Fraction(order)
    spec = [(int(m), int(e)) for m, e in spec]
    for m, _ in spec:
        if m < 1:
            raise ValueError("eta scale must be >= 1")
    pre = sum(Fraction(m * e, 24) for m, e in spec)
    if order <= pre:
        raise ValueError("order must exceed the leading exponent")
    body = PuiseuxSeries.one(order - pre + 1)
    for m, e in spec:
        part = pochhammer_product([(0, 1, e)], Fraction(0), (order - pre) / m + 1)
        body = body * part.subst_q_power(m)
    if pre:
        body = body * PuiseuxSeries.monomial(pre, order + 1)
    return body.truncate(order)


def _sigma3(n: int) -> int:
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


def j_series(order) -> PuiseuxSeries:
    """Modular j as E4^3 / eta^24 with E4 = 1 + 240 sum sigma_3(n) q^n."""
    order = Fraction(order)
    if order <= -1:
        raise ValueError("order must exceed -1, the pole order of j")
    m = int(math.ceil(order)) + 3
    e4 = PuiseuxSeries.from_terms(
        {0: 1, **{n: 240 * _sigma3(n) for n in range(1, m)}}, m
    )
    eta24 = pochhammer_product([(0, 1, 24)], Fraction(1), m)
    return (e4 ** 3 / eta24).reduce_ram().truncate(order)


def _build(name: str, order: Fraction) -> PuiseuxSeries:
    if name == "phi":
        return phi_series(order)
    if name == "phi5":
        return (phi_series(order + 1) ** 5).reduce_ram().truncate(order)
    if name in ("g1", "g2", "g3"):
        return gi_series(int(name[1]), order)
    if name == "delta":
        return delta_series(order)
    if name == "j5":
        return eta_quotient_series([(1, 6), (5, -6)], order)
    if name == "j10":
        return eta_quotient_series([(2, 1), (5, 5), (1, -1), (10, -5)], order)
    if name == "j":
        return j_series(order)
    if name == "eta":
        return eta_series(order)
    if name == "neg_g2_2tau":
        return (-gi_series(2, order / 2 + 1).subst_q_power(2)).reduce_ram().truncate(order)
    raise UnknownName(name)


_cache: dict[str, PuiseuxSeries] = {}
_cache_lock = threading.Lock()


def named_series(name: str, order=30) -> PuiseuxSeries:
    """Memoized lookup of a named expansion at (at least) the given order.

    The returned series is truncated to exactly ``order`` so the value seen
    by callers is independent of what the cache happens to hold.
    """
    if name not in NAMES:
        raise UnknownName(name)
    order = Fraction(order)
    with _cache_lock:
        hit = _cache.get(name)
        if hit is not None and hit.order >= order:
            return hit.truncate(order)
    built = _build(name, order)
    with _cache_lock:
        hit = _cache.get(name)
        if hit is None or hit.order < built.order:
            _cache[name] = built
    return built.truncate(order)
