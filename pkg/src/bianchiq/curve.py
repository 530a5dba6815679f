"""The Bianchi quintic in P^4 over a pluggable coefficient domain.

A point is a plain 5-tuple of coordinates; the same formulas serve two
domains: binary64 complex numbers (zero tests are relative-tolerance) and
exact Puiseux series (zero tests are exact through the known window).

Curve, for a parameter phi:

    x_k^2 + phi * x_{k+2} x_{k-2} - (1/phi) * x_{k+1} x_{k-1} = 0,  k mod 5

with neutral element O = (0 : phi : -1 : 1 : -phi) and inversion
(x0:x1:x2:x3:x4) -> (x0:x4:x3:x2:x1).

The Weierstrass map's Y-coordinate admits near-miss transcriptions (a
dropped coefficient 11 in the numerator, a halved prefactor, a doubled
x0-coefficient in one denominator) that still vanish on 2-torsion and so
evade casual spot checks.  ``weierstrass_map`` computes the forms that
satisfy Y^2 = X^3 + A X + B exactly in the series domain;
``weierstrass_map_variant`` keeps the near-miss forms as a mutation
control, and ``discriminant_check_variant`` does the same for the
sign-variant discriminant factorization.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .exact import PuiseuxSeries, QPoly

ZETA5 = cmath.exp(2j * math.pi / 5)

# Relative thresholds for the numeric domain's zero tests.
ADD_DEGENERATE_REL = 1e-12
VALUE_ZERO_ABS = 1e-30


class BothFormulasDegenerate(ArithmeticError):
    """Both addition formulas produced the zero vector: inputs are off the
    curve or numerically invalid."""


class DegenerateResult(ArithmeticError):
    """A duplication formula produced the zero vector."""


class SingularCurve(ValueError):
    """The parameter sits on the discriminant locus phi^5(1-11phi^5-phi^10)=0."""


class DenominatorVanishes(ZeroDivisionError):
    """The point lies in the exceptional locus of the birational map."""


def _is_series(v) -> bool:
    return isinstance(v, PuiseuxSeries)


def _value_is_zero(v) -> bool:
    if _is_series(v):
        return v.is_zero()
    return abs(v) < VALUE_ZERO_ABS


def _coords_all_zero(z, scale) -> bool:
    if _is_series(z[0]):
        return all(c.is_zero() for c in z)
    return max(abs(c) for c in z) < ADD_DEGENERATE_REL * scale


# -- curve membership -------------------------------------------------------

def quadric_residuals(P, phi):
    """The five quadric values; P lies on the curve iff all are zero."""
    if _value_is_zero(phi):
        raise ZeroDivisionError("phi fails the zero test; the quadrics need 1/phi")
    inv = phi.inverse() if _is_series(phi) else 1.0 / phi
    return tuple(
        P[k] * P[k] + phi * P[(k + 2) % 5] * P[(k - 2) % 5] - inv * P[(k + 1) % 5] * P[(k - 1) % 5]
        for k in range(5)
    )


def max_quadric_residual(P, phi) -> float:
    """Largest residual relative to the largest monomial, numeric domain."""
    inv = 1.0 / phi
    worst = 0.0
    for k in range(5):
        a = P[k] * P[k]
        b = phi * P[(k + 2) % 5] * P[(k - 2) % 5]
        c = inv * P[(k + 1) % 5] * P[(k - 1) % 5]
        scale = max(abs(a), abs(b), abs(c), 1e-300)
        worst = max(worst, abs(a + b - c) / scale)
    return worst


# -- group structure --------------------------------------------------------

def neutral(phi):
    """O = (0 : phi : -1 : 1 : -phi)."""
    if _is_series(phi):
        one = phi ** 0
        zero = one - one
        return (zero, phi, -one, one, -phi)
    return (0j, complex(phi), -1 + 0j, 1 + 0j, -complex(phi))


def negate(P):
    """Multiplication by -1: reverse the tail of the coordinate vector."""
    return (P[0], P[4], P[3], P[2], P[1])


def _a1(x, y):
    return (
        x[2] * x[3] * y[0] ** 2 - x[0] ** 2 * y[2] * y[3],
        x[0] * x[1] * y[3] ** 2 - x[3] ** 2 * y[0] * y[1],
        x[3] * x[4] * y[1] ** 2 - x[1] ** 2 * y[3] * y[4],
        x[1] * x[2] * y[4] ** 2 - x[4] ** 2 * y[1] * y[2],
        x[4] * x[0] * y[2] ** 2 - x[2] ** 2 * y[4] * y[0],
    )


def _a2(x, y):
    return (
        x[1] * x[0] * y[2] ** 2 - x[3] ** 2 * y[0] * y[4],
        x[4] * x[3] * y[0] ** 2 - x[1] ** 2 * y[3] * y[2],
        x[2] * x[1] * y[3] ** 2 - x[4] ** 2 * y[1] * y[0],
        x[0] * x[4] * y[1] ** 2 - x[2] ** 2 * y[4] * y[3],
        x[3] * x[2] * y[4] ** 2 - x[0] ** 2 * y[2] * y[1],
    )


def _pair_scale(x, y) -> float:
    return max(abs(c) for c in x) ** 2 * max(abs(c) for c in y) ** 2


def add(P, Q, phi=None):
    """P + Q via the biquadratic formula A1, falling back to A2 when A1
    degenerates (Q a fifth-root-of-unity twist of P).

    Degeneracy is detected on the output: the A1 vector fails the nonzero
    invariant.  At least one of the two formulas yields a valid point for
    genuine curve points.
    """
    scale = None if _is_series(P[0]) else _pair_scale(P, Q)
    z = _a1(P, Q)
    if not _coords_all_zero(z, scale):
        return z
    z = _a2(P, Q)
    if _coords_all_zero(z, scale):
        raise BothFormulasDegenerate("both addition formulas vanished")
    return z


def add_a1(P, Q):
    return _a1(P, Q)


def add_a2(P, Q):
    return _a2(P, Q)


def double(P, phi=None):
    """2P by the mixed duplication family
    z_k = x_{3k} x_{3k+1} x_{3k+2}^2 - x_{3k} x_{3k-1} x_{3k-2}^2."""
    z = tuple(
        P[(3 * k) % 5] * P[(3 * k + 1) % 5] * P[(3 * k + 2) % 5] ** 2
        - P[(3 * k) % 5] * P[(3 * k - 1) % 5] * P[(3 * k - 2) % 5] ** 2
        for k in range(5)
    )
    scale = None if _is_series(P[0]) else max(abs(c) for c in P) ** 4
    if _coords_all_zero(z, scale):
        raise DegenerateResult("duplication formula vanished")
    return z


def double_cubic(P):
    """2P by the cubic duplication family
    z_k = x_{3k+2} x_{3k+1}^3 - x_{3k-1}^3 x_{3k-2} (cross-check route)."""
    return tuple(
        P[(3 * k + 2) % 5] * P[(3 * k + 1) % 5] ** 3
        - P[(3 * k - 1) % 5] ** 3 * P[(3 * k - 2) % 5]
        for k in range(5)
    )


def multiply(P, n: int, phi=None):
    """n*P by repeated addition (n >= 1); used for torsion-order checks."""
    if n < 1:
        raise ValueError("multiplier must be >= 1")
    acc = P
    for _ in range(n - 1):
        acc = add(acc, P, phi)
    return acc


# -- projective comparison --------------------------------------------------

def projective_distance(P, Q) -> float:
    """1 - |<P,Q>|^2 / (|P|^2 |Q|^2): scale-invariant, 0 iff proportional."""
    ip = sum(p * q.conjugate() for p, q in zip(P, Q))
    n1 = sum(abs(p) ** 2 for p in P)
    n2 = sum(abs(q) ** 2 for q in Q)
    return max(0.0, 1.0 - abs(ip) ** 2 / (n1 * n2))


def projective_equal_series(P, Q) -> bool:
    """Exact projective equality: all 2x2 minors vanish through the window."""
    for i in range(5):
        for j in range(i + 1, 5):
            if not (P[i] * Q[j] - P[j] * Q[i]).is_zero():
                return False
    return True


def normalize_numeric(P):
    """Divide by the coordinate of largest modulus (first among ties)."""
    idx = max(range(5), key=lambda k: (abs(P[k]), -k))
    piv = P[idx]
    return tuple(c / piv for c in P)


# -- torsion ----------------------------------------------------------------

def cubic_roots(phi):
    """Roots of xi^3 - xi^2 + phi^5 xi + phi^5.

    Numeric domain: companion-matrix eigenvalues (branch-cut free).  Series
    domain: the g_i expansions from the modular module, so the root property
    remains a downstream check rather than a construction.
    """
    if _is_series(phi):
        from .modular import gi_series

        return tuple(gi_series(i, phi.order) for i in (1, 2, 3))
    t = complex(phi) ** 5
    roots = np.roots([1.0, -1.0, t, t])
    return tuple(sorted((complex(r) for r in roots), key=lambda v: (v.real, v.imag)))


def curve_discriminant_value(phi):
    """4 phi^5 (1 - 11 phi^5 - phi^10): vanishes exactly on singular fibers."""
    t = phi ** 5
    return 4 * t * (1 - 11 * t - t * t)


def two_torsion_points(phi):
    """The three 2-torsion points (phi^3 + phi^3/g : phi : g : g : phi)."""
    if _value_is_zero(phi) or _value_is_zero(curve_discriminant_value(phi)):
        raise SingularCurve("discriminant zero test fired; 2-torsion is degenerate")
    pts = []
    for g in cubic_roots(phi):
        x0 = phi ** 3 + phi ** 3 / g
        pts.append((x0, phi, g, g, phi))
    return tuple(pts)


def five_torsion_points(phi: complex):
    """All 25 points of order dividing 5: index twists and cyclic shifts of O.

    The twist multiplies coordinate k by zeta5^(-k*m); the shift rotates
    coordinates cyclically.  Each point has exactly one zero coordinate.
    """
    O = neutral(complex(phi))
    pts = []
    for m in range(5):
        twisted = tuple(ZETA5 ** (-k * m) * O[k] for k in range(5))
        for b in range(5):
            pts.append(tuple(twisted[(k - b) % 5] for k in range(5)))
    return tuple(pts)


# -- plane models -----------------------------------------------------------

def plane_model_residual(model: str, coords, phi=None):
    """Evaluate a plane-model polynomial; zero iff the coordinates lie on it.

    quintic      (x0, x1, x2; phi)  degree-5 plane image of the curve
    hulek_craig  (x0, x1, x2)       2-torsion parameter curve, genus 4
    bring2       (x1, x2; phi)      the same curve with x0 eliminated
    kk           (xi; phi)          the cubic xi^3 - xi^2 + phi^5 xi + phi^5
    weber        (x, y)             y^5 (x-1) - (x+1) x^2
    """
    if model == "quintic":
        x0, x1, x2 = coords
        t = phi ** 5
        return (
            phi ** 6 * x0 ** 5
            + phi * x1 ** 5
            + phi ** 6 * x2 ** 5
            + phi ** 4 * (t + 3) * x0 ** 2 * x1 * x2 ** 2
            - (2 * t + 1) * x0 * x2 * x1 ** 3
        )
    if model == "hulek_craig":
        x0, x1, x2 = coords
        return (
            x0 ** 4 * x1 * x2
            - x0 ** 2 * x1 ** 2 * x2 ** 2
            - x0 * x1 ** 5
            - x0 * x2 ** 5
            + 2 * x1 ** 3 * x2 ** 3
        )
    if model == "bring2":
        x1, x2 = coords
        return phi ** 4 * x1 ** 2 * x2 + phi ** 3 * x1 ** 3 + phi * x2 ** 3 - x1 * x2 ** 2
    if model == "kk":
        (xi,) = coords
        t = phi ** 5
        return xi ** 3 - xi ** 2 + t * xi + t
    if model == "weber":
        x, y = coords
        return y ** 5 * (x - 1) - (x + 1) * x ** 2
    raise ValueError(f"unknown plane model {model!r}")


# -- Weierstrass form -------------------------------------------------------

P20 = QPoly.from_terms({20: 1, 15: -228, 10: 494, 5: 228, 0: 1})
P30 = QPoly.from_terms({30: 1, 25: 522, 20: -10005, 10: -10005, 5: -522, 0: 1})
WEIERSTRASS_A = P20 * Fraction(-1, 48)
WEIERSTRASS_B = P30 * Fraction(1, 864)


def discriminant_check() -> bool:
    """(P20^3 - P30^2)/1728 == phi^5 (1 - 11 phi^5 - phi^10)^5, exactly."""
    lhs = (P20 ** 3 - P30 ** 2) / 1728
    rhs = QPoly.from_terms({5: 1}) * QPoly.from_terms({0: 1, 5: -11, 10: -1}) ** 5
    return lhs == rhs


def discriminant_check_variant() -> bool:
    """Mutation control: the sign-variant inner factor phi^10 - 11 phi^5 + 1
    in place of 1 - 11 phi^5 - phi^10.  Measures False, guarding the real
    check against accepting the wrong sign pattern."""
    lhs = (P20 ** 3 - P30 ** 2) / 1728
    rhs = QPoly.from_terms({5: 1}) * QPoly.from_terms({0: 1, 5: -11, 10: 1}) ** 5
    return lhs == rhs


def _check_nonzero_denominator(v, scale):
    if _is_series(v):
        if v.is_zero():
            raise DenominatorVanishes("series denominator is zero through its window")
        return
    if abs(v) < 1e-12 * scale:
        raise DenominatorVanishes("point lies in the exceptional locus of the map")


def weierstrass_x(P, phi):
    """The X coordinate of the birational map to Y^2 = X^3 + A X + B."""
    x0, x1, x2, x3, x4 = P
    scale = 1.0 if _is_series(x0) else max(abs(c) for c in P)
    _check_nonzero_denominator(x0, scale)
    t = phi ** 5
    inv0 = x0.inverse() if _is_series(x0) else 1.0 / x0
    inv0sq = inv0 * inv0
    return (
        (phi ** 10 + 30 * t + 1) / 12
        - phi ** 2 * (2 * t + 1) * (x1 + x4) * inv0
        - phi ** 3 * (t - 2) * (x2 + x3) * inv0
        - 5 * phi ** 3 * x2 * inv0
        + 5 * phi ** 4 * x1 * (x1 - phi * x2 + phi * x3 - x4) * inv0sq
        + 5 * phi ** 5 * x2 * x4 * inv0sq
    )


def weierstrass_map(P, phi):
    """(X, Y_a, Y_b) of the birational map; contract Y_a = Y_b and
    Y^2 = X^3 + A(phi) X + B(phi).

    Y_a = (phi^11 + 11 phi^6 - phi)^2 (x2-x3)
          / (2 phi ((7-phi^5) phi^3 x0 + (7 phi^5+1)(x1+x4) + (3-4 phi^5) phi (x2+x3)))
    Y_b = (phi^11 + 11 phi^6 - phi)^2 (x1-x4)
          / (2 ((7 phi^5+1) x0 + (3 phi^5+4) phi^2 (x1+x4) - (phi^5-7) phi^3 (x2+x3)))
    """
    x0, x1, x2, x3, x4 = P
    t = phi ** 5
    s = (phi ** 11 + 11 * phi ** 6 - phi) ** 2
    scale = 1.0 if _is_series(x0) else max(abs(c) for c in P)
    X = weierstrass_x(P, phi)
    da = 2 * phi * ((7 - t) * phi ** 3 * x0 + (7 * t + 1) * (x1 + x4) + (3 - 4 * t) * phi * (x2 + x3))
    db = 2 * ((7 * t + 1) * x0 + (3 * t + 4) * phi ** 2 * (x1 + x4) - (t - 7) * phi ** 3 * (x2 + x3))
    _check_nonzero_denominator(da, scale)
    _check_nonzero_denominator(db, scale)
    ya = s * (x2 - x3) * (da.inverse() if _is_series(da) else 1.0 / da)
    yb = s * (x1 - x4) * (db.inverse() if _is_series(db) else 1.0 / db)
    return X, ya, yb


def weierstrass_map_variant(P, phi):
    """Mutation control: the near-miss Y expressions (numerator
    (phi^11 + phi^6 - phi)^2, prefactors 1/phi and 1/2, x0-coefficient
    7 - 2 phi^5).  These vanish on 2-torsion like the real map but fail the
    Weierstrass equation elsewhere, which the tests assert."""
    x0, x1, x2, x3, x4 = P
    t = phi ** 5
    s = (phi ** 11 + phi ** 6 - phi) ** 2
    X = weierstrass_x(P, phi)
    da = phi * ((7 - 2 * t) * phi ** 3 * x0 + (7 * t + 1) * (x1 + x4) + (3 - 4 * t) * phi * (x2 + x3))
    db = 2 * ((7 * t + 1) * x0 + (3 * t + 4) * phi ** 2 * (x1 + x4) - (t - 7) * phi ** 3 * (x2 + x3))
    ya = s * (x2 - x3) * (da.inverse() if _is_series(da) else 1.0 / da)
    yb = s * (x1 - x4) * (db.inverse() if _is_series(db) else 1.0 / db)
    return X, ya, yb


def weierstrass_residual(X, Y, phi):
    """Y^2 - (X^3 + A(phi) X + B(phi)) for a numeric or series phi."""
    a = WEIERSTRASS_A(phi)
    b = WEIERSTRASS_B(phi)
    return Y * Y - (X ** 3 + a * X + b)
