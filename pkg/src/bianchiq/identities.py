"""Registry of every named identity as an executable check.

Three kinds of check:

* ``exact_series``: a residual Puiseux series over Q must vanish in every
  coefficient through the configured order.  No tolerance is consulted.
* ``exact_poly``: an exact polynomial equality over Q.
* ``numeric``: a theta-function identity sampled at seeded random points in
  the configured tau box; passes iff the worst relative residual is below
  the configured tolerance.

Checks are deterministic given a VerifyConfig: per-check random streams are
derived from the seed and the check name, so results are independent of
execution order.  Where an identity admits a near-miss variant (a flipped
nullwert cube in the uniform duplication line, a sign-variant discriminant
factor, near-miss Weierstrass Y expressions), the registry checks the form
that actually verifies and the variant is kept as a mutation control; see
``duplication_uniform_sign`` and the curve module.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import curve, modular, theta
from .exact import PuiseuxSeries, QPoly

_ORDER_SLACK = 8


class UnknownName(KeyError):
    """A check name outside the registry."""


@dataclass(frozen=True)
class VerifyConfig:
    series_order: int = 30
    tol: float = 1e-9
    samples: int = 20
    seed: int = 7
    tau_re: tuple[float, float] = (-0.5, 0.5)
    tau_im: tuple[float, float] = (0.8, 2.0)

    def __post_init__(self):
        if self.series_order < 10:
            raise ValueError("series_order must be >= 10")
        if not (0.0 < self.tol < 1e-4):
            raise ValueError("tol must lie in (0, 1e-4)")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")

    def rng_for(self, name: str) -> random.Random:
        h = int.from_bytes(hashlib.sha256(name.encode()).digest()[:8], "big")
        return random.Random(self.seed ^ h)

    def random_tau(self, rng) -> complex:
        return complex(rng.uniform(*self.tau_re), rng.uniform(*self.tau_im))

    @staticmethod
    def random_z(rng) -> complex:
        return complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))


@dataclass(frozen=True)
class CheckResult:
    name: str
    kind: str
    status: str  # pass | fail
    worst_residual: float | None = None
    first_failing_exponent: str | None = None
    order: str | None = None
    samples: int | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "status": self.status}
        if self.kind == "numeric":
            out["worst_residual"] = self.worst_residual
            out["samples"] = self.samples
        else:
            if self.first_failing_exponent is not None:
                out["first_failing_exponent"] = self.first_failing_exponent
            out["order"] = self.order
        return out


@dataclass(frozen=True)
class Report:
    config: VerifyConfig
    checks: tuple[CheckResult, ...]
    passed: int
    failed: int
    elapsed_ms: float

    def all_passed(self) -> bool:
        return self.failed == 0

    def to_json(self, with_elapsed: bool = True) -> dict:
        out = {
            "config": {
                "series_order": self.config.series_order,
                "tol": self.config.tol,
                "samples": self.config.samples,
                "seed": self.config.seed,
                "tau_re": list(self.config.tau_re),
                "tau_im": list(self.config.tau_im),
            },
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
            "failed": self.failed,
        }
        if with_elapsed:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            if c.kind == "numeric":
                detail = f"worst_residual={c.worst_residual:.3e}"
            elif c.status != "pass":
                detail = f"first_failing_exponent={c.first_failing_exponent}"
            elif c.kind == "exact_poly":
                detail = "exact polynomial equality"
            else:
                detail = f"zero through q^{c.order}"
            lines.append(f"{c.status.upper():4s} {c.name:35s} [{c.kind}] {detail}")
        lines.append(f"passed {self.passed}, failed {self.failed}")
        return "\n".join(lines)


# -- exact-series environment ------------------------------------------------


class SeriesEnv:
    """Named-series fetcher at the working order, with an optional one-term
    mutation of a single input (used to prove checks are not vacuous)."""

    def __init__(self, cfg: VerifyConfig, mutate: str | None = None):
        self.order = Fraction(cfg.series_order) + _ORDER_SLACK
        self.target = Fraction(cfg.series_order)
        self.mutate = mutate

    def get(self, name: str) -> PuiseuxSeries:
        s = modular.named_series(name, self.order)
        if name == self.mutate:
            s = s + PuiseuxSeries.monomial(7, self.order)
        return s


def _first_nonzero(residuals, through: Fraction):
    """First exponent <= `through` with a nonzero coefficient, or None.

    Raises if any residual's provable window fails to cover `through`."""
    worst = None
    for r in residuals:
        if r.order <= through:
            raise ArithmeticError(
                f"residual known only to q^{r.order}, need beyond q^{through}; raise the slack"
            )
        lead = next((e for e, _ in r.terms()), None)
        if lead is not None and lead <= through and (worst is None or lead < worst):
            worst = lead
    return worst


# -- exact-series check bodies ------------------------------------------------


def _res_sym_e1(env):
    return [env.get("g1") + env.get("g2") + env.get("g3") - 1]


def _res_sym_e2(env):
    g1, g2, g3 = env.get("g1"), env.get("g2"), env.get("g3")
    return [g1 * g2 + g2 * g3 + g3 * g1 - env.get("phi5")]


def _res_sym_e3(env):
    return [env.get("g1") * env.get("g2") * env.get("g3") + env.get("phi5")]


def _res_cubic_root(i):
    def body(env):
        g = env.get(f"g{i}")
        t = env.get("phi5")
        return [g ** 3 - g ** 2 + t * g + t]

    return body


def _res_delta_squared(env):
    t = env.get("phi5")
    return [env.get("delta") ** 2 - 4 * t * (1 - 11 * t - t ** 2)]


def _res_g1_from_xy(env):
    # g1 = (W - Y^2)/(W + Y^2), Y = delta/(2 g1), W = 1 - 11 phi^5 - phi^10;
    # cleared of denominators by 4 g1^2.
    g1, t, d = env.get("g1"), env.get("phi5"), env.get("delta")
    w = 1 - 11 * t - t ** 2
    return [4 * g1 ** 2 * w * (g1 - 1) + d ** 2 * (g1 + 1)]


def _res_defeq_gamma10(env):
    # Y^2 (W - Y^2)^2 = X^5 W (W + Y^2)^2 at X = phi, Y = delta/(2 g1),
    # cleared by (4 g1^2)^3: u (W v - u)^2 - t W v (W v + u)^2 with
    # u = delta^2, v = 4 g1^2.
    g1, t, d = env.get("g1"), env.get("phi5"), env.get("delta")
    w = 1 - 11 * t - t ** 2
    u = d ** 2
    v = 4 * g1 ** 2
    return [u * (w * v - u) ** 2 - t * w * v * (w * v + u) ** 2]


def _res_ramanujan(env):
    ng, g1 = env.get("neg_g2_2tau"), env.get("g1")
    return [ng * (1 + g1) - (1 - g1)]


def _res_g1g2(env):
    x, y = env.get("g1"), env.get("g2")
    return [x ** 2 * y + x * y ** 2 + x ** 2 + y ** 2 - x - y]


def _res_g1g2_weierstrass(env):
    # X = (2-s)/s, Y = d(2-s)/s^2 with s = g1+g2, d = g1-g2 satisfy
    # Y^2 = X^3 + X^2 - X; cleared by s^4.
    s = env.get("g1") + env.get("g2")
    d = env.get("g1") - env.get("g2")
    w = 2 - s
    return [d ** 2 * w ** 2 - s * w ** 3 - s ** 2 * w ** 2 + s ** 3 * w]


def _res_g2_defeq(env):
    # Y^2 = X^3 - 11 X^2 - X at X = -phi^5, Y = delta/2.
    t, d = env.get("phi5"), env.get("delta")
    x = -t
    return [(d / 2) ** 2 - (x ** 3 - 11 * x ** 2 - x)]


def _res_bring_kk(env):
    # the cubic field equation of the genus-4 group: Y^3 - Y^2 + X^5 Y + X^5
    # at X = phi, Y = g1.
    phi, g1 = env.get("phi"), env.get("g1")
    t = phi ** 5
    return [g1 ** 3 - g1 ** 2 + t * g1 + t]


def _res_genus5_defeq(env):
    # Y^2 = X^5 (1 - 11 X^5 - X^10) at X = phi, Y = delta/2.
    t, d = env.get("phi5"), env.get("delta")
    return [(d / 2) ** 2 - t * (1 - 11 * t - t ** 2)]


def _res_phi5_from_g1(env):
    g1, t = env.get("g1"), env.get("phi5")
    return [t * (1 + g1) - g1 ** 2 + g1 ** 3]


def _res_j5_phi(env):
    t = env.get("phi5")
    return [env.get("j5") - (t.inverse() - 11 - t)]


def _res_j5_j10(env):
    j5, j10 = env.get("j5"), env.get("j10")
    return [j5 * j10 ** 2 - (j10 + 1) * (j10 - 4) ** 2]


def _res_j10_g2(env):
    # j10 = g2(2 tau) - 1/g2(2 tau), cleared by g2(2 tau).
    h = -env.get("neg_g2_2tau")
    return [env.get("j10") * h - h ** 2 + 1]


def _res_j10_g1(env):
    g1 = env.get("g1")
    return [env.get("j10") * (1 - g1 ** 2) - 4 * g1]


def _res_hulek_craig(env):
    phi = env.get("phi")
    out = []
    for i in (1, 2, 3):
        g = env.get(f"g{i}")
        x0 = phi ** 3 + phi ** 3 / g
        out.append(curve.plane_model_residual("hulek_craig", (x0, phi, g)))
    return out


def _res_bring2_subst(env):
    # the 2-torsion parameters satisfy the x0-eliminated model, and the
    # substitution xi = phi x2 / x1 carries it to the cubic at generic xi.
    phi = env.get("phi")
    out = [
        curve.plane_model_residual("bring2", (phi, env.get(f"g{i}")), phi)
        for i in (1, 2, 3)
    ]
    t = phi ** 5
    for xi in (phi, 1 + phi, phi ** 2):
        lhs = phi ** 2 * curve.plane_model_residual("bring2", (phi ** 0, xi / phi), phi)
        out.append(lhs - (xi ** 3 - xi ** 2 + t * xi + t))
    return out


def _res_weber(env):
    return [curve.plane_model_residual("weber", (-env.get("g1"), -env.get("phi")))]


def _res_j_cross(env):
    # j * phi^5 (1 - 11 phi^5 - phi^10)^5 = P20(phi)^3, with j built
    # independently from E4 and eta^24.
    t = env.get("phi5")
    p20 = t ** 4 - 228 * t ** 3 + 494 * t ** 2 + 228 * t + 1
    disc = t * (1 - 11 * t - t ** 2) ** 5
    return [env.get("j") * disc - p20 ** 3]


_EXACT_SERIES = {
    "sym-e1": (_res_sym_e1, "g1", "elementary symmetric function e1 of the cubic roots is 1"),
    "sym-e2": (_res_sym_e2, "g2", "e2 of the cubic roots is phi^5"),
    "sym-e3": (_res_sym_e3, "g3", "e3 of the cubic roots is -phi^5"),
    "cubic-root-g1": (_res_cubic_root(1), "g1", "g1 is a root of xi^3-xi^2+phi^5 xi+phi^5"),
    "cubic-root-g2": (_res_cubic_root(2), "g2", "g2 is a root of the cubic"),
    "cubic-root-g3": (_res_cubic_root(3), "g3", "g3 is a root of the cubic"),
    "delta-squared": (_res_delta_squared, "delta", "delta^2 = 4 phi^5 (1-11 phi^5-phi^10)"),
    "g1-from-XY": (_res_g1_from_xy, "g1", "g1 = (W-Y^2)/(W+Y^2) at X=phi, Y=delta/(2 g1)"),
    "defeq-gamma10": (_res_defeq_gamma10, "delta", "the level-10 principal field equation in X=phi, Y=delta/(2 g1)"),
    "ramanujan-relation": (_res_ramanujan, "neg_g2_2tau", "-g2(2 tau) = (1-g1)/(1+g1)"),
    "g1g2-relation": (_res_g1g2, "g2", "X^2Y+XY^2+X^2+Y^2-X-Y = 0 at X=g1, Y=g2"),
    "g1g2-weierstrass": (_res_g1g2_weierstrass, "g1", "the g1,g2 curve in Weierstrass form Y^2=X^3+X^2-X"),
    "G2-defeq": (_res_g2_defeq, "delta", "Y^2=X^3-11X^2-X at X=-phi^5, Y=delta/2"),
    "bring-kk": (_res_bring_kk, "phi", "cubic field equation at X=phi, Y=g1"),
    "genus5-defeq": (_res_genus5_defeq, "delta", "Y^2=X^5(1-11X^5-X^10) at X=phi, Y=delta/2"),
    "phi5-from-g1": (_res_phi5_from_g1, "g1", "phi^5 = (g1^2-g1^3)/(1+g1)"),
    "j5-phi": (_res_j5_phi, "j5", "j5 = 1/phi^5 - 11 - phi^5"),
    "j5-j10": (_res_j5_j10, "j10", "j5 j10^2 = (j10+1)(j10-4)^2"),
    "j10-g2": (_res_j10_g2, "j10", "j10 = g2(2 tau) - 1/g2(2 tau)"),
    "j10-g1": (_res_j10_g1, "g1", "j10 = 4 g1/(1-g1^2)"),
    "hulek-craig-2tors": (_res_hulek_craig, "g1", "2-torsion parameters satisfy the genus-4 plane sextic"),
    "bring2-subst": (_res_bring2_subst, "phi", "x0-eliminated model passes to the cubic under xi = phi x2/x1"),
    "weber-model": (_res_weber, "g1", "y^5=(x+1)x^2(x-1)^(-1) at (x,y)=(-g1,-phi)"),
    "j-cross-check": (_res_j_cross, "j", "j against P20^3 over the curve discriminant"),
}


# -- exact-poly checks --------------------------------------------------------


def _poly_weier_disc(mutate: bool = False):
    p20 = curve.P20
    if mutate:
        p20 = p20 + QPoly.from_terms({15: 1})
    lhs = (p20 ** 3 - curve.P30 ** 2) / 1728
    rhs = QPoly.from_terms({5: 1}) * QPoly.from_terms({0: 1, 5: -11, 10: -1}) ** 5
    return lhs == rhs


def _poly_cubic_disc(mutate: bool = False):
    # discriminant of x^3 + a x^2 + b x + c with a=-1, b=c=phi^5:
    # 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2
    t = QPoly.from_terms({5: 1})
    a = QPoly.from_terms({0: -1})
    b = c = t
    disc = 18 * a * b * c - 4 * a ** 3 * c + a ** 2 * b ** 2 - 4 * b ** 3 - 27 * c ** 2
    closed = 4 * t * (1 - 11 * t - t ** 2)
    if mutate:
        closed = closed + QPoly.from_terms({10: 1})
    f1 = QPoly([-1, 1, 1])      # phi^2 + phi - 1
    f2 = QPoly([1, -2, 4, -3, 1])
    f3 = QPoly([1, 3, 4, 2, 1])
    factored = -4 * t * f1 * f2 * f3
    return disc == closed and disc == factored


_EXACT_POLY = {
    "weierstrass-discriminant": (
        _poly_weier_disc,
        "(P20^3 - P30^2)/1728 = phi^5 (1-11 phi^5-phi^10)^5",
    ),
    "cubic-discriminant-factorization": (
        _poly_cubic_disc,
        "cubic discriminant 4 phi^5 (1-11 phi^5-phi^10) and its three-factor form",
    ),
}


# -- numeric check bodies ------------------------------------------------------


def _rel(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def _four_product(tau, idx, args):
    out = 1.0 + 0.0j
    for k, a in zip(idx, args):
        out *= theta.theta_k(k, a, tau)
    return out


def _primed(w, x, y, z):
    return ((w + x + y + z) / 2, (w + x - y - z) / 2, (w - x + y - z) / 2, (w - x - y + z) / 2)


H = Fraction(1, 2)

# Chain identities: (lhs terms, rhs terms) over either the free (w,x,y,z)
# with the half-sum primed arguments, or the specialized argument lists.
# Each term is (sign, indices, which argument tuple: 0 = plain, 1 = primed).


def _chain_eq(number: int, cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        t = lambda k, a: theta.theta_k(k, a, tau)
        w, x, y, z = (cfg.random_z(rng) for _ in range(4))
        p = _primed(w, x, y, z)
        pl = (w, x, y, z)
        s = x + y + z
        if number == 2:
            lhs = -_four_product(tau, [3 * H, 5 * H, 5 * H, 5 * H], pl) + _four_product(tau, [4, 0, 0, 0], pl)
            rhs = _four_product(tau, [2] * 4, p) - _four_product(tau, [9 * H] * 4, p)
        elif number == 3:
            lhs = _four_product(tau, [3 * H] * 4, pl) - _four_product(tau, [4] * 4, pl)
            rhs = _four_product(tau, [H, 5 * H, 5 * H, 5 * H], p) - _four_product(tau, [3, 0, 0, 0], p)
        elif number == 4:
            lhs = -_four_product(tau, [H, 3 * H, 3 * H, 3 * H], pl) + _four_product(tau, [3, 4, 4, 4], pl)
            rhs = _four_product(tau, [0, 2, 2, 2], p) - _four_product(tau, [5 * H, 9 * H, 9 * H, 9 * H], p)
        elif number == 5:
            lhs = _four_product(tau, [H] * 4, pl) - _four_product(tau, [3] * 4, pl)
            rhs = _four_product(tau, [7 * H, 5 * H, 5 * H, 5 * H], p) - _four_product(tau, [1, 0, 0, 0], p)
        elif number == 6:
            lhs = -_four_product(tau, [9 * H, H, H, H], pl) + _four_product(tau, [2, 3, 3, 3], pl)
            rhs = _four_product(tau, [3, 2, 2, 2], p) - _four_product(tau, [H, 9 * H, 9 * H, 9 * H], p)
        elif number == 7:
            lhs = -t(7 * H, s) * t(5 * H, x) * t(5 * H, y) * t(5 * H, z) - t(1, s) * t(0, x) * t(0, y) * t(0, z)
            rhs = t(3, 0) * t(3, y + z) * t(3, z + x) * t(3, x + y) - t(H, 0) * t(H, y + z) * t(H, z + x) * t(H, x + y)
        elif number == 8:
            lhs = t(H, s) * t(H, x) * t(H, y) * t(H, z) + t(3, s) * t(3, x) * t(3, y) * t(3, z)
            rhs = t(3, 0) * t(3, y + z) * t(3, z + x) * t(3, x + y) + t(H, 0) * t(H, y + z) * t(H, z + x) * t(H, x + y)
        elif number == 9:
            lhs = t(H, s) * t(H, x) * t(H, y) * t(H, z) - t(3, s) * t(3, x) * t(3, y) * t(3, z)
            rhs = t(7 * H, s) * t(5 * H, x) * t(5 * H, y) * t(5 * H, z) - t(1, s) * t(0, x) * t(0, y) * t(0, z)
        elif number == 10:
            lhs = t(3, 0) * t(3, x + y) * t(3, y + z) * t(3, z + x)
            rhs = t(3, s) * t(3, x) * t(3, y) * t(3, z) - t(1, s) * t(0, x) * t(0, y) * t(0, z)
        else:
            raise UnknownName(f"chain-eq{number}")
        worst = max(worst, _rel(lhs, rhs))
    return worst


# The 25 addition formulas:
# theta3(0)^2 theta_s(x+y) theta_d(x-y)
#   = theta_{p0}(x) theta_{p1}(x) theta_{p2}(y)^2
#   - theta_{m0}(x)^2 theta_{m1}(y) theta_{m2}(y)
ADDITION_FORMULAS = {
    11: (3, 3, (1, 0, 0), (3, 2, 3)),
    12: (1, 3, (0, 4, 4), (2, 1, 2)),
    13: (4, 3, (4, 3, 3), (1, 0, 1)),
    14: (2, 3, (3, 2, 2), (0, 4, 0)),
    15: (0, 3, (2, 1, 1), (4, 3, 4)),
    16: (2, 2, (0, 4, 0), (2, 2, 3)),
    17: (0, 2, (4, 3, 4), (1, 1, 2)),
    18: (3, 2, (3, 2, 3), (0, 0, 1)),
    19: (1, 2, (2, 1, 2), (4, 4, 0)),
    20: (4, 2, (1, 0, 1), (3, 3, 4)),
    21: (1, 1, (4, 3, 0), (1, 2, 3)),
    22: (4, 1, (3, 2, 4), (0, 1, 2)),
    23: (2, 1, (2, 1, 3), (4, 0, 1)),
    24: (0, 1, (1, 0, 2), (3, 4, 0)),
    25: (3, 1, (0, 4, 1), (2, 3, 4)),
    26: (0, 0, (3, 2, 0), (0, 2, 3)),
    27: (3, 0, (2, 1, 4), (4, 1, 2)),
    28: (1, 0, (1, 0, 3), (3, 0, 1)),
    29: (4, 0, (0, 4, 2), (2, 4, 0)),
    30: (2, 0, (4, 3, 1), (1, 3, 4)),
    31: (4, 4, (2, 1, 0), (4, 2, 3)),
    32: (2, 4, (1, 0, 4), (3, 1, 2)),
    33: (0, 4, (0, 4, 3), (2, 0, 1)),
    34: (3, 4, (4, 3, 2), (1, 4, 0)),
    35: (1, 4, (3, 2, 1), (0, 3, 4)),
}


def _addition_eq(number: int, cfg: VerifyConfig, rng) -> float:
    s, d, p, m = ADDITION_FORMULAS[number]
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        x, y = cfg.random_z(rng), cfg.random_z(rng)
        t = lambda k, a: theta.theta_k(k, a, tau)
        lhs = t(3, 0) ** 2 * t(s, x + y) * t(d, x - y)
        rhs = t(p[0], x) * t(p[1], x) * t(p[2], y) ** 2 - t(m[0], x) ** 2 * t(m[1], y) * t(m[2], y)
        worst = max(worst, _rel(lhs, rhs))
    return worst


def duplication_uniform_sign(tau: complex = 1.3j, z: complex = 0.21 + 0.11j) -> int:
    """Which nullwert cube the one-line duplication formula needs: +1 for
    theta_2(0)^3, -1 for theta_3(0)^3 (the prefactor the five expanded
    formulas carry).  Measures -1; the two candidates differ by the sign
    coming from theta_3(0) = -theta_2(0)."""
    x = theta.theta_vector(z, tau)
    x2 = theta.theta_vector(2 * z, tau)
    n = theta.nullwerte(tau)
    rhs = x[2] * x[1] ** 3 - x[4] ** 3 * x[3]
    with2 = rhs / (n[2] ** 3 * x2[0])
    return 1 if abs(with2 - 1) < 0.5 else -1


def _duplication_cubic(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        z = cfg.random_z(rng)
        x = theta.theta_vector(z, tau)
        x2 = theta.theta_vector(2 * z, tau)
        n3 = theta.theta_k(3, 0.0, tau)
        for k in range(5):
            lhs = n3 ** 3 * x2[k]
            rhs = x[(3 * k + 2) % 5] * x[(3 * k + 1) % 5] ** 3 - x[(3 * k - 1) % 5] ** 3 * x[(3 * k - 2) % 5]
            worst = max(worst, _rel(lhs, rhs))
    return worst


def _duplication_mixed(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        z = cfg.random_z(rng)
        x = theta.theta_vector(z, tau)
        x2 = theta.theta_vector(2 * z, tau)
        n = theta.nullwerte(tau)
        for k in range(5):
            lhs = n[3] ** 2 * n[1] * x2[k]
            rhs = (
                x[(3 * k) % 5] * x[(3 * k + 1) % 5] * x[(3 * k + 2) % 5] ** 2
                - x[(3 * k) % 5] * x[(3 * k - 1) % 5] * x[(3 * k - 2) % 5] ** 2
            )
            worst = max(worst, _rel(lhs, rhs))
    return worst


_ALL_INDICES = tuple(Fraction(k) for k in range(5)) + tuple(Fraction(2 * k + 1, 2) for k in range(5))


def _theta_transforms(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        z = cfg.random_z(rng)
        rules = theta.shift_rules(tau)
        for shift, mult, down in rules.values():
            for k in _ALL_INDICES:
                lhs = theta.theta_k(k, z + shift, tau)
                rhs = mult(k, z) * theta.theta_k(k - down, z, tau)
                worst = max(worst, _rel(lhs, rhs))
        for k in _ALL_INDICES:
            sgn = -1.0 if k.denominator == 1 else 1.0
            worst = max(worst, _rel(theta.theta_k(k, -z, tau), sgn * theta.theta_k(-k, z, tau)))
    return worst


def _theta_nullwerte(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        n = theta.nullwerte(tau)
        scale = max(abs(v) for v in n)
        worst = max(worst, abs(n[0]) / scale, abs(n[3] + n[2]) / scale, abs(n[4] + n[1]) / scale)
    return worst


def _bianchi_quadrics(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        z = cfg.random_z(rng)
        phi = theta.phi_numeric(tau)
        worst = max(worst, curve.max_quadric_residual(theta.theta_vector(z, tau), phi))
    return worst


def _addition_map(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        zx, zy = cfg.random_z(rng), cfg.random_z(rng)
        p = theta.theta_vector(zx, tau)
        q = theta.theta_vector(zy, tau)
        s = theta.theta_vector(zx + zy, tau)
        worst = max(worst, curve.projective_distance(curve.add_a1(p, q), s))
        worst = max(worst, curve.projective_distance(curve.add_a2(p, q), s))
    return worst


def _five_torsion(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(max(1, cfg.samples // 5)):
        tau = cfg.random_tau(rng)
        phi = theta.phi_numeric(tau)
        o = curve.neutral(phi)
        for p in curve.five_torsion_points(phi):
            worst = max(worst, curve.max_quadric_residual(p, phi))
            worst = max(worst, curve.projective_distance(curve.multiply(p, 5), o))
    return worst


def _weierstrass_map_check(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        phi = theta.phi_numeric(tau)
        z = cfg.random_z(rng)
        p = theta.theta_vector(z, tau)
        x, ya, yb = curve.weierstrass_map(p, phi)
        worst = max(worst, _rel(ya, yb))
        res = curve.weierstrass_residual(x, ya, phi)
        scale = max(abs(ya) ** 2, abs(x) ** 3, 1e-300)
        worst = max(worst, abs(res) / scale)
    tau = 1.1j
    phi = theta.phi_numeric(tau)
    a = complex(curve.WEIERSTRASS_A(phi))
    b = complex(curve.WEIERSTRASS_B(phi))
    for p in curve.two_torsion_points(phi):
        x, ya, yb = curve.weierstrass_map(p, phi)
        scale = max(abs(x) ** 3, abs(b), 1e-300)
        worst = max(worst, abs(ya) / abs(x), abs(yb) / abs(x))
        worst = max(worst, abs(x ** 3 + a * x + b) / scale)
    return worst


def _jacobi_a4(cfg: VerifyConfig, rng) -> float:
    worst = 0.0
    for _ in range(cfg.samples):
        tau = cfg.random_tau(rng)
        args = tuple(cfg.random_z(rng) for _ in range(4))
        p = _primed(*args)
        lhs = _four_product(tau, [5 * H] * 4, args) - _four_product(tau, [0] * 4, args)
        rhs = _four_product(tau, [5 * H] * 4, p) - _four_product(tau, [0] * 4, p)
        worst = max(worst, _rel(lhs, rhs))
    return worst


# -- registry -----------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    kind: str  # exact_series | exact_poly | numeric
    description: str
    runner: object = field(repr=False)
    mutation_target: str | None = None


def registry() -> tuple[IdentityCheck, ...]:
    checks = []
    for name, (body, target, desc) in _EXACT_SERIES.items():
        checks.append(IdentityCheck(name, "exact_series", desc, body, target))
    for name, (fn, desc) in _EXACT_POLY.items():
        checks.append(IdentityCheck(name, "exact_poly", desc, fn))
    checks.append(IdentityCheck("jacobi-A4", "numeric", "the four-term product main identity", _jacobi_a4))
    for i in range(2, 11):
        checks.append(
            IdentityCheck(
                f"chain-eq{i}", "numeric", f"derived four-term identity {i} of the shift chain",
                (lambda i: lambda cfg, rng: _chain_eq(i, cfg, rng))(i),
            )
        )
    for i in sorted(ADDITION_FORMULAS):
        checks.append(
            IdentityCheck(
                f"addition-eq{i}", "numeric", f"coordinate addition formula {i}",
                (lambda i: lambda cfg, rng: _addition_eq(i, cfg, rng))(i),
            )
        )
    checks.append(IdentityCheck("duplication-cubic", "numeric",
                                "duplication, cubic family (theta3(0)^3 prefactor)", _duplication_cubic))
    checks.append(IdentityCheck("duplication-mixed", "numeric",
                                "duplication, mixed family (theta3(0)^2 theta1(0) prefactor)", _duplication_mixed))
    checks.append(IdentityCheck("theta-transforms", "numeric",
                                "the six quasi-periodicity rules and parity", _theta_transforms))
    checks.append(IdentityCheck("theta-nullwerte", "numeric",
                                "theta0(0)=0, theta3(0)=-theta2(0), theta4(0)=-theta1(0)", _theta_nullwerte))
    checks.append(IdentityCheck("bianchi-quadrics-theta", "numeric",
                                "the five quadrics on theta coordinate vectors", _bianchi_quadrics))
    checks.append(IdentityCheck("addition-map-A1A2", "numeric",
                                "A1/A2 coordinate addition against theta vectors of the sum", _addition_map))
    checks.append(IdentityCheck("five-torsion", "numeric",
                                "25 points of order 5: membership and additive order", _five_torsion))
    checks.append(IdentityCheck("weierstrass-map", "numeric",
                                "X,Y map: Y_a=Y_b, the curve equation, and 2-torsion mapping to Y=0", _weierstrass_map_check))
    return tuple(sorted(checks, key=lambda c: c.name))


def get_check(name: str) -> IdentityCheck:
    for c in registry():
        if c.name == name:
            return c
    raise UnknownName(name)


def check_names() -> tuple[str, ...]:
    return tuple(c.name for c in registry())


def run_identity(name: str, cfg: VerifyConfig | None = None, *, mutate: bool = False) -> CheckResult:
    """Run one named check; ``mutate`` perturbs the check's designated input
    to demonstrate the check is not vacuous (exact kinds only)."""
    cfg = cfg or VerifyConfig()
    check = get_check(name)
    if check.kind == "exact_series":
        env = SeriesEnv(cfg, mutate=check.mutation_target if mutate else None)
        bad = _first_nonzero(check.runner(env), env.target)
        if bad is None:
            return CheckResult(name, check.kind, "pass", order=str(env.target))
        return CheckResult(name, check.kind, "fail", first_failing_exponent=str(bad), order=str(env.target))
    if check.kind == "exact_poly":
        ok = check.runner(mutate)
        return CheckResult(name, check.kind, "pass" if ok else "fail",
                           first_failing_exponent=None if ok else "poly", order="exact")
    rng = cfg.rng_for(name)
    worst = check.runner(cfg, rng)
    status = "pass" if worst < cfg.tol else "fail"
    return CheckResult(name, check.kind, status, worst_residual=worst, samples=cfg.samples)


def run_all(cfg: VerifyConfig | None = None, names=None) -> Report:
    """Run every check (or the named subset), deterministically."""
    cfg = cfg or VerifyConfig()
    selected = check_names() if names is None else tuple(names)
    known = set(check_names())
    for n in selected:
        if n not in known:
            raise UnknownName(n)
    t0 = time.perf_counter()
    results = tuple(run_identity(n, cfg) for n in sorted(selected))
    elapsed = (time.perf_counter() - t0) * 1000.0
    passed = sum(1 for r in results if r.status == "pass")
    return Report(config=cfg, checks=results, passed=passed, failed=len(results) - passed,
                  elapsed_ms=elapsed)
