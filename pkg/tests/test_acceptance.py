"""Acceptance criteria, one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Criteria 3 and 7 verify the forms that hold exactly and also
assert that the near-miss variants fail; see the notes in bianchiq.curve.
"""

import json
import random
import resource
import time
from fractions import Fraction as F

from bianchiq import curve, modular, theta
from bianchiq.cli import main as cli_main
from bianchiq.congruence import enumerate_group, genus_data, get_spec, image_of, subgroup_report
from bianchiq.identities import VerifyConfig, registry, run_all

SEED = 7


def _report(n, text):
    print(f"ACCEPTANCE {n}: PASS - {text}")


def test_criterion_1_expansion_fidelity():
    t0 = time.perf_counter()
    phi = modular.phi_series(F(52, 5))
    expected_phi = {F(1, 5): 1, F(6, 5): -1, F(11, 5): 1, F(21, 5): -1, F(26, 5): 1,
                    F(31, 5): -1, F(36, 5): 1, F(46, 5): -1, F(51, 5): 2}
    for e in expected_phi:
        assert phi.coefficient(e) == expected_phi[e]
    for e, c in phi.terms():
        assert c == expected_phi.get(e, 0)

    references = {
        "g1": {0: 1, 1: -2, 2: 4, 3: -4, 4: 2, 5: 2, 6: -8},
        "g2": {F(1, 2): -1, 1: 1, F(3, 2): 1, 2: -2, 3: 2, F(7, 2): -2},
        "g3": {F(1, 2): 1, 1: 1, F(3, 2): -1, 2: -2, 3: 2, F(7, 2): 2},
        "phi5": {1: 1, 2: -5, 3: 15, 4: -30, 5: 40},
        "j5": {-1: 1, 0: -6, 1: 9, 2: 10, 3: -30},
        "j10": {-1: 1, 0: 1, 1: 1, 2: 2, 3: 2},
        "j": {-1: 1, 0: 744, 1: 196884, 2: 21493760},
        "neg_g2_2tau": {1: 1, 2: -1, 3: -1, 4: 2, 6: -2, 7: 2},
    }
    for name, terms in references.items():
        series = modular.named_series(name, 8)
        for e, c in terms.items():
            assert series.coefficient(e) == c, (name, e)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    _report(1, f"reference q-expansions reproduced exactly in {elapsed:.2f}s")


def test_criterion_2_exact_identity_suite():
    t0 = time.perf_counter()
    names = [c.name for c in registry() if c.kind == "exact_series"]
    rep = run_all(VerifyConfig(series_order=30, seed=SEED), names)
    assert rep.failed == 0
    assert all(c.order == "30" for c in rep.checks)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"took {elapsed:.2f}s"
    _report(2, f"{len(names)} exact series identities vanish through q^30 in {elapsed:.2f}s")


def test_criterion_3_exact_polynomials():
    t0 = time.perf_counter()
    # the honest expansion of (P20^3 - P30^2)/1728 is
    # phi^5 (1 - 11 phi^5 - phi^10)^5, matching the cubic discriminant's
    # inner factor; the sign-variant factorization must fail
    assert curve.discriminant_check()
    assert not curve.discriminant_check_variant()
    rep = run_all(VerifyConfig(series_order=12, seed=SEED),
                  ["weierstrass-discriminant", "cubic-discriminant-factorization"])
    assert rep.failed == 0
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    _report(3, f"polynomial discriminant identities exact in {elapsed:.2f}s")


def test_criterion_4_numeric_theta_suite():
    t0 = time.perf_counter()
    names = ["jacobi-A4"]
    names += [f"chain-eq{i}" for i in range(2, 11)]
    names += [f"addition-eq{i}" for i in range(11, 36)]
    names += ["duplication-cubic", "duplication-mixed", "theta-transforms",
              "theta-nullwerte", "bianchi-quadrics-theta"]
    rep = run_all(VerifyConfig(series_order=10, samples=20, seed=SEED), names)
    assert rep.failed == 0
    worst = max(c.worst_residual for c in rep.checks)
    assert worst < 1e-9, f"worst residual {worst}"
    from bianchiq.identities import duplication_uniform_sign

    assert duplication_uniform_sign() == -1  # the one-line form needs theta_3(0)^3
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    _report(4, f"{len(names)} theta checks, worst residual {worst:.2e}, in {elapsed:.2f}s")


def test_criterion_5_group_law():
    rng = random.Random(SEED)

    def rand_tau():
        return complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 2.0))

    def rand_z():
        return complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))

    worst = 0.0
    for _ in range(50):
        tau = rand_tau()
        phi = theta.phi_numeric(tau)
        p, q, r = (theta.theta_vector(rand_z(), tau) for _ in range(3))
        worst = max(worst, curve.projective_distance(curve.add(p, q), curve.add(q, p)))
        worst = max(worst, curve.projective_distance(
            curve.add(curve.add(p, q), r), curve.add(p, curve.add(q, r))))
        worst = max(worst, curve.projective_distance(curve.add(p, curve.neutral(phi)), p))
        worst = max(worst, curve.projective_distance(
            curve.add(p, curve.negate(p)), curve.neutral(phi)))
    assert worst < 1e-8, f"worst projective distance {worst}"

    tau = 1.05j
    z = 0.23 + 0.17j
    p = theta.theta_vector(z, tau)
    scale = max(abs(c) for c in p) ** 4
    for m in range(5):
        q = tuple(curve.ZETA5 ** (-k * m) * p[k] for k in range(5))
        assert max(abs(c) for c in curve.add_a1(p, q)) < 1e-12 * scale
        out = curve.add(p, q)
        assert curve.projective_distance(out, theta.theta_vector(2 * z + m / 5, tau)) < 1e-8
    _report(5, f"group-law properties over 50 samples, worst distance {worst:.2e}; A2 covers all 5 twists")


def test_criterion_6_torsion():
    phi = modular.named_series("phi", 38)
    o = curve.neutral(phi)
    for p in curve.two_torsion_points(phi):
        for r in curve.quadric_residuals(p, phi):
            assert r.is_zero() and r.order >= 30
        assert curve.projective_equal_series(curve.double(p, phi), o)

    phin = theta.phi_numeric(1.1j)
    on = curve.neutral(phin)
    pts = curve.five_torsion_points(phin)
    assert len(pts) == 25
    for p in pts:
        assert curve.max_quadric_residual(p, phin) < 1e-10
        assert curve.projective_distance(curve.multiply(p, 5), on) < 1e-8
    _report(6, "2-torsion exact through q^30 and doubles to O; 25 numeric 5-torsion points of order 5")


def test_criterion_7_weierstrass_transformation():
    rng = random.Random(SEED)
    for _ in range(20):
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 2.0))
        phi = theta.phi_numeric(tau)
        p = theta.theta_vector(complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)), tau)
        x, ya, yb = curve.weierstrass_map(p, phi)
        assert abs(ya - yb) / max(abs(ya), abs(yb)) < 1e-9
        res = curve.weierstrass_residual(x, ya, phi)
        assert abs(res) / max(abs(ya) ** 2, abs(x) ** 3, 1e-300) < 1e-8
    phi = theta.phi_numeric(1.1j)
    a = complex(curve.WEIERSTRASS_A(phi))
    b = complex(curve.WEIERSTRASS_B(phi))
    for p in curve.two_torsion_points(phi):
        x, ya, yb = curve.weierstrass_map(p, phi)
        assert abs(ya) < 1e-8 and abs(yb) < 1e-8
        assert abs(x ** 3 + a * x + b) < 1e-8
    _report(7, "both Y expressions agree and satisfy Y^2 = X^3 + AX + B; 2-torsion maps to Y=0")


def test_criterion_8_congruence_table():
    t0 = time.perf_counter()
    assert len(enumerate_group(10)) == 720
    genus_expect = {"Gamma0(5)": 0, "Gamma1(5)": 0, "Gamma0(10)": 0, "Gamma1(10)": 0,
                    "Gamma(5)": 0, "G1": 1, "G2": 1, "G3": 4, "G4": 5, "Gamma(10)": 13}
    for name, g in genus_expect.items():
        assert genus_data(get_spec(name), 10).genus == g, name
    index_expect = [("G1", "Gamma1(5)", 6), ("Gamma(10)", "G1", 5), ("G2", "Gamma1(5)", 2),
                    ("G1", "G2", 3), ("G3", "Gamma(5)", 3), ("Gamma(10)", "G3", 2),
                    ("G4", "Gamma(5)", 2), ("Gamma(10)", "G4", 3)]
    for inner, outer, idx in index_expect:
        assert subgroup_report(get_spec(inner), get_spec(outer), 10)["index"] == idx
    rep = subgroup_report(get_spec("G1"), get_spec("Gamma1(5)"), 10)
    assert rep["normal"] and rep["quotient_shape"] == "S3"
    assert image_of(get_spec("G1"), 10) == image_of(get_spec("Gamma(2)&Gamma1(5)"), 10)
    assert image_of(get_spec("G3"), 10) == image_of(get_spec("Gamma0(2)&Gamma(5)"), 10)
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    _report(8, f"full genus/index/normality table verified in {elapsed:.2f}s")


def test_criterion_9_genus13_substitution():
    # The genus-13 claim for the level-10 principal group is established by
    # the coset computation (criterion 8), not by reimplementing a symbolic
    # plane-curve genus algorithm; the defining equation itself is covered
    # by the exact defeq-gamma10 check.
    assert genus_data(get_spec("Gamma(10)"), 10).genus == 13
    names = [c.name for c in registry()]
    assert "defeq-gamma10" in names
    assert not hasattr(curve, "plane_curve_genus")
    _report(9, "genus 13 via coset permutation action; defining equation via defeq-gamma10")


def test_criterion_10_end_to_end(capsys):
    t0 = time.perf_counter()
    rc1 = cli_main(["verify", "--all", "--seed", "7"])
    out1 = capsys.readouterr().out
    elapsed = time.perf_counter() - t0
    assert rc1 == 0
    assert elapsed < 60.0, f"took {elapsed:.2f}s"
    rc2 = cli_main(["verify", "--all", "--seed", "7"])
    out2 = capsys.readouterr().out
    assert rc2 == 0
    assert out1 == out2, "rerun is not byte-identical"
    report = json.loads(out1)
    assert report["failed"] == 0 and report["passed"] == len(registry())
    peak_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    assert peak_kb < 1024 * 1024, f"peak memory {peak_kb} kB"
    _report(10, f"verify --all --seed 7: exit 0, {report['passed']} checks, "
               f"{elapsed:.1f}s, byte-identical rerun, peak {peak_kb // 1024} MB")
