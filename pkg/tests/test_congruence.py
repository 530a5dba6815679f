"""Congruence-subgroup computations: orders, images, indices, normality,
quotient shapes, cusp counts, and genus."""

import pytest

from bianchiq.congruence import (
    GenusData,
    NotAGroup,
    NotContained,
    SubgroupSpec,
    UnknownGroup,
    builtin_specs,
    enumerate_group,
    genus_data,
    get_spec,
    image_of,
    lattice,
    lattice_dot,
    mat_mul,
    subgroup_report,
)


class TestEnumeration:
    def test_orders(self):
        assert len(enumerate_group(10)) == 720
        assert len(enumerate_group(2)) == 6
        assert len(enumerate_group(1)) == 1

    def test_crt_cross_check(self):
        assert len(enumerate_group(10)) == len(enumerate_group(2)) * len(enumerate_group(5))

    def test_range_guard(self):
        with pytest.raises(ValueError):
            enumerate_group(31)


class TestImages:
    def test_gamma10_image_trivial(self):
        assert image_of(get_spec("Gamma(10)"), 10) == frozenset({(1, 0, 0, 1)})

    def test_g4_image(self):
        img = image_of(get_spec("G4"), 10)
        assert img == frozenset({(1, 0, 0, 1), (1, 5, 5, 6), (6, 5, 5, 1)})
        # closure: the square of one nontrivial element is the other
        assert mat_mul((1, 5, 5, 6), (1, 5, 5, 6), 10) == (6, 5, 5, 1)

    def test_g1_equals_gamma2_meet_gamma1_5(self):
        assert image_of(get_spec("G1"), 10) == image_of(get_spec("Gamma(2)&Gamma1(5)"), 10)

    def test_g3_equals_gamma0_2_meet_gamma5(self):
        assert image_of(get_spec("G3"), 10) == image_of(get_spec("Gamma0(2)&Gamma(5)"), 10)

    def test_image_order_bookkeeping(self):
        g = len(enumerate_group(10))
        for name in ("Gamma(5)", "Gamma1(5)", "Gamma0(10)", "G1", "G2", "G3", "G4"):
            h = image_of(get_spec(name), 10)
            assert g % len(h) == 0

    def test_incompatible_modulus(self):
        with pytest.raises(ValueError):
            image_of(get_spec("G1"), 4)

    def test_not_a_group_detected(self):
        with pytest.raises(NotAGroup):
            SubgroupSpec.from_residues("bogus", 10, [(1, 0, 0, 1), (1, 1, 0, 1)])


GENUS_TABLE = {
    "Gamma0(5)": 0,
    "Gamma1(5)": 0,
    "Gamma0(10)": 0,
    "Gamma1(10)": 0,
    "Gamma(5)": 0,
    "G1": 1,
    "G2": 1,
    "G3": 4,
    "G4": 5,
    "Gamma(10)": 13,
}


@pytest.mark.parametrize("name,genus", sorted(GENUS_TABLE.items()))
def test_genus_table(name, genus):
    assert genus_data(get_spec(name), 10).genus == genus


def test_gamma10_full_data():
    gd = genus_data(get_spec("Gamma(10)"), 10)
    assert gd == GenusData(mu=360, eps2=0, eps3=0, cusps=36, genus=13)


INDEX_TABLE = [
    ("G1", "Gamma1(5)", 6),
    ("Gamma(10)", "G1", 5),
    ("G2", "Gamma1(5)", 2),
    ("G1", "G2", 3),
    ("G3", "Gamma(5)", 3),
    ("Gamma(10)", "G3", 2),
    ("G4", "Gamma(5)", 2),
    ("Gamma(10)", "G4", 3),
]


@pytest.mark.parametrize("inner,outer,index", INDEX_TABLE)
def test_index_table(inner, outer, index):
    assert subgroup_report(get_spec(inner), get_spec(outer), 10)["index"] == index


def test_g1_normal_s3_quotient():
    rep = subgroup_report(get_spec("G1"), get_spec("Gamma1(5)"), 10)
    assert rep["normal"] and rep["quotient_shape"] == "S3"


def test_gamma10_in_gamma5_s3():
    rep = subgroup_report(get_spec("Gamma(10)"), get_spec("Gamma(5)"), 10)
    assert rep["index"] == 6 and rep["normal"] and rep["quotient_shape"] == "S3"


def test_not_contained():
    with pytest.raises(NotContained):
        subgroup_report(get_spec("Gamma1(5)"), get_spec("Gamma(5)"), 10)


def test_index_multiplicativity_along_paths():
    # [Gamma1(5):Gamma(10)] factors as 6*5 and as 2*3*5 along the two routes
    total = subgroup_report(get_spec("Gamma(10)"), get_spec("Gamma1(5)"), 10)["index"]
    r1 = subgroup_report(get_spec("G1"), get_spec("Gamma1(5)"), 10)["index"]
    r2 = subgroup_report(get_spec("Gamma(10)"), get_spec("G1"), 10)["index"]
    r3 = subgroup_report(get_spec("G2"), get_spec("Gamma1(5)"), 10)["index"]
    r4 = subgroup_report(get_spec("G1"), get_spec("G2"), 10)["index"]
    assert total == r1 * r2 == r3 * r4 * r2 == 30


def test_genus_integrality_guard():
    for name in GENUS_TABLE:
        gd = genus_data(get_spec(name), 10)
        assert (gd.mu + 12 - 3 * gd.eps2 - 4 * gd.eps3 - 6 * gd.cusps) % 12 == gd.genus * 12 % 12


def test_entrywise_g2_variant_is_a_different_group():
    # The nearest entrywise-congruence candidate for G2 (a=d=1 mod 10, b
    # even, c=0 mod 5) is a genus-0 group of index 3 in Gamma1(5) and so
    # cannot carry the field of phi^5 and the root discriminant.  The
    # shipped G2 is the alternating-function stabilizer, which has index 2,
    # genus 1, and quotient C3 over G1 as required.
    variant = SubgroupSpec.from_predicate(
        "G2-entrywise", 10,
        lambda a, b, c, d: a % 10 == 1 and d % 10 == 1 and b % 2 == 0 and c % 5 == 0,
    )
    assert genus_data(variant, 10).genus == 0
    assert subgroup_report(variant, get_spec("Gamma1(5)"), 10)["index"] == 3
    shipped = get_spec("G2")
    assert genus_data(shipped, 10).genus == 1
    assert subgroup_report(shipped, get_spec("Gamma1(5)"), 10)["index"] == 2
    assert subgroup_report(get_spec("G1"), shipped, 10)["quotient_shape"] == "C3"


def test_lattice_nodes_and_edges():
    lat = lattice(10)
    assert len(lat["nodes"]) == 11
    edges = {(a, b): d for a, b, d in lat["edges"]}
    assert edges[("G1", "Gamma(10)")] == 5
    assert edges[("Gamma1(5)", "G2")] == 2
    assert edges[("G2", "G1")] == 3
    assert edges[("Gamma(5)", "G4")] == 2
    assert edges[("G4", "Gamma(10)")] == 3
    assert edges[("Gamma(5)", "G3")] == 3
    assert edges[("G3", "Gamma(10)")] == 2
    assert edges[("Gamma(1)", "Gamma0(5)")] == 6


def test_lattice_dot_renders():
    dot = lattice_dot(10)
    assert dot.startswith("digraph")
    assert '"Gamma(10)"' in dot and "genus 13" in dot


def test_unknown_group():
    with pytest.raises(UnknownGroup):
        get_spec("Gamma7")


def test_builtin_specs_closed():
    # constructing the catalog runs the closure check on every spec
    specs = builtin_specs()
    assert len(specs) >= 14
