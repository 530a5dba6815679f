"""Congruence-subgroup invariants at level 10.

Recomputes the index/genus table for every named group between the modular
group and the principal level-10 group, checks the stated containments,
and emits the function-field lattice in DOT format.
"""

from bianchiq.congruence import (
    enumerate_group,
    genus_data,
    get_spec,
    image_of,
    lattice_dot,
    subgroup_report,
)

print(f"|SL2(Z/10)| = {len(enumerate_group(10))}")
print(f"{'group':14s} {'mu':>4s} {'eps2':>4s} {'eps3':>4s} {'cusps':>5s} {'genus':>5s}")
for name in ("Gamma(1)", "Gamma0(5)", "Gamma1(5)", "Gamma0(10)", "Gamma1(10)",
             "Gamma(5)", "G1", "G2", "G3", "G4", "Gamma(10)"):
    gd = genus_data(get_spec(name), 10)
    print(f"{name:14s} {gd.mu:4d} {gd.eps2:4d} {gd.eps3:4d} {gd.cusps:5d} {gd.genus:5d}")

print("\ncontainments")
for inner, outer in [("G1", "Gamma1(5)"), ("Gamma(10)", "G1"), ("G2", "Gamma1(5)"),
                     ("G1", "G2"), ("G3", "Gamma(5)"), ("Gamma(10)", "G3"),
                     ("G4", "Gamma(5)"), ("Gamma(10)", "G4")]:
    rep = subgroup_report(get_spec(inner), get_spec(outer), 10)
    shape = f", quotient {rep['quotient_shape']}" if rep["quotient_shape"] else ""
    norm = "normal" if rep["normal"] else "not normal"
    print(f"  [{outer} : {inner}] = {rep['index']}  ({norm}{shape})")

print("\nidentities of groups given by intersections")
print("  G1 = Gamma(2) & Gamma1(5):",
      image_of(get_spec("G1"), 10) == image_of(get_spec("Gamma(2)&Gamma1(5)"), 10))
print("  G3 = Gamma0(2) & Gamma(5):",
      image_of(get_spec("G3"), 10) == image_of(get_spec("Gamma0(2)&Gamma(5)"), 10))

print("\n" + lattice_dot(10))
