"""Tour of the exact q-expansion layer.

Builds the degree-5 hauptmodul phi, the 2-torsion parameters g1, g2, g3,
their discriminant delta, and the classical hauptmoduls j5, j10, j, then
checks a few of the identities binding them, all over exact rationals.
"""

from fractions import Fraction as F

from bianchiq.modular import named_series


def show(name, order=8, limit=8):
    series = named_series(name, order)
    body = "  ".join(f"q^{e}:{c}" for e, c in list(series.terms())[:limit])
    print(f"{name:12s} {body}")


print("Leading terms of the named expansions")
print("-" * 70)
for name in ("phi", "phi5", "g1", "g2", "g3", "delta", "j5", "j10", "j", "neg_g2_2tau"):
    show(name)

# The three g's are exactly the roots of xi^3 - xi^2 + phi^5 xi + phi^5.
N = 30
t = named_series("phi5", N)
print("\nRoot and symmetric-function identities through q^%d" % N)
print("-" * 70)
g = {i: named_series(f"g{i}", N) for i in (1, 2, 3)}
print("g1+g2+g3 - 1        == 0 :", (g[1] + g[2] + g[3] - 1).is_zero())
print("e2(g) - phi^5       == 0 :", (g[1] * g[2] + g[2] * g[3] + g[3] * g[1] - t).is_zero())
print("g1*g2*g3 + phi^5    == 0 :", (g[1] * g[2] * g[3] + t).is_zero())
for i in (1, 2, 3):
    r = g[i] ** 3 - g[i] ** 2 + t * g[i] + t
    print(f"cubic at g{i}         == 0 :", r.is_zero())

# The discriminant square root delta ties the whole level-10 story together.
d = named_series("delta", N)
print("delta^2 - 4 phi^5 (1 - 11 phi^5 - phi^10) == 0 :",
      (d ** 2 - 4 * t * (1 - 11 * t - t ** 2)).is_zero())

# Ramanujan's function -g2(2 tau) = phi(tau) phi(2 tau)^2 and his relation.
ng = named_series("neg_g2_2tau", N)
print("-g2(2t)(1+g1) - (1-g1)                    == 0 :",
      (ng * (1 + g[1]) - (1 - g[1])).is_zero())

# Hauptmodul relations: j5 in terms of phi^5 and of j10.
j5 = named_series("j5", N)
j10 = named_series("j10", N)
print("j5 - (1/phi^5 - 11 - phi^5)               == 0 :",
      (j5 - (t.inverse() - 11 - t)).is_zero())
print("j5 j10^2 - (j10+1)(j10-4)^2               == 0 :",
      (j5 * j10 ** 2 - (j10 + 1) * (j10 - 4) ** 2).is_zero())

# j against the Weierstrass data of the quintic.
j = named_series("j", 25)
t25 = named_series("phi5", 25)
p20 = t25 ** 4 - 228 * t25 ** 3 + 494 * t25 ** 2 + 228 * t25 + 1
print("j * phi^5 (1-11 phi^5-phi^10)^5 - P20^3   == 0 :",
      (j * (t25 * (1 - 11 * t25 - t25 ** 2) ** 5) - p20 ** 3).is_zero())
