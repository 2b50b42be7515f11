"""Perversities and metric weights, end to end.

A perversity controls how chains may touch the singular set. This script
walks the basic constructions: the bracket function, the top and middle
perversities, duals, and the two-way bridge between metric weights and
general perversities.
"""

from fractions import Fraction as F

from stratal import (
    Perversity,
    bracket,
    dual,
    hunsicker_shift_check,
    middle_perversities,
    perversity_from_weights,
    top_perversity,
    weights_from_perversity,
)

# The bracket [[x]] is the greatest integer strictly below x. It differs
# from floor exactly at integers, which is why everything here is exact
# rational arithmetic: a float landing near 2.0 could flip a perversity.
for x in (F(1, 2), F(1), F(3, 2), F(2), F(7, 3)):
    print(f"[[{x}]] = {bracket(x)}")

print()
n = 5
t = top_perversity(n)
lower, upper = middle_perversities(n)
print(f"ambient dimension {n}")
print("codim :", list(range(1, n + 1)))
print("top   :", [t.values[k] for k in range(1, n + 1)])
print("lower :", [lower.values[k] for k in range(1, n + 1)])
print("upper :", [upper.values[k] for k in range(1, n + 1)])
print("lower + upper == top everywhere:",
      all(lower.values[k] + upper.values[k] == t.values[k] for k in range(1, n + 1)))
print("dual(upper) == lower:", dual(upper) == lower)

# A weighted conic metric determines a perversity per singular stratum.
# Weights >= 1 always land exactly on the upper middle perversity; smaller
# weights push the value up.
print()
for c in (F(3), F(1), F(1, 2), F(1, 4), F(1, 10)):
    p = perversity_from_weights([("Y", 4)], {"Y": c})
    print(f"link dim 4, weight {c}: perversity {p.values['Y']}")

# The inverse direction: any perversity at or above the upper middle is
# realized by a canonical deterministic weight choice, exactly.
print()
wanted = Perversity("per-stratum", {"A": 2, "B": 1, "C": 0})
strata = [("A", 4), ("B", 3), ("C", 0)]
w = weights_from_perversity(wanted, strata)
print("target:", wanted.values)
print("weights:", {k: str(v) for k, v in w.items()})
print("round trip exact:", perversity_from_weights(strata, w) == wanted)

# One-stratum consistency of the dual perversity with the classical
# shifted-middle description of edge metrics.
print()
grid_ok = all(
    hunsicker_shift_check(f, c)
    for f in range(1, 9)
    for c in (F(1, 8), F(1, 4), F(1, 3), F(1, 2), F(1), F(2), F(4))
)
print("edge-reduction grid (f in 1..8, seven weights):", "all consistent" if grid_ok else "MISMATCH")
