"""Intersection homology of a suspension, and the metric predictions.

The suspension of the 7-vertex torus is a 3-pseudomanifold with two cone
points. Sweeping the perversity value at the apexes moves the answer from
the cohomology of the regular part down to the relative homology of the
pair; the middle perversities sit in between and are dual to each other.
"""

from fractions import Fraction as F

from stratal import (
    Perversity,
    duality_check,
    fredholm_indices,
    intersection_betti,
    middle_perversities,
    suspension,
    theorem_predictions,
)
from stratal.corpus import load_space

t2 = load_space("t2_7")
print("base torus:", t2.counts(), "betti", t2.betti())

st2 = load_space("susp_t2")
print("suspension:", st2.counts())
for s in st2.singular_strata():
    print(f"  singular stratum {s.id}: dim {s.dim}, codim {s.codim}, "
          f"link dim {s.link_dim}, weight {st2.weights[s.id]}")

print()
print("perversity value at the apexes -> intersection betti:")
for a in (-2, -1, 0, 1, 2, 3):
    p = Perversity("per-stratum", {s.id: a for s in st2.singular_strata()})
    print(f"  p = {a:>2}: {intersection_betti(st2, p)}")

# The two middle perversities give dual vectors, as they must on a compact
# oriented pseudomanifold.
print()
lower, upper = middle_perversities(3)
r = duality_check(st2, lower)
print("duality lower vs upper middle:", r["betti"], "vs", r["dual_betti"],
      "->", "pass" if r["pass"] else "fail")

# Unit weights at both apexes predict the middle-perversity pair for the
# maximal and minimal L2 cohomology, with vanishing even-to-odd indices.
print()
pred = theorem_predictions(st2)
print("weights:", {k: str(v) for k, v in sorted(st2.weights.items())})
print("max side:", pred["max_betti"], " min side:", pred["min_betti"])
print("indices:", fredholm_indices(pred["max_betti"], pred["min_betti"]))

# Weight 1/4 pushes the perversity to codim-1: the max side becomes the
# cohomology of the regular part (a cylinder over the torus), the min side
# the relative homology of the suspension modulo its apexes.
print()
st_quarter = suspension(t2, (F(1, 4), F(1, 4)))
pred = theorem_predictions(st_quarter)
print("weights 1/4:", "p_g =", pred["p_g"]["values"])
print("max side:", pred["max_betti"], " min side:", pred["min_betti"])
