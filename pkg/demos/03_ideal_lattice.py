"""
Graded ideals from vertex sets
==============================

Graded basic ideals correspond to saturated hereditary sets of vertices.
"""

from leavitt import ZZ, fixture, parse_expr
from leavitt.graph import check_condition_K, check_condition_L
from leavitt.ideals import (
    all_saturated_hereditary,
    hasse_covers,
    in_ideal_IH,
    lattice_ops,
    quotient_graph,
    quotient_map,
    simplicity_report,
)
from leavitt.sampling import random_graphs

# two isolated vertices: four ideals, matching Z + Z
E2 = fixture("E2")
sets = all_saturated_hereditary(E2)
for i, H in enumerate(sets):
    print(i, H)
print("covers:", hasse_covers(E2, sets))

# a loop a <-> b with a tail b -> t
GL = fixture("GL")
for H in all_saturated_hereditary(GL):
    Q = quotient_graph(GL, H)
    print(f"H = {H}: quotient has vertices {list(Q.vertices)}, L holds there: {check_condition_L(Q)[0]}")

x = parse_expr("b - g g*", GL, ZZ)
print("b - g g* =", x, "; image modulo {t}:", quotient_map(GL, {"t"}, x))
print("h in I_{t}:", in_ideal_IH(GL, {"t"}, parse_expr("h", GL, ZZ)))

# join adds whatever saturation forces in
Y = fixture("Y")
meet, join = lattice_ops(Y, {"v2"}, {"v3"})
print("Y: meet", meet, "join", join)

# K holds exactly when every quotient satisfies L
agree = 0
graphs = random_graphs(300, seed=7)
for g in graphs:
    K = check_condition_K(g)[0]
    L_everywhere = all(check_condition_L(quotient_graph(g, H))[0] for H in all_saturated_hereditary(g))
    agree += K == L_everywhere
print(f"K vs quotients: {agree}/{len(graphs)} agree")

for name in ("R2", "GL", "E2", "C3X"):
    print(name, simplicity_report(fixture(name)).as_tuple())
