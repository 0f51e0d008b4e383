"""
Reducing nonzero elements to vertices
=====================================

For a graph in which every cycle has an exit, any nonzero x can be cut down
to a nonzero multiple of a vertex:  alpha* (x gamma) beta = r v.  The
routines below produce alpha, gamma, beta, r and v explicitly.
"""

from leavitt import ZZ, LeavittAlgebra, Zmod, fixture, parse_expr
from leavitt.errors import ConditionLViolated
from leavitt.sampling import ElementSampler
from leavitt.witness import full_witness, nonreturning_path, verify_reduction, zero_part_decompose, zero_part_reduce

GL = fixture("GL")

# a path from a that no loop through a can swallow
alpha = nonreturning_path(GL, "a", [GL.path("e", "g")])
print("nonreturning path from a:", alpha)

x = parse_expr("e g + a - 2 h* e*", GL, ZZ)   # h* e* is zero, the input still normalizes
print("x =", x)
w = full_witness(GL, x)
print(w)
print("re-verified:", verify_reduction(x, w.alpha, w.beta, w.r, w.v, w.gamma))

# a batch of random elements over Z/6
R2 = fixture("R2")
sampler = ElementSampler(LeavittAlgebra(R2, Zmod(6)), seed=1)
for y in sampler.elements(5, nonzero=True):
    w = full_witness(R2, y)
    print(f"{str(y):30s} -> r = {w.r}, v = {w.v}")

# a single loop has no exit, so there is no such witness in general
C1 = fixture("C1")
try:
    full_witness(C1, parse_expr("v + e", C1, ZZ))
except ConditionLViolated as exc:
    print("C1:", exc)

# but degree-0 elements always reduce, whatever the graph
y = parse_expr("v + 5 e e e* e*", C1, ZZ)   # collapses to 6 v
a, b, r, v = zero_part_reduce(C1, y)
print(f"degree-0 element {y}: alpha = {a}, beta = {b}, r = {r}, v = {v}")

# and elements of nonzero degree split into degree-0 pieces
for p, piece in zero_part_decompose(C1, parse_expr("3 e", C1, ZZ)):
    print("  piece along", p, ":", piece)
