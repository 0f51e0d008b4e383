"""
Arithmetic in a Leavitt path algebra
====================================

Elements are linear combinations of monomials  alpha beta*  and every result
is brought to a canonical form.
"""

from leavitt import ZZ, LeavittAlgebra, Zmod, fixture, graded_components, parse_expr

# one vertex v with two loops e, f: the algebra usually written L(1, 2)
R2 = fixture("R2")
print(R2.to_text())

A = LeavittAlgebra(R2, ZZ)
e, f, v = A.edge("e"), A.edge("f"), A.vertex("v")

print("e* e  =", e.star() * e)      # v
print("e* f  =", e.star() * f)      # 0, different edges are orthogonal
print("e e*  =", e * e.star())      # rewritten through v = e e* + f f*
print("e e* + f f* - v =", e * e.star() + f * f.star() - v)

# the same thing through the expression syntax
x = parse_expr("2 e f* + 3 v - e e*", R2, ZZ)
print("x =", x)
print("x* =", x.star())

# graded pieces, keyed by |alpha| - |beta|
for k, part in graded_components(parse_expr("e + e f* + f* f* + v", R2, ZZ)).items():
    print(f"degree {k:2d}: {part}")

# coefficients mod 6 wrap around, and 6 v vanishes
A6 = LeavittAlgebra(R2, Zmod(6))
print("7 e f* over Z/6 =", parse_expr("7 e f*", R2, Zmod(6)))
print("6 v over Z/6    =", A6.vertex("v") * 6)

# a graph with a sink: products that do not compose are zero
GL = fixture("GL")
print("e e in GL =", parse_expr("e e", GL, ZZ))
print("b - g g*  =", parse_expr("b - g g*", GL, ZZ))
