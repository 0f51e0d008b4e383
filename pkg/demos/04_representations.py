"""
Matrix pictures of small algebras
=================================

A single n-cycle gives n x n matrices over Laurent polynomials; an acyclic
graph acts on the span of its paths into sinks.
"""

from leavitt import QQ, ZZ, LeavittAlgebra, Zmod, fixture, parse_expr
from leavitt.oracle import (
    LaurentPoly,
    acyclic_family,
    acyclic_representation,
    cycle_family,
    cycle_representation,
    differential_check,
    laurent_principal_member,
    sink_paths,
    verify_e_family,
)
from leavitt.sampling import ElementSampler

C1 = fixture("C1")
print("v + e ->", cycle_representation(C1, parse_expr("v + e", C1, ZZ)))

C3 = fixture("C3")
for t in ("e1", "e3", "e3*", "e1 e2 e3"):
    print(t)
    print(cycle_representation(C3, parse_expr(t, C3, ZZ)))

A2 = fixture("A2")
print("basis:", [str(p) for p in sink_paths(A2)])
print(acyclic_representation(A2, parse_expr("2 v1 + e - e* + 5 v2", A2, ZZ)))

# spot-check the relations and compare products on random pairs
for name, builder, ring in (("C3", cycle_family, Zmod(6)), ("Y", acyclic_family, ZZ)):
    g = fixture(name)
    fam = builder(g, ring)
    sampler = ElementSampler(LeavittAlgebra(g, ring), seed=3)
    print(name, ring, "relations:", verify_e_family(g, fam),
          "pairs (passed, failed):", differential_check(fam, (sampler.pair() for _ in range(200))))

# inside Q[x, 1/x]: <1 + x> holds x^-1 (1 + x) but not its constant part 1
gen = LaurentPoly(QQ, {0: 1, 1: 1})
print("1 in <1+x>:", laurent_principal_member(LaurentPoly(QQ, {0: 1}), gen))
print("x^-1 + 1 in <1+x>:", laurent_principal_member(LaurentPoly(QQ, {-1: 1, 0: 1}), gen))
