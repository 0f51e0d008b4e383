"""
Changing coefficients
=====================

A ring map S -> R pushes L_S(E) into L_R(E) coefficient by coefficient.
"""

from leavitt import QQ, ZZ, LeavittAlgebra, RingHom, Zmod, fixture, parse_expr
from leavitt.errors import NoSuchHom
from leavitt.oracle import base_change
from leavitt.sampling import ElementSampler

R2 = fixture("R2")
x = parse_expr("2 v + e - 4 e f* + 7 f f*", R2, ZZ)
for target in (Zmod(2), Zmod(6), QQ):
    print(f"Z -> {target}:", base_change(RingHom(ZZ, target), R2, x))

# Z/6 -> Z/4 does not exist
try:
    RingHom(Zmod(6), Zmod(4))
except NoSuchHom as exc:
    print(exc)

# the map respects products; going through Z/6 to Z/2 is the same as reducing mod 2
h6, h2, h62 = RingHom(ZZ, Zmod(6)), RingHom(ZZ, Zmod(2)), RingHom(Zmod(6), Zmod(2))
sampler = ElementSampler(LeavittAlgebra(R2, ZZ), seed=11, coeff_bound=20)
ok = 0
for _ in range(100):
    a, b = sampler.pair()
    ok += base_change(h6, R2, a * b) == base_change(h6, R2, a) * base_change(h6, R2, b)
    ok += base_change(h62, R2, base_change(h6, R2, a)) == base_change(h2, R2, a)
print(f"{ok}/200 checks passed")
