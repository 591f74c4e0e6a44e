"""Gorenstein flat dimension of a module that is not finitely generated over the base.

N = F[x,y]/(x) is viewed as a module over A = F[x] through the inclusion.
Over A it is not finitely generated, so Gfd is certified by testing
Tor against the modules E_t = (A/(x)^t)^v up to a bound.  The result
agrees with depth A - depth N.
"""

from ghomalg import GF, GradedRing, RingMap, FPModule, restrict_scalars, gfd_bounded, depth

F = GF(101)
A = GradedRing(F, ["x"])
S = GradedRing(F, ["x", "y"])
N = restrict_scalars(RingMap(A, S, ["x"]), FPModule.cyclic(S, ["x"]))

g = gfd_bounded(N, tmax=4, B=6)
print("Gfd N =", g)
for row in g.certificate["per_test"]:
    print("   ", row)
print("stabilized:", g.certificate["stabilized"])

dA = depth(FPModule.free(A, (0,)), 6).value
dN = depth(N, 6).value
print(f"depth A - depth N = {dA} - {dN} = {dA - dN}")
