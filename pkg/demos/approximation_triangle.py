"""Approximation triangles for the residue field of Q[u,v]/(uv).

k has G-dimension 1.  For n = 0 and n = 1 the engine builds a triangle
P -> H -> k with pd P finite and H built from totally reflexive modules,
then checks every arrow and the four-term exact sequence in homology.
"""

from ghomalg import QQ, GradedRing, FPModule, approximation_triangle, rotate_triangle

R = GradedRing(QQ, ["u", "v"], ["u*v"])
k = FPModule.residue_field(R)

for n in (0, 1):
    r = approximation_triangle(k, n)
    print(f"n = {n}: ok = {r.ok()}, pd P = {r.pd_P}")
    for name, passed in r.checks.items():
        print(f"    {name}: {passed}")
    print("    rotated triangle ok:", rotate_triangle(r).ok())
