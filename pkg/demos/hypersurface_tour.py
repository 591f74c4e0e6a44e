"""A tour of the engine over the hypersurface Q[u,v]/(uv).

Run with ``python3 demos/hypersurface_tour.py``.
"""

from ghomalg import QQ, GradedRing, FPModule, free_resolution, depth, gdim, ext, matlis_dual

R = GradedRing(QQ, ["u", "v"], ["u*v"])
k = FPModule.residue_field(R)
M = FPModule.cyclic(R, ["u"])          # R/(u)

print("ring:", R)
print()
print("minimal resolution of k (periodic of period 2 after the first step):")
res = free_resolution(k, 6)
print(res.betti_table().format())
print()
print("depth R =", depth(FPModule.free(R, (0,))))
print("depth k =", depth(k))
print("depth R/(u) =", depth(M))
print()
# k has G-dimension 1 and R/(u) is totally reflexive
print("Gdim k     :", gdim(k, 8))
print("Gdim R/(u) :", gdim(M, 8))
print()
for i in range(4):
    print(f"Ext^{i}(R/(u), R) generators in degrees", ext(M, FPModule.free(R, (0,)), i).degrees)
print()
print("Matlis dual of k: generators in degrees", matlis_dual(k).degrees)
