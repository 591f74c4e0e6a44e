"""Why G-dimension is only semidecidable.

Over R = F[x,y]/(x^2,xy,y^2) the residue field has a linear resolution with
Betti numbers 2^i and Ext^i(k, R) never vanishes.  No finite computation can
rule out that the G-dimension becomes finite later, so the engine answers
Unknown(B) instead of guessing.  The command line tool reports this with
exit status 3.
"""

from ghomalg import GF, GradedRing, FPModule, free_resolution, gdim
from ghomalg.harness import run_cli

R = GradedRing(GF(101), ["x", "y"], ["x^2", "x*y", "y^2"])
k = FPModule.residue_field(R)

print("Betti numbers of k:", free_resolution(k, 8).ranks())
for B in (2, 4, 8):
    print(f"bound {B}:", gdim(k, B))

print()
print("ghomalg gdim --fixture f3.gfd --module k --bound 8")
code = run_cli(["gdim", "--fixture", "f3.gfd", "--module", "k", "--bound", "8", "--format", "text"])
print("exit status:", code)
