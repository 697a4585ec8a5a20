"""From a datum with rational points to the fan of its toric quotient.

The weights (lambda_i, 1) have a lattice of integer relations; its basis
vectors, read column by column, are the rays.  Each index set E_alpha
leaves out a triple of rays, and those triples are the maximal cones.
"""

from fractions import Fraction

from lvmb import Configuration, build_fan, check_condition_K, check_lvm, emit_example, gale_dual
from lvmb.toric import diagnose

datum = emit_example()
norm = check_condition_K(datum)
print("integer weights:", norm.lam)
for i, v in enumerate(gale_dual(norm.lam)):
    print(f"  v_{i} = {v}")

fan = build_fan(datum, norm)
print("\nmaximal cones:", fan.max_cones)
diag = diagnose(fan)
print("simplicial:", diag.simplicial, " complete:", diag.complete, " projective:", diag.projective)

# Move one vertex so that all triangles share a point; the fan becomes projective.
L = list(datum.L)
L[0] = (Fraction(2), Fraction(-1))
moved = Configuration(1, 5, L, datum.E)
print("\nmoved vertex 0 to (2, -1): common point", [str(x) for x in check_lvm(moved)[1]])
d2 = diagnose(build_fan(moved, check_condition_K(moved)))
print("projective now:", d2.projective)
print("support function:", {i: str(h) for i, h in d2.support_function.items()})
