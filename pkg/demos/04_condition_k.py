"""When does the action extend to an algebraic torus?

Exactly when every point has rational affine coordinates with respect to an
affine basis of the configuration.  Irrational coordinates are exact
symbolic values; they are never rounded.
"""

from fractions import Fraction

from lvmb import Configuration, check_condition_K, cocompact_closed, verify_normalization
from lvmb.catalog import sqrt2_datum
from lvmb.symbolic import GeneratorTable

half = Configuration(1, 2, [(Fraction(1, 2), 0), (Fraction(3, 2), 0), (Fraction(1, 2), 1)], [(0, 1, 2)])
norm = check_condition_K(half)
print("shifted lattice triangle: lam =", norm.lam, " b =", [str(x) for x in norm.b])

t = GeneratorTable.with_sqrt(2)
s = t.gen(1)
skewed = Configuration(1, 3, [(0, 0), (s, 1), (1, s), (s + 1, s + 1)], [(0, 1, 2)], t)
norm = check_condition_K(skewed)
print("irrational parallelogram: lam =", norm.lam, " verified:", verify_normalization(skewed, norm))

print("0, 1, i, sqrt2(1+i):", check_condition_K(sqrt2_datum()))

# Closedness of exp(A C^m) in (C*)^{2m} is invertibility of (Re A | Im A).
print("\nA = (1, i):", cocompact_closed([[1], [0]], [[0], [1]]))
print("A = (1, 1):", cocompact_closed([[1], [1]], [[0], [0]]))
