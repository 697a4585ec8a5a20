"""The exact simplex method behind every interior test.

Maximizing a common slack t turns "strictly positive barycentric
coefficients" into a single program; t* > 0 exactly when the interiors meet,
and the optimal basis is an exact certificate.
"""

from lvmb import lp_max_slack, relint_common_point
from lvmb.geometry import relint_certificate, verify_relint_witness

out = lp_max_slack([[1, 1]], [1], [0, 1])
print("x + y = 1, x, y >= t:  t* =", out.optimal_slack, " witness", [str(x) for x in out.witness])

out = lp_max_slack([[1, 1], [1, -1]], [1, 3], [0, 1])
print("also x - y = 3:        t* =", out.optimal_slack, " (feasible, not strictly)")

a = [(0, 0), (3, 0), (0, 3)]
b = [(1, 1), (4, 1), (1, 4)]
c = [(3, 0), (0, 3), (3, 3)]
cert = relint_certificate([a, b])
print("\noverlapping triangles: point", [str(x) for x in cert.point], " verified", verify_relint_witness([a, b], cert))
print("triangles sharing an edge:", relint_common_point([a, c]))
