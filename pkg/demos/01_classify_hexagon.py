"""Classify the built-in hexagon datum and print its report.

Six lattice points in the plane, eight triangles.  Every pair of triangles
overlaps, yet no point lies inside all eight at once, so the quotient is an
LVMB manifold that does not come from the LVM construction.
"""

from lvmb import check_lvm, check_sep, classify, emit_example
from lvmb.geometry import relint_certificate

datum = emit_example()
print("points:", [tuple(map(str, p)) for p in datum.L])
print("triangles:", datum.E)

ok, detail = check_sep(datum)
print("\npairwise interiors meet:", ok)

# The common-point program for all eight triangles at once has optimum t* <= 0.
cert = relint_certificate([datum.simplex(a) for a in range(len(datum.E))])
print("best common slack over all eight triangles:", cert.slack)
print("common interior point:", check_lvm(datum)[1])

print("\n" + classify(datum).to_text())
