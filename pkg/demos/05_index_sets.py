"""The purely combinatorial side: exchange property, hitting sets, restrictions."""

from lvmb import check_comp, emit_example, essential_intersection, hopf_datum, min_transversal
from lvmb import minimal_standard_submanifolds

for name, datum in (("hexagon", emit_example()), ("Hopf", hopf_datum())):
    d = min_transversal(datum.E, datum.n)
    common = sorted(essential_intersection(datum.E))
    print(f"{name}: exchange ok={check_comp(datum)[0]}, d={d}, common indices={common}")
    for s, sub in minimal_standard_submanifolds(datum):
        print(f"    E={s} -> n'={sub.n}, 2m={2 * sub.m}")
