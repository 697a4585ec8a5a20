"""Go the other way: start from a fan and build a datum whose quotient has it.

For each named fan the realized datum is classified, its fan rebuilt, and a
unimodular matrix matching the rays is recovered.
"""

from lvmb import build_fan, check_condition_K, classify, named_fans, realize_fan, unimodular_equivalence
from lvmb.catalog import fan_hirzebruch

fans = dict(named_fans(), F1=fan_hirzebruch(1))
for name, fan in fans.items():
    datum, _ = realize_fan(fan)
    rep = classify(datum)
    back = build_fan(datum, check_condition_K(datum))
    G = unimodular_equivalence(fan, back, {lab: p + 1 for p, lab in enumerate(fan.labels)})
    print(f"{name:11s} m={datum.m} n={datum.n}  LVMB={rep.is_lvmb} LVM={rep.is_lvm} "
          f"d={rep.d}  G={G}")

datum, _ = realize_fan(named_fans()["P1"])
print("\nP1 gives the Hopf datum:", [tuple(map(str, p)) for p in datum.L], datum.E)
