import json

import pytest

from lvmb import Configuration, PrecisionExhausted, classify, emit_example, hopf_datum
from lvmb.catalog import sqrt2_datum
from lvmb.report import NON_KAHLER, TORUS
from lvmb.symbolic import GeneratorTable


def test_torus_datum():
    rep = classify(Configuration(1, 2, [(0, 0), (1, 0), (0, 1)], [(0, 1, 2)]))
    assert rep.is_lvmb and rep.is_lvm and rep.is_torus and rep.fan_rank == 0
    assert rep.rigidity_verdict is None and rep.kahler_note == TORUS
    assert rep.fan_complete and rep.fan_projective


def test_hopf_report():
    rep = classify(hopf_datum())
    assert rep.is_lvmb and rep.is_lvm and rep.d == 1 and rep.k_prime == 2
    assert rep.topology["pi1"] == "Z" and rep.fan_projective
    assert rep.kahler_note == NON_KAHLER


def test_structural_failure_short_circuits():
    rep = classify(Configuration(1, 1, [(0, 0), (1, 0)], [(0, 1)]))
    assert not rep.valid and rep.is_lvmb is None
    assert rep.to_text().startswith("invalid datum")


def test_no_K_means_no_fan():
    rep = classify(sqrt2_datum())
    assert rep.has_K is False and rep.fan is None and rep.fan_projective is None


def test_machine_output_is_deterministic():
    a = classify(emit_example()).to_machine()
    b = classify(emit_example()).to_machine()
    assert a == b
    doc = json.loads(a)
    assert doc["is_lvmb"] and doc["fan"]["rank"] == 3 and list(doc) == sorted(doc)


def test_precision_exhaustion_names_the_stage():
    t = GeneratorTable.with_sqrt(2)
    s = t.gen(1)
    # sqrt2 * sqrt2 - 2 is zero, but not formally; the sign test must give up
    L = [(0, 0), (1, 0), (0, s * s - 2)]
    with pytest.raises(PrecisionExhausted, match="sep"):
        classify(Configuration(1, 2, L, [(0, 1, 2)], t))
