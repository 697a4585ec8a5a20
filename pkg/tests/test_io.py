import json
from fractions import Fraction as F

import pytest

from lvmb import Configuration, InvariantViolation, ParseError, emit_example, read_config, read_fan, write_config, write_fan
from lvmb.catalog import named_fans, sqrt2_datum
from lvmb.io import config_from_dict, config_to_dict, fan_from_dict, parse_rational


def test_parse_rational():
    assert parse_rational("-3/4") == F(-3, 4)
    assert parse_rational(5) == 5
    for bad in ("1/0", 0.5, True, "x", "1/-2"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_config_round_trip(tmp_path):
    for config in (emit_example(), sqrt2_datum(),
                   Configuration(1, 2, [(F(1, 2), 0), (F(3, 2), 0), (F(1, 2), 1)], [(0, 1, 2)])):
        path = tmp_path / "c.json"
        write_config(config, path)
        assert read_config(path) == config


def test_fan_round_trip(tmp_path):
    for fan in named_fans().values():
        path = tmp_path / "f.json"
        write_fan(fan, path)
        assert read_fan(path) == fan


def test_duplicate_index_is_invariant_violation():
    doc = config_to_dict(emit_example())
    doc["E"][0] = [0, 0, 2]
    with pytest.raises(InvariantViolation) as info:
        config_from_dict(doc)
    assert any("repeated" in v for v in info.value.violations)


def test_parse_errors_name_the_field():
    doc = config_to_dict(emit_example())
    doc["L"][3][1] = "1/0"
    with pytest.raises(ParseError) as info:
        config_from_dict(doc)
    assert "L[3][1]" in str(info.value)
    doc = config_to_dict(sqrt2_datum())
    doc["L"][3][0] = {"sqrt5": 1}
    with pytest.raises(ParseError):
        config_from_dict(doc)
    with pytest.raises(ParseError):
        config_from_dict({"m": 1})


def test_bad_json_reports_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"m": 1,\n "n": }')
    with pytest.raises(ParseError) as info:
        read_config(path)
    assert ":2" in str(info.value)


def test_fan_validation():
    good = {"rank": 1, "rays": [{"index": 0, "v": [1]}, {"index": 1, "v": [-1]}], "max_cones": [[0], [1]]}
    fan_from_dict(good)
    for patch in (
        {"rays": [{"index": 0, "v": [2]}, {"index": 1, "v": [-1]}]},
        {"rays": [{"index": 0, "v": [0]}, {"index": 1, "v": [-1]}]},
        {"rays": [{"index": 0, "v": [1, 0]}, {"index": 1, "v": [-1]}]},
        {"max_cones": [[0], [7]]},
    ):
        with pytest.raises(ParseError):
            fan_from_dict({**good, **patch})


def test_symbolic_coordinates_serialize_as_maps():
    doc = config_to_dict(sqrt2_datum())
    assert doc["L"][3] == [{"sqrt2": 1}, {"sqrt2": 1}]
    assert doc["generators"][0]["name"] == "sqrt2"
    json.dumps(doc)
