"""JSON documents for data and fans.

Datum::

    {"m": 1, "n": 3,
     "generators": [{"name": "sqrt2", "enclosure": ["14142/10000", "14143/10000"]}],
     "L": [[0, 0], ["1/2", 0], [{"sqrt2": 1, "1": "-1/2"}, 1]],
     "E": [[0, 1, 2]]}

Each coordinate is an integer, a ``"p/q"`` string, or a map from generator
name (``"1"`` for the constant) to such a rational.  Floats are rejected.

Fan::

    {"rank": 1, "rays": [{"index": 0, "v": [1]}, {"index": 1, "v": [-1]}],
     "max_cones": [[0], [1]]}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import reduce
from math import gcd

from .combinatorics import Configuration, validate
from .errors import InvariantViolation, ParseError
from .symbolic import GeneratorTable, SymbolicReal
from .toric import Fan

__all__ = [
    "parse_rational",
    "scalar_to_json",
    "config_to_dict",
    "config_from_dict",
    "fan_to_dict",
    "fan_from_dict",
    "read_config",
    "write_config",
    "read_fan",
    "write_fan",
]

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(value, where=None):
    if isinstance(value, bool):
        raise ParseError(f"boolean {value!r} is not a rational", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if match:
            num, den = match.groups()
            if den is not None and int(den) == 0:
                raise ParseError(f"zero denominator in {value!r}", where)
            return Fraction(int(num), int(den) if den else 1)
    raise ParseError(f"expected an integer or 'p/q' string, got {value!r}", where)


def _rational_to_json(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_to_json(x):
    if isinstance(x, SymbolicReal):
        if x.is_rational:
            return _rational_to_json(x.to_fraction())
        return {x.table.names[i]: _rational_to_json(c) for i, c in sorted(x.coeffs.items())}
    return _rational_to_json(x)


def _parse_scalar(value, table, where):
    if isinstance(value, dict):
        coeffs = {}
        for name, c in value.items():
            try:
                idx = table.index(name)
            except KeyError:
                raise ParseError(f"unknown generator {name!r}", where) from None
            coeffs[idx] = parse_rational(c, f"{where}.{name}")
        return table.from_coeffs(coeffs)
    return parse_rational(value, where)


def config_to_dict(config):
    return {
        "m": config.m,
        "n": config.n,
        "generators": [
            {"name": name, "enclosure": [_rational_to_json(lo), _rational_to_json(hi)]}
            for name, (lo, hi) in config.table.generators[1:]
        ],
        "L": [[scalar_to_json(x) for x in p] for p in config.L],
        "E": [list(s) for s in config.E],
    }


def config_from_dict(doc, check=True):
    if not isinstance(doc, dict):
        raise ParseError("datum document must be an object")
    for key in ("m", "n", "L", "E"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    for key in ("m", "n"):
        if not isinstance(doc[key], int) or isinstance(doc[key], bool):
            raise ParseError(f"{key} must be an integer", key)
    gens = []
    for g, entry in enumerate(doc.get("generators", [])):
        where = f"generators[{g}]"
        try:
            name, (lo, hi) = entry["name"], entry["enclosure"]
        except (KeyError, TypeError, ValueError):
            raise ParseError("expected {name, enclosure: [lo, hi]}", where) from None
        gens.append((name, (parse_rational(lo, f"{where}.lo"), parse_rational(hi, f"{where}.hi"))))
    try:
        table = GeneratorTable(gens)
    except ValueError as exc:
        raise ParseError(str(exc), "generators") from None
    if not isinstance(doc["L"], list) or not all(isinstance(p, list) for p in doc["L"]):
        raise ParseError("L must be a list of coordinate lists", "L")
    L = [
        [_parse_scalar(x, table, f"L[{i}][{c}]") for c, x in enumerate(p)]
        for i, p in enumerate(doc["L"])
    ]
    E = doc["E"]
    if not isinstance(E, list) or not all(
        isinstance(s, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in s)
        for s in E
    ):
        raise ParseError("E must be a list of integer lists", "E")
    config = Configuration(doc["m"], doc["n"], L, E, table)
    if check:
        violations = validate(config)
        if violations:
            raise InvariantViolation(violations)
    return config


def fan_to_dict(fan):
    return {
        "rank": fan.rank,
        "rays": [{"index": i, "v": list(fan.rays[i])} for i in fan.labels],
        "max_cones": [list(c) for c in fan.max_cones],
    }


def fan_from_dict(doc):
    try:
        rank = doc["rank"]
        rays = {int(r["index"]): [int(x) for x in r["v"]] for r in doc["rays"]}
        cones = [[int(i) for i in c] for c in doc["max_cones"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed fan document: {exc}") from None
    for i, v in rays.items():
        if len(v) != rank:
            raise ParseError(f"ray {i} has {len(v)} entries, expected {rank}", f"rays[{i}]")
        if not any(v):
            raise ParseError("zero ray vector", f"rays[{i}]")
        if reduce(gcd, v, 0) != 1:
            raise ParseError(f"ray {v} is not primitive", f"rays[{i}]")
    for c, cone in enumerate(cones):
        missing = [i for i in cone if i not in rays]
        if missing:
            raise ParseError(f"unknown ray labels {missing}", f"max_cones[{c}]")
    return Fan(rank, rays, cones)


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{path}:{exc.lineno}") from None


def read_config(path, check=True):
    return config_from_dict(_load(path), check=check)


def write_config(config, path):
    with open(path, "w") as fh:
        json.dump(config_to_dict(config), fh, indent=2)
        fh.write("\n")


def read_fan(path):
    return fan_from_dict(_load(path))


def write_fan(fan, path):
    with open(path, "w") as fh:
        json.dump(fan_to_dict(fan), fh, indent=2)
        fh.write("\n")
