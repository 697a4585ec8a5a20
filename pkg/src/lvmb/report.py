"""Assemble every verdict about a datum into one report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .combinatorics import (
    check_comp,
    essential_intersection,
    min_transversal,
    validate,
)
from .errors import InconsistentDatum, PrecisionExhausted, RankDeficient
from .geometry import check_lvm, check_sep
from .gitlift import check_condition_K
from .toric import build_fan, diagnose

__all__ = ["ClassificationReport", "classify", "ReportInvariantError"]

RIGIDITY = "N is not biholomorphic to the manifold of any LVM datum"
TRANSVERSE_KAHLER = "the foliation F by fibres of N -> X is not transversely Kaehler"
ALGEBRAIC_REDUCTION = "X is an algebraic reduction of N"
NON_KAHLER = "N is not Kaehler (n > 2m)"
TORUS = "N is a compact complex torus (n = 2m), hence Kaehler"


class ReportInvariantError(AssertionError):
    pass


@dataclass
class ClassificationReport:
    structural: list
    m: int = None
    n: int = None
    is_lvmb: bool = None
    sep: bool = None
    sep_detail: dict = None
    comp: bool = None
    comp_counterexample: tuple = None
    is_lvm: bool = None
    lvm_witness: list = None
    has_K: bool = None
    normalization: object = None
    d: int = None
    k_prime: int = None
    distinct_ell: bool = None
    dim_N: int = None
    is_torus: bool = None
    fan_rank: int = None
    fan: object = None
    fan_error: str = None
    fan_simplicial: bool = None
    fan_complete: bool = None
    fan_projective: bool = None
    support_function: dict = None
    algebraic_dimension: int = None
    topology: dict = None
    rigidity_verdict: str = None
    transverse_kahler_verdict: str = None
    algebraic_reduction_note: str = None
    kahler_note: str = None
    notes: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.structural

    def to_dict(self):
        """JSON-ready dict with stable keys; exact numbers become strings."""
        from .io import fan_to_dict, scalar_to_json

        out = {}
        for key in self.__dataclass_fields__:
            val = getattr(self, key)
            if key == "normalization":
                val = None if val is None else {
                    "lambda": val.lam,
                    "M": [[scalar_to_json(x) for x in row] for row in val.M],
                    "b": [scalar_to_json(x) for x in val.b],
                }
            elif key == "fan":
                val = None if val is None else fan_to_dict(val)
            elif key == "lvm_witness":
                val = None if val is None else [scalar_to_json(x) for x in val]
            elif key == "support_function":
                val = None if val is None else {str(k): scalar_to_json(v) for k, v in val.items()}
            elif key == "comp_counterexample" and val is not None:
                val = list(val)
            elif key == "sep_detail" and val is not None:
                val = {k: list(v) if isinstance(v, tuple) else v for k, v in val.items()}
            out[key] = val
        return out

    def to_machine(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self):
        if self.structural:
            return "invalid datum:\n" + "\n".join(f"  - {v}" for v in self.structural)
        yn = {True: "yes", False: "no", None: "-"}
        lines = [
            f"datum: m = {self.m}, n = {self.n}, dim N = {self.dim_N}",
            f"LVMB: {yn[self.is_lvmb]}   (sep: {yn[self.sep]}, comp: {yn[self.comp]})",
            f"LVM: {yn[self.is_lvm]}",
            f"condition (K): {yn[self.has_K]}",
            f"d = {self.d}, k' = {self.k_prime}, distinct forms: {yn[self.distinct_ell]}",
        ]
        if self.sep_detail:
            lines.append(f"  sep failure: {self.sep_detail}")
        if self.comp_counterexample:
            lines.append(f"  comp failure at (alpha, i) = {self.comp_counterexample}")
        if self.fan is not None:
            lines.append(
                f"fan of X: rank {self.fan_rank}, {len(self.fan.rays)} rays, "
                f"{len(self.fan.max_cones)} maximal cones; simplicial: {yn[self.fan_simplicial]}, "
                f"complete: {yn[self.fan_complete]}, projective: {yn[self.fan_projective]}"
            )
        elif self.fan_error:
            lines.append(f"fan of X: unavailable ({self.fan_error})")
        if self.topology:
            lines.append("topology: " + ", ".join(f"{k} = {v}" for k, v in self.topology.items()))
        if self.algebraic_dimension is not None:
            lines.append(f"algebraic dimension of N: {self.algebraic_dimension}")
        for note in (
            self.kahler_note,
            self.algebraic_reduction_note,
            self.rigidity_verdict,
            self.transverse_kahler_verdict,
        ):
            if note:
                lines.append(f"* {note}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _check_invariants(rep):
    if rep.is_lvm and not rep.is_lvmb:
        raise ReportInvariantError("LVM datum that is not LVMB")
    if rep.has_K and rep.is_lvmb and rep.fan_projective is not None:
        if rep.fan_projective != rep.is_lvm:
            raise ReportInvariantError("projectivity of X disagrees with the LVM test")
    if (rep.d == 1) != (rep.k_prime > 0):
        raise ReportInvariantError("d = 1 must coincide with a nonempty common index set")
    if rep.is_torus and rep.fan_rank != 0:
        raise ReportInvariantError("torus case with a nontrivial fan")


def classify(config):
    """Run every check on ``config`` and gate the derived verdicts."""
    violations = validate(config)
    if violations:
        return ClassificationReport(structural=violations)
    m, n = config.m, config.n
    rep = ClassificationReport(structural=[], m=m, n=n)
    stage = "sep"
    try:
        rep.sep, rep.sep_detail = check_sep(config)
        rep.comp, rep.comp_counterexample = check_comp(config)
        rep.is_lvmb = rep.sep and rep.comp
        stage = "lvm"
        lvm, witness = check_lvm(config)
        rep.is_lvm = bool(rep.is_lvmb and lvm)
        rep.lvm_witness = witness if rep.is_lvm else None
        stage = "condition (K)"
        norm = check_condition_K(config)
    except PrecisionExhausted as exc:
        raise PrecisionExhausted(f"{stage}: {exc}") from exc
    rep.has_K = norm is not None
    rep.normalization = norm
    rep.d = min_transversal(config.E, n)
    rep.k_prime = len(essential_intersection(config.E))
    rep.distinct_ell = config.has_distinct_forms()
    rep.dim_N = n - m
    rep.is_torus = n == 2 * m
    rep.fan_rank = n - 2 * m

    if rep.has_K:
        try:
            fan = build_fan(config, norm)
        except (RankDeficient, InconsistentDatum) as exc:
            rep.fan_error = str(exc)
        else:
            diag = diagnose(fan)
            rep.fan = fan
            rep.fan_simplicial = diag.simplicial
            rep.fan_complete = diag.complete
            rep.fan_projective = diag.projective
            rep.support_function = diag.support_function

    if rep.is_lvmb:
        kp = rep.k_prime
        if rep.d > 1:
            rep.topology = {"pi1": "0", "H2": "Z"}
        else:
            pi1 = "0" if kp == 1 else ("Z" if kp == 2 else f"Z^{kp - 1}")
            ranks = sorted({0, (kp - 1) * (kp - 2) // 2})
            rep.topology = {"pi1": pi1, "H2_rank": ranks}
        rep.kahler_note = TORUS if rep.is_torus else NON_KAHLER
        if rep.has_K and rep.d > 1:
            rep.algebraic_reduction_note = ALGEBRAIC_REDUCTION
            rep.algebraic_dimension = n - 2 * m
        if rep.has_K and not rep.is_lvm:
            rep.transverse_kahler_verdict = TRANSVERSE_KAHLER
            if rep.d > 1 and rep.distinct_ell:
                rep.rigidity_verdict = RIGIDITY
    _check_invariants(rep)
    return rep
