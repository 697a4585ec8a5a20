"""Exact classification of LVMB data and their toric quotients.

Typical use::

    >>> from lvmb import emit_example, classify
    >>> rep = classify(emit_example())
    >>> rep.is_lvmb, rep.is_lvm, rep.d
    (True, False, 2)
"""

from .catalog import emit_example, hopf_datum, named_fans
from .combinatorics import (
    Configuration,
    check_comp,
    essential_intersection,
    min_transversal,
    minimal_standard_submanifolds,
    restrict,
    validate,
)
from .errors import (
    InconsistentDatum,
    Infeasible,
    InvariantViolation,
    LVMBError,
    NotComplete,
    NotSimplicial,
    ParseError,
    PrecisionExhausted,
    RankDeficient,
    SingularMatrix,
)
from .geometry import affine_dimension, check_lvm, check_sep, relint_common_point
from .gitlift import (
    Normalization,
    canonical_A,
    check_condition_K,
    cocompact_closed,
    restrict_action,
    verify_normalization,
)
from .io import read_config, read_fan, write_config, write_fan
from .linalg import rat_solve, saturated_kernel, smith_normal_form
from .lp import lp_max_slack
from .report import ClassificationReport, classify
from .symbolic import GeneratorTable, Sign, SymbolicReal, sign_of
from .toric import (
    Fan,
    build_fan,
    check_complete,
    check_projective,
    check_simplicial,
    gale_dual,
    realize_fan,
    unimodular_equivalence,
)

__version__ = "0.1.0"
