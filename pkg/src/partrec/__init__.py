"""partrec: partition counting functions by recurrence and generating
function, with brute-force oracles and an exhaustive identity-check registry.
"""

from .counting import (
    FAMILIES,
    FAMILY_METHODS,
    PARITY_METHODS,
    PartitionTable,
    build_table,
    overp_r_table,
    overp_table,
    p2_table,
    p_table,
    parity_p,
    q_table,
    qq_table,
    v_table,
)
from .oracle import ConstraintKind, count_partitions, enumerate_partitions
from .series import (
    Factor,
    Series,
    expand_product,
    phi_series,
    psi_series,
    theta_series,
)
from .verify import CHECKS, CheckResult, TableSet, check_names, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CheckResult",
    "ConstraintKind",
    "FAMILIES",
    "FAMILY_METHODS",
    "Factor",
    "PARITY_METHODS",
    "PartitionTable",
    "Series",
    "TableSet",
    "build_table",
    "check_names",
    "count_partitions",
    "enumerate_partitions",
    "expand_product",
    "overp_r_table",
    "overp_table",
    "p2_table",
    "p_table",
    "parity_p",
    "phi_series",
    "psi_series",
    "q_table",
    "qq_table",
    "run_all",
    "run_check",
    "theta_series",
    "v_table",
]
