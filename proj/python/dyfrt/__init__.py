"""Finite dynamical Yang-Baxter maps, L-operators and the FRT bialgebroid."""

from ._core import (
    DynamicalMap,
    CapOverflowError,
    PreconditionError,
    StructuralError,
    build_from_quasigroup,
    check_bijective,
    check_qdybe,
    check_rll,
    check_unitarity,
    check_weight_zero,
    check_yang_baxter,
    cli,
    demo_q5,
    flip_map,
    group_order,
    identity_map,
    load_dybm,
    q5_map,
    q5_table,
    reproduce,
)

__version__ = "0.1.0"
