"""Finite quantum logics: exact realizations, two-valued states and Kochen-Specker obstructions."""

from ._core import (
    GreechieError,
    Logic,
    ParseError,
    Quad,
    complete_contexts,
    derive_rules,
    emit_dot,
    enumerate_states,
    falsification_report,
    infer_collapses,
    inner_product,
    joint_probability,
    load_logic,
    make_star,
    parity_obstruction,
    parse_logic,
    rays_collinear,
    run_cli,
    serialize_logic,
    tkadlec_dual,
    verify_realization,
)

__all__ = [
    "GreechieError",
    "Logic",
    "ParseError",
    "Quad",
    "complete_contexts",
    "derive_rules",
    "emit_dot",
    "enumerate_states",
    "falsification_report",
    "infer_collapses",
    "inner_product",
    "joint_probability",
    "load_logic",
    "make_star",
    "parity_obstruction",
    "parse_logic",
    "rays_collinear",
    "run_cli",
    "serialize_logic",
    "tkadlec_dual",
    "verify_realization",
]
