"""Python bindings for the flipcheck library."""

from ._core import (
    BudgetError,
    Circuit,
    ConfigError,
    FlipcheckError,
    build_design,
    count_circuits,
    count_designs,
    decode_design,
    determinant,
    determinant_circuit,
    efun,
    efun_circuit,
    efun_degree,
    encode_design,
    permanent,
    permanent_circuit,
    pit_random,
    run_cli,
    verify_design,
    verify_efun,
    verify_perm,
)

__all__ = [
    "BudgetError",
    "Circuit",
    "ConfigError",
    "FlipcheckError",
    "build_design",
    "count_circuits",
    "count_designs",
    "decode_design",
    "determinant",
    "determinant_circuit",
    "efun",
    "efun_circuit",
    "efun_degree",
    "encode_design",
    "permanent",
    "permanent_circuit",
    "pit_random",
    "run_cli",
    "verify_design",
    "verify_efun",
    "verify_perm",
]
