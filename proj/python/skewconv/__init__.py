"""Skew-polynomial unit-memory convolutional codes.

Thin wrapper over the compiled extension. Codes are plain dicts in the same
shape the command-line tool reads and writes, so the two can be mixed freely.
"""

from ._core import (
    InfeasibleError,
    UnrecoverableError,
    VerificationError,
    census,
    column_distance,
    conjugacy_classes,
    conjugate,
    construct,
    field_info,
    kernel_dimension,
    norm_iterate,
    profile,
    simulate,
    verify,
)

__all__ = [
    "InfeasibleError",
    "UnrecoverableError",
    "VerificationError",
    "census",
    "column_distance",
    "conjugacy_classes",
    "conjugate",
    "construct",
    "field_info",
    "kernel_dimension",
    "norm_iterate",
    "profile",
    "simulate",
    "verify",
]
