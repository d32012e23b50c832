"""Hankel determinants, orthogonal polynomials and model-matrix asymptotics
for the Gaussian weight with a jump discontinuity."""

from .precision import (CoveringPoint, PrecisionContext, cover_from_complex,
                        cover_log, cover_point, cover_rotate, cover_value,
                        default_bits, validated)
from .moments import JumpWeight, MomentTable, moment, moment_table
from .orthopoly import OPData, RecurrencePair, YEntries, hankel_det, op_data, op_data_for

__all__ = [
    "CoveringPoint", "PrecisionContext", "cover_from_complex", "cover_log",
    "cover_point", "cover_rotate", "cover_value", "default_bits", "validated",
    "JumpWeight", "MomentTable", "moment", "moment_table",
    "OPData", "RecurrencePair", "YEntries", "hankel_det", "op_data", "op_data_for",
]

__version__ = "0.1.0"
