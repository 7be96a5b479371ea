"""Symplectic and orthogonal Schur measures.

Exact characters come back as lists of Fraction coefficients of t^0..t^D.
Kernel and asymptotic routines return floats or numpy arrays.
"""

from ._spo import (
    ConfigError,
    Error,
    PreconditionViolation,
    airy_2to1,
    bo_check,
    bulk_scan,
    correlation,
    discrete_edge_cdf,
    edge_scan,
    gessel_check,
    kernel,
    kernel_matrix,
    o_char,
    partition_function,
    schur,
    sp_char,
    th_det,
    tw_cdf,
    verify_identities,
)

__all__ = [
    "ConfigError",
    "Error",
    "PreconditionViolation",
    "airy_2to1",
    "bo_check",
    "bulk_scan",
    "correlation",
    "discrete_edge_cdf",
    "edge_scan",
    "gessel_check",
    "kernel",
    "kernel_matrix",
    "o_char",
    "partition_function",
    "schur",
    "sp_char",
    "th_det",
    "tw_cdf",
    "verify_identities",
]
