"""Statistics on ordered set partitions."""

from ._core import (
    BoundExceeded,
    ParseError,
    PartitionError,
    checks,
    cli,
    distribution,
    distributions,
    euler_mahonian,
    normalize,
    partitions,
    psi,
    psi_inverse,
    q_stirling,
    run_check,
    statistics,
)

__all__ = [
    "BoundExceeded",
    "ParseError",
    "PartitionError",
    "checks",
    "cli",
    "distribution",
    "distributions",
    "euler_mahonian",
    "normalize",
    "partitions",
    "psi",
    "psi_inverse",
    "q_stirling",
    "run_check",
    "statistics",
]
