"""Median eigenvalues (HL-index) of subcubic graphs."""

from ._hlindex import (
    FormatError,
    Graph,
    GraphError,
    ball_packing,
    bound_report,
    certify,
    conjecture_scan,
    converse_packing,
    cycle_with_pendants,
    eigenvalues,
    enumerate_subcubic,
    extremal_search,
    hl_index,
    interlacing,
    is_planar_subcubic,
    median_window,
    named,
    pg2_incidence,
    random_cubic,
    verify_certificate,
)

__all__ = [
    "FormatError",
    "Graph",
    "GraphError",
    "ball_packing",
    "bound_report",
    "certify",
    "conjecture_scan",
    "converse_packing",
    "cycle_with_pendants",
    "eigenvalues",
    "enumerate_subcubic",
    "extremal_search",
    "hl_index",
    "interlacing",
    "is_planar_subcubic",
    "median_window",
    "named",
    "pg2_incidence",
    "random_cubic",
    "verify_certificate",
]
