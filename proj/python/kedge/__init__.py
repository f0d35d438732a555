"""k-edge statistics, crossing-number bounds and extremal constructions."""

from ._core import (
    InputError,
    VerificationError,
    aichholzer_bound,
    bound_table,
    build_sr,
    cluster_polygon,
    collinear_triples,
    cr_lower_bound,
    crossings,
    edge_vector,
    halfperiod,
    halving_upper_bound,
    polygon_center,
    read_points,
    section5,
    selftest,
    sr_target_leq,
    summarize,
    table1,
    verify_central,
)

__all__ = [
    "InputError",
    "VerificationError",
    "aichholzer_bound",
    "bound_table",
    "build_sr",
    "cluster_polygon",
    "collinear_triples",
    "cr_lower_bound",
    "crossings",
    "edge_vector",
    "halfperiod",
    "halving_upper_bound",
    "polygon_center",
    "read_points",
    "section5",
    "selftest",
    "sr_target_leq",
    "summarize",
    "table1",
    "verify_central",
]
