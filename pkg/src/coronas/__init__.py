"""Exact enumeration of lozenge coronas of hexagons and diamonds."""

from .bruteforce import (
    Corona,
    CoronaHistogram,
    enumerate_count_only,
    enumerate_coronas,
    is_valid_corona,
)
from .closedform import (
    CountBreakdown,
    diamond_counts,
    diamond_gf_series,
    gen_diamond_counts,
    gen_hexagon_counts,
    hexagon_counts,
    hexagon_gf_series,
)
from .lattice import (
    Diamond,
    GenDiamond,
    GenHexagon,
    Hexagon,
    Lozenge,
    Region,
    Shape,
    TriangleId,
    build_region,
    candidate_lozenges,
    external_ring_triangles,
)
from .polyalg import PolyMatrix, Polynomial
from .transfer import (
    diamond_trace,
    gen_diamond_trace,
    gen_hexagon_trace,
    hexagon_trace,
    trace_polynomial,
)

__version__ = "0.1.0"
