"""Exact two-sided vertex guarding of 1.5D terrains."""
from .discretize import (BoundaryPoint, VisibilityInterval, WitnessSet, boundary_points,
                         build_witness_set, custom_witness_set, visibility_profile,
                         visible_interval)
from .extremes import ExtremeMap, brute_extreme, compute_all_extremes
from .gen import GenSpec, gen_terrain
from .oracle import (CoverageCertificate, OracleLimitError, brute_force_optimal,
                     minimal_one_sided_oracle, verify_two_sided_continuous, verify_vertices)
from .render import render_svg
from .solver import GuardSet, SolveReport, left_guarding, right_guarding, solve
from .terrain import (Terrain, TerrainError, TerrainPoint, parse_terrain, point_on_edge, sees,
                      vertex_point)

__version__ = "0.1.0"
