"""Plane covering paths with at most ceil(6n/7) segments, in exact arithmetic."""
from .geometry import (Line, Orientation, Point, Ray, Segment, as_scalar,
                       convex_hull_small, line_line_intersection, orientation,
                       point_on_segment, ray_segment_intersection,
                       segments_properly_cross)
from .generators import GenSpec, Kind, generate
from .oracle import OracleMode, OracleResult, min_link_path
from .planner import (CoveringPath, DegeneracyMode, IterationTrace,
                      SolveOptions, Solution, Window, classify_window,
                      construct_window_path, solve)
from .preprocess import PointSet, ShearTransform, apply_shear, compute_shear
from .verifier import (CrossingMode, VerificationReport, check_invariant_trace,
                       verify)

__all__ = [
    "Line", "Orientation", "Point", "Ray", "Segment", "as_scalar",
    "convex_hull_small", "line_line_intersection", "orientation",
    "point_on_segment", "ray_segment_intersection", "segments_properly_cross",
    "GenSpec", "Kind", "generate", "OracleMode", "OracleResult", "min_link_path",
    "CoveringPath", "DegeneracyMode", "IterationTrace", "SolveOptions", "Solution", "Window",
    "classify_window", "construct_window_path", "solve",
    "PointSet", "ShearTransform", "apply_shear", "compute_shear",
    "CrossingMode", "VerificationReport", "check_invariant_trace", "verify",
]
