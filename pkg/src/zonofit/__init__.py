"""Zonotope description of symmetric convex shapes via Feret diameters.

Planar symmetric convex bodies are described by their Feret (caliper)
diameter function and approximated by zonotopes interpolating it on regular
angle grids, with explicit Hausdorff-distance guarantees.  Random shapes get
the matching second-order theory: Feret-process moments, the face-moment
recovery transform, and a reproducible Monte-Carlo harness.
"""

from .approx import (
    c0_approximate,
    cinf_approximate,
    contains,
    hausdorff_bound,
    offset_distances,
    worst_offset,
)
from .bodies import (
    Disk,
    Ellipse,
    FeasibilityReport,
    MinkowskiSum,
    Rotated,
    Scaled,
    Segment,
    SymmetricConvexBody,
    SymmetricPolygon,
    direction,
    feret_feasibility_check,
    regular_subdivision,
    rotate,
    scale,
)
from .circulant import CirculantMatrix, circulant_solve, feret_matrix
from .errors import (
    ParameterError,
    SolverError,
    SymmetryError,
    UnderdeterminedError,
    ZonofitError,
)
from .metrics import (
    diameter,
    hausdorff_distance,
    mixed_area_limit,
    mixed_area_with_zonotope,
    perimeter_cauchy,
    steiner_mixed_area,
)
from .nnls import kkt_residual, nnls
from .polygons import ConvexPolygon, minkowski_sum_polygons, polygon_area
from .process import (
    C0FaceMoments,
    CentralFaceMoments,
    ExistenceReport,
    FeretProcessMoments,
    StationarityReport,
    c0_random_moments,
    central_from_feret,
    central_nnls,
    confidence_bound,
    deterministic_process_moments,
    existence_check,
    expected_area,
    expected_perimeter,
    feret_second_lags,
    forward_zonotope_moments,
    isotropize_moments,
    k_matrix,
    k_s,
    stationarity_diagnostic,
)
from .serialize import (
    CSV_VERSION_LINE,
    distribution_from_dict,
    distribution_to_dict,
    dumps,
    format_csv,
    model_from_dict,
    model_to_dict,
    moments_from_dict,
    moments_to_dict,
    read_json,
    read_sample_csv,
    shape_from_dict,
    shape_to_dict,
    write_csv,
    write_json,
    write_sample_csv,
)
from .simulate import (
    CHUNK,
    DeterministicBody,
    EstimationResult,
    Fixed,
    IsotropicEllipse,
    IsotropicRectangle,
    IsotropicZonotope,
    LogNormal,
    Mixture,
    empirical_moments,
    estimate_process_moments,
    feret_sample_block,
    pipeline_estimate,
    sample_shape,
    worker_count,
)
from .zonotopes import (
    Zonotope,
    point_in_zonotope,
    zonotope_area,
    zonotope_feret,
    zonotope_perimeter,
    zonotope_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "C0FaceMoments",
    "CHUNK",
    "CSV_VERSION_LINE",
    "CentralFaceMoments",
    "CirculantMatrix",
    "ConvexPolygon",
    "DeterministicBody",
    "Disk",
    "Ellipse",
    "EstimationResult",
    "ExistenceReport",
    "FeasibilityReport",
    "FeretProcessMoments",
    "Fixed",
    "IsotropicEllipse",
    "IsotropicRectangle",
    "IsotropicZonotope",
    "LogNormal",
    "MinkowskiSum",
    "Mixture",
    "ParameterError",
    "Rotated",
    "Scaled",
    "Segment",
    "SolverError",
    "StationarityReport",
    "SymmetricConvexBody",
    "SymmetricPolygon",
    "SymmetryError",
    "UnderdeterminedError",
    "Zonotope",
    "ZonofitError",
    "c0_approximate",
    "c0_random_moments",
    "central_from_feret",
    "central_nnls",
    "cinf_approximate",
    "circulant_solve",
    "confidence_bound",
    "contains",
    "deterministic_process_moments",
    "diameter",
    "direction",
    "distribution_from_dict",
    "distribution_to_dict",
    "dumps",
    "empirical_moments",
    "estimate_process_moments",
    "existence_check",
    "expected_area",
    "expected_perimeter",
    "feret_feasibility_check",
    "feret_matrix",
    "feret_sample_block",
    "feret_second_lags",
    "format_csv",
    "forward_zonotope_moments",
    "hausdorff_bound",
    "hausdorff_distance",
    "isotropize_moments",
    "k_matrix",
    "k_s",
    "kkt_residual",
    "minkowski_sum_polygons",
    "mixed_area_limit",
    "mixed_area_with_zonotope",
    "model_from_dict",
    "model_to_dict",
    "moments_from_dict",
    "moments_to_dict",
    "nnls",
    "offset_distances",
    "perimeter_cauchy",
    "pipeline_estimate",
    "point_in_zonotope",
    "polygon_area",
    "read_json",
    "read_sample_csv",
    "regular_subdivision",
    "rotate",
    "sample_shape",
    "scale",
    "shape_from_dict",
    "shape_to_dict",
    "stationarity_diagnostic",
    "steiner_mixed_area",
    "worker_count",
    "worst_offset",
    "write_csv",
    "write_json",
    "write_sample_csv",
    "zonotope_area",
    "zonotope_feret",
    "zonotope_perimeter",
    "zonotope_vertices",
]
