"""scleraqc: landmark-based sclera segmentation and skin-tone agnostic
face image quality statistics.

The sclera keeps a whitish color across ages, ethnicities and skin
tones, so statistics computed on sclera pixels respond consistently to
illumination problems and color manipulation regardless of the subject.
This package segments the sclera from facial landmarks (convex hull of
the eye contour minus the minimum enclosing circle of the iris) and
derives saturation-response and illumination indicators from it.
"""

__version__ = "0.1.0"

from .errors import (
    BothEyesDegenerate,
    DecodeError,
    DegenerateEye,
    DegenerateInput,
    EmptyInput,
    EmptyRegion,
    IoError,
    ParseError,
    SchemaError,
    ScleraQcError,
    UnsupportedFormat,
)
from .geometry import (
    Circle,
    ConvexPolygon,
    PixelRect,
    Point2D,
    bounding_rect,
    convex_hull,
    min_enclosing_circle,
    point_in_convex_polygon,
    point_outside_circle,
)
from .landmarks import (
    EyeSide,
    LandmarkFile,
    ValidationWarning,
    parse_landmarks,
    serialize_landmarks,
    validate_against_image,
)
from .segmentation import (
    EyeGeometry,
    RegionMask,
    ScleraMask,
    SegmentationResult,
    build_eye_geometry,
    mask_to_image,
    render_overlay,
    segment_both,
    segment_sclera,
)
from .stats import (
    AsymmetryReport,
    RegionStats,
    compare_sides,
    export_histogram_csv,
    polygon_region_stats,
    region_stats,
)
from .color import SweepRow, SweepTable, adjust_saturation, saturation_sweep
from .report import (
    QualityReport,
    QualityThresholds,
    ReportStats,
    assess,
    parse_report,
    serialize_report,
)
from .image_io import load_image, save_png

__all__ = [
    "__version__",
    # errors
    "ScleraQcError", "DegenerateInput", "EmptyInput", "ParseError", "SchemaError",
    "DegenerateEye", "BothEyesDegenerate", "EmptyRegion", "IoError", "DecodeError",
    "UnsupportedFormat",
    # geometry
    "Point2D", "Circle", "ConvexPolygon", "PixelRect",
    "convex_hull", "min_enclosing_circle", "point_in_convex_polygon",
    "point_outside_circle", "bounding_rect",
    # landmarks
    "LandmarkFile", "EyeSide", "ValidationWarning",
    "parse_landmarks", "serialize_landmarks", "validate_against_image",
    # segmentation
    "EyeGeometry", "RegionMask", "ScleraMask", "SegmentationResult",
    "build_eye_geometry", "segment_sclera", "segment_both",
    "render_overlay", "mask_to_image",
    # stats
    "RegionStats", "AsymmetryReport",
    "region_stats", "polygon_region_stats", "compare_sides", "export_histogram_csv",
    # color
    "SweepRow", "SweepTable", "adjust_saturation", "saturation_sweep",
    # report
    "QualityThresholds", "QualityReport", "ReportStats",
    "assess", "serialize_report", "parse_report",
    # io
    "load_image", "save_png",
]
