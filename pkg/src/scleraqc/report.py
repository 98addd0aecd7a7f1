"""Quality indicators derived from sclera statistics, with a stable
serialized report format.

Indicators are booleans plus the raw statistics they were derived from,
never a fused score.  "Dark" is always evaluated on sclera luma, not on
skin pixels, which is what keeps the indicators consistent across skin
tones.  All thresholds are configuration with stated defaults and are
echoed verbatim in every report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyRegion, ParseError, SchemaError
from .geometry import convex_hull
from .landmarks import EyeSide, LandmarkFile
from .segmentation import segment_both
from .stats import AsymmetryReport, RegionStats, compare_sides, polygon_region_stats, region_stats

REPORT_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class QualityThresholds:
    dark_luma_mean: float = 64.0
    dark_pixel_luma: float = 64.0
    dark_fraction: float = 0.5
    asymmetry_norm: float = 0.2
    min_sclera_pixels: int = 10

    def __post_init__(self) -> None:
        if self.dark_luma_mean <= 0 or self.dark_pixel_luma <= 0 or self.min_sclera_pixels <= 0:
            raise ValueError("thresholds must be positive")
        if not (0.0 < self.dark_fraction < 1.0) or not (0.0 < self.asymmetry_norm < 1.0):
            raise ValueError("dark_fraction and asymmetry_norm must be in (0,1)")


@dataclass(frozen=True)
class ReportStats:
    """The RegionStats summary embedded in reports (histograms are
    exported separately as CSV to keep reports small)."""

    pixel_count: int
    mean_all_channels: float
    mean_per_channel: tuple[float, float, float]
    mean_luma: float
    std_luma: float
    dark_fraction: float

    @classmethod
    def from_region(cls, stats: RegionStats, dark_pixel_luma: float) -> "ReportStats":
        dark = int(stats.histogram_luma[np.arange(256) < dark_pixel_luma].sum())
        return cls(
            pixel_count=stats.pixel_count,
            mean_all_channels=stats.mean_all_channels,
            mean_per_channel=stats.mean_per_channel,
            mean_luma=stats.mean_luma,
            std_luma=stats.std_luma,
            dark_fraction=dark / stats.pixel_count,
        )


@dataclass(frozen=True)
class EyeEntry:
    stats: ReportStats | None
    flags: dict[str, bool]
    error: str | None = None


@dataclass(frozen=True)
class QualityReport:
    source_id: str
    thresholds: QualityThresholds
    per_eye: dict[EyeSide, EyeEntry]
    face_oval_stats: ReportStats | None
    asymmetry: AsymmetryReport | None
    indicators: dict[str, bool] = field(default_factory=dict)


def assess(image: np.ndarray, lm: LandmarkFile, thresholds: QualityThresholds | None = None) -> QualityReport:
    """Segment, measure and flag one image.

    illumination_dark: both sclera mean lumas below dark_luma_mean, or
    both dark-pixel fractions above dark_fraction.
    illumination_nonuniform: normalized left/right luma difference above
    asymmetry_norm.
    sclera_insufficient: any side missing, degenerate or below
    min_sclera_pixels; the other indicators stay computable only when
    both sides are usable, otherwise they default to false and
    sclera_insufficient marks the report as undecidable.
    """
    th = thresholds or QualityThresholds()
    height, width = image.shape[:2]
    result = segment_both(lm, width, height)

    per_eye: dict[EyeSide, EyeEntry] = {}
    side_stats: dict[EyeSide, ReportStats] = {}
    full_stats: dict[EyeSide, RegionStats] = {}
    for side in (EyeSide.LEFT, EyeSide.RIGHT):
        if side in result.failures:
            per_eye[side] = EyeEntry(stats=None, flags={"sclera_insufficient": True}, error=result.failures[side])
            continue
        mask = result.masks[side]
        if mask.pixel_count == 0:
            per_eye[side] = EyeEntry(stats=None, flags={"sclera_insufficient": True}, error="empty sclera mask")
            continue
        full = region_stats(image, mask)
        stats = ReportStats.from_region(full, th.dark_pixel_luma)
        insufficient = stats.pixel_count < th.min_sclera_pixels
        per_eye[side] = EyeEntry(stats=stats, flags={"sclera_insufficient": insufficient})
        side_stats[side] = stats
        full_stats[side] = full

    face_stats = None
    if lm.has_face_oval:
        face_poly = convex_hull(lm.group("face_oval"))
        try:
            face_stats = ReportStats.from_region(
                polygon_region_stats(image, face_poly), th.dark_pixel_luma
            )
        except EmptyRegion:
            face_stats = None

    insufficient = any(e.flags["sclera_insufficient"] for e in per_eye.values())
    decidable = (
        not insufficient
        and EyeSide.LEFT in side_stats
        and EyeSide.RIGHT in side_stats
    )

    asymmetry = None
    dark = False
    nonuniform = False
    if decidable:
        left, right = side_stats[EyeSide.LEFT], side_stats[EyeSide.RIGHT]
        asymmetry = compare_sides(full_stats[EyeSide.LEFT], full_stats[EyeSide.RIGHT])
        dark = (
            left.mean_luma < th.dark_luma_mean and right.mean_luma < th.dark_luma_mean
        ) or (
            left.dark_fraction > th.dark_fraction and right.dark_fraction > th.dark_fraction
        )
        nonuniform = asymmetry.normalized_diff > th.asymmetry_norm

    return QualityReport(
        source_id=lm.source_id,
        thresholds=th,
        per_eye=per_eye,
        face_oval_stats=face_stats,
        asymmetry=asymmetry,
        indicators={
            "illumination_dark": dark,
            "illumination_nonuniform": nonuniform,
            "sclera_insufficient": insufficient,
        },
    )


def _stats_obj(s: ReportStats) -> dict:
    return {
        "pixel_count": s.pixel_count,
        "mean_all_channels": s.mean_all_channels,
        "mean_per_channel": list(s.mean_per_channel),
        "mean_luma": s.mean_luma,
        "std_luma": s.std_luma,
        "dark_fraction": s.dark_fraction,
    }


def serialize_report(report: QualityReport) -> bytes:
    """Deterministic JSON document with stable key order."""
    doc: dict = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "source_id": report.source_id,
        "thresholds": {
            "dark_luma_mean": report.thresholds.dark_luma_mean,
            "dark_pixel_luma": report.thresholds.dark_pixel_luma,
            "dark_fraction": report.thresholds.dark_fraction,
            "asymmetry_norm": report.thresholds.asymmetry_norm,
            "min_sclera_pixels": report.thresholds.min_sclera_pixels,
        },
    }
    if report.face_oval_stats is not None:
        doc["face_oval"] = _stats_obj(report.face_oval_stats)
    for side in (EyeSide.LEFT, EyeSide.RIGHT):
        entry = report.per_eye[side]
        obj: dict = {}
        if entry.stats is not None:
            obj["stats"] = _stats_obj(entry.stats)
        obj["flags"] = dict(entry.flags)
        if entry.error is not None:
            obj["error"] = entry.error
        doc[side.value] = obj
    if report.asymmetry is not None:
        a = report.asymmetry
        doc["asymmetry"] = {
            "left_mean_luma": a.left_mean_luma,
            "right_mean_luma": a.right_mean_luma,
            "abs_diff": a.abs_diff,
            "normalized_diff": a.normalized_diff,
            "histogram_intersection": a.histogram_intersection,
        }
    doc["indicators"] = dict(report.indicators)
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def parse_report(data: bytes | str) -> QualityReport:
    """Inverse of serialize_report (reports round-trip byte-identically)."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e}") from e
    if doc.get("schema_version") != REPORT_SCHEMA_VERSION:
        raise SchemaError(f"schema_version: expected {REPORT_SCHEMA_VERSION}")

    def stats_from(obj: dict | None) -> ReportStats | None:
        if obj is None:
            return None
        return ReportStats(
            pixel_count=obj["pixel_count"],
            mean_all_channels=obj["mean_all_channels"],
            mean_per_channel=tuple(obj["mean_per_channel"]),
            mean_luma=obj["mean_luma"],
            std_luma=obj["std_luma"],
            dark_fraction=obj["dark_fraction"],
        )

    per_eye = {}
    for side in (EyeSide.LEFT, EyeSide.RIGHT):
        obj = doc[side.value]
        per_eye[side] = EyeEntry(
            stats=stats_from(obj.get("stats")),
            flags=dict(obj["flags"]),
            error=obj.get("error"),
        )
    asym = None
    if "asymmetry" in doc:
        a = doc["asymmetry"]
        asym = AsymmetryReport(
            left_mean_luma=a["left_mean_luma"],
            right_mean_luma=a["right_mean_luma"],
            abs_diff=a["abs_diff"],
            normalized_diff=a["normalized_diff"],
            histogram_intersection=a["histogram_intersection"],
        )
    return QualityReport(
        source_id=doc["source_id"],
        thresholds=QualityThresholds(**doc["thresholds"]),
        per_eye=per_eye,
        face_oval_stats=stats_from(doc.get("face_oval")),
        asymmetry=asym,
        indicators=dict(doc["indicators"]),
    )
