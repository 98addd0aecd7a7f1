"""Sclera segmentation from eye and iris landmarks.

Per eye: the convex hull of the eye-contour landmarks encloses sclera,
iris and pupil; the minimum enclosing circle of the iris landmarks
encloses iris and pupil.  A pixel in the eye's bounding rectangle is
sclera iff its center is inside the hull and strictly outside the
circle.  No morphological cleanup is applied; the raw predicate output
is the contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BothEyesDegenerate, DegenerateEye, DegenerateInput
from .geometry import (
    Circle,
    ConvexPolygon,
    PixelRect,
    bounding_rect,
    convex_hull,
    min_enclosing_circle,
)
from .landmarks import EyeSide, LandmarkFile
from .raster import outside_circle_bits, polygon_bits


@dataclass(frozen=True, eq=False)
class RegionMask:
    """Boolean pixel membership over a rect (row-major, rect-local)."""

    rect: PixelRect
    bits: np.ndarray

    def __post_init__(self) -> None:
        expected = (self.rect.height, self.rect.width)
        if self.bits.shape != expected or self.bits.dtype != np.bool_:
            raise ValueError(f"bits must be bool array of shape {expected}")

    @property
    def pixel_count(self) -> int:
        return int(self.bits.sum())

    def to_full_image(self, width: int, height: int) -> np.ndarray:
        """Expand to a full-image boolean array."""
        full = np.zeros((height, width), dtype=bool)
        r = self.rect.intersect(PixelRect(0, 0, width, height))
        if not r.is_empty():
            full[r.y0 : r.y1, r.x0 : r.x1] = self.bits[
                r.y0 - self.rect.y0 : r.y1 - self.rect.y0,
                r.x0 - self.rect.x0 : r.x1 - self.rect.x0,
            ]
        return full


@dataclass(frozen=True, eq=False)
class ScleraMask(RegionMask):
    side: EyeSide = field(kw_only=True)


@dataclass(frozen=True)
class EyeGeometry:
    side: EyeSide
    hull: ConvexPolygon
    iris_circle: Circle
    rect: PixelRect


def build_eye_geometry(
    lm: LandmarkFile, side: EyeSide, image_width: int, image_height: int
) -> EyeGeometry:
    """Hull, iris circle and clamped bounding rect for one eye.

    Raises DegenerateEye when the eye contour is collinear (closed or
    occluded eye).
    """
    eye_points = lm.group(side.eye_group)
    iris_points = lm.group(side.iris_group)
    try:
        hull = convex_hull(eye_points)
    except DegenerateInput as e:
        raise DegenerateEye(f"{side.eye_group}: {e}") from e
    circle = min_enclosing_circle(iris_points)
    rect = bounding_rect(eye_points, clamp=PixelRect(0, 0, image_width, image_height))
    return EyeGeometry(side=side, hull=hull, iris_circle=circle, rect=rect)


def segment_sclera(geom: EyeGeometry) -> ScleraMask:
    """Rasterize the sclera membership predicate over the eye rect."""
    bits = polygon_bits(geom.hull, geom.rect) & outside_circle_bits(geom.iris_circle, geom.rect)
    return ScleraMask(rect=geom.rect, bits=bits, side=geom.side)


@dataclass(frozen=True)
class SegmentationResult:
    """Per-side masks plus per-side failure messages; sides are independent."""

    masks: dict[EyeSide, ScleraMask]
    failures: dict[EyeSide, str]


def segment_both(lm: LandmarkFile, image_width: int, image_height: int) -> SegmentationResult:
    """Segment both eyes; one side failing does not abort the other.

    Raises BothEyesDegenerate only when neither side yields a geometry.
    """
    masks: dict[EyeSide, ScleraMask] = {}
    failures: dict[EyeSide, str] = {}
    for side in (EyeSide.LEFT, EyeSide.RIGHT):
        try:
            geom = build_eye_geometry(lm, side, image_width, image_height)
        except DegenerateEye as e:
            failures[side] = str(e)
            continue
        masks[side] = segment_sclera(geom)
    if not masks:
        raise BothEyesDegenerate("; ".join(failures.values()))
    return SegmentationResult(masks=masks, failures=failures)


def render_overlay(
    image: np.ndarray,
    masks: list[ScleraMask] | tuple[ScleraMask, ...],
    color: tuple[int, int, int] = (255, 255, 255),
) -> np.ndarray:
    """Copy of the image with mask-true pixels painted in `color`."""
    out = image.copy()
    height, width = image.shape[:2]
    for mask in masks:
        full = mask.to_full_image(width, height)
        out[full] = color
    return out


def mask_to_image(masks: list[ScleraMask] | tuple[ScleraMask, ...], width: int, height: int) -> np.ndarray:
    """Single-channel export: 0 background, 255 sclera, full image size."""
    full = np.zeros((height, width), dtype=bool)
    for mask in masks:
        full |= mask.to_full_image(width, height)
    return np.where(full, 255, 0).astype(np.uint8)
