"""Saturation scaling and the saturation-sweep table.

Saturation by factor f blends each pixel away from its BT.601 luma:
out = luma + (in - luma) * f, clipped to [0, 255] and rounded half-up.
This is the standard "saturation factor" construction (enhancement
blending toward/away from grayscale): f = 1 is the identity, achromatic
pixels are exact fixed points for every f, hue and luma are preserved up
to rounding for pixels that do not clip, and over-saturation artifacts
appear through channel clipping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyRegion
from .geometry import convex_hull
from .landmarks import EyeSide, LandmarkFile
from .segmentation import segment_both
from .stats import polygon_region_stats, region_stats


def adjust_saturation(image: np.ndarray, factor: float) -> np.ndarray:
    """Scale per-pixel color saturation by `factor` (> 0).

    factor == 1 returns an unchanged copy, bit-exact by construction.
    """
    if not (isinstance(factor, (int, float)) and math.isfinite(factor) and factor > 0):
        raise ValueError(f"saturation factor must be finite and > 0, got {factor!r}")
    if factor == 1.0:
        return image.copy()
    samples = image.astype(np.float64)
    y = samples @ np.array([299.0, 587.0, 114.0]) / 1000.0
    blended = y[..., np.newaxis] + (samples - y[..., np.newaxis]) * float(factor)
    return np.floor(np.clip(blended, 0.0, 255.0) + 0.5).astype(np.uint8)


@dataclass(frozen=True)
class SweepRow:
    label: str
    factor: float
    face_mean: float | None
    left_sclera_mean: float | None
    right_sclera_mean: float | None


@dataclass(frozen=True)
class SweepTable:
    rows: tuple[SweepRow, ...]

    def to_csv(self) -> bytes:
        lines = ["factor,face_mean,left_sclera_mean,right_sclera_mean"]
        for row in self.rows:
            cells = [row.label] + [
                "" if v is None else f"{v:.6f}"
                for v in (row.face_mean, row.left_sclera_mean, row.right_sclera_mean)
            ]
            lines.append(",".join(cells))
        return ("\n".join(lines) + "\n").encode("ascii")


def saturation_sweep(
    image: np.ndarray, lm: LandmarkFile, factors: list[float] | tuple[float, ...]
) -> SweepTable:
    """Mean pixel values of face oval and both sclerae per saturation factor.

    The baseline row is always included first, labeled "original"
    (factor 1 deduplicates into it).  Segmentation geometry is computed
    once from the landmarks and reused for every factor; the saturation
    transform does not move landmarks.
    """
    height, width = image.shape[:2]
    result = segment_both(lm, width, height)
    face_poly = convex_hull(lm.group("face_oval")) if lm.has_face_oval else None

    def row(label: str, factor: float, img: np.ndarray) -> SweepRow:
        face_mean = None
        if face_poly is not None:
            face_mean = polygon_region_stats(img, face_poly).mean_all_channels
        means: dict[EyeSide, float | None] = {EyeSide.LEFT: None, EyeSide.RIGHT: None}
        for side, mask in result.masks.items():
            if mask.pixel_count == 0:
                raise EmptyRegion(f"{side.value} sclera mask is empty")
            means[side] = region_stats(img, mask).mean_all_channels
        return SweepRow(
            label=label,
            factor=factor,
            face_mean=face_mean,
            left_sclera_mean=means[EyeSide.LEFT],
            right_sclera_mean=means[EyeSide.RIGHT],
        )

    rows = [row("original", 1.0, image)]
    for f in factors:
        f = float(f)
        if f == 1.0:
            continue
        label = f"f={f:.1f}" if round(f, 1) == f else f"f={f:g}"
        rows.append(row(label, f, adjust_saturation(image, f)))
    return SweepTable(rows=tuple(rows))
