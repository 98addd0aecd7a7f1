"""Region pixel statistics: means, histograms, left/right comparison."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyRegion
from .geometry import ConvexPolygon, PixelRect, bounding_rect
from .raster import polygon_bits
from .segmentation import RegionMask

# BT.601 luma weights as exact rationals: (299 R + 587 G + 114 B) / 1000.
# For an achromatic pixel this reduces to exactly the channel value.
_LUMA_NUM = np.array([299.0, 587.0, 114.0])


def luma(pixels: np.ndarray) -> np.ndarray:
    """BT.601 luma of an (..., 3) uint8 array, as float64."""
    return pixels.astype(np.float64) @ _LUMA_NUM / 1000.0


@dataclass(frozen=True, eq=False)
class RegionStats:
    pixel_count: int
    mean_all_channels: float
    mean_per_channel: tuple[float, float, float]
    mean_luma: float
    std_luma: float
    histogram_luma: np.ndarray  # 256 int64 bins
    histogram_per_channel: np.ndarray  # (3, 256) int64 bins


def region_stats(image: np.ndarray, mask: RegionMask) -> RegionStats:
    """Statistics over the mask-true pixels of an RGB image.

    Histograms bin by integer value; luma is rounded half-up.  Raises
    EmptyRegion when the mask selects no pixels.
    """
    height, width = image.shape[:2]
    full = mask.to_full_image(width, height)
    pixels = image[full]
    return _stats_of_pixels(pixels)


def polygon_region_stats(image: np.ndarray, poly: ConvexPolygon) -> RegionStats:
    """Statistics over the pixel-center rasterization of a convex polygon."""
    height, width = image.shape[:2]
    rect = bounding_rect(poly.vertices, clamp=PixelRect(0, 0, width, height))
    bits = polygon_bits(poly, rect)
    return region_stats(image, RegionMask(rect=rect, bits=bits))


def _stats_of_pixels(pixels: np.ndarray) -> RegionStats:
    n = len(pixels)
    if n == 0:
        raise EmptyRegion("region contains no pixels")
    samples = pixels.astype(np.float64)
    y = luma(pixels)
    y_bins = np.floor(y + 0.5).astype(np.int64)  # round half-up; luma <= 255
    hist_luma = np.bincount(y_bins, minlength=256)
    hist_channels = np.stack(
        [np.bincount(pixels[:, c].astype(np.int64), minlength=256) for c in range(3)]
    )
    return RegionStats(
        pixel_count=n,
        mean_all_channels=float(samples.mean()),
        mean_per_channel=tuple(float(v) for v in samples.mean(axis=0)),
        mean_luma=float(y.mean()),
        std_luma=float(y.std()),
        histogram_luma=hist_luma,
        histogram_per_channel=hist_channels,
    )


@dataclass(frozen=True)
class AsymmetryReport:
    left_mean_luma: float
    right_mean_luma: float
    abs_diff: float
    normalized_diff: float
    histogram_intersection: float


def compare_sides(left: RegionStats, right: RegionStats) -> AsymmetryReport:
    """Left/right illumination comparison on luma statistics.

    histogram_intersection is sum(min(L, R)) over the unit-normalized
    luma histograms, computed in exact integer arithmetic so identical
    histograms give exactly 1.0.
    """
    if left.pixel_count == 0 or right.pixel_count == 0:
        raise EmptyRegion("both sides must be non-empty")
    abs_diff = abs(left.mean_luma - right.mean_luma)
    normalized = abs_diff / max(left.mean_luma, right.mean_luma, 1e-6)
    nl, nr = left.pixel_count, right.pixel_count
    # min(l/nl, r/nr) == min(l*nr, r*nl) / (nl*nr); exact in int64
    scaled = np.minimum(left.histogram_luma * nr, right.histogram_luma * nl)
    intersection = float(int(scaled.sum()) / (nl * nr))
    return AsymmetryReport(
        left_mean_luma=left.mean_luma,
        right_mean_luma=right.mean_luma,
        abs_diff=abs_diff,
        normalized_diff=normalized,
        histogram_intersection=intersection,
    )


def export_histogram_csv(stats: RegionStats) -> bytes:
    """CSV with header ``bin,luma,r,g,b`` and one row per 8-bit bin."""
    lines = ["bin,luma,r,g,b"]
    hl = stats.histogram_luma
    hc = stats.histogram_per_channel
    for b in range(256):
        lines.append(f"{b},{int(hl[b])},{int(hc[0, b])},{int(hc[1, b])},{int(hc[2, b])}")
    return ("\n".join(lines) + "\n").encode("ascii")
