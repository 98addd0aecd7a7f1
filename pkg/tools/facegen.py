"""Deterministic synthetic portrait renderer for the fixture corpus.

Every shape is painted analytically at pixel centers with no
anti-aliasing, and the landmark groups are emitted from the same shape
parameters, so fixture images come with exact ground truth: eye-contour
points lie on the painted sclera ellipse, iris points lie on the painted
iris circle, and every sclera-mask pixel is guaranteed to carry pure
sclera color.

Sclera tints are chosen bluish-white so that boosting color saturation
raises their plain RGB mean without clipping the blue channel at factor
5 (blue stays below (255 - luma) / 5 above luma); this mirrors how real
sclera pixels behave and keeps the saturation-sweep fixtures honest.

The fixture convention for eye labels is image-based: "left_eye" is the
eye on the image's left half.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class EyeShape:
    cx: float
    cy: float
    sclera_rx: float
    sclera_ry: float
    iris_r: float
    pupil_r: float


@dataclass(frozen=True)
class FaceParams:
    name: str
    width: int
    height: int
    skin: tuple[int, int, int]
    sclera: tuple[int, int, int]
    iris: tuple[int, int, int]
    face_cx: float
    face_cy: float
    face_rx: float
    face_ry: float
    eye_dx: float
    eye_cy: float
    eye_rx: float
    eye_ry: float
    iris_r: float

    @property
    def left_eye(self) -> EyeShape:
        return EyeShape(self.face_cx - self.eye_dx, self.eye_cy, self.eye_rx, self.eye_ry, self.iris_r, self.iris_r * 0.45)

    @property
    def right_eye(self) -> EyeShape:
        return EyeShape(self.face_cx + self.eye_dx, self.eye_cy, self.eye_rx, self.eye_ry, self.iris_r, self.iris_r * 0.45)


FACES = [
    FaceParams("face_light", 320, 320, (231, 203, 186), (148, 156, 172), (96, 64, 42),
               160.0, 162.0, 92.0, 118.0, 38.0, 134.0, 24.0, 9.0, 8.25),
    FaceParams("face_tan", 320, 320, (203, 166, 136), (152, 160, 174), (122, 92, 50),
               160.0, 162.0, 90.0, 116.0, 37.0, 134.0, 23.0, 8.5, 8.0),
    FaceParams("face_brown", 320, 320, (157, 116, 90), (144, 152, 166), (72, 52, 38),
               160.0, 160.0, 94.0, 120.0, 39.0, 132.0, 25.0, 9.5, 8.75),
    FaceParams("face_deep", 320, 320, (104, 78, 62), (140, 150, 165), (60, 46, 36),
               160.0, 162.0, 91.0, 117.0, 38.0, 136.0, 24.0, 9.0, 8.25),
]


def _grid(width: int, height: int) -> tuple[np.ndarray, np.ndarray]:
    xs = 0.5 + np.arange(width, dtype=np.float64)[np.newaxis, :]
    ys = 0.5 + np.arange(height, dtype=np.float64)[:, np.newaxis]
    return xs, ys


def _ellipse_bits(xs, ys, cx, cy, rx, ry) -> np.ndarray:
    nx = (xs - cx) / rx
    ny = (ys - cy) / ry
    return nx * nx + ny * ny <= 1.0


def _disk_bits(xs, ys, cx, cy, r) -> np.ndarray:
    dx = xs - cx
    dy = ys - cy
    # same comparison the segmentation predicate negates, so painted iris
    # pixels and sclera-mask pixels are exact complements on the circle
    return dx * dx + dy * dy <= r * r


def _paint(canvas: np.ndarray, bits: np.ndarray, color, shading: np.ndarray | None = None) -> None:
    col = np.array(color, dtype=np.float64)
    if shading is None:
        canvas[bits] = col
    else:
        canvas[bits] = col[np.newaxis, :] * shading[bits][:, np.newaxis]


def render_face(params: FaceParams) -> np.ndarray:
    """Render the portrait as an (H, W, 3) uint8 array."""
    w, h = params.width, params.height
    xs, ys = _grid(w, h)
    canvas = np.zeros((h, w, 3), dtype=np.float64)
    canvas[:, :] = (120.0, 122.0, 126.0)  # flat studio background

    # vertical shading, symmetric about the center column
    shading = 1.0 - 0.16 * ((ys - params.eye_cy) / h) ** 2
    shading = np.broadcast_to(shading, (h, w))

    face = _ellipse_bits(xs, ys, params.face_cx, params.face_cy, params.face_rx, params.face_ry)
    _paint(canvas, face, params.skin, shading)

    # brows
    for eye in (params.left_eye, params.right_eye):
        brow = _ellipse_bits(xs, ys, eye.cx, eye.cy - 2.2 * eye.sclera_ry, eye.sclera_rx, 2.6)
        _paint(canvas, brow, (54, 38, 30), shading)

    # mouth
    mouth = _ellipse_bits(xs, ys, params.face_cx, params.face_cy + 0.42 * params.face_ry, 26.0, 8.0)
    _paint(canvas, mouth, (150, 84, 80), shading)

    for eye in (params.left_eye, params.right_eye):
        sclera = _ellipse_bits(xs, ys, eye.cx, eye.cy, eye.sclera_rx, eye.sclera_ry)
        _paint(canvas, sclera, params.sclera, shading)
        iris = _disk_bits(xs, ys, eye.cx, eye.cy, eye.iris_r)
        _paint(canvas, iris, params.iris, shading)
        pupil = _disk_bits(xs, ys, eye.cx, eye.cy, eye.pupil_r)
        _paint(canvas, pupil, (16, 14, 14))
        catch = _disk_bits(xs, ys, eye.cx + 0.35 * eye.iris_r, eye.cy - 0.35 * eye.iris_r, 1.1)
        _paint(canvas, catch & iris, (238, 238, 240))

    return np.floor(canvas + 0.5).clip(0, 255).astype(np.uint8)


def _ellipse_points(cx, cy, rx, ry, n, phase=0.0) -> list[list[float]]:
    pts = []
    for k in range(n):
        t = phase + 2.0 * math.pi * k / n
        pts.append([cx + rx * math.cos(t), cy + ry * math.sin(t)])
    return pts


def landmark_doc(params: FaceParams) -> dict:
    """LandmarkFile document with points on the painted shape boundaries."""
    le, re = params.left_eye, params.right_eye
    return {
        "schema_version": 1,
        "image": {"width": params.width, "height": params.height, "source": f"synthetic/{params.name}"},
        "groups": {
            "left_eye": _ellipse_points(le.cx, le.cy, le.sclera_rx, le.sclera_ry, 16),
            "right_eye": _ellipse_points(re.cx, re.cy, re.sclera_rx, re.sclera_ry, 16),
            "left_iris": _ellipse_points(le.cx, le.cy, le.iris_r, le.iris_r, 8),
            "right_iris": _ellipse_points(re.cx, re.cy, re.iris_r, re.iris_r, 8),
            "face_oval": _ellipse_points(params.face_cx, params.face_cy, params.face_rx, params.face_ry, 20),
        },
    }


def render_no_face(width: int = 320, height: int = 320) -> np.ndarray:
    """Featureless gradient image for the no-face-detected fixtures."""
    xs, ys = _grid(width, height)
    canvas = np.zeros((height, width, 3), dtype=np.float64)
    g = 90.0 + 60.0 * (ys / height)
    canvas[:, :, 0] = g
    canvas[:, :, 1] = g + 4.0
    canvas[:, :, 2] = g + 10.0
    return np.floor(canvas + 0.5).clip(0, 255).astype(np.uint8)


# ------------------------------------------------------------- mesh export


def canned_mesh(params: FaceParams, index_map: dict[str, list[int]], n_points: int = 478) -> list[list[float]]:
    """A face-mesh landmark list (normalized coordinates) whose mapped
    indices reproduce this fixture's shapes.

    Mesh 'left_*' groups follow the producing model's anatomical
    convention (subject's left = image right), so the image-right eye
    fills the left_* indices.
    """
    w, h = float(params.width), float(params.height)
    mesh = [[params.face_cx / w, params.face_cy / h, 0.0] for _ in range(n_points)]

    def put(indices: list[int], points: list[list[float]]) -> None:
        assert len(indices) == len(points)
        for idx, (x, y) in zip(indices, points):
            mesh[idx] = [x / w, y / h, 0.0]

    subj_left, subj_right = params.right_eye, params.left_eye  # anatomical flip
    put(index_map["left_eye"],
        _ellipse_points(subj_left.cx, subj_left.cy, subj_left.sclera_rx, subj_left.sclera_ry, len(index_map["left_eye"])))
    put(index_map["right_eye"],
        _ellipse_points(subj_right.cx, subj_right.cy, subj_right.sclera_rx, subj_right.sclera_ry, len(index_map["right_eye"])))
    put(index_map["left_iris"],
        _ellipse_points(subj_left.cx, subj_left.cy, subj_left.iris_r, subj_left.iris_r, len(index_map["left_iris"])))
    put(index_map["right_iris"],
        _ellipse_points(subj_right.cx, subj_right.cy, subj_right.iris_r, subj_right.iris_r, len(index_map["right_iris"])))
    put(index_map["face_oval"],
        _ellipse_points(params.face_cx, params.face_cy, params.face_rx, params.face_ry, len(index_map["face_oval"])))
    return mesh


def shrunk_mesh(mesh: list[list[float]], scale: float, ox: float, oy: float) -> list[list[float]]:
    """Secondary smaller face for multi-face fixtures."""
    return [[ox + x * scale, oy + y * scale, z] for x, y, z in mesh]
