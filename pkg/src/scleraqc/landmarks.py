"""Canonical landmark file: parsing, validation, serialization.

The file is JSON (see `parse_landmarks`) and decouples the geometric core
from whichever face-landmark model produced the points.  Group names and
the left/right labels are producer-defined and treated as opaque; the
core never flips sides.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

from .errors import ParseError, SchemaError
from .geometry import Point2D

SCHEMA_VERSION = 1

REQUIRED_GROUPS = ("left_eye", "right_eye", "left_iris", "right_iris")
OPTIONAL_GROUPS = ("face_oval",)

GROUP_MIN_POINTS = {
    "left_eye": 6,
    "right_eye": 6,
    "left_iris": 3,
    "right_iris": 3,
    "face_oval": 8,
}


class EyeSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def eye_group(self) -> str:
        return f"{self.value}_eye"

    @property
    def iris_group(self) -> str:
        return f"{self.value}_iris"


@dataclass(frozen=True)
class LandmarkFile:
    schema_version: int
    image_width: int
    image_height: int
    source_id: str
    groups: dict[str, list[Point2D]]

    def group(self, name: str) -> list[Point2D]:
        return self.groups[name]

    @property
    def has_face_oval(self) -> bool:
        return "face_oval" in self.groups


@dataclass(frozen=True)
class ValidationWarning:
    kind: str  # "out_of_bounds" | "dimension_mismatch"
    message: str


def parse_landmarks(data: bytes | str) -> LandmarkFile:
    """Parse and validate a landmark document.

    Raises ParseError for malformed JSON and SchemaError (naming the
    offending field) for anything violating the schema: wrong version,
    missing group, too few points, non-finite coordinates.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not valid UTF-8: {e}") from e
    else:
        text = data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise SchemaError("document: expected a JSON object")

    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")

    image = doc.get("image")
    if not isinstance(image, dict):
        raise SchemaError("image: missing or not an object")
    width = _require_positive_int(image.get("width"), "image.width")
    height = _require_positive_int(image.get("height"), "image.height")
    source = image.get("source", "")
    if not isinstance(source, str):
        raise SchemaError("image.source: expected a string")

    raw_groups = doc.get("groups")
    if not isinstance(raw_groups, dict):
        raise SchemaError("groups: missing or not an object")

    groups: dict[str, list[Point2D]] = {}
    for name in REQUIRED_GROUPS + OPTIONAL_GROUPS:
        if name not in raw_groups:
            if name in REQUIRED_GROUPS:
                raise SchemaError(f"groups.{name}: required group missing")
            continue
        groups[name] = _parse_group(raw_groups[name], name)
    # unknown extra groups and keys are ignored
    return LandmarkFile(
        schema_version=SCHEMA_VERSION,
        image_width=width,
        image_height=height,
        source_id=source,
        groups=groups,
    )


def _require_positive_int(value: object, field: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
        raise SchemaError(f"{field}: expected a positive integer, got {value!r}")
    return value


def _parse_group(raw: object, name: str) -> list[Point2D]:
    if not isinstance(raw, list):
        raise SchemaError(f"groups.{name}: expected a list of [x, y] pairs")
    if len(raw) < GROUP_MIN_POINTS[name]:
        raise SchemaError(
            f"groups.{name}: needs >= {GROUP_MIN_POINTS[name]} points, got {len(raw)}"
        )
    points: list[Point2D] = []
    for i, item in enumerate(raw):
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)
        ):
            raise SchemaError(f"groups.{name}[{i}]: expected an [x, y] number pair")
        x, y = float(item[0]), float(item[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise SchemaError(f"groups.{name}[{i}]: coordinate not finite")
        points.append(Point2D(x, y))
    return points


def serialize_landmarks(lm: LandmarkFile) -> bytes:
    """Inverse of parse_landmarks; preserves group and point order."""
    doc = {
        "schema_version": lm.schema_version,
        "image": {
            "width": lm.image_width,
            "height": lm.image_height,
            "source": lm.source_id,
        },
        "groups": {name: [[p.x, p.y] for p in pts] for name, pts in lm.groups.items()},
    }
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def validate_against_image(lm: LandmarkFile, width: int, height: int) -> list[ValidationWarning]:
    """Soft checks against actual image dimensions.

    Out-of-bounds points and mismatched declared dimensions produce
    warnings, never errors; segmentation clamps to the image instead of
    failing.
    """
    warnings: list[ValidationWarning] = []
    if lm.image_width != width or lm.image_height != height:
        warnings.append(
            ValidationWarning(
                "dimension_mismatch",
                f"landmark file declares {lm.image_width}x{lm.image_height}, "
                f"image is {width}x{height}",
            )
        )
    for name, pts in lm.groups.items():
        for i, p in enumerate(pts):
            if not (0.0 <= p.x < width and 0.0 <= p.y < height):
                warnings.append(
                    ValidationWarning(
                        "out_of_bounds",
                        f"groups.{name}[{i}] = ({p.x}, {p.y}) outside [0,{width})x[0,{height})",
                    )
                )
    return warnings
