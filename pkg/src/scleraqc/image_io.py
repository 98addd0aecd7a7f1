"""PNG/JPEG loading and saving.

Images are numpy uint8 arrays of shape (height, width, 3), RGB channel
order, row-major from the top-left.  Grayscale inputs are promoted to
RGB and alpha channels are dropped on load.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError, IoError, UnsupportedFormat

_ACCEPTED_FORMATS = {"PNG", "JPEG"}


def load_image(path: str | Path) -> np.ndarray:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise IoError(f"{path}: {e}") from e
    try:
        with Image.open(io.BytesIO(data)) as img:
            if img.format not in _ACCEPTED_FORMATS:
                raise UnsupportedFormat(f"{path}: format {img.format!r}, expected PNG or JPEG")
            arr = np.asarray(img.convert("RGB"), dtype=np.uint8)
    except UnsupportedFormat:
        raise
    except (UnidentifiedImageError, OSError, SyntaxError, ValueError) as e:
        raise DecodeError(f"{path}: {e}") from e
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.size == 0:
        raise DecodeError(f"{path}: decoded to unexpected shape {arr.shape}")
    return arr


def save_png(path: str | Path, pixels: np.ndarray) -> None:
    """Write an RGB (H,W,3) or single-channel (H,W) uint8 array as PNG."""
    mode = "RGB" if pixels.ndim == 3 else "L"
    Image.fromarray(pixels, mode=mode).save(Path(path), format="PNG")
