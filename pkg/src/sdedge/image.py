"""Grayscale pixel-grid model and 2x2 window statistics.

Images are plain 2-D numpy arrays of dtype uint8, shape ``(height, width)``,
row-major. Edge maps are 2-D boolean arrays of the same shape. ``as_gray``
is the single entry point that validates and normalizes array-like input.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple, Sequence

import numpy as np

__all__ = [
    "as_gray",
    "from_rows",
    "get_pixel",
    "Window",
    "iter_windows",
    "sample_std",
    "window_std_map",
    "mask_to_gray",
    "gray_to_mask",
]


def as_gray(pixels) -> np.ndarray:
    """Validate array-like input as a grayscale image and return it as uint8.

    Accepts anything ``np.asarray`` understands. Requires a 2-D grid with
    at least one pixel and every intensity an integer in [0, 255].
    """
    arr = np.asarray(pixels)
    if arr.ndim != 2:
        raise ValueError(f"grayscale image must be 2-D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"image dimensions must be >= 1, got {arr.shape}")
    if arr.dtype == np.uint8:
        return np.ascontiguousarray(arr)
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(arr == np.floor(arr)):
            raise ValueError("intensities must be integers")
        arr = arr.astype(np.int64)
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError("intensities must lie in [0, 255]")
    return arr.astype(np.uint8)


def from_rows(rows: Sequence[Sequence[int]]) -> np.ndarray:
    """Build a grayscale image from nested row-major sequences."""
    return as_gray(np.array(rows))


def get_pixel(img: np.ndarray, i: int, j: int) -> int:
    """Return the intensity at row ``i``, column ``j``.

    Raises IndexError for coordinates outside the grid (negative indices
    are out of bounds here, unlike raw numpy indexing).
    """
    h, w = img.shape
    if not (0 <= i < h and 0 <= j < w):
        raise IndexError(f"pixel ({i}, {j}) outside {h}x{w} image")
    return int(img[i, j])


class Window(NamedTuple):
    """A 2x2 candidate window anchored at its upper-left pixel (i, j)."""

    i: int
    j: int
    values: tuple[int, int, int, int]  # (i,j), (i,j+1), (i+1,j), (i+1,j+1)


def iter_windows(img: np.ndarray) -> Iterator[Window]:
    """Yield every 2x2 window in row-major origin order.

    An HxW image has (H-1)*(W-1) windows; images narrower or shorter than
    2 pixels yield nothing.
    """
    h, w = img.shape
    for i in range(h - 1):
        for j in range(w - 1):
            yield Window(
                i,
                j,
                (
                    int(img[i, j]),
                    int(img[i, j + 1]),
                    int(img[i + 1, j]),
                    int(img[i + 1, j + 1]),
                ),
            )


def sample_std(values: Sequence[float]) -> float:
    """Sample standard deviation (divisor n-1 = 3) of four intensities."""
    vals = [float(v) for v in values]
    if len(vals) != 4:
        raise ValueError(f"expected exactly 4 values, got {len(vals)}")
    mean = (vals[0] + vals[1] + vals[2] + vals[3]) / 4.0
    ss = sum((v - mean) ** 2 for v in vals)
    return math.sqrt(ss / 3.0)


def window_std_map(img: np.ndarray) -> np.ndarray:
    """Sample standard deviation of every 2x2 window, as an (H-1, W-1) map.

    Entry (i, j) equals ``sample_std`` of the window anchored at (i, j).
    All arithmetic is float64; for 8-bit inputs every intermediate up to
    the final division is exact, so this matches the scalar path bit for
    bit.
    """
    a = img[:-1, :-1].astype(np.float64)
    b = img[:-1, 1:].astype(np.float64)
    c = img[1:, :-1].astype(np.float64)
    d = img[1:, 1:].astype(np.float64)
    mean = (a + b + c + d) / 4.0
    ss = (a - mean) ** 2 + (b - mean) ** 2 + (c - mean) ** 2 + (d - mean) ** 2
    return np.sqrt(ss / 3.0)


def mask_to_gray(mask: np.ndarray) -> np.ndarray:
    """Render a boolean edge map as an image: edge -> 255, background -> 0."""
    return np.where(mask, 255, 0).astype(np.uint8)


def gray_to_mask(img: np.ndarray) -> np.ndarray:
    """Inverse of ``mask_to_gray``: any nonzero pixel counts as an edge."""
    return np.asarray(img) > 0
