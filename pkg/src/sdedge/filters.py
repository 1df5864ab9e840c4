"""Median filtering, the impulse-denoising step that precedes detection."""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .image import as_gray

__all__ = ["median_filter"]


def median_filter(img, k: int = 3, border: str = "edge") -> np.ndarray:
    """Replace each pixel with the exact median of its k x k neighborhood.

    ``k`` must be odd and >= 3, so the median of the k*k samples is always
    one of them and the output intensities are a subset of the input's.
    Borders use clamp-to-edge replication by default, keeping the output
    the same size as the input (``border`` is any ``np.pad`` mode).
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"kernel size must be odd and >= 3, got {k}")
    arr = as_gray(img)
    radius = k // 2
    padded = np.pad(arr, radius, mode=border)
    windows = sliding_window_view(padded, (k, k))
    med = np.median(windows, axis=(-2, -1))
    # median of an odd count of uint8 samples is integral, so the cast is exact
    return med.astype(np.uint8)
