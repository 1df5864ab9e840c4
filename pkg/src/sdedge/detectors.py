"""Edge detectors: the 2x2 window-dispersion detector plus Sobel and Canny.

The primary detector flags the upper-left pixel of every 2x2 window whose
sample standard deviation exceeds a threshold ``tau`` (default 7, useful
band roughly 4..9). An optional median pre-filter removes impulse noise
first, which otherwise inflates the dispersion of every window it touches.
Thresholding is strict: a window sitting exactly at ``tau`` is not an edge.

Sobel and Canny are provided as comparison baselines. All convolutions use
clamp-to-edge borders so every output is the same size as the input.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .filters import median_filter
from .image import as_gray, window_std_map

__all__ = [
    "SOBEL_X",
    "SOBEL_Y",
    "DetectorConfig",
    "stddev_detect",
    "sobel_detect",
    "canny_detect",
    "gaussian_kernel",
    "sobel_gradients",
]

SOBEL_X = np.array([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]], dtype=np.float64)
SOBEL_Y = SOBEL_X.T


def _correlate_clamp(img: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Cross-correlate with clamp-to-edge borders; float64 output."""
    kh, kw = kernel.shape
    padded = np.pad(img.astype(np.float64), ((kh // 2,) * 2, (kw // 2,) * 2), mode="edge")
    windows = sliding_window_view(padded, (kh, kw))
    return np.tensordot(windows, kernel, axes=((2, 3), (0, 1)))


def stddev_detect(img, tau: float = 7.0, pre_median: bool = True, k: int = 3) -> np.ndarray:
    """Flag window origins whose 2x2 sample standard deviation exceeds ``tau``.

    Returns a boolean mask the size of the image. Pixels in the last row
    and last column are never window origins and are always False. When
    ``pre_median`` is set the image is median-filtered (kernel ``k``)
    before the window statistics are taken.
    """
    arr = as_gray(img)
    h, w = arr.shape
    if h < 2 or w < 2:
        raise ValueError(f"image must be at least 2x2, got {h}x{w}")
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")
    if pre_median:
        arr = median_filter(arr, k)
    mask = np.zeros((h, w), dtype=bool)
    mask[:-1, :-1] = window_std_map(arr) > tau
    return mask


def sobel_gradients(img) -> tuple[np.ndarray, np.ndarray]:
    """Horizontal and vertical Sobel responses (gx, gy) with clamped borders."""
    arr = np.asarray(img, dtype=np.float64)
    return _correlate_clamp(arr, SOBEL_X), _correlate_clamp(arr, SOBEL_Y)


def sobel_detect(img, threshold: float) -> np.ndarray:
    """Threshold the Euclidean Sobel gradient magnitude."""
    arr = as_gray(img)
    h, w = arr.shape
    if h < 3 or w < 3:
        raise ValueError(f"image must be at least 3x3, got {h}x{w}")
    gx, gy = sobel_gradients(arr)
    return np.hypot(gx, gy) > threshold


def gaussian_kernel(sigma: float) -> np.ndarray:
    """2-D Gaussian truncated at radius ceil(3*sigma), normalized to sum 1."""
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    radius = math.ceil(3.0 * sigma)
    ax = np.arange(-radius, radius + 1, dtype=np.float64)
    g = np.exp(-(ax**2) / (2.0 * sigma**2))
    kernel = np.outer(g, g)
    return kernel / kernel.sum()


def _nonmax_suppress(mag: np.ndarray, gx: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Keep pixels that are local maxima along the quantized gradient direction.

    Directions are binned to 0/45/90/135 degrees; comparisons use a
    clamp-padded magnitude so border pixels compete only against their
    in-image neighbors. Plateaus survive (>= on both sides).
    """
    angle = np.degrees(np.arctan2(gy, gx)) % 180.0
    padded = np.pad(mag, 1, mode="edge")
    left = padded[1:-1, :-2]
    right = padded[1:-1, 2:]
    up = padded[:-2, 1:-1]
    down = padded[2:, 1:-1]
    up_left = padded[:-2, :-2]
    up_right = padded[:-2, 2:]
    down_left = padded[2:, :-2]
    down_right = padded[2:, 2:]

    bin_0 = (angle < 22.5) | (angle >= 157.5)
    bin_45 = (angle >= 22.5) & (angle < 67.5)
    bin_90 = (angle >= 67.5) & (angle < 112.5)
    bin_135 = (angle >= 112.5) & (angle < 157.5)

    keep = (
        (bin_0 & (mag >= left) & (mag >= right))
        | (bin_45 & (mag >= down_left) & (mag >= up_right))
        | (bin_90 & (mag >= up) & (mag >= down))
        | (bin_135 & (mag >= up_left) & (mag >= down_right))
    )
    return np.where(keep, mag, 0.0)


def _hysteresis(strong: np.ndarray, weak: np.ndarray) -> np.ndarray:
    """Grow strong edges through 8-connected weak pixels (BFS)."""
    h, w = strong.shape
    result = strong.copy()
    frontier = deque(zip(*np.nonzero(strong)))
    while frontier:
        i, j = frontier.popleft()
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                ni, nj = i + di, j + dj
                if 0 <= ni < h and 0 <= nj < w and weak[ni, nj] and not result[ni, nj]:
                    result[ni, nj] = True
                    frontier.append((ni, nj))
    return result


def canny_detect(img, sigma: float = 1.0, low: float = 20.0, high: float = 60.0) -> np.ndarray:
    """Classic four-stage Canny: smooth, gradient, thin, hysteresis.

    Gaussian smoothing uses a kernel truncated at 3*sigma; the image must
    be at least as large as that kernel. Pixels with magnitude >= ``high``
    seed the edge set; pixels >= ``low`` are kept only when 8-connected to
    a seed. Requires ``low < high``.
    """
    arr = as_gray(img)
    if not low < high:
        raise ValueError(f"low threshold must be below high, got {low} >= {high}")
    kernel = gaussian_kernel(sigma)
    if min(arr.shape) < kernel.shape[0]:
        raise ValueError(
            f"image {arr.shape} too small for sigma={sigma} "
            f"(needs at least {kernel.shape[0]} pixels per side)"
        )
    smoothed = _correlate_clamp(arr.astype(np.float64), kernel)
    gx = _correlate_clamp(smoothed, SOBEL_X)
    gy = _correlate_clamp(smoothed, SOBEL_Y)
    mag = np.hypot(gx, gy)
    thinned = _nonmax_suppress(mag, gx, gy)
    strong = thinned >= high
    weak = thinned >= low
    return _hysteresis(strong, weak)


@dataclass(frozen=True)
class DetectorConfig:
    """A fully specified detector run, usable as a report echo.

    ``sobel_threshold`` and the Canny thresholds have no defaults on
    purpose: callers must choose them per run.
    """

    detector: str = "stddev"
    tau: float = 7.0
    pre_median: bool = True
    median_k: int = 3
    sobel_threshold: float | None = None
    canny_sigma: float = 1.0
    canny_low: float | None = None
    canny_high: float | None = None

    _KNOWN = ("stddev", "sobel", "canny")

    def __post_init__(self):
        if self.detector not in self._KNOWN:
            raise ValueError(f"unknown detector {self.detector!r}, expected one of {self._KNOWN}")
        if not self.tau > 0:
            raise ValueError(f"tau must be positive, got {self.tau}")
        if not self.canny_sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.canny_sigma}")
        if self.canny_low is not None and self.canny_high is not None:
            if not self.canny_low < self.canny_high:
                raise ValueError(
                    f"canny low must be below high, got {self.canny_low} >= {self.canny_high}"
                )

    def run(self, img) -> np.ndarray:
        """Run the configured detector and return its edge map."""
        if self.detector == "stddev":
            return stddev_detect(img, tau=self.tau, pre_median=self.pre_median, k=self.median_k)
        if self.detector == "sobel":
            if self.sobel_threshold is None:
                raise ValueError("sobel detector needs an explicit sobel_threshold")
            return sobel_detect(img, self.sobel_threshold)
        if self.canny_low is None or self.canny_high is None:
            raise ValueError("canny detector needs explicit canny_low and canny_high")
        return canny_detect(img, sigma=self.canny_sigma, low=self.canny_low, high=self.canny_high)

    def threshold_label(self) -> str:
        """Compact threshold string for CSV reports (4 decimal places)."""
        if self.detector == "stddev":
            return f"{self.tau:.4f}"
        if self.detector == "sobel":
            return "unset" if self.sobel_threshold is None else f"{self.sobel_threshold:.4f}"
        if self.canny_low is None or self.canny_high is None:
            return "unset"
        return f"{self.canny_low:.4f}/{self.canny_high:.4f}"

    def describe(self) -> str:
        """Human-readable parameter echo, one line."""
        if self.detector == "stddev":
            median = f"median={self.median_k}" if self.pre_median else "median=off"
            return f"stddev tau={self.tau:.4f} {median}"
        if self.detector == "sobel":
            return f"sobel threshold={self.threshold_label()}"
        return f"canny sigma={self.canny_sigma:.4f} low/high={self.threshold_label()}"
