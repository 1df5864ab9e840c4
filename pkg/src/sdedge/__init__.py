"""Grayscale edge detection from 2x2 window dispersion.

The core detector median-filters an image, computes the sample standard
deviation of every 2x2 sliding window, and flags each window's upper-left
pixel as an edge when that dispersion exceeds a threshold. Sobel and
Canny baselines, salt-and-pepper noise injection, synthetic scenes with
exact ground truth, and a precision/recall scoring harness round out the
toolbox.
"""

from .detectors import (
    DetectorConfig,
    canny_detect,
    gaussian_kernel,
    sobel_detect,
    sobel_gradients,
    stddev_detect,
)
from .evaluate import (
    CSV_COLUMNS,
    REFERENCE_TOLERANCE,
    REFERENCE_WINDOWS,
    SAMPLE_GRID,
    EvalReport,
    ReferenceRow,
    montage,
    reference_window_report,
    score,
)
from .filters import median_filter
from .image import (
    Window,
    as_gray,
    from_rows,
    get_pixel,
    gray_to_mask,
    iter_windows,
    mask_to_gray,
    sample_std,
    window_std_map,
)
from .io import (
    ImageFileFormat,
    ImageFormatError,
    decode_image,
    encode_image,
    load_image,
    save_image,
)
from .noise import NoiseSpec, add_salt_pepper
from .synthetic import SYNTHETIC_KINDS, boundary_truth, make_synthetic, render_text

__version__ = "0.1.0"

__all__ = [
    "DetectorConfig",
    "canny_detect",
    "gaussian_kernel",
    "sobel_detect",
    "sobel_gradients",
    "stddev_detect",
    "CSV_COLUMNS",
    "REFERENCE_TOLERANCE",
    "REFERENCE_WINDOWS",
    "SAMPLE_GRID",
    "EvalReport",
    "ReferenceRow",
    "montage",
    "reference_window_report",
    "score",
    "median_filter",
    "Window",
    "as_gray",
    "from_rows",
    "get_pixel",
    "gray_to_mask",
    "iter_windows",
    "mask_to_gray",
    "sample_std",
    "window_std_map",
    "ImageFileFormat",
    "ImageFormatError",
    "decode_image",
    "encode_image",
    "load_image",
    "save_image",
    "NoiseSpec",
    "add_salt_pepper",
    "SYNTHETIC_KINDS",
    "boundary_truth",
    "make_synthetic",
    "render_text",
]
