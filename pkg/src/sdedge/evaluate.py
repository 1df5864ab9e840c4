"""Detector scoring, the built-in regression grid, and montage rendering.

``SAMPLE_GRID`` is a 10x10 patch of a natural photograph that ships with
the library as a regression fixture:
``REFERENCE_WINDOWS`` lists ten of its 81 windows by upper-left intensity
together with the expected sample standard deviation, and
``reference_window_report`` recomputes and checks them. The CLI's
``table1`` command prints that report.

Scoring compares a predicted edge map against ground truth with an
optional Chebyshev tolerance radius: predictions are scanned row-major
and each greedily matches the first unmatched truth pixel in its
(2r+1)x(2r+1) neighborhood, row-major as well. At radius 0 this reduces
to plain pixelwise TP/FP/FN counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .detectors import DetectorConfig
from .image import as_gray, window_std_map
from .synthetic import render_text

__all__ = [
    "SAMPLE_GRID",
    "REFERENCE_WINDOWS",
    "REFERENCE_TOLERANCE",
    "ReferenceRow",
    "reference_window_report",
    "EvalReport",
    "CSV_COLUMNS",
    "score",
    "montage",
]

SAMPLE_GRID = np.array(
    [
        [201, 205, 182, 134, 94, 94, 115, 120, 116, 111],
        [204, 172, 113, 83, 93, 103, 96, 105, 104, 102],
        [159, 103, 80, 86, 97, 100, 100, 95, 101, 103],
        [114, 83, 76, 84, 88, 83, 78, 71, 77, 81],
        [79, 72, 75, 81, 80, 72, 65, 52, 56, 59],
        [71, 71, 72, 72, 68, 65, 63, 51, 51, 52],
        [68, 69, 64, 58, 54, 54, 55, 56, 54, 52],
        [66, 67, 60, 52, 49, 48, 48, 53, 52, 51],
        [67, 64, 55, 49, 50, 50, 48, 49, 49, 50],
        [69, 59, 46, 41, 47, 51, 50, 48, 50, 51],
    ],
    dtype=np.uint8,
)

# (upper-left intensity, expected window sample stddev) for ten windows of
# SAMPLE_GRID. Values are 4-decimal reference goldens; origins are resolved
# by exhaustive scan because upper-left intensities alone are ambiguous.
REFERENCE_WINDOWS = (
    (201, 15.7586),
    (172, 39.1833),
    (134, 22.5536),
    (103, 2.8723),
    (115, 10.6771),
    (116, 6.4485),
    (101, 13.4040),
    (83, 4.6547),
    (67, 5.1962),
    (49, 0.8165),
)

REFERENCE_TOLERANCE = 5e-4


class ReferenceRow(NamedTuple):
    origin: tuple[int, int]
    upper_left: int
    std: float
    expected: float
    is_edge: bool
    ok: bool


def reference_window_report(tau: float = 7.0) -> list[ReferenceRow]:
    """Recompute the reference windows of ``SAMPLE_GRID`` and check them.

    For each golden (upper-left value, expected std) pair, all 81 windows
    are scanned row-major and the matching-value window whose std is
    closest to the expected one is reported (first wins on ties). ``ok``
    records agreement within ``REFERENCE_TOLERANCE``; ``is_edge`` applies
    the strict ``> tau`` rule.
    """
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")
    stds = window_std_map(SAMPLE_GRID)
    rows = []
    for upper_left, expected in REFERENCE_WINDOWS:
        best: tuple[float, tuple[int, int], float] | None = None
        for i in range(stds.shape[0]):
            for j in range(stds.shape[1]):
                if int(SAMPLE_GRID[i, j]) != upper_left:
                    continue
                diff = abs(stds[i, j] - expected)
                if best is None or diff < best[0]:
                    best = (diff, (i, j), float(stds[i, j]))
        if best is None:
            raise RuntimeError(f"no window with upper-left value {upper_left} in SAMPLE_GRID")
        diff, origin, std = best
        rows.append(
            ReferenceRow(
                origin=origin,
                upper_left=upper_left,
                std=std,
                expected=expected,
                is_edge=std > tau,
                ok=diff <= REFERENCE_TOLERANCE,
            )
        )
    return rows


CSV_COLUMNS = (
    "detector",
    "tau_or_thresholds",
    "tp",
    "fp",
    "fn",
    "precision",
    "recall",
    "f1",
    "tolerance_radius",
)


@dataclass(frozen=True)
class EvalReport:
    """Pixel counts and derived metrics from one detector-vs-truth comparison.

    Conventions: 0/0 precision and 0/0 recall are both 1 (an empty
    prediction makes no false claims; an empty truth leaves nothing
    missed), and f1 is 0 when precision + recall is 0.
    """

    tp: int
    fp: int
    fn: int
    tolerance_radius: int
    config: DetectorConfig | None = None

    @property
    def precision(self) -> float:
        return 1.0 if self.tp + self.fp == 0 else self.tp / (self.tp + self.fp)

    @property
    def recall(self) -> float:
        return 1.0 if self.tp + self.fn == 0 else self.tp / (self.tp + self.fn)

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 0.0 if p + r == 0 else 2.0 * p * r / (p + r)

    def csv_row(self) -> str:
        """One flat CSV row in ``CSV_COLUMNS`` order."""
        detector = self.config.detector if self.config else "unknown"
        thresholds = self.config.threshold_label() if self.config else "unset"
        return ",".join(
            (
                detector,
                thresholds,
                str(self.tp),
                str(self.fp),
                str(self.fn),
                f"{self.precision:.4f}",
                f"{self.recall:.4f}",
                f"{self.f1:.4f}",
                str(self.tolerance_radius),
            )
        )

    def text_block(self) -> str:
        """Human-readable multi-line summary."""
        lines = []
        if self.config is not None:
            lines.append(f"detector: {self.config.describe()}")
        lines += [
            f"tp={self.tp} fp={self.fp} fn={self.fn} radius={self.tolerance_radius}",
            f"precision={self.precision:.4f} recall={self.recall:.4f} f1={self.f1:.4f}",
        ]
        return "\n".join(lines)


def score(
    pred,
    truth,
    tolerance_radius: int = 1,
    config: DetectorConfig | None = None,
) -> EvalReport:
    """Match predicted edges to true edges within a Chebyshev radius.

    Matching is greedy, one-to-one, and deterministic: predictions in
    row-major order each claim the first still-unmatched truth pixel in
    their radius neighborhood (scanned row-major). Matched predictions
    are TP, leftover predictions FP, leftover truths FN.
    """
    pred = np.asarray(pred, dtype=bool)
    truth = np.asarray(truth, dtype=bool)
    if pred.shape != truth.shape:
        raise ValueError(f"shape mismatch: pred {pred.shape} vs truth {truth.shape}")
    if tolerance_radius < 0:
        raise ValueError(f"tolerance_radius must be >= 0, got {tolerance_radius}")

    h, w = truth.shape
    unmatched = truth.copy()
    r = tolerance_radius
    tp = 0
    for i, j in np.argwhere(pred):
        i0, i1 = max(0, i - r), min(h, i + r + 1)
        j0, j1 = max(0, j - r), min(w, j + r + 1)
        hits = np.argwhere(unmatched[i0:i1, j0:j1])
        if hits.size:
            hi, hj = hits[0]
            unmatched[i0 + hi, j0 + hj] = False
            tp += 1
    fp = int(pred.sum()) - tp
    fn = int(unmatched.sum())
    return EvalReport(tp=tp, fp=fp, fn=fn, tolerance_radius=tolerance_radius, config=config)


def montage(images, labels=None, separator_value: int = 255) -> np.ndarray:
    """Concatenate equal-sized panels horizontally with 2-pixel separators.

    Optional ``labels`` (one per panel) are stamped into each panel's
    top-left corner with the built-in glyph font, leaving the panel
    geometry unchanged: N panels of width W yield N*W + (N-1)*2 columns.
    """
    panels = [as_gray(img) for img in images]
    if not panels:
        raise ValueError("montage needs at least one image")
    shape = panels[0].shape
    for idx, panel in enumerate(panels):
        if panel.shape != shape:
            raise ValueError(f"panel {idx} has shape {panel.shape}, expected {shape}")
    if labels is not None:
        if len(labels) != len(panels):
            raise ValueError(f"got {len(labels)} labels for {len(panels)} panels")
        panels = [_stamp_label(panel.copy(), str(label)) for panel, label in zip(panels, labels)]
    sep = np.full((shape[0], 2), separator_value, dtype=np.uint8)
    strips = []
    for idx, panel in enumerate(panels):
        if idx:
            strips.append(sep)
        strips.append(panel)
    return np.hstack(strips)


def _stamp_label(panel: np.ndarray, label: str) -> np.ndarray:
    box = render_text(label, scale=1, fg=255, bg=0, margin=1)
    bh, bw = box.shape
    panel[: min(bh, panel.shape[0]), : min(bw, panel.shape[1])] = box[
        : panel.shape[0], : panel.shape[1]
    ]
    return panel
