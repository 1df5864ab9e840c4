"""
Why the median pre-filter matters
=================================

Salt-and-pepper noise puts extreme values into otherwise flat windows,
so without denoising the dispersion detector fires almost everywhere an
impulse lands. A 3x3 median wipes the impulses while keeping the real
boundaries. This script corrupts a scene at 10% density and scores the
detector with and without the pre-filter against the clean edge map.
"""

from pathlib import Path

import numpy as np

from sdedge import (
    NoiseSpec,
    add_salt_pepper,
    make_synthetic,
    mask_to_gray,
    median_filter,
    montage,
    save_image,
    score,
    stddev_detect,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

step, _ = make_synthetic("vstep", 128, 64)
board, _ = make_synthetic("checkerboard", 128, 64, cell=16)
scene = np.vstack([step, board])

truth = stddev_detect(scene, tau=7.0, pre_median=False)
noisy = add_salt_pepper(scene, NoiseSpec(density=0.10, seed=2024))
# 10% of pixels are hit, but an impulse matching the local tone is invisible
# on a two-tone scene, so roughly half the hits show.
print(f"visibly changed pixels: {(noisy != scene).mean():.2%} (density 10%)")

without = stddev_detect(noisy, tau=7.0, pre_median=False)
with_median = stddev_detect(noisy, tau=7.0, pre_median=True, k=3)

for label, mask in (("without median", without), ("with median", with_median)):
    report = score(mask, truth, tolerance_radius=1)
    print(f"  {label:15s} precision={report.precision:.4f} "
          f"recall={report.recall:.4f} f1={report.f1:.4f}")

panels = [
    scene,
    noisy,
    median_filter(noisy, 3),
    mask_to_gray(without),
    mask_to_gray(with_median),
]
labels = ["CLEAN", "NOISY", "MEDIAN", "RAW DET", "MED DET"]
path = OUT / "noise_experiment.pgm"
save_image(montage(panels, labels=labels), path)
print(f"montage -> {path}")
