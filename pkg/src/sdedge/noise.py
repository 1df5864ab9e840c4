"""Seeded salt-and-pepper (impulse) noise injection.

The random stream comes from numpy's ``default_rng`` (PCG64). The
generator choice is part of the output contract: the same image and spec
always produce byte-identical noisy images, so goldens stay stable.
Changing the generator would be a breaking change.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import as_gray

__all__ = ["NoiseSpec", "add_salt_pepper"]


@dataclass(frozen=True)
class NoiseSpec:
    """Impulse-noise parameters.

    density      fraction of pixels corrupted (per-pixel probability)
    salt_ratio   fraction of corrupted pixels set to 255; the rest go to 0
    seed         PRNG seed
    """

    density: float = 0.10
    salt_ratio: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")
        if not 0.0 <= self.salt_ratio <= 1.0:
            raise ValueError(f"salt_ratio must be in [0, 1], got {self.salt_ratio}")


def add_salt_pepper(img, spec: NoiseSpec) -> np.ndarray:
    """Corrupt each pixel independently with probability ``spec.density``.

    A corrupted pixel becomes 255 with probability ``spec.salt_ratio``,
    otherwise 0. Uncorrupted pixels are copied bit for bit. Two uniform
    draws are consumed per pixel in row-major order (the corruption pass
    first, then the salt/pepper pass), so the output is independent of
    any internal vectorization.
    """
    arr = as_gray(img)
    rng = np.random.default_rng(spec.seed)
    corrupt = rng.random(arr.shape) < spec.density
    salt = rng.random(arr.shape) < spec.salt_ratio
    impulses = np.where(salt, 255, 0).astype(np.uint8)
    return np.where(corrupt, impulses, arr)
