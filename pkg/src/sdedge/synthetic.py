"""Synthetic test scenes with analytically exact edge ground truth.

Every scene is piecewise constant (two-tone), so its true edge map under
the upper-left 2x2 window convention is simply the set of window origins
whose four pixels are not all equal. ``make_synthetic`` returns both the
image and that mask.

The glyph scene stands in for text images: characters come from a built-in
blocky 5x7 uppercase font, so nothing depends on system fonts.
"""

from __future__ import annotations

import numpy as np

from .image import as_gray

__all__ = ["SYNTHETIC_KINDS", "make_synthetic", "render_text", "boundary_truth"]

# 5x7 uppercase letterforms, '#' = ink. Row strings are exactly 5 wide.
_GLYPHS = {
    "A": (".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"),
    "B": ("####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."),
    "C": (".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."),
    "D": ("####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####."),
    "E": ("#####", "#....", "#....", "####.", "#....", "#....", "#####"),
    "F": ("#####", "#....", "#....", "####.", "#....", "#....", "#...."),
    "G": (".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".###."),
    "H": ("#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"),
    "I": (".###.", "..#..", "..#..", "..#..", "..#..", "..#..", ".###."),
    "J": ("..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##.."),
    "K": ("#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"),
    "L": ("#....", "#....", "#....", "#....", "#....", "#....", "#####"),
    "M": ("#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"),
    "N": ("#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#", "#...#"),
    "O": (".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."),
    "P": ("####.", "#...#", "#...#", "####.", "#....", "#....", "#...."),
    "Q": (".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#"),
    "R": ("####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"),
    "S": (".####", "#....", "#....", ".###.", "....#", "....#", "####."),
    "T": ("#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."),
    "U": ("#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."),
    "V": ("#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."),
    "W": ("#...#", "#...#", "#...#", "#.#.#", "#.#.#", "##.##", "#...#"),
    "X": ("#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"),
    "Y": ("#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#.."),
    "Z": ("#####", "....#", "...#.", "..#..", ".#...", "#....", "#####"),
    " ": (".....", ".....", ".....", ".....", ".....", ".....", "....."),
}

_GLYPH_H, _GLYPH_W = 7, 5

SYNTHETIC_KINDS = ("constant", "vstep", "hstep", "diagonal", "checkerboard", "glyph")


def boundary_truth(img) -> np.ndarray:
    """Edge ground truth for a piecewise-constant image.

    Flags every window origin whose 2x2 window is not constant, i.e. spans
    a region boundary. Last row/column pixels are never origins.
    """
    arr = as_gray(img)
    a = arr[:-1, :-1]
    b = arr[:-1, 1:]
    c = arr[1:, :-1]
    d = arr[1:, 1:]
    mask = np.zeros(arr.shape, dtype=bool)
    mask[:-1, :-1] = (a != b) | (a != c) | (a != d)
    return mask


def render_text(text: str, scale: int = 2, fg: int = 0, bg: int = 255, margin: int = 4) -> np.ndarray:
    """Rasterize uppercase text with the built-in 5x7 font.

    Letters are separated by one (unscaled) blank column; the whole block
    gets a ``margin``-pixel border. Unknown characters are an error.
    """
    text = text.upper()
    unknown = sorted(set(text) - set(_GLYPHS))
    if unknown:
        raise ValueError(f"unsupported characters {unknown!r}; font covers A-Z and space")
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    if not text:
        raise ValueError("text must be non-empty")
    cols = len(text) * (_GLYPH_W + 1) - 1
    block = np.zeros((_GLYPH_H, cols), dtype=bool)
    for idx, ch in enumerate(text):
        x0 = idx * (_GLYPH_W + 1)
        for r, row in enumerate(_GLYPHS[ch]):
            for c, cell in enumerate(row):
                block[r, x0 + c] = cell == "#"
    block = np.kron(block, np.ones((scale, scale), dtype=bool))
    canvas = np.full(
        (block.shape[0] + 2 * margin, block.shape[1] + 2 * margin), bg, dtype=np.uint8
    )
    canvas[margin : margin + block.shape[0], margin : margin + block.shape[1]][block] = fg
    return canvas


def _place_centered(canvas: np.ndarray, block: np.ndarray) -> np.ndarray:
    ch, cw = canvas.shape
    bh, bw = block.shape
    if bh > ch or bw > cw:
        raise ValueError(f"rendered block {block.shape} exceeds requested canvas {canvas.shape}")
    top = (ch - bh) // 2
    left = (cw - bw) // 2
    canvas[top : top + bh, left : left + bw] = block
    return canvas


def make_synthetic(kind: str, width: int, height: int, **params) -> tuple[np.ndarray, np.ndarray]:
    """Build a named synthetic scene and its exact edge ground truth.

    Kinds and their parameters (two tones default to low=0, high=255):

    - ``constant``: ``value`` (default 128); truth is all-False
    - ``vstep``: vertical boundary at ``column`` (default width//2)
    - ``hstep``: horizontal boundary at ``row`` (default height//2)
    - ``diagonal``: high region where j*height > i*width
    - ``checkerboard``: alternating ``cell``-sized squares (default 2)
    - ``glyph``: centered ``text`` (default "EDGE") at ``scale`` (default 2),
      dark ink on a light page
    """
    if width < 4 or height < 4:
        raise ValueError(f"dimensions must be >= 4, got {width}x{height}")
    low = int(params.pop("low", 0))
    high = int(params.pop("high", 255))

    if kind == "constant":
        value = int(params.pop("value", 128))
        img = np.full((height, width), value, dtype=np.uint8)
    elif kind == "vstep":
        column = int(params.pop("column", width // 2))
        if not 1 <= column <= width - 1:
            raise ValueError(f"step column must be in [1, {width - 1}], got {column}")
        img = np.full((height, width), low, dtype=np.uint8)
        img[:, column:] = high
    elif kind == "hstep":
        row = int(params.pop("row", height // 2))
        if not 1 <= row <= height - 1:
            raise ValueError(f"step row must be in [1, {height - 1}], got {row}")
        img = np.full((height, width), low, dtype=np.uint8)
        img[row:, :] = high
    elif kind == "diagonal":
        jj, ii = np.meshgrid(np.arange(width), np.arange(height))
        img = np.where(jj * height > ii * width, high, low).astype(np.uint8)
    elif kind == "checkerboard":
        cell = int(params.pop("cell", 2))
        if cell < 1:
            raise ValueError(f"cell size must be >= 1, got {cell}")
        jj, ii = np.meshgrid(np.arange(width), np.arange(height))
        img = np.where((ii // cell + jj // cell) % 2 == 1, high, low).astype(np.uint8)
    elif kind == "glyph":
        text = str(params.pop("text", "EDGE"))
        scale = int(params.pop("scale", 2))
        fg = int(params.pop("fg", 0))
        bg = int(params.pop("bg", 255))
        block = render_text(text, scale=scale, fg=fg, bg=bg, margin=0)
        img = _place_centered(np.full((height, width), bg, dtype=np.uint8), block)
    else:
        raise ValueError(f"unknown synthetic kind {kind!r}, expected one of {SYNTHETIC_KINDS}")

    if params:
        raise ValueError(f"unexpected parameters for {kind!r}: {sorted(params)}")
    return img, boundary_truth(img)
