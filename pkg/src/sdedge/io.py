"""Bit-exact grayscale image I/O: PGM (binary P5 and ASCII P2) plus PNG.

The PGM codecs are written by hand so the byte layout is fully pinned:
a P5 file is exactly ``P5\\n{width} {height}\\n255\\n`` followed by
width*height raw bytes, row-major. PNG goes through Pillow and is
restricted to 8-bit images; color input is collapsed to luma with
``round(0.299 R + 0.587 G + 0.114 B)`` (BT.601 weights).
"""

from __future__ import annotations

import enum
import io as _stdio
import os
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .image import as_gray

__all__ = [
    "ImageFileFormat",
    "ImageFormatError",
    "decode_image",
    "encode_image",
    "load_image",
    "save_image",
]

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class ImageFileFormat(enum.Enum):
    """Supported on-disk encodings. Every one round-trips losslessly."""

    PGM_BINARY = "P5"
    PGM_ASCII = "P2"
    PNG = "PNG"

    @classmethod
    def from_name(cls, name: str) -> "ImageFileFormat":
        key = name.strip().lower()
        aliases = {
            "p5": cls.PGM_BINARY,
            "pgm": cls.PGM_BINARY,
            "p2": cls.PGM_ASCII,
            "png": cls.PNG,
        }
        if key not in aliases:
            raise ValueError(f"unknown image format {name!r}")
        return aliases[key]


class ImageFormatError(ValueError):
    """Malformed image data. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _sniff_format(data: bytes) -> ImageFileFormat:
    if data.startswith(_PNG_MAGIC):
        return ImageFileFormat.PNG
    if data.startswith(b"P5"):
        return ImageFileFormat.PGM_BINARY
    if data.startswith(b"P2"):
        return ImageFileFormat.PGM_ASCII
    raise ImageFormatError("unrecognized image data (not PGM or PNG)", 0)


class _PgmScanner:
    """Whitespace/comment-aware token reader tracking byte offsets."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def _skip_separators(self) -> None:
        data, n = self.data, len(self.data)
        while self.pos < n:
            byte = data[self.pos]
            if byte in b" \t\r\n\v\f":
                self.pos += 1
            elif byte in b"#":
                while self.pos < n and data[self.pos] not in b"\n":
                    self.pos += 1
            else:
                return

    def next_token(self, what: str) -> tuple[bytes, int]:
        self._skip_separators()
        start = self.pos
        if start >= len(self.data):
            raise ImageFormatError(f"truncated header: missing {what}", start)
        while self.pos < len(self.data) and self.data[self.pos] not in b" \t\r\n\v\f#":
            self.pos += 1
        return self.data[start : self.pos], start

    def next_int(self, what: str) -> tuple[int, int]:
        token, start = self.next_token(what)
        try:
            value = int(token)
        except ValueError:
            raise ImageFormatError(f"invalid {what} {token!r}", start) from None
        return value, start


def _parse_pgm_header(scanner: _PgmScanner, magic: bytes) -> tuple[int, int]:
    token, start = scanner.next_token("magic number")
    if token != magic:
        raise ImageFormatError(f"expected {magic.decode()} magic, got {token!r}", start)
    width, start = scanner.next_int("width")
    if width < 1:
        raise ImageFormatError(f"width must be >= 1, got {width}", start)
    height, start = scanner.next_int("height")
    if height < 1:
        raise ImageFormatError(f"height must be >= 1, got {height}", start)
    maxval, start = scanner.next_int("maxval")
    if maxval != 255:
        raise ImageFormatError(f"only maxval 255 is supported, got {maxval}", start)
    return width, height


def _decode_p5(data: bytes) -> np.ndarray:
    scanner = _PgmScanner(data)
    width, height = _parse_pgm_header(scanner, b"P5")
    # Exactly one whitespace byte separates the header from the raster.
    if scanner.pos >= len(data) or data[scanner.pos] not in b" \t\r\n\v\f":
        raise ImageFormatError("missing whitespace before raster data", scanner.pos)
    start = scanner.pos + 1
    needed = width * height
    raster = data[start : start + needed]
    if len(raster) < needed:
        raise ImageFormatError(
            f"truncated raster: expected {needed} bytes, got {len(raster)}",
            start + len(raster),
        )
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()


def _decode_p2(data: bytes) -> np.ndarray:
    scanner = _PgmScanner(data)
    width, height = _parse_pgm_header(scanner, b"P2")
    values = np.empty(width * height, dtype=np.uint8)
    for idx in range(width * height):
        value, start = scanner.next_int(f"sample {idx}")
        if not 0 <= value <= 255:
            raise ImageFormatError(f"sample {value} outside [0, 255]", start)
        values[idx] = value
    return values.reshape(height, width)


def _decode_png(data: bytes) -> np.ndarray:
    try:
        with Image.open(_stdio.BytesIO(data)) as pil:
            pil.load()
            if pil.mode in ("I;16", "I;16B", "I;16L", "I"):
                raise ImageFormatError("only 8-bit PNG images are supported", 0)
            if pil.mode == "P":
                pil = pil.convert("RGB")
            if pil.mode in ("L", "1"):
                arr = np.asarray(pil.convert("L"), dtype=np.uint8)
                return arr.copy()
            rgb = np.asarray(pil.convert("RGB"), dtype=np.float64)
    except UnidentifiedImageError as exc:
        raise ImageFormatError(f"invalid PNG data: {exc}", 0) from exc
    luma = 0.299 * rgb[:, :, 0] + 0.587 * rgb[:, :, 1] + 0.114 * rgb[:, :, 2]
    return np.clip(np.rint(luma), 0, 255).astype(np.uint8)


def decode_image(data: bytes, fmt: ImageFileFormat | None = None) -> np.ndarray:
    """Decode bytes into a grayscale image; sniffs the format when omitted."""
    if fmt is None:
        fmt = _sniff_format(data)
    if fmt is ImageFileFormat.PGM_BINARY:
        return _decode_p5(data)
    if fmt is ImageFileFormat.PGM_ASCII:
        return _decode_p2(data)
    return _decode_png(data)


def encode_image(img, fmt: ImageFileFormat = ImageFileFormat.PGM_BINARY) -> bytes:
    """Encode a grayscale image to bytes in the requested format."""
    arr = as_gray(img)
    h, w = arr.shape
    if fmt is ImageFileFormat.PGM_BINARY:
        return f"P5\n{w} {h}\n255\n".encode("ascii") + arr.tobytes()
    if fmt is ImageFileFormat.PGM_ASCII:
        rows = "\n".join(" ".join(str(v) for v in row) for row in arr.tolist())
        return f"P2\n{w} {h}\n255\n{rows}\n".encode("ascii")
    buf = _stdio.BytesIO()
    Image.fromarray(arr, mode="L").save(buf, format="PNG")
    return buf.getvalue()


_EXTENSION_FORMATS = {
    ".pgm": ImageFileFormat.PGM_BINARY,
    ".pnm": ImageFileFormat.PGM_BINARY,
    ".png": ImageFileFormat.PNG,
}


def _format_for_path(path: Path) -> ImageFileFormat:
    fmt = _EXTENSION_FORMATS.get(path.suffix.lower())
    if fmt is None:
        raise ValueError(f"cannot infer image format from {path.name!r}; pass fmt=")
    return fmt


def load_image(source, fmt: ImageFileFormat | None = None) -> np.ndarray:
    """Load a grayscale image from a path, file object, or raw bytes."""
    if isinstance(source, (bytes, bytearray)):
        return decode_image(bytes(source), fmt)
    if isinstance(source, (str, os.PathLike)):
        data = Path(source).read_bytes()
        return decode_image(data, fmt)
    return decode_image(source.read(), fmt)


def save_image(img, dest, fmt: ImageFileFormat | None = None) -> None:
    """Write a grayscale image to a path or binary file object.

    When ``dest`` is a path and ``fmt`` is omitted, the format is taken
    from the extension (.pgm/.pnm -> binary PGM, .png -> PNG).
    """
    if isinstance(dest, (str, os.PathLike)):
        path = Path(dest)
        data = encode_image(img, fmt if fmt is not None else _format_for_path(path))
        path.write_bytes(data)
    else:
        if fmt is None:
            raise ValueError("fmt is required when writing to a file object")
        dest.write(encode_image(img, fmt))
