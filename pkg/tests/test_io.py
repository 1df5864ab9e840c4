import io

import numpy as np
import pytest

from sdedge import (
    SAMPLE_GRID,
    ImageFileFormat,
    ImageFormatError,
    decode_image,
    encode_image,
    from_rows,
    gray_to_mask,
    load_image,
    mask_to_gray,
    save_image,
)

ALL_FORMATS = list(ImageFileFormat)


def random_image(rng):
    h = int(rng.integers(1, 20))
    w = int(rng.integers(1, 20))
    return rng.integers(0, 256, (h, w), dtype=np.uint8)


def test_p5_decode_direct_mapping():
    data = b"P5\n2 2\n255\n" + bytes([0, 255, 255, 0])
    assert np.array_equal(decode_image(data), [[0, 255], [255, 0]])


def test_p2_decode_single_pixel():
    assert np.array_equal(decode_image(b"P2\n1 1\n255\n42\n"), [[42]])


def test_p5_encode_is_bit_exact():
    assert encode_image(from_rows([[0]]), ImageFileFormat.PGM_BINARY) == b"P5\n1 1\n255\n\x00"
    assert (
        encode_image(from_rows([[10, 20]]), ImageFileFormat.PGM_BINARY)
        == b"P5\n2 1\n255\n\x0a\x14"
    )


@pytest.mark.parametrize("fmt", ALL_FORMATS)
def test_round_trip_random_images(fmt):
    rng = np.random.default_rng(10)
    for _ in range(30):
        img = random_image(rng)
        assert np.array_equal(decode_image(encode_image(img, fmt), fmt), img)


@pytest.mark.parametrize("fmt", ALL_FORMATS)
def test_round_trip_sample_grid(fmt):
    assert np.array_equal(decode_image(encode_image(SAMPLE_GRID, fmt), fmt), SAMPLE_GRID)


def test_edge_map_round_trips_through_rendering():
    rng = np.random.default_rng(11)
    mask = rng.random((12, 8)) < 0.25
    data = encode_image(mask_to_gray(mask), ImageFileFormat.PGM_BINARY)
    assert np.array_equal(gray_to_mask(decode_image(data)), mask)


def test_pgm_reader_skips_comments_and_odd_whitespace():
    data = b"P5 # binary\n# a comment line\n 2\t2 # dims\n255\n" + bytes([1, 2, 3, 4])
    assert np.array_equal(decode_image(data), [[1, 2], [3, 4]])


def test_p5_maxval_error_reports_offset():
    data = b"P5\n2 2\n65535\n" + bytes(8)
    with pytest.raises(ImageFormatError) as excinfo:
        decode_image(data)
    assert excinfo.value.offset == 7
    assert "maxval" in str(excinfo.value) or "255" in str(excinfo.value)


def test_p5_truncated_raster_reports_offset():
    data = b"P5\n2 2\n255\n" + bytes([1, 2])
    with pytest.raises(ImageFormatError) as excinfo:
        decode_image(data)
    assert "truncated" in str(excinfo.value)
    assert excinfo.value.offset == len(data)


def test_p5_bad_magic_rejected():
    with pytest.raises(ImageFormatError):
        decode_image(b"P6\n1 1\n255\n\x00", ImageFileFormat.PGM_BINARY)


def test_p2_bad_sample_rejected():
    with pytest.raises(ImageFormatError):
        decode_image(b"P2\n1 1\n255\n300\n")
    with pytest.raises(ImageFormatError):
        decode_image(b"P2\n1 1\n255\nxyz\n")


def test_p2_truncated_samples_rejected():
    with pytest.raises(ImageFormatError):
        decode_image(b"P2\n2 2\n255\n1 2 3\n")


def test_malformed_header_rejected():
    with pytest.raises(ImageFormatError):
        decode_image(b"P5\nnot numbers\n255\n")
    with pytest.raises(ImageFormatError):
        decode_image(b"")


def test_sniffing_detects_all_formats():
    img = from_rows([[1, 2], [3, 4]])
    for fmt in ALL_FORMATS:
        data = encode_image(img, fmt)
        assert np.array_equal(decode_image(data), img)


def test_unknown_data_rejected():
    with pytest.raises(ImageFormatError):
        decode_image(b"GIF89a....")


def test_png_color_converts_via_bt601_luma():
    from PIL import Image

    rgb = np.zeros((1, 4, 3), dtype=np.uint8)
    rgb[0, 0] = (255, 0, 0)
    rgb[0, 1] = (0, 255, 0)
    rgb[0, 2] = (0, 0, 255)
    rgb[0, 3] = (10, 20, 30)
    buf = io.BytesIO()
    Image.fromarray(rgb, "RGB").save(buf, format="PNG")
    gray = decode_image(buf.getvalue())
    # round(0.299 R + 0.587 G + 0.114 B), worked by hand
    assert gray.tolist() == [[76, 150, 29, 18]]


def test_png_16_bit_rejected():
    from PIL import Image

    buf = io.BytesIO()
    Image.new("I;16", (2, 2)).save(buf, format="PNG")
    with pytest.raises(ImageFormatError):
        decode_image(buf.getvalue())


def test_save_and_load_paths_infer_format(tmp_path):
    img = SAMPLE_GRID
    for name in ("grid.pgm", "grid.png"):
        path = tmp_path / name
        save_image(img, path)
        assert np.array_equal(load_image(path), img)


def test_save_unknown_extension_needs_explicit_format(tmp_path):
    with pytest.raises(ValueError):
        save_image(SAMPLE_GRID, tmp_path / "grid.tiff")
    save_image(SAMPLE_GRID, tmp_path / "grid.raw", ImageFileFormat.PGM_ASCII)
    assert np.array_equal(load_image(tmp_path / "grid.raw"), SAMPLE_GRID)


def test_file_object_round_trip(tmp_path):
    path = tmp_path / "obj.pgm"
    with open(path, "wb") as handle:
        save_image(SAMPLE_GRID, handle, ImageFileFormat.PGM_BINARY)
    with open(path, "rb") as handle:
        assert np.array_equal(load_image(handle), SAMPLE_GRID)


def test_load_from_bytes():
    data = encode_image(SAMPLE_GRID, ImageFileFormat.PGM_ASCII)
    assert np.array_equal(load_image(data), SAMPLE_GRID)
