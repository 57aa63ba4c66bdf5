import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from PIL import Image

from mutviz import png


@st.composite
def images(draw):
    w = draw(st.integers(1, 40))
    h = draw(st.integers(1, 40))
    data = draw(st.binary(min_size=w * h * 3, max_size=w * h * 3))
    return np.frombuffer(data, dtype=np.uint8).reshape(h, w, 3)


@settings(max_examples=60, deadline=None)
@given(images())
def test_round_trip_own_decoder(pixels):
    assert np.array_equal(png.decode_rgb(png.encode_rgb(pixels)), pixels)


@settings(max_examples=60, deadline=None)
@given(images())
def test_pillow_reads_what_we_write(pixels):
    img = Image.open(io.BytesIO(png.encode_rgb(pixels)))
    assert img.mode == "RGB"
    assert img.info.get("interlace", 0) == 0
    assert np.array_equal(np.asarray(img), pixels)


@pytest.mark.parametrize("optimize", [False, True])
def test_we_read_what_pillow_writes(optimize, rng):
    # Pillow picks adaptive filters, exercising all decoder branches.
    pixels = np.frombuffer(rng.randbytes(23 * 17 * 3), dtype=np.uint8).reshape(17, 23, 3)
    pixels = np.cumsum(pixels, axis=1, dtype=np.uint8)
    buf = io.BytesIO()
    Image.fromarray(pixels, "RGB").save(buf, "PNG", optimize=optimize)
    assert np.array_equal(png.decode_rgb(buf.getvalue()), pixels)


def test_singleton_red():
    data = png.encode_rgb(np.array([[[255, 0, 0]]], dtype=np.uint8))
    assert data.startswith(png.SIGNATURE)
    assert Image.open(io.BytesIO(data)).getpixel((0, 0)) == (255, 0, 0)


def test_deterministic():
    pixels = np.arange(5 * 7 * 3, dtype=np.uint8).reshape(5, 7, 3)
    assert png.encode_rgb(pixels) == png.encode_rgb(pixels.copy())


def test_ihdr_fields():
    data = png.encode_rgb(np.zeros((3, 9, 3), dtype=np.uint8))
    assert data[12:16] == b"IHDR"
    # width, height, depth 8, color type 2 (truecolor), no interlace
    assert data[16:29] == bytes([0, 0, 0, 9, 0, 0, 0, 3, 8, 2, 0, 0, 0])


def test_corrupt_crc_rejected():
    data = bytearray(png.encode_rgb(np.zeros((2, 2, 3), dtype=np.uint8)))
    data[20] ^= 1
    with pytest.raises(ValueError, match="CRC"):
        png.decode_rgb(bytes(data))


def test_bad_input_shape():
    with pytest.raises(ValueError):
        png.encode_rgb(np.zeros((2, 2), dtype=np.uint8))
