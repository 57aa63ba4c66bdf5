"""Minimal 8-bit truecolor PNG codec.

The writer emits IHDR, a single IDAT and IEND, filter type 0 on every row,
no interlacing and no ancillary chunks, so identical pixels always give
identical bytes. The reader handles what the writer produces plus all five
scanline filters, which is enough to check round trips.
"""

from __future__ import annotations

import struct
import zlib

import numpy as np

from .errors import EncodingFailure

SIGNATURE = b"\x89PNG\r\n\x1a\n"
COMPRESSION_LEVEL = 6


def _chunk(kind: bytes, data: bytes) -> bytes:
    crc = zlib.crc32(data, zlib.crc32(kind))
    return struct.pack(">L", len(data)) + kind + data + struct.pack(">L", crc)


def encode_rgb(pixels: np.ndarray) -> bytes:
    """Encode an ``(height, width, 3)`` uint8 array."""
    if pixels.ndim != 3 or pixels.shape[2] != 3 or pixels.dtype != np.uint8:
        raise ValueError(f"expected (h, w, 3) uint8 pixels, got {pixels.shape} {pixels.dtype}")
    height, width = pixels.shape[:2]
    if width < 1 or height < 1:
        raise ValueError("empty image")
    raw = np.empty((height, width * 3 + 1), dtype=np.uint8)
    raw[:, 0] = 0
    raw[:, 1:] = pixels.reshape(height, width * 3)
    try:
        idat = zlib.compress(raw.tobytes(), COMPRESSION_LEVEL)
    except (MemoryError, zlib.error) as exc:
        raise EncodingFailure(str(exc)) from exc
    ihdr = struct.pack(">2L5B", width, height, 8, 2, 0, 0, 0)
    return SIGNATURE + _chunk(b"IHDR", ihdr) + _chunk(b"IDAT", idat) + _chunk(b"IEND", b"")


def _paeth(a, b, c):
    p = a + b - c
    pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
    if pa <= pb and pa <= pc:
        return a
    return b if pb <= pc else c


def decode_rgb(data: bytes) -> np.ndarray:
    """Decode an 8-bit RGB, non-interlaced PNG to ``(height, width, 3)``."""
    if data[:8] != SIGNATURE:
        raise ValueError("not a PNG file")
    pos = 8
    header = None
    idat = []
    while pos < len(data):
        (length,) = struct.unpack_from(">L", data, pos)
        kind = data[pos + 4:pos + 8]
        body = data[pos + 8:pos + 8 + length]
        (crc,) = struct.unpack_from(">L", data, pos + 8 + length)
        if zlib.crc32(body, zlib.crc32(kind)) != crc:
            raise ValueError(f"bad CRC in {kind!r} chunk")
        pos += 12 + length
        if kind == b"IHDR":
            header = struct.unpack(">2L5B", body)
        elif kind == b"IDAT":
            idat.append(body)
        elif kind == b"IEND":
            break
    if header is None:
        raise ValueError("missing IHDR")
    width, height, depth, ctype, _, _, interlace = header
    if (depth, ctype, interlace) != (8, 2, 0):
        raise ValueError("only 8-bit RGB non-interlaced PNGs are supported")

    stride = width * 3
    raw = np.frombuffer(zlib.decompress(b"".join(idat)), dtype=np.uint8)
    raw = raw.reshape(height, stride + 1)
    out = np.zeros((height, stride), dtype=np.uint8)
    prev = np.zeros(stride, dtype=np.int32)
    for y in range(height):
        ftype = raw[y, 0]
        line = raw[y, 1:].astype(np.int32)
        if ftype == 0:
            cur = line
        elif ftype == 1:
            cur = line.copy()
            for x in range(3, stride):
                cur[x] = (cur[x] + cur[x - 3]) & 0xFF
        elif ftype == 2:
            cur = (line + prev) & 0xFF
        elif ftype in (3, 4):
            cur = line.copy()
            for x in range(stride):
                left = cur[x - 3] if x >= 3 else 0
                upleft = prev[x - 3] if x >= 3 else 0
                if ftype == 3:
                    pred = (left + prev[x]) >> 1
                else:
                    pred = _paeth(left, prev[x], upleft)
                cur[x] = (cur[x] + pred) & 0xFF
        else:
            raise ValueError(f"unknown filter type {ftype}")
        out[y] = cur
        prev = cur
    return out.reshape(height, width, 3)
