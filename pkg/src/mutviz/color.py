"""Byte to color mapping.

A byte ``xy`` (two hex digits) becomes the color code ``xy0000``: the byte
drives the red channel and green/blue stay at zero.
"""

from __future__ import annotations

import re
from typing import NamedTuple

import numpy as np

from .errors import NotARedShade

_TRIPLET_RE = re.compile(r"[0-9A-Fa-f]{6}")


class Rgb(NamedTuple):
    r: int
    g: int
    b: int


def byte_to_color(value: int) -> Rgb:
    if not 0 <= value <= 0xFF:
        raise ValueError(f"not a byte: {value}")
    return Rgb(value, 0, 0)


def color_to_byte(c: Rgb) -> int:
    if c[1] or c[2]:
        raise NotARedShade(f"{color_to_hex_triplet(c)} is not a red shade")
    return c[0]


def color_to_hex_triplet(c: Rgb) -> str:
    return "%02X%02X%02X" % tuple(c)


def hex_triplet_to_color(text: str) -> Rgb:
    """Parse ``RRGGBB`` (no ``#`` prefix) into an :class:`Rgb`."""
    if not _TRIPLET_RE.fullmatch(text):
        raise ValueError(f"not a hex triplet: {text!r}")
    return Rgb(int(text[0:2], 16), int(text[2:4], 16), int(text[4:6], 16))


def payload_colors(payload: bytes) -> np.ndarray:
    """Vectorised ``byte_to_color`` over a payload, shape ``(n, 3)`` uint8."""
    out = np.zeros((len(payload), 3), dtype=np.uint8)
    out[:, 0] = np.frombuffer(payload, dtype=np.uint8)
    return out
