"""Box-grid rendering of test inputs and frame output.

Each byte is drawn as one ``box_width_px`` x ``box_height_px`` box filled
with its red-shade color, laid out ``bytes_per_row`` boxes per row and
separated by ``gutter_px`` pixels of ``gutter_color``. Cells past the end of
the payload on the last row are filled with ``background``.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import png
from .color import Rgb, payload_colors
from .corpus import TestInput
from .diff import BaselineMode, changed_offsets
from .errors import EmptyCorpus, IoFailure, OffsetOutOfRange

DEFAULT_BACKGROUND = Rgb(255, 255, 255)
DEFAULT_GUTTER_COLOR = Rgb(200, 200, 200)
DEFAULT_OUTLINE_COLOR = Rgb(255, 255, 0)
MANIFEST_NAME = "manifest.json"


@dataclass(frozen=True)
class GridLayout:
    box_width_px: int = 16
    box_height_px: int = 16
    bytes_per_row: int = 32
    gutter_px: int = 1
    background: Rgb = DEFAULT_BACKGROUND
    gutter_color: Rgb = DEFAULT_GUTTER_COLOR

    def __post_init__(self):
        if min(self.box_width_px, self.box_height_px, self.bytes_per_row) < 1:
            raise ValueError("box dimensions and bytes_per_row must be >= 1")
        if self.gutter_px < 0:
            raise ValueError("gutter_px must be >= 0")


@dataclass(frozen=True)
class NoHighlight:
    pass


@dataclass(frozen=True)
class Outline:
    color: Rgb = DEFAULT_OUTLINE_COLOR
    thickness_px: int = 2

    def __post_init__(self):
        if self.thickness_px < 1:
            raise ValueError("outline thickness must be >= 1")

    def check(self, layout: GridLayout) -> None:
        limit = min(layout.box_width_px, layout.box_height_px) / 2
        if self.thickness_px > limit:
            raise ValueError(
                f"outline thickness {self.thickness_px}px exceeds half the box "
                f"({layout.box_width_px}x{layout.box_height_px})"
            )


HighlightStyle = Union[NoHighlight, Outline]


@dataclass(frozen=True, eq=False)
class Frame:
    """A rendered image; ``pixels`` has shape ``(height, width, 3)``, uint8."""

    width_px: int
    height_px: int
    pixels: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.pixels.shape != (self.height_px, self.width_px, 3):
            raise ValueError(
                f"pixel buffer {self.pixels.shape} does not match "
                f"{self.width_px}x{self.height_px}"
            )

    def pixel(self, x: int, y: int) -> Rgb:
        return Rgb(*(int(v) for v in self.pixels[y, x]))

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)


def frame_geometry(payload_length: int, layout: GridLayout) -> tuple[int, int, int]:
    """Return ``(width_px, height_px, rows)`` for a payload of the given size."""
    if payload_length < 1:
        raise ValueError("payload_length must be >= 1")
    bpr, g = layout.bytes_per_row, layout.gutter_px
    rows = math.ceil(payload_length / bpr)
    width = bpr * layout.box_width_px + (bpr - 1) * g
    height = rows * layout.box_height_px + (rows - 1) * g
    return width, height, rows


def box_origin(offset: int, layout: GridLayout) -> tuple[int, int]:
    """Top-left pixel ``(x, y)`` of the box for byte ``offset``."""
    row, col = divmod(offset, layout.bytes_per_row)
    return (col * (layout.box_width_px + layout.gutter_px),
            row * (layout.box_height_px + layout.gutter_px))


def render_input(
    test_input: TestInput,
    layout: GridLayout = GridLayout(),
    changed: Optional[Iterable[int]] = None,
    style: HighlightStyle = NoHighlight(),
) -> Frame:
    payload = test_input.payload
    n = len(payload)
    bw, bh, bpr, g = layout.box_width_px, layout.box_height_px, layout.bytes_per_row, layout.gutter_px
    width, height, rows = frame_geometry(n, layout)

    cells = np.empty((rows * bpr, 3), dtype=np.uint8)
    cells[:] = layout.background
    cells[:n] = payload_colors(payload)

    # Canvas padded by one trailing gutter in each direction, viewed as
    # (row, y-in-cell, col, x-in-cell, channel) so boxes fill by broadcast.
    canvas = np.empty((rows * (bh + g), bpr * (bw + g), 3), dtype=np.uint8)
    canvas[:] = layout.gutter_color
    grid = canvas.reshape(rows, bh + g, bpr, bw + g, 3)
    grid[:, :bh, :, :bw] = cells.reshape(rows, 1, bpr, 1, 3)

    offsets = np.asarray(sorted(set(changed)) if changed is not None else [], dtype=np.int64)
    if offsets.size:
        if offsets[0] < 0 or offsets[-1] >= n:
            bad = offsets[-1] if offsets[-1] >= n else offsets[0]
            raise OffsetOutOfRange(f"changed offset {bad} outside payload of length {n}")
        if isinstance(style, Outline):
            style.check(layout)
            t = style.thickness_px
            r, c = np.divmod(offsets, bpr)
            grid[r, :t, c, :bw] = style.color
            grid[r, bh - t:bh, c, :bw] = style.color
            grid[r, :bh, c, :t] = style.color
            grid[r, :bh, c, bw - t:bw] = style.color

    return Frame(width, height, np.ascontiguousarray(canvas[:height, :width]))


def encode_png(frame: Frame) -> bytes:
    return png.encode_rgb(frame.pixels)


def decode_png(data: bytes) -> Frame:
    pixels = png.decode_rgb(data)
    return Frame(pixels.shape[1], pixels.shape[0], pixels)


def frame_filename(index: int) -> str:
    return "file_%09d.png" % index


def _baseline_mode(diff_baseline) -> Optional[BaselineMode]:
    if diff_baseline is None or diff_baseline == "none":
        return None
    return BaselineMode(diff_baseline)


def render_corpus(
    corpus: Sequence[TestInput],
    layout: GridLayout = GridLayout(),
    style: HighlightStyle = Outline(),
    diff_baseline: Union[BaselineMode, str, None] = BaselineMode.PREVIOUS,
    output_directory: Union[str, os.PathLike] = ".",
    workers: int = 1,
) -> list[str]:
    """Render every input to ``file_NNNNNNNNN.png`` and return the names in index order.

    ``diff_baseline`` of ``None`` (or ``"none"``) disables highlighting;
    otherwise input ``i >= 1`` has its changed bytes against the previous or
    the first input outlined. Input 0 never has highlights. Frames written by
    a failed call are removed before the error propagates.
    """
    if not corpus:
        raise EmptyCorpus()
    mode = _baseline_mode(diff_baseline)
    if mode is not None and isinstance(style, Outline):
        style.check(layout)
    out = Path(output_directory)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoFailure(out, exc.strerror or str(exc)) from exc

    def job(pos: int) -> str:
        t = corpus[pos]
        changed = None
        if mode is not None and pos > 0:
            ref = corpus[pos - 1] if mode is BaselineMode.PREVIOUS else corpus[0]
            changed = changed_offsets(ref.payload, t.payload)
            # a shrunk input has changed offsets past its own end
            changed = changed[changed < len(t.payload)].tolist()
        data = encode_png(render_input(t, layout, changed, style))
        name = frame_filename(t.index)
        path = out / name
        try:
            path.write_bytes(data)
        except OSError as exc:
            raise IoFailure(path, exc.strerror or str(exc)) from exc
        written.append(path)
        return name

    names: list[str] = []
    written: list[Path] = []
    try:
        if workers > 1:
            with ThreadPoolExecutor(workers) as pool:
                for name in pool.map(job, range(len(corpus))):
                    names.append(name)
        else:
            for pos in range(len(corpus)):
                names.append(job(pos))
    except BaseException:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return names


def write_manifest(names: Sequence[str], output_directory) -> Path:
    path = Path(output_directory) / MANIFEST_NAME
    try:
        path.write_text(json.dumps(list(names), indent=1) + "\n")
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc
    return path
