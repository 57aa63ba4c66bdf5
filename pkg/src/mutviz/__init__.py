"""Byte-level visualization of fuzzer-generated test inputs."""

from .color import Rgb, byte_to_color, color_to_byte, color_to_hex_triplet, hex_triplet_to_color
from .corpus import (
    Directory,
    HexDump,
    TestInput,
    load_corpus,
    load_directory,
    make_corpus,
    parse_hex_dump,
    write_hex_dump,
)
from .diff import BaselineMode, DiffRecord, diff_inputs, diff_stream
from .mutgen import (
    ByteValueSweep,
    WalkingBitFlip,
    WalkingByteFlip,
    generate_demo_corpus,
    generate_stage,
)
from .patterns import (
    KByteShifting,
    PatternReport,
    PatternRun,
    SingleByteFixed,
    Unclassified,
    classify_window,
    detect_patterns,
    summarize_report,
)
from .render import (
    Frame,
    GridLayout,
    NoHighlight,
    Outline,
    decode_png,
    encode_png,
    frame_geometry,
    render_corpus,
    render_input,
)

__version__ = "0.1.0"
