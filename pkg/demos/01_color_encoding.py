"""
Byte colors
===========

Every byte of a test input is shown as one box. The byte value becomes the
red channel of the box color and green/blue stay zero, so ``0x7A`` turns
into the color code ``7A0000``. Low bytes are near black, high bytes bright
red.
"""

from mutviz import byte_to_color, color_to_byte, color_to_hex_triplet

for value in (0x00, 0x3C, 0x7A, 0xFF):
    color = byte_to_color(value)
    print(f"byte {value:02X} -> {color_to_hex_triplet(color)}  {color}")

# the mapping is invertible
assert all(color_to_byte(byte_to_color(v)) == v for v in range(256))

# A strip of all 256 shades, one box each, written as a PNG
from pathlib import Path

from mutviz import GridLayout, TestInput, encode_png, render_input

frame = render_input(TestInput(0, bytes(range(256))), GridLayout(8, 8, 32, 1))
Path("shades.png").write_bytes(encode_png(frame))
print("wrote shades.png", frame.width_px, "x", frame.height_px)
