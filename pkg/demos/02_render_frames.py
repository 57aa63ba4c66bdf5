"""
Rendering a corpus as numbered frames
=====================================

A campaign's test inputs, in generation order, become ``file_000000000.png``,
``file_000000001.png``, ... Flipping through them in an image viewer (or
stitching them into a video with an external tool) shows the input evolving.
"""

from pathlib import Path

from mutviz import GridLayout, Outline, parse_hex_dump, render_corpus
from mutviz.render import write_manifest

# A tiny hex dump: one input per line, two hex digits per byte.
dump = """\
3C613E68656C6C6F3C2F613E
3C613E68656C6C6F3C2F613E
3C613E68F56C6C6F3C2F613E
3C613E68F5936C6F3C2F613E
"""
corpus = parse_hex_dump(dump)

# Boxes are 12x12 pixels, 6 bytes per row. Bytes that changed since the
# previous input get a yellow outline.
layout = GridLayout(box_width_px=12, box_height_px=12, bytes_per_row=6, gutter_px=1)
out = Path("frames")
names = render_corpus(corpus, layout, Outline(), "previous", out)
write_manifest(names, out)
print("\n".join(names))
