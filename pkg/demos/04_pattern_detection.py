"""
Detecting mutation patterns
===========================

Deterministic fuzzing stages leave recognisable traces: a 2- or 4-byte window
sliding one byte per input, or one byte taking a new value on every input.
Here we build a corpus from three fixture stages and let the detector find
them again. The stage-to-pattern mapping is our reconstruction of what
produces these traces in AFL.
"""

import random

from mutviz import (
    BaselineMode,
    ByteValueSweep,
    WalkingByteFlip,
    detect_patterns,
    diff_stream,
    generate_demo_corpus,
    summarize_report,
)

rng = random.Random(1)
seed = rng.randbytes(64)
values = [v for v in (0x00, 0x41, 0x7F, 0x80, 0xFF, 0x20) if v != seed[10]][:5]
corpus = generate_demo_corpus(
    seed, [WalkingByteFlip(2), WalkingByteFlip(4), ByteValueSweep(10, values)]
)

report = detect_patterns(diff_stream(corpus, BaselineMode.FIRST), corpus, min_run=4)
text, json_text = summarize_report(report)
print(text)
