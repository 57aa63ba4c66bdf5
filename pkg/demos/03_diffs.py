"""
Changed bytes between inputs
============================

Diffs are positional. ``previous`` compares each input with the one before
it, ``first`` compares each with the original seed. A walking 2-byte flip
looks quite different under the two baselines.
"""

from mutviz import BaselineMode, WalkingByteFlip, diff_stream, generate_stage

corpus = generate_stage(b"<doc/>", WalkingByteFlip(2))

for mode in BaselineMode:
    print(mode.value)
    for rec in diff_stream(corpus, mode):
        print(f"  {rec.from_index} -> {rec.to_index}: {list(rec.changed_offsets)}")

# Against the seed the changed set is a clean sliding window {i, i+1};
# against the previous input it is the restored pair plus the new one.
