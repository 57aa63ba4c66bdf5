"""Deterministic AFL-style mutation stages for building fixture corpora.

These reproduce the shape of AFL's deterministic stages without running a
fuzzer. Which real AFL stages produced the shifting and fixed patterns seen
in practice is a reconstruction: walking byte flips give k-byte shifting
windows, and a value sweep over one byte gives a single fixed changing byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .corpus import TestInput
from .errors import OffsetOutOfRange, SeedTooShort


@dataclass(frozen=True)
class WalkingBitFlip:
    bits: int

    def __post_init__(self):
        if self.bits not in (1, 2, 4):
            raise ValueError(f"bit flip width must be 1, 2 or 4, not {self.bits}")


@dataclass(frozen=True)
class WalkingByteFlip:
    k: int

    def __post_init__(self):
        if self.k not in (1, 2, 4):
            raise ValueError(f"byte flip width must be 1, 2 or 4, not {self.k}")


@dataclass(frozen=True)
class ByteValueSweep:
    offset: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(set(self.values)) != len(self.values):
            raise ValueError("sweep values must be pairwise distinct")
        if any(not 0 <= v <= 0xFF for v in self.values):
            raise ValueError("sweep values must be bytes")
        if self.offset < 0:
            raise OffsetOutOfRange(f"negative sweep offset {self.offset}")


MutationStage = Union[WalkingBitFlip, WalkingByteFlip, ByteValueSweep]


def _mutants(seed: bytes, stage: MutationStage) -> list[bytes]:
    n = len(seed)
    out = []
    if isinstance(stage, WalkingByteFlip):
        if n < stage.k:
            raise SeedTooShort(f"seed of {n} bytes is shorter than a {stage.k}-byte flip")
        for i in range(n - stage.k + 1):
            buf = bytearray(seed)
            for j in range(i, i + stage.k):
                buf[j] ^= 0xFF
            out.append(bytes(buf))
    elif isinstance(stage, WalkingBitFlip):
        nbits = 8 * n
        if nbits < stage.bits:
            raise SeedTooShort(f"seed of {n} bytes is too short for a {stage.bits}-bit flip")
        for i in range(nbits - stage.bits + 1):
            buf = bytearray(seed)
            for j in range(i, i + stage.bits):
                buf[j >> 3] ^= 0x80 >> (j & 7)
            out.append(bytes(buf))
    elif isinstance(stage, ByteValueSweep):
        if stage.offset >= n:
            raise OffsetOutOfRange(f"sweep offset {stage.offset} outside seed of {n} bytes")
        if seed[stage.offset] in stage.values:
            raise ValueError(
                f"sweep value {seed[stage.offset]:#04x} equals the seed byte at offset {stage.offset}"
            )
        for v in stage.values:
            buf = bytearray(seed)
            buf[stage.offset] = v
            out.append(bytes(buf))
    else:
        raise TypeError(f"unknown mutation stage {stage!r}")
    return out


def generate_stage(seed: bytes, stage: MutationStage) -> list[TestInput]:
    """The seed at index 0 followed by every mutant of one stage."""
    seed = bytes(seed)
    if not seed:
        raise SeedTooShort("empty seed")
    return [TestInput(i, p) for i, p in enumerate([seed] + _mutants(seed, stage))]


def generate_demo_corpus(seed: bytes, stages: Sequence[MutationStage]) -> list[TestInput]:
    seed = bytes(seed)
    if not seed:
        raise SeedTooShort("empty seed")
    payloads = [seed]
    for stage in stages:
        payloads.extend(_mutants(seed, stage))
    return [TestInput(i, p) for i, p in enumerate(payloads)]


def parse_stage(token: str) -> MutationStage:
    """Parse ``bitflip:N``, ``byteflip:N`` or ``sweep:OFFSET:HH,HH,...``.

    Sweep values are hex bytes; the offset is decimal.
    """
    kind, _, rest = token.partition(":")
    try:
        if kind == "bitflip":
            return WalkingBitFlip(int(rest))
        if kind == "byteflip":
            return WalkingByteFlip(int(rest))
        if kind == "sweep":
            offset, _, vals = rest.partition(":")
            if not vals:
                raise ValueError("sweep needs at least one value")
            return ByteValueSweep(int(offset), tuple(int(v, 16) for v in vals.split(",")))
    except (ValueError, IndexError) as exc:
        raise ValueError(f"bad stage {token!r}: {exc}") from None
    raise ValueError(f"unknown stage {token!r} (expected bitflip:N, byteflip:N or sweep:OFF:HH,...)")
