"""Positional byte diffs between test inputs.

Offsets are compared position by position; no alignment is attempted. When
lengths differ, every offset past the shorter payload counts as changed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .corpus import TestInput
from .errors import CorpusTooSmall


class BaselineMode(enum.Enum):
    PREVIOUS = "previous"
    FIRST = "first"


@dataclass(frozen=True)
class DiffRecord:
    from_index: int
    to_index: int
    changed_offsets: tuple[int, ...]
    length_from: int
    length_to: int

    def to_json(self) -> dict:
        return {
            "from": self.from_index,
            "to": self.to_index,
            "changed": list(self.changed_offsets),
            "len_from": self.length_from,
            "len_to": self.length_to,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DiffRecord":
        return cls(obj["from"], obj["to"], tuple(obj["changed"]),
                   obj["len_from"], obj["len_to"])


def changed_offsets(a: bytes, b: bytes) -> np.ndarray:
    """Sorted offsets where ``a`` and ``b`` differ, as an int64 array."""
    n = min(len(a), len(b))
    x = np.frombuffer(a, dtype=np.uint8, count=n)
    y = np.frombuffer(b, dtype=np.uint8, count=n)
    same_len = np.flatnonzero(x != y)
    if len(a) == len(b):
        return same_len
    return np.concatenate([same_len, np.arange(n, max(len(a), len(b)))])


def diff_inputs(a: TestInput, b: TestInput) -> DiffRecord:
    offsets = changed_offsets(a.payload, b.payload)
    return DiffRecord(a.index, b.index, tuple(offsets.tolist()), len(a.payload), len(b.payload))


def diff_stream(corpus: Sequence[TestInput], mode: BaselineMode = BaselineMode.PREVIOUS) -> list[DiffRecord]:
    """Diff every input after the first against the chosen baseline.

    ``PREVIOUS`` pairs ``(i-1, i)``; ``FIRST`` pairs ``(0, i)``.
    """
    if len(corpus) < 2:
        raise CorpusTooSmall(f"need at least 2 inputs to diff, got {len(corpus)}")
    mode = BaselineMode(mode)
    if mode is BaselineMode.FIRST:
        return [diff_inputs(corpus[0], t) for t in corpus[1:]]
    return [diff_inputs(corpus[i - 1], corpus[i]) for i in range(1, len(corpus))]
