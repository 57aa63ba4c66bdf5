"""Classify runs of seed-relative diffs into mutation patterns.

Three signatures are recognised:

* k-byte shifting: each input changes one contiguous window of ``k`` bytes,
  and the window start advances by a constant stride (>= 1) per input.
* single-byte fixed: each input changes only the same byte, and that byte's
  value differs between every pair of adjacent inputs in the run.
* everything else is unclassified.

Detection works on diffs against the first input (the seed). Against the
previous input a walking k-byte flip shows up as ``{i, i+k}`` instead of a
window, so those diffs are rejected.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional, Sequence, Union

from .corpus import TestInput
from .diff import DiffRecord
from .errors import BaselineModeMismatch, IndexGap

DEFAULT_MIN_RUN = 4


@dataclass(frozen=True)
class KByteShifting:
    k: int
    stride: int
    start_offset: int
    run_length: int


@dataclass(frozen=True)
class SingleByteFixed:
    offset: int
    run_length: int


@dataclass(frozen=True)
class Unclassified:
    first_index: int
    run_length: int


PatternClass = Union[KByteShifting, SingleByteFixed, Unclassified]

_CLASS_NAMES = {
    KByteShifting: "k_byte_shifting",
    SingleByteFixed: "single_byte_fixed",
    Unclassified: "unclassified",
}
_CLASSES = {v: k for k, v in _CLASS_NAMES.items()}


@dataclass(frozen=True)
class PatternRun:
    first: int  # input index, inclusive
    last: int  # input index, inclusive
    pattern: PatternClass


@dataclass(frozen=True)
class PatternReport:
    runs: tuple[PatternRun, ...]

    def classified(self) -> list[PatternRun]:
        return [r for r in self.runs if not isinstance(r.pattern, Unclassified)]

    def to_json(self) -> dict:
        runs = []
        for run in self.runs:
            entry = {"from": run.first, "to": run.last,
                     "class": _CLASS_NAMES[type(run.pattern)]}
            entry.update(asdict(run.pattern))
            runs.append(entry)
        return {"runs": runs}

    @classmethod
    def from_json(cls, obj: dict) -> "PatternReport":
        runs = []
        for entry in obj["runs"]:
            fields = {k: v for k, v in entry.items() if k not in ("from", "to", "class")}
            runs.append(PatternRun(entry["from"], entry["to"], _CLASSES[entry["class"]](**fields)))
        return cls(tuple(runs))


# JSON schema for the report, used by tests and available to consumers.
REPORT_SCHEMA = {
    "type": "object",
    "required": ["runs"],
    "additionalProperties": False,
    "properties": {
        "runs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to", "class", "run_length"],
                "properties": {
                    "from": {"type": "integer", "minimum": 1},
                    "to": {"type": "integer", "minimum": 1},
                    "class": {"enum": list(_CLASSES)},
                    "run_length": {"type": "integer", "minimum": 1},
                    "k": {"type": "integer", "minimum": 1},
                    "stride": {"type": "integer", "minimum": 1},
                    "start_offset": {"type": "integer", "minimum": 0},
                    "offset": {"type": "integer", "minimum": 0},
                    "first_index": {"type": "integer", "minimum": 1},
                },
            },
        }
    },
}


def classify_window(offsets: Sequence[int]) -> Optional[tuple[int, int]]:
    """Return ``(start, size)`` if the sorted offsets form one contiguous block."""
    if not offsets:
        return None
    size = len(offsets)
    if offsets[-1] - offsets[0] + 1 != size:
        return None
    return offsets[0], size


def _check_records(diffs: Sequence[DiffRecord]) -> None:
    for pos, rec in enumerate(diffs):
        if rec.from_index != 0:
            raise BaselineModeMismatch(
                f"record {rec.from_index}->{rec.to_index} is not relative to input 0"
            )
        if rec.to_index != pos + 1:
            raise IndexGap(f"expected a diff for input {pos + 1}, got input {rec.to_index}")


def _shifting_run(windows, p: int) -> int:
    """Length of the maximal k-byte shifting run starting at record ``p``."""
    if windows[p] is None or p + 1 >= len(windows) or windows[p + 1] is None:
        return 1
    start, k = windows[p]
    stride = windows[p + 1][0] - start
    if windows[p + 1][1] != k or stride < 1:
        return 1
    q = p + 1
    while q + 1 < len(windows):
        nxt = windows[q + 1]
        if nxt is None or nxt[1] != k or nxt[0] - windows[q][0] != stride:
            break
        q += 1
    return q - p + 1


def _fixed_run(diffs, payloads, p: int) -> int:
    """Length of the maximal single-byte fixed run starting at record ``p``."""
    first = diffs[p].changed_offsets
    if len(first) != 1:
        return 0
    offset = first[0]
    if offset >= len(payloads[p]):
        return 0
    q = p
    while q + 1 < len(diffs) and diffs[q + 1].changed_offsets == first:
        nxt = payloads[q + 1]
        if offset >= len(nxt) or nxt[offset] == payloads[q][offset]:
            break
        q += 1
    return q - p + 1


def detect_patterns(
    baseline_diffs: Sequence[DiffRecord],
    values: Sequence[TestInput],
    min_run: int = DEFAULT_MIN_RUN,
) -> PatternReport:
    """Segment seed-relative diffs into maximal pattern runs.

    ``baseline_diffs`` must be ``diff_stream(values, BaselineMode.FIRST)``:
    record ``j`` compares input 0 with input ``j + 1``. The scan is greedy
    left to right: at each record the longest single-byte fixed run is tried
    first, then the longest shifting run; whichever reaches ``min_run`` is
    taken whole. Records matching neither are merged into unclassified runs.
    Every input ``1..n-1`` lands in exactly one run.
    """
    if min_run < 2:
        raise ValueError("min_run must be >= 2")
    _check_records(baseline_diffs)
    if len(values) != len(baseline_diffs) + 1:
        raise IndexGap(f"{len(baseline_diffs)} diffs do not match a corpus of {len(values)} inputs")

    # payloads[j] belongs to the input that record j describes
    payloads = [t.payload for t in values[1:]]
    windows = [classify_window(d.changed_offsets) for d in baseline_diffs]
    runs: list[PatternRun] = []
    pending = None  # first record position of an open unclassified run

    def close_pending(end: int) -> None:
        nonlocal pending
        if pending is not None:
            runs.append(PatternRun(pending + 1, end, Unclassified(pending + 1, end - pending)))
            pending = None

    p, n = 0, len(baseline_diffs)
    while p < n:
        length = _fixed_run(baseline_diffs, payloads, p)
        if length >= min_run:
            close_pending(p)
            pattern = SingleByteFixed(baseline_diffs[p].changed_offsets[0], length)
        else:
            length = _shifting_run(windows, p)
            if length < min_run:
                if pending is None:
                    pending = p
                p += 1
                continue
            close_pending(p)
            start, k = windows[p]
            pattern = KByteShifting(k, windows[p + 1][0] - start, start, length)
        runs.append(PatternRun(p + 1, p + length, pattern))
        p += length
    close_pending(n)
    return PatternReport(tuple(runs))


def describe_run(run: PatternRun) -> str:
    pat = run.pattern
    head = f"inputs {run.first}..{run.last}: "
    if isinstance(pat, KByteShifting):
        return head + f"{pat.k}-byte shifting window, stride {pat.stride}, from offset {pat.start_offset}"
    if isinstance(pat, SingleByteFixed):
        return head + f"single-byte fixed at offset {pat.offset}"
    return head + "unclassified"


def summarize_report(report: PatternReport) -> tuple[str, str]:
    """Return ``(text, json_text)`` renderings of a report."""
    text = "".join(describe_run(r) + "\n" for r in report.runs)
    return text, json.dumps(report.to_json(), indent=1)
