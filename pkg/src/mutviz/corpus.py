"""Loading and saving ordered test-input corpora.

Two sources are supported: a hex dump (one test input per line, two hex
digits per byte) and a directory of raw input files read in lexicographic
filename order, which matches generation order for zero-padded AFL queue
names such as ``id:000123,...``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import EmptyCorpus, EmptyFile, InvalidHexDigit, IoFailure, OddDigitCount

_HEX_LINE = re.compile(r"[0-9A-Fa-f]*")
_NOT_HEX = re.compile(r"[^0-9A-Fa-f]")


@dataclass(frozen=True)
class TestInput:
    """One generated test case."""

    __test__ = False  # keep pytest from collecting this class

    index: int
    payload: bytes

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"negative index {self.index}")
        if len(self.payload) < 1:
            raise ValueError(f"test input {self.index} has an empty payload")
        if not isinstance(self.payload, bytes):
            object.__setattr__(self, "payload", bytes(self.payload))

    def __len__(self):
        return len(self.payload)


@dataclass(frozen=True)
class HexDump:
    path: Path


@dataclass(frozen=True)
class Directory:
    path: Path


CorpusSource = Union[HexDump, Directory]


def make_corpus(payloads: Iterable[bytes]) -> list[TestInput]:
    """Wrap raw payloads as a densely indexed corpus."""
    return [TestInput(i, bytes(p)) for i, p in enumerate(payloads)]


def parse_hex_dump(text: str | Iterable[str]) -> list[TestInput]:
    """Parse hex dump text into test inputs.

    Blank lines are skipped (they do not consume an index) so a dump cut off
    mid-campaign still loads. Either letter case is accepted. Error line and
    column numbers are 1-based and count physical lines.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    corpus = []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        if not _HEX_LINE.fullmatch(line):
            bad = _NOT_HEX.search(line)
            raise InvalidHexDigit(lineno, bad.start() + 1, bad.group())
        if len(line) % 2:
            raise OddDigitCount(lineno)
        corpus.append(TestInput(len(corpus), bytes.fromhex(line)))
    if not corpus:
        raise EmptyCorpus()
    return corpus


def write_hex_dump(corpus: Sequence[TestInput]) -> str:
    if not corpus:
        raise EmptyCorpus()
    ordered = sorted(corpus, key=lambda t: t.index)
    return "".join(t.payload.hex().upper() + "\n" for t in ordered)


def load_hex_dump(path) -> list[TestInput]:
    path = Path(path)
    try:
        with open(path, encoding="ascii", errors="replace", newline="") as fh:
            return parse_hex_dump(fh)
    except EmptyCorpus:
        raise EmptyCorpus(str(path)) from None
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc


def save_hex_dump(corpus: Sequence[TestInput], path) -> None:
    text = write_hex_dump(corpus)
    try:
        Path(path).write_text(text, encoding="ascii", newline="")
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc


def load_directory(source: Directory | str | os.PathLike) -> list[TestInput]:
    """Read every regular file of a directory, ordered by filename."""
    path = Path(source.path if isinstance(source, Directory) else source)
    try:
        files = sorted(
            (e for e in os.scandir(path) if e.is_file()), key=lambda e: e.name
        )
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc
    if not files:
        raise EmptyCorpus(str(path))
    corpus = []
    for entry in files:
        try:
            with open(entry.path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise IoFailure(entry.path, exc.strerror or str(exc)) from exc
        if not data:
            raise EmptyFile(entry.name)
        corpus.append(TestInput(len(corpus), data))
    return corpus


def write_directory(corpus: Sequence[TestInput], path) -> list[str]:
    """Write each input as a raw file; names sort in index order."""
    path = Path(path)
    names = []
    try:
        path.mkdir(parents=True, exist_ok=True)
        for t in sorted(corpus, key=lambda t: t.index):
            name = "input_%09d.bin" % t.index
            (path / name).write_bytes(t.payload)
            names.append(name)
    except OSError as exc:
        raise IoFailure(exc.filename or path, exc.strerror or str(exc)) from exc
    return names


def load_corpus(source: CorpusSource) -> list[TestInput]:
    if isinstance(source, HexDump):
        return load_hex_dump(source.path)
    if isinstance(source, Directory):
        return load_directory(source)
    raise TypeError(f"unknown corpus source {source!r}")


def source_for(path) -> CorpusSource:
    """Pick the source variant from what is on disk."""
    path = Path(path)
    return Directory(path) if path.is_dir() else HexDump(path)
