"""Command-line entry point: ``mutviz {convert,render,detect,gen}``.

Exit codes: 0 success, 2 bad input or arguments, 3 I/O failure, 4 corpus
too small for the requested analysis.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import corpus as corpus_mod
from .diff import BaselineMode, diff_stream
from .errors import CorpusError, CorpusTooSmall, IoFailure, MutvizError, SeedTooShort
from .mutgen import generate_demo_corpus, parse_stage
from .patterns import DEFAULT_MIN_RUN, detect_patterns, summarize_report
from .render import GridLayout, NoHighlight, Outline, render_corpus, write_manifest

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_SEMANTIC = 4

_DEFAULT_LAYOUT = GridLayout()


class CLIError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _box(text: str) -> tuple[int, int]:
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}") from None
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("box dimensions must be >= 1")
    return w, h


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mutviz",
        description="Visualize byte-level mutations in fuzzer-generated test inputs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def common(p, out_help):
        p.add_argument("--input", required=True, type=Path,
                       help="hex dump file or directory of raw input files")
        p.add_argument("--out", type=Path, required=True, help=out_help)
        p.add_argument("--quiet", action="store_true", help="suppress progress output")

    p = sub.add_parser("convert", help="convert between hex dump and directory corpora",
                       description="Convert a directory of inputs to a hex dump, or a hex dump to a directory.")
    common(p, "output path: a dump file when --input is a directory, else a directory")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("render", help="render each input as a PNG frame",
                       description="Render every input to file_NNNNNNNNN.png plus manifest.json.")
    common(p, "output directory for frames (created if absent)")
    p.add_argument("--box", type=_box, metavar="WxH",
                   default=f"{_DEFAULT_LAYOUT.box_width_px}x{_DEFAULT_LAYOUT.box_height_px}",
                   help="box size in pixels (default: %(default)s)")
    p.add_argument("--bpr", type=_positive, metavar="N", default=_DEFAULT_LAYOUT.bytes_per_row,
                   help="bytes per row (default: %(default)s)")
    p.add_argument("--gutter", type=_non_negative, metavar="N", default=_DEFAULT_LAYOUT.gutter_px,
                   help="gutter between boxes in pixels (default: %(default)s)")
    p.add_argument("--diff", choices=["previous", "first", "none"], default="previous",
                   help="baseline for change highlighting (default: %(default)s)")
    p.add_argument("--highlight", choices=["outline", "none"], default="outline",
                   help="how changed bytes are marked (default: %(default)s)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("detect", help="classify mutation patterns",
                       description="Diff inputs against the first one and report mutation pattern runs.")
    common(p, "path of the JSON pattern report")
    p.add_argument("--min-run", type=_positive, metavar="N", default=DEFAULT_MIN_RUN,
                   help="minimum run length to classify, >= 2 (default: %(default)s)")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("gen", help="generate a fixture corpus from mutation stages",
                       description="Apply deterministic mutation stages to a seed and write a hex dump.")
    p.add_argument("--seed", required=True, type=Path, help="seed file (raw bytes, non-empty)")
    p.add_argument("--stage", action="append", default=[], metavar="SPEC",
                   help="stage spec, repeatable: bitflip:N, byteflip:N (N in 1,2,4) "
                        "or sweep:OFFSET:HH,HH,... (hex values)")
    p.add_argument("--out", type=Path, help="output dump path (default: standard output)")
    p.add_argument("--quiet", action="store_true", help="suppress progress output")
    p.set_defaults(func=cmd_gen, parser=p)
    return parser


def _load(path: Path):
    if not path.exists():
        raise CLIError(f"{path}: no such file or directory", EXIT_INPUT)
    return corpus_mod.load_corpus(corpus_mod.source_for(path))


def _say(args, msg: str) -> None:
    if not args.quiet:
        print(msg)


def cmd_convert(args) -> int:
    inputs = _load(args.input)
    if args.input.is_dir():
        corpus_mod.save_hex_dump(inputs, args.out)
    else:
        corpus_mod.write_directory(inputs, args.out)
    _say(args, f"converted {len(inputs)} inputs")
    return EXIT_OK


def cmd_render(args) -> int:
    inputs = _load(args.input)
    layout = GridLayout(box_width_px=args.box[0], box_height_px=args.box[1],
                        bytes_per_row=args.bpr, gutter_px=args.gutter)
    style = Outline() if args.highlight == "outline" else NoHighlight()
    if isinstance(style, Outline):
        try:
            style.check(layout)
        except ValueError as exc:
            raise CLIError(str(exc), EXIT_INPUT) from None
    started = time.perf_counter()
    names = render_corpus(inputs, layout, style, args.diff, args.out)
    write_manifest(names, args.out)
    elapsed = time.perf_counter() - started
    _say(args, f"rendered {len(names)} frames to {args.out}")
    if not args.quiet:
        print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK


def cmd_detect(args) -> int:
    if args.min_run < 2:
        raise CLIError("--min-run must be >= 2", EXIT_INPUT)
    inputs = _load(args.input)
    diffs = diff_stream(inputs, BaselineMode.FIRST)
    report = detect_patterns(diffs, inputs, args.min_run)
    text, json_text = summarize_report(report)
    try:
        args.out.write_text(json_text + "\n")
    except OSError as exc:
        raise IoFailure(args.out, exc.strerror or str(exc)) from exc
    if not args.quiet:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        seed = args.seed.read_bytes()
    except OSError as exc:
        raise CLIError(f"{args.seed}: {exc.strerror or exc}", EXIT_INPUT) from None
    if not seed:
        raise CLIError(f"{args.seed}: empty seed", EXIT_INPUT)
    try:
        stages = [parse_stage(tok) for tok in args.stage]
        inputs = generate_demo_corpus(seed, stages)
    except (ValueError, IndexError, SeedTooShort) as exc:
        args.parser.error(str(exc))
    text = corpus_mod.write_hex_dump(inputs)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        args.out.write_text(text)
    except OSError as exc:
        raise IoFailure(args.out, exc.strerror or str(exc)) from exc
    _say(args, f"generated {len(inputs)} inputs")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        code, msg = exc.exit_code, str(exc)
    except CorpusTooSmall as exc:
        code, msg = EXIT_SEMANTIC, str(exc)
    except CorpusError as exc:
        code, msg = EXIT_INPUT, str(exc)
    except IoFailure as exc:
        code, msg = EXIT_IO, str(exc)
    except MutvizError as exc:
        code, msg = EXIT_INPUT, str(exc)
    print(f"mutviz {args.command}: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
