import pytest
from hypothesis import given, settings, strategies as st

from mutviz.corpus import (
    Directory,
    HexDump,
    TestInput,
    load_corpus,
    load_directory,
    make_corpus,
    parse_hex_dump,
    save_hex_dump,
    write_directory,
    write_hex_dump,
)
from mutviz.errors import EmptyCorpus, EmptyFile, InvalidHexDigit, IoFailure, OddDigitCount

corpora = st.lists(st.binary(min_size=1, max_size=4096), min_size=1, max_size=100).map(make_corpus)


def test_parse_single_lines():
    assert parse_hex_dump("FF00")[0].payload == b"\xff\x00"
    assert parse_hex_dump("7a")[0].payload == b"\x7a"


def test_parse_ordering():
    corpus = parse_hex_dump("00\n01\n02")
    assert [t.index for t in corpus] == [0, 1, 2]
    assert [t.payload for t in corpus] == [b"\x00", b"\x01", b"\x02"]


def test_blank_lines_skipped():
    corpus = parse_hex_dump("\nAA\n\n  \nBB\n\n")
    assert [(t.index, t.payload) for t in corpus] == [(0, b"\xaa"), (1, b"\xbb")]


def test_crlf_tolerated():
    assert [t.payload for t in parse_hex_dump("AA\r\nBB\r\n")] == [b"\xaa", b"\xbb"]


def test_invalid_digit():
    with pytest.raises(InvalidHexDigit) as exc:
        parse_hex_dump("ZZ")
    assert (exc.value.line, exc.value.column) == (1, 1)
    with pytest.raises(InvalidHexDigit) as exc:
        parse_hex_dump("00\n\n0a0g")
    assert (exc.value.line, exc.value.column) == (3, 4)


def test_odd_digits():
    with pytest.raises(OddDigitCount) as exc:
        parse_hex_dump("00\nABC\n")
    assert exc.value.line == 2
    assert "line 2" in str(exc.value)


@pytest.mark.parametrize("text", ["", "\n\n", "   \n"])
def test_empty_dump(text):
    with pytest.raises(EmptyCorpus):
        parse_hex_dump(text)


def test_write():
    assert write_hex_dump([TestInput(0, b"\xff\x00")]) == "FF00\n"
    assert write_hex_dump([TestInput(0, b"\x0a")]) == "0A\n"
    with pytest.raises(EmptyCorpus):
        write_hex_dump([])


def test_write_orders_by_index():
    assert write_hex_dump([TestInput(1, b"\x01"), TestInput(0, b"\x00")]) == "00\n01\n"


def test_empty_payload_rejected():
    with pytest.raises(ValueError):
        TestInput(0, b"")


@settings(max_examples=50, deadline=None)
@given(corpora)
def test_round_trip(corpus):
    assert parse_hex_dump(write_hex_dump(corpus)) == corpus


@settings(max_examples=50, deadline=None)
@given(corpora)
def test_case_insensitive(corpus):
    text = write_hex_dump(corpus)
    assert parse_hex_dump(text.lower()) == parse_hex_dump(text)


def test_unterminated_last_line():
    assert parse_hex_dump("AA\nBB") == parse_hex_dump("AA\nBB\n")


def test_directory_order(tmp_path):
    (tmp_path / "b.bin").write_bytes(b"\x02")
    (tmp_path / "a.bin").write_bytes(b"\x01")
    corpus = load_directory(Directory(tmp_path))
    assert [(t.index, t.payload) for t in corpus] == [(0, b"\x01"), (1, b"\x02")]


def test_directory_order_is_lexicographic(tmp_path):
    (tmp_path / "10").write_bytes(b"\x01")
    (tmp_path / "2").write_bytes(b"\x02")
    assert [t.payload for t in load_directory(tmp_path)] == [b"\x01", b"\x02"]


def test_directory_ignores_subdirs(tmp_path):
    (tmp_path / "sub").mkdir()
    (tmp_path / "x").write_bytes(b"\x07")
    assert len(load_directory(tmp_path)) == 1


def test_directory_errors(tmp_path):
    with pytest.raises(EmptyCorpus):
        load_directory(tmp_path)
    (tmp_path / "zero").write_bytes(b"")
    with pytest.raises(EmptyFile) as exc:
        load_directory(tmp_path)
    assert exc.value.filename == "zero"
    with pytest.raises(IoFailure):
        load_directory(tmp_path / "missing")


def test_directory_round_trip(tmp_path, rng):
    corpus = make_corpus(rng.randbytes(rng.randint(1, 64)) for _ in range(12))
    write_directory(corpus, tmp_path / "d")
    assert load_corpus(Directory(tmp_path / "d")) == corpus


def test_dump_file_round_trip(tmp_path):
    corpus = make_corpus([b"\x00\x01", b"\xfe"])
    save_hex_dump(corpus, tmp_path / "tests_generated")
    assert (tmp_path / "tests_generated").read_text() == "0001\nFE\n"
    assert load_corpus(HexDump(tmp_path / "tests_generated")) == corpus
    with pytest.raises(IoFailure):
        load_corpus(HexDump(tmp_path / "nope"))
