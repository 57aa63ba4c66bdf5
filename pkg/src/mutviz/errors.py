"""Exception types raised across mutviz."""


class MutvizError(Exception):
    """Base class for every error raised by this package."""


# -- ingestion ---------------------------------------------------------------

class CorpusError(MutvizError, ValueError):
    """A corpus could not be ingested."""


class OddDigitCount(CorpusError):
    def __init__(self, line: int):
        self.line = line
        super().__init__(f"line {line}: odd number of hex digits")


class InvalidHexDigit(CorpusError):
    def __init__(self, line: int, column: int, char: str = ""):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: invalid hex digit {char!r}")


class EmptyCorpus(CorpusError):
    def __init__(self, where: str = ""):
        msg = "corpus contains no test inputs"
        super().__init__(f"{msg}: {where}" if where else msg)


class EmptyFile(CorpusError):
    def __init__(self, filename: str):
        self.filename = filename
        super().__init__(f"{filename}: zero-length test input")


class IoFailure(MutvizError, OSError):
    def __init__(self, path, reason: str = ""):
        self.path = str(path)
        super().__init__(f"{path}: {reason}" if reason else str(path))


# -- color / render ----------------------------------------------------------

class NotARedShade(MutvizError, ValueError):
    """Color has a nonzero green or blue channel."""


class OffsetOutOfRange(MutvizError, IndexError):
    pass


class EncodingFailure(MutvizError):
    pass


# -- diff / patterns ---------------------------------------------------------

class CorpusTooSmall(MutvizError, ValueError):
    pass


class BaselineModeMismatch(MutvizError, ValueError):
    pass


class IndexGap(MutvizError, ValueError):
    pass


# -- mutgen ------------------------------------------------------------------

class SeedTooShort(MutvizError, ValueError):
    pass
