"""Exception types shared by the library and the CLI."""


class AlphabetError(ValueError):
    """Raw text contains a reserved terminator byte."""

    def __init__(self, offset, byte):
        super().__init__(f"reserved byte 0x{byte:02x} at offset {offset}")
        self.offset = offset
        self.byte = byte


class FormatError(ValueError):
    """Bad magic, unsupported version or truncated file."""


class ValidationError(ValueError):
    """Well-framed payload whose content violates its invariants."""


class MalformedParseError(ValidationError):
    """LZ77 triples that do not decode to a terminated text."""


class MalformedRunsError(ValidationError):
    """Run list that is not the run-length BWT of a terminated text."""


class CorruptIndexError(RuntimeError):
    """Index state that cannot correspond to any BWT."""


class PreconditionError(ValueError):
    """Caller broke an ordering contract of a dynamic structure."""
