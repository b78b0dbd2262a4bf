"""Binary file formats for run-length BWTs and LZ77 parses.

Both formats are a 4-byte magic, a version byte, a little-endian u64 record
count and fixed-width little-endian records.
"""

import struct

from .errors import FormatError, ValidationError

VERSION = 1
RLBWT_MAGIC = b"RLBW"
LZ77_MAGIC = b"LZ77"
NULL_SOURCE = 0xFFFFFFFFFFFFFFFF

_HEADER = struct.Struct("<4sBQ")
_RUN = struct.Struct("<QB")
_PHRASE = struct.Struct("<QQB")


def dump_rlbwt(runs):
    runs = list(runs)
    out = bytearray(_HEADER.pack(RLBWT_MAGIC, VERSION, len(runs)))
    for length, sym in runs:
        out += _RUN.pack(length, sym)
    return bytes(out)


def dump_lz77(parse):
    parse = list(parse)
    out = bytearray(_HEADER.pack(LZ77_MAGIC, VERSION, len(parse)))
    for src, length, sym in parse:
        out += _PHRASE.pack(NULL_SOURCE if src is None else src, length, sym)
    return bytes(out)


def sniff(data):
    """``"rlbwt"``, ``"lz77"`` or None for anything without a known header."""
    if len(data) >= 5 and data[4] == VERSION:
        if data[:4] == RLBWT_MAGIC:
            return "rlbwt"
        if data[:4] == LZ77_MAGIC:
            return "lz77"
    return None


def _records(data, magic, rec):
    if len(data) < _HEADER.size:
        raise FormatError(f"truncated header: {len(data)} of {_HEADER.size} bytes")
    got, version, count = _HEADER.unpack_from(data)
    if got != magic:
        raise FormatError(f"bad magic {got!r}, expected {magic!r}")
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    need = _HEADER.size + count * rec.size
    if len(data) < need:
        raise FormatError(f"truncated payload: {len(data)} of {need} bytes")
    if len(data) > need:
        raise FormatError(f"{len(data) - need} trailing bytes after {count} records")
    return rec.iter_unpack(data[_HEADER.size:])


def load_rlbwt(data):
    """Parse an RLBW file into ``(length, symbol)`` pairs."""
    runs = list(_records(data, RLBWT_MAGIC, _RUN))
    prev = None
    for k, (length, sym) in enumerate(runs):
        if length == 0:
            raise ValidationError(f"run {k} has length 0")
        if sym == prev:
            raise ValidationError(f"runs {k - 1} and {k} share symbol {sym}")
        prev = sym
    return runs


def load_lz77(data):
    """Parse an LZ77 file into ``(source or None, length, symbol)`` triples."""
    parse = []
    for k, (src, length, sym) in enumerate(_records(data, LZ77_MAGIC, _PHRASE)):
        src = None if src == NULL_SOURCE else src
        if (src is None) != (length == 0):
            raise ValidationError(f"phrase {k}: length 0 iff source is NULL")
        parse.append((src, length, sym))
    return parse


def load(data):
    kind = sniff(data)
    if kind == "rlbwt":
        return kind, load_rlbwt(data)
    if kind == "lz77":
        return kind, load_lz77(data)
    raise FormatError("not an RLBW or LZ77 file")
