"""Command-line front end.

Exit codes: 0 success, 1 I/O error, 2 alphabet or validation error,
3 format error.
"""

import argparse
import os
import sys

from . import baselines, converters, formats
from .errors import AlphabetError, CorruptIndexError, FormatError, ValidationError

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_FORMAT = 0, 1, 2, 3


def _read(path):
    with open(path, "rb") as fh:
        return fh.read()


def _write(path, data):
    with open(path, "wb") as fh:
        fh.write(data)


def _log(**fields):
    print(" ".join(f"{k}={v}" for k, v in fields.items()), file=sys.stderr)


def cmd_compress(args):
    text = baselines.wrap_text(_read(args.input))
    if args.format == "rlbwt":
        runs = baselines.naive_rlbwt(text)
        _write(args.output, formats.dump_rlbwt(runs))
        _log(n=len(text), r=len(runs))
    else:
        parse = baselines.naive_lz77(text)
        _write(args.output, formats.dump_lz77(parse))
        _log(n=len(text), z=len(parse))
    return EXIT_OK


def cmd_convert(args):
    kind, payload = formats.load(_read(args.input))
    if kind == "rlbwt":
        stats = converters.ConversionStats()
        parse = converters.rlbwt_to_lz77(payload, stats)
        _write(args.output, formats.dump_lz77(parse))
        _log(n=stats.n, r=len(payload), z=len(parse))
    else:
        stats = converters.ConversionStats()
        runs = converters.lz77_to_rlbwt(payload, stats)
        _write(args.output, formats.dump_rlbwt(runs))
        _log(n=stats.n, z=len(payload), r=len(runs))
    return EXIT_OK


def cmd_decompress(args):
    kind, payload = formats.load(_read(args.input))
    if kind == "rlbwt":
        text = baselines.rlbwt_decode(payload)
    else:
        text = baselines.lz77_decode(payload)
    try:
        baselines.check_text(text)
    except ValueError as exc:
        raise ValidationError(f"decoded text is not terminated properly: {exc}") from None
    _write(args.output, text[1:-1])
    return EXIT_OK


def cmd_stats(args):
    data = _read(args.input)
    kind = formats.sniff(data)
    if kind == "rlbwt":
        runs = formats.load_rlbwt(data)
        n = sum(length for length, _ in runs)
        r = len(runs)
        z = len(converters.rlbwt_to_lz77(runs))
    elif kind == "lz77":
        parse = formats.load_lz77(data)
        n = sum(length + 1 for _, length, _ in parse)
        z = len(parse)
        r = len(converters.lz77_to_rlbwt(parse))
    else:
        text = baselines.wrap_text(data)
        n = len(text)
        r = len(baselines.naive_rlbwt(text))
        z = len(baselines.naive_lz77(text))
    print(f"n={n}")
    print(f"r={r}")
    print(f"z={z}")
    print(f"n_over_r={n / r:.4f}")
    print(f"n_over_z={n / z:.4f}")
    return EXIT_OK


def cmd_gen(args):
    seed = int(os.environ.get("TOOL_SEED", "0"))
    _write(args.output, baselines.gen_corpus(args.kind, args.size, seed))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rlbwt-lz77",
        description="Convert between run-length BWT and LZ77 in compressed space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="build an RLBW or LZ77 file from plain text")
    p.add_argument("--format", choices=("rlbwt", "lz77"), required=True)
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("convert", help="RLBW <-> LZ77, direction taken from the magic")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("decompress", help="recover the plain text")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("stats", help="print n, r, z and ratios")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", help="write a test corpus text (seed from TOOL_SEED)")
    p.add_argument("kind", choices=("random", "periodic", "fibonacci", "mutated-repeats"))
    p.add_argument("size", type=int)
    p.add_argument("output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AlphabetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (ValidationError, CorruptIndexError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
