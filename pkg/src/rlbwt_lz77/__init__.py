"""Compressed-space conversion between run-length BWT and LZ77."""

from .baselines import gen_corpus, lz77_decode, naive_bwt, naive_lz77, naive_rlbwt, rlbwt_decode, wrap_text
from .converters import ConversionStats, lz77_to_rlbwt, lz_factorize, reverse_rlbwt, rlbwt_to_lz77
from .dyn_function import DynFunction, DynPermutation
from .dynamic_strings import GapBitvector, RunLengthString
from .rlbwt_index import EOT, TERM, RLBWTIndex

__all__ = [
    "ConversionStats",
    "DynFunction",
    "DynPermutation",
    "EOT",
    "GapBitvector",
    "RLBWTIndex",
    "RunLengthString",
    "TERM",
    "gen_corpus",
    "lz77_decode",
    "lz77_to_rlbwt",
    "lz_factorize",
    "naive_bwt",
    "naive_lz77",
    "naive_rlbwt",
    "reverse_rlbwt",
    "rlbwt_decode",
    "rlbwt_to_lz77",
    "wrap_text",
]
