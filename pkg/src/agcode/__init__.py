"""Decoder library for multipoint algebraic-geometry evaluation codes."""

from agcode.gf import GF
from agcode.codedata import CodeData, CodeDataError, fixture_path, list_fixtures
from agcode.precompute import PrecomputedCode, precompute
from agcode.decoder import DecodeResult, decode

__all__ = [
    "GF",
    "CodeData",
    "CodeDataError",
    "PrecomputedCode",
    "DecodeResult",
    "decode",
    "precompute",
    "fixture_path",
    "list_fixtures",
]
