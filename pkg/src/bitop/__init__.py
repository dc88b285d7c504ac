"""Bitopological spaces as B-valued topological spaces on finite carriers."""

from .bsets import BSet, Carrier, parse_bset, sub
from .bvals import BOT, FF, TOP, TT, BVal
from .catalog import CATALOG
from .separation import classify
from .spaces import BSpace, format_space, parse_space

__all__ = [
    "BOT",
    "BSet",
    "BSpace",
    "BVal",
    "CATALOG",
    "Carrier",
    "FF",
    "TOP",
    "TT",
    "classify",
    "format_space",
    "parse_bset",
    "parse_space",
    "sub",
]
