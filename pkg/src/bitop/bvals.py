"""The four-element Boolean algebra B = {0, ff, tt, 1}.

Elements are encoded as two-bit integers: bit 0 records "at least tt", bit 1
records "at least ff".  Under this encoding B is the product 2 x 2, so meet,
join and negation are bitwise and every operation is a total table lookup.
"""

from __future__ import annotations

import enum
from functools import reduce
from typing import Iterable


class BVal(enum.IntEnum):
    BOT = 0
    TT = 1
    FF = 2
    TOP = 3

    def __str__(self) -> str:
        return _TOKENS[self]

    def __invert__(self) -> "BVal":
        return neg(self)

    def __and__(self, other):
        if isinstance(other, BVal):
            return meet(self, other)
        return NotImplemented

    def __or__(self, other):
        if isinstance(other, BVal):
            return join(self, other)
        return NotImplemented

    __rand__ = __and__
    __ror__ = __or__

    @classmethod
    def parse(cls, token: str) -> "BVal":
        try:
            return _BY_TOKEN[token]
        except KeyError:
            raise ValueError(f"not a B value: {token!r}") from None


BOT, TT, FF, TOP = BVal.BOT, BVal.TT, BVal.FF, BVal.TOP
ALL = (BOT, FF, TT, TOP)

_TOKENS = {BOT: "0", FF: "ff", TT: "tt", TOP: "1"}
_BY_TOKEN = {v: k for k, v in _TOKENS.items()}

_MEET = tuple(tuple(BVal(a & b) for b in range(4)) for a in range(4))
_JOIN = tuple(tuple(BVal(a | b) for b in range(4)) for a in range(4))
_NEG = tuple(BVal(a ^ 3) for a in range(4))
_IMPLIES = tuple(tuple(BVal((a ^ 3) | b) for b in range(4)) for a in range(4))
_LEQ = tuple(tuple(a & ~b == 0 for b in range(4)) for a in range(4))


def meet(a: BVal, b: BVal) -> BVal:
    return _MEET[a][b]


def join(a: BVal, b: BVal) -> BVal:
    return _JOIN[a][b]


def neg(a: BVal) -> BVal:
    return _NEG[a]


def implies(a: BVal, b: BVal) -> BVal:
    """a -> b, i.e. neg(a) v b."""
    return _IMPLIES[a][b]


def leq(a: BVal, b: BVal) -> bool:
    return _LEQ[a][b]


def meet_all(values: Iterable[BVal]) -> BVal:
    return reduce(meet, values, TOP)


def join_all(values: Iterable[BVal]) -> BVal:
    return reduce(join, values, BOT)


def from_flags(has_tt: bool, has_ff: bool) -> BVal:
    """The value whose tt-part and ff-part are the given flags."""
    return BVal((TT if has_tt else 0) | (FF if has_ff else 0))
