"""B-valued subsets of a finite carrier.

A B-set is stored as its two cuts, lam[tt] and lam[ff], each a bitmask over
the carrier's point indices.  Every pointwise operation on B-sets is then a
pair of ordinary set operations on the cuts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .bvals import FF, TOP, TT, BVal, from_flags


class CarrierError(ValueError):
    pass


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class Carrier:
    """An ordered finite set of named points."""

    points: tuple[str, ...]

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if len(set(points)) != len(points):
            raise CarrierError(f"duplicate point names in {points}")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[str]:
        return iter(self.points)

    def __contains__(self, name) -> bool:
        return name in self._index

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise CarrierError(f"point not in carrier: {name!r}") from None

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        if mask & ~self.full:
            raise CarrierError(f"mask {mask:#b} has bits outside the carrier")
        return tuple(self.points[i] for i in bits(mask))

    def format_set(self, mask: int) -> str:
        return "{" + " ".join(self.names(mask)) + "}"


def as_carrier(carrier) -> Carrier:
    if isinstance(carrier, Carrier):
        return carrier
    return Carrier(tuple(carrier))


@dataclass(frozen=True)
class BSet:
    """A function carrier -> B, held as the pair of cut masks (t, f)."""

    carrier: Carrier
    t: int
    f: int

    def __post_init__(self):
        full = self.carrier.full
        if self.t & ~full or self.f & ~full:
            raise CarrierError("cut has points outside the carrier")

    @classmethod
    def from_cuts(cls, carrier, tcut: Iterable[str] = (), fcut: Iterable[str] = ()) -> "BSet":
        carrier = as_carrier(carrier)
        return cls(carrier, carrier.mask(tcut), carrier.mask(fcut))

    @classmethod
    def from_values(cls, carrier, values) -> "BSet":
        """Build from a mapping point -> BVal, or a sequence in carrier order."""
        carrier = as_carrier(carrier)
        if not hasattr(values, "items"):
            values = dict(zip(carrier.points, values, strict=True))
        t = f = 0
        for name, v in values.items():
            i = carrier.index(name)
            if v & TT:
                t |= 1 << i
            if v & FF:
                f |= 1 << i
        return cls(carrier, t, f)

    @property
    def tcut(self) -> frozenset[str]:
        return frozenset(self.carrier.names(self.t))

    @property
    def fcut(self) -> frozenset[str]:
        return frozenset(self.carrier.names(self.f))

    def value_at(self, x: str) -> BVal:
        return self.value_at_index(self.carrier.index(x))

    def value_at_index(self, i: int) -> BVal:
        return from_flags(bool(self.t >> i & 1), bool(self.f >> i & 1))

    def values(self) -> tuple[BVal, ...]:
        return tuple(self.value_at_index(i) for i in range(len(self.carrier)))

    def __iter__(self):
        return iter(self.values())

    def _check(self, other: "BSet"):
        if not isinstance(other, BSet):
            raise TypeError(f"expected a BSet, got {type(other).__name__}")
        if other.carrier != self.carrier:
            raise CarrierError("carrier mismatch")

    def __and__(self, other: "BSet") -> "BSet":
        self._check(other)
        return BSet(self.carrier, self.t & other.t, self.f & other.f)

    def __or__(self, other: "BSet") -> "BSet":
        self._check(other)
        return BSet(self.carrier, self.t | other.t, self.f | other.f)

    def __invert__(self) -> "BSet":
        full = self.carrier.full
        return BSet(self.carrier, full & ~self.t, full & ~self.f)

    def __le__(self, other: "BSet") -> bool:
        self._check(other)
        return self.t & ~other.t == 0 and self.f & ~other.f == 0

    def __ge__(self, other: "BSet") -> bool:
        return other <= self

    def sup(self) -> BVal:
        """The join of all values, i.e. the truth degree that the set is inhabited."""
        return from_flags(self.t != 0, self.f != 0)

    def is_inhabited(self) -> bool:
        return self.sup() is TOP

    def __str__(self) -> str:
        c = self.carrier
        return f"tt{c.format_set(self.t)} ff{c.format_set(self.f)}"

    def __repr__(self) -> str:
        return f"BSet({self})"


def const_set(carrier, b: BVal) -> BSet:
    carrier = as_carrier(carrier)
    full = carrier.full
    return BSet(carrier, full if b & TT else 0, full if b & FF else 0)


def scaled_set(carrier, b: BVal, points: Iterable[str] | int) -> BSet:
    """b_A: value b on A, 0 elsewhere."""
    carrier = as_carrier(carrier)
    mask = points if isinstance(points, int) else carrier.mask(points)
    if mask & ~carrier.full:
        raise CarrierError("subset has points outside the carrier")
    return BSet(carrier, mask if b & TT else 0, mask if b & FF else 0)


def point_set(carrier, x: str) -> BSet:
    """1_x."""
    return scaled_set(carrier, TOP, [x])


def pointwise_meet(a: BSet, b: BSet) -> BSet:
    return a & b


def pointwise_join(a: BSet, b: BSet) -> BSet:
    return a | b


def pointwise_neg(a: BSet) -> BSet:
    return ~a


def scalar_meet(b: BVal, lam: BSet) -> BSet:
    """(b /\\ lam)(x) = b /\\ lam(x)."""
    return lam & const_set(lam.carrier, b)


def scalar_implies(b: BVal, lam: BSet) -> BSet:
    """(b -> lam)(x) = b -> lam(x)."""
    return const_set(lam.carrier, ~b) | lam


def sub(lam: BSet, mu: BSet) -> BVal:
    """Inclusion B-order: meet over x of lam(x) -> mu(x).

    The result is >= tt exactly when lam[tt] is inside mu[tt], and >= ff
    exactly when lam[ff] is inside mu[ff].
    """
    lam._check(mu)
    return from_flags(lam.t & ~mu.t == 0, lam.f & ~mu.f == 0)


def all_bsets(carrier) -> Iterator[BSet]:
    carrier = as_carrier(carrier)
    n = 1 << len(carrier)
    for t in range(n):
        for f in range(n):
            yield BSet(carrier, t, f)


_LITERAL = re.compile(r"\s*(tt|ff)\s*\{([^{}]*)\}\s*")


def parse_bset(carrier, text: str) -> BSet:
    """Parse the literal syntax ``tt{a b} ff{b c}``; either part may be omitted."""
    carrier = as_carrier(carrier)
    cuts = {"tt": 0, "ff": 0}
    seen = set()
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _LITERAL.match(text, pos)
        if not m:
            raise ValueError(f"bad B-set literal at column {pos + 1}: {text!r}")
        which, body = m.group(1), m.group(2)
        if which in seen:
            raise ValueError(f"duplicate {which} part in B-set literal {text!r}")
        seen.add(which)
        cuts[which] = carrier.mask(body.split())
        pos = m.end()
    return BSet(carrier, cuts["tt"], cuts["ff"])
