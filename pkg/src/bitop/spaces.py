"""Finite bitopological spaces, viewed as B-valued topological spaces.

A B-set is open exactly when its tt-cut is tt-open and its ff-cut is
ff-open, so the B-topology is never materialized; every query goes through
the two component topologies.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Mapping

from .bsets import BSet, Carrier, CarrierError, as_carrier, bits, const_set
from .bvals import ALL
from .topology import (
    FinTopology,
    TopologyError,
    generate_topology,
    join_topology,
    product_topology,
    quotient_topology,
    subspace_topology,
)


@dataclass(frozen=True)
class BSpace:
    carrier: Carrier
    top_tt: FinTopology
    top_ff: FinTopology
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.top_tt.carrier != self.carrier or self.top_ff.carrier != self.carrier:
            raise CarrierError("component topologies must share the space's carrier")

    @classmethod
    def from_opens(cls, points: Iterable[str], tt_opens, ff_opens, name: str = "") -> "BSpace":
        carrier = as_carrier(points)
        return cls(
            carrier,
            FinTopology.from_sets(carrier, tt_opens),
            FinTopology.from_sets(carrier, ff_opens),
            name,
        )

    def renamed(self, name: str) -> "BSpace":
        return BSpace(self.carrier, self.top_tt, self.top_ff, name)

    def __len__(self) -> int:
        return len(self.carrier)

    @property
    def points(self) -> tuple[str, ...]:
        return self.carrier.points

    def bopens(self) -> Iterator[tuple[int, int]]:
        """All open B-sets, as cut pairs (tt-open, ff-open)."""
        for u in self.top_tt.sorted_opens:
            for v in self.top_ff.sorted_opens:
                yield u, v

    def bclosed(self) -> Iterator[tuple[int, int]]:
        for c in self.top_tt.closed_sets:
            for d in self.top_ff.closed_sets:
                yield c, d

    def bset(self, t: int, f: int) -> BSet:
        return BSet(self.carrier, t, f)

    def open_bsets(self) -> list[BSet]:
        return [self.bset(u, v) for u, v in self.bopens()]

    def closed_bsets(self) -> list[BSet]:
        return [self.bset(c, d) for c, d in self.bclosed()]

    def key(self) -> tuple:
        return (self.carrier.points, self.top_tt.sorted_opens, self.top_ff.sorted_opens)

    def __str__(self) -> str:
        return self.name or "<space>"


def _same_carrier(space: BSpace, lam: BSet):
    if lam.carrier != space.carrier:
        raise CarrierError("carrier mismatch")


def is_bopen(space: BSpace, lam: BSet) -> bool:
    _same_carrier(space, lam)
    return space.top_tt.is_open(lam.t) and space.top_ff.is_open(lam.f)


def is_bclosed(space: BSpace, lam: BSet) -> bool:
    return is_bopen(space, ~lam)


def closure(space: BSpace, lam: BSet) -> BSet:
    _same_carrier(space, lam)
    return BSet(space.carrier, space.top_tt.closure(lam.t), space.top_ff.closure(lam.f))


def interior(space: BSpace, lam: BSet) -> BSet:
    _same_carrier(space, lam)
    return BSet(space.carrier, space.top_tt.interior(lam.t), space.top_ff.interior(lam.f))


# constructions ---------------------------------------------------------


def sierpinski() -> BSpace:
    """The space B with the B-topology generated by the identity map."""
    carrier = Carrier(tuple(str(b) for b in ALL))
    identity = BSet.from_values(carrier, {str(b): b for b in ALL})
    return BSpace(
        carrier,
        generate_topology(carrier, [identity.t]),
        generate_topology(carrier, [identity.f]),
        "SIERP",
    )


def omega(t: FinTopology, name: str = "") -> BSpace:
    return BSpace(t.carrier, t, t, name)


def iota(space: BSpace) -> FinTopology:
    """The join topology tau[tt] v tau[ff]."""
    return join_topology(space.top_tt, space.top_ff)


def iota_tt(space: BSpace) -> FinTopology:
    return space.top_tt


def iota_ff(space: BSpace) -> FinTopology:
    return space.top_ff


def pair_names(a: Carrier, b: Carrier) -> Carrier:
    short = all(len(p) == 1 for p in a.points + b.points)
    sep = "" if short else "."
    return Carrier(tuple(f"{x}{sep}{y}" for x in a.points for y in b.points))


def dot_product(x: FinTopology, y: FinTopology, name: str = "") -> BSpace:
    """X.Y: tt-opens are U x Y, ff-opens are X x V."""
    carrier = pair_names(x.carrier, y.carrier)
    ny = len(y.carrier)
    nx = len(x.carrier)
    tt = set()
    for u in x.opens:
        tt.add(sum(1 << (i * ny + j) for i in bits(u) for j in range(ny)))
    ff = set()
    for v in y.opens:
        ff.add(sum(1 << (i * ny + j) for i in range(nx) for j in bits(v)))
    return BSpace(carrier, FinTopology(carrier, frozenset(tt)), FinTopology(carrier, frozenset(ff)), name)


def product(a: BSpace, b: BSpace, name: str = "") -> BSpace:
    carrier = pair_names(a.carrier, b.carrier)
    return BSpace(
        carrier,
        product_topology(a.top_tt, b.top_tt, carrier),
        product_topology(a.top_ff, b.top_ff, carrier),
        name,
    )


def subspace(space: BSpace, points: Iterable[str] | int, name: str = "") -> BSpace:
    mask = points if isinstance(points, int) else space.carrier.mask(points)
    if mask & ~space.carrier.full:
        raise CarrierError("subset has points outside the carrier")
    carrier = Carrier(space.carrier.names(mask))
    return BSpace(
        carrier,
        subspace_topology(space.top_tt, mask, carrier),
        subspace_topology(space.top_ff, mask, carrier),
        name,
    )


def quotient(space: BSpace, partition: Iterable[Iterable[str] | int], name: str = "") -> tuple[BSpace, dict[str, str]]:
    """Quotient by a partition of the carrier; returns the space and the quotient map."""
    c = space.carrier
    blocks = [p if isinstance(p, int) else c.mask(p) for p in partition]
    covered = 0
    for b in blocks:
        if b == 0 or b & covered or b & ~c.full:
            raise CarrierError("not a partition of the carrier")
        covered |= b
    if covered != c.full:
        raise CarrierError("partition does not cover the carrier")
    blocks.sort(key=lambda b: (b & -b))
    carrier = Carrier(tuple("+".join(c.names(b)) for b in blocks))
    mapping = {p: carrier.points[k] for k, b in enumerate(blocks) for p in c.names(b)}
    space_q = BSpace(
        carrier,
        quotient_topology(space.top_tt, blocks, carrier),
        quotient_topology(space.top_ff, blocks, carrier),
        name,
    )
    return space_q, mapping


# maps ------------------------------------------------------------------


@dataclass(frozen=True)
class ContinuousMap:
    source: BSpace
    target: BSpace
    mapping: Mapping[str, str]

    def __post_init__(self):
        missing = [p for p in self.source.points if p not in self.mapping]
        if missing:
            raise CarrierError(f"map is not total; missing {missing}")
        for p in self.source.points:
            self.target.carrier.index(self.mapping[p])

    @cached_property
    def index_map(self) -> tuple[int, ...]:
        t = self.target.carrier
        return tuple(t.index(self.mapping[p]) for p in self.source.points)

    def preimage(self, mask: int) -> int:
        return sum(1 << i for i, j in enumerate(self.index_map) if mask >> j & 1)

    def pullback(self, lam: BSet) -> BSet:
        """lam o f."""
        return BSet(self.source.carrier, self.preimage(lam.t), self.preimage(lam.f))


def is_continuous(f: ContinuousMap) -> bool:
    src, tgt = f.source, f.target
    return all(src.top_tt.is_open(f.preimage(u)) for u in tgt.top_tt.opens) and all(
        src.top_ff.is_open(f.preimage(v)) for v in tgt.top_ff.opens
    )


def is_continuous_bvalued(f: ContinuousMap) -> bool:
    """lam o f is open for every open B-set lam of the target."""
    return all(is_bopen(f.source, f.pullback(lam)) for lam in f.target.open_bsets())


def homeomorphism(a: BSpace, b: BSpace, max_points: int = 8) -> dict[str, str] | None:
    """A homeomorphism a -> b as a point map, or None.

    Searches carrier bijections; carriers above `max_points` are refused.
    """
    n = len(a.carrier)
    if n != len(b.carrier):
        return None
    if n > max_points:
        raise ValueError(f"homeomorphism search limited to {max_points} points")
    if (len(a.top_tt), len(a.top_ff)) != (len(b.top_tt), len(b.top_ff)):
        return None

    def profile(s: BSpace, i: int):
        return (
            bin(s.top_tt.neighbourhoods[i]).count("1"),
            bin(s.top_ff.neighbourhoods[i]).count("1"),
            bin(s.top_tt.point_closures[i]).count("1"),
            bin(s.top_ff.point_closures[i]).count("1"),
        )

    pa = [profile(a, i) for i in range(n)]
    pb = [profile(b, i) for i in range(n)]
    if sorted(pa) != sorted(pb):
        return None
    candidates = [[j for j in range(n) if pb[j] == pa[i]] for i in range(n)]

    def image(mask: int, perm) -> int:
        return sum(1 << perm[i] for i in bits(mask))

    def extend(perm, used):
        i = len(perm)
        if i == n:
            yield tuple(perm)
            return
        for j in candidates[i]:
            if not used >> j & 1:
                perm.append(j)
                yield from extend(perm, used | 1 << j)
                perm.pop()

    for perm in extend([], 0):
        if {image(u, perm) for u in a.top_tt.opens} == b.top_tt.opens and {
            image(v, perm) for v in a.top_ff.opens
        } == b.top_ff.opens:
            return {a.carrier.points[i]: b.carrier.points[perm[i]] for i in range(n)}
    return None


def is_homeomorphic(a: BSpace, b: BSpace, max_points: int = 8) -> bool:
    return homeomorphism(a, b, max_points) is not None


def canonical_form(space: BSpace) -> tuple:
    """Isomorphism-invariant key, by minimizing over all relabellings."""
    n = len(space.carrier)
    best = None
    for perm in permutations(range(n)):
        tt = tuple(sorted(sum(1 << perm[i] for i in bits(u)) for u in space.top_tt.opens))
        ff = tuple(sorted(sum(1 << perm[i] for i in bits(v)) for v in space.top_ff.opens))
        key = (tt, ff)
        if best is None or key < best:
            best = key
    return (n,) + best


# file format -----------------------------------------------------------


class SpaceParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


_SET = re.compile(r"\{([^{}]*)\}")


def _parse_sets(text: str, lineno: int) -> list[list[str]]:
    rest = _SET.sub("", text).strip()
    if rest:
        raise SpaceParseError(f"unexpected text {rest!r}; sets must be written as {{a b}}", lineno)
    return [m.group(1).split() for m in _SET.finditer(text)]


def parse_space(text: str, name: str = "") -> BSpace:
    """Parse the line-oriented space format.

    ``space NAME`` / ``points: a b`` / ``tt-opens: {} {a} {a b}`` /
    ``ff-opens: ...``; ``tt-subbasis:`` / ``ff-subbasis:`` may replace the
    opens lines.  ``#`` starts a comment.
    """
    points = None
    parts: dict[str, tuple[int, list[list[str]]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("space ") or line == "space":
            name = line[5:].strip() or name
            continue
        if ":" not in line:
            raise SpaceParseError(f"expected 'key: value', got {line!r}", lineno)
        key, value = (s.strip() for s in line.split(":", 1))
        if key == "points":
            if points is not None:
                raise SpaceParseError("duplicate points line", lineno)
            points = value.split()
            if len(set(points)) != len(points):
                raise SpaceParseError("duplicate point names", lineno)
            bad = [p for p in points if not re.fullmatch(r"[^\s{}#]+", p)]
            if bad:
                raise SpaceParseError(f"bad point names {bad}", lineno)
        elif key in ("tt-opens", "ff-opens", "tt-subbasis", "ff-subbasis"):
            side = key[:2]
            if side in parts:
                raise SpaceParseError(f"duplicate {side} topology", lineno)
            parts[side] = (lineno, key, _parse_sets(value, lineno))
        else:
            raise SpaceParseError(f"unknown key {key!r}", lineno)
    if points is None:
        raise SpaceParseError("missing 'points:' line")
    carrier = Carrier(tuple(points))
    tops = {}
    for side in ("tt", "ff"):
        if side not in parts:
            raise SpaceParseError(f"missing {side}-opens or {side}-subbasis line")
        lineno, key, sets = parts[side]
        try:
            masks = [carrier.mask(s) for s in sets]
        except CarrierError as e:
            raise SpaceParseError(str(e), lineno) from None
        if key.endswith("subbasis"):
            tops[side] = generate_topology(carrier, masks)
        else:
            t = FinTopology(carrier, frozenset(masks))
            try:
                t.validate()
            except TopologyError as e:
                raise SpaceParseError(f"{side}-opens: {e}", lineno) from None
            tops[side] = t
    return BSpace(carrier, tops["tt"], tops["ff"], name)


def format_space(space: BSpace) -> str:
    lines = [
        f"space {space.name or 'unnamed'}",
        "points: " + " ".join(space.points),
        "tt-opens: " + space.top_tt.format(),
        "ff-opens: " + space.top_ff.format(),
    ]
    return "\n".join(lines) + "\n"


def constant_bsets(space: BSpace) -> list[BSet]:
    return [const_set(space.carrier, b) for b in ALL]
