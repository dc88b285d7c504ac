"""Finite topologies as explicit families of open bitmasks.

A finite topology is determined by its specialization preorder: with the
convention x <= y iff x is in cl{y}, the opens are exactly the up-sets.  This
module uses that to generate topologies from subbases and to enumerate all
topologies on a carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator

from .bsets import Carrier, CarrierError, as_carrier, bits


class TopologyError(ValueError):
    """Raised for a family of sets that is not a topology.

    `witness` holds the offending sets (as masks) when there are any.
    """

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


def _union_closure(generators: Iterable[int]) -> frozenset[int]:
    family = {0}
    for g in generators:
        family |= {o | g for o in family}
    return frozenset(family)


@dataclass(frozen=True)
class FinTopology:
    carrier: Carrier
    opens: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "carrier", as_carrier(self.carrier))
        object.__setattr__(self, "opens", frozenset(self.opens))

    # construction -----------------------------------------------------

    @classmethod
    def from_sets(cls, carrier, sets: Iterable[Iterable[str]], validate: bool = True) -> "FinTopology":
        carrier = as_carrier(carrier)
        top = cls(carrier, frozenset(carrier.mask(s) for s in sets))
        if validate:
            top.validate()
        return top

    @classmethod
    def discrete(cls, carrier) -> "FinTopology":
        carrier = as_carrier(carrier)
        return cls(carrier, frozenset(range(carrier.full + 1)))

    @classmethod
    def indiscrete(cls, carrier) -> "FinTopology":
        carrier = as_carrier(carrier)
        return cls(carrier, frozenset({0, carrier.full}))

    @classmethod
    def from_preorder(cls, carrier, up: tuple[int, ...]) -> "FinTopology":
        """Topology whose opens are the up-sets of a preorder.

        `up[i]` is the mask of points above point i (including i).
        """
        return cls(as_carrier(carrier), _union_closure(up))

    # validation -------------------------------------------------------

    def violations(self) -> list[tuple[str, tuple[int, ...]]]:
        full = self.carrier.full
        found = []
        stray = [o for o in self.opens if o & ~full]
        if stray:
            found.append(("points outside the carrier", tuple(stray)))
            return found
        if 0 not in self.opens:
            found.append(("missing the empty set", ()))
        if full not in self.opens:
            found.append(("missing the whole carrier", ()))
        ordered = sorted(self.opens)
        for a, b in combinations(ordered, 2):
            if a | b not in self.opens:
                found.append(("not closed under union", (a, b)))
                break
        for a, b in combinations(ordered, 2):
            if a & b not in self.opens:
                found.append(("not closed under intersection", (a, b)))
                break
        return found

    def is_valid(self) -> bool:
        return not self.violations()

    def validate(self) -> "FinTopology":
        bad = self.violations()
        if bad:
            reason, witness = bad[0]
            shown = ", ".join(self.carrier.format_set(w & self.carrier.full) for w in witness)
            raise TopologyError(f"{reason}" + (f": {shown}" if shown else ""), witness)
        return self

    # basic structure --------------------------------------------------

    def __len__(self) -> int:
        return len(self.opens)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.opens))

    @cached_property
    def sorted_opens(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens))

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        full = self.carrier.full
        return tuple(sorted(full & ~o for o in self.opens))

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def is_closed(self, mask: int) -> bool:
        return self.carrier.full & ~mask in self.opens

    @cached_property
    def neighbourhoods(self) -> tuple[int, ...]:
        """Minimal open neighbourhood of each point."""
        full = self.carrier.full
        result = []
        for i in range(len(self.carrier)):
            m = full
            for o in self.opens:
                if o >> i & 1:
                    m &= o
            result.append(m)
        return tuple(result)

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        """cl{x} for each point x."""
        n = len(self.carrier)
        nb = self.neighbourhoods
        # x in cl{y}  iff  every open containing x contains y
        return tuple(sum(1 << x for x in range(n) if nb[x] >> y & 1) for y in range(n))

    def closure(self, mask: int) -> int:
        m = 0
        for i in bits(mask):
            m |= self.point_closures[i]
        return m

    def interior(self, mask: int) -> int:
        m = 0
        for i, nb in enumerate(self.neighbourhoods):
            if nb & ~mask == 0:
                m |= 1 << i
        return m

    def leq(self, x: int, y: int) -> bool:
        """Specialization preorder on point indices: x in cl{y}."""
        return bool(self.point_closures[y] >> x & 1)

    def kolmogorov_classes(self) -> list[int]:
        classes: dict[int, int] = {}
        for i, c in enumerate(self.point_closures):
            classes[c] = classes.get(c, 0) | 1 << i
        return sorted(classes.values())

    def format(self) -> str:
        return " ".join(self.carrier.format_set(o) for o in sorted(self.opens, key=lambda o: (bin(o).count("1"), o)))

    def canonical_key(self) -> tuple[int, ...]:
        return self.sorted_opens


def generate_topology(carrier, subbasis: Iterable[Iterable[str] | int]) -> FinTopology:
    """Smallest topology containing the subbasis.

    Finite intersections (the empty one being the carrier) give a basis whose
    members at each point are all above the minimal neighbourhood; the unions
    of the minimal neighbourhoods are then all the opens.
    """
    carrier = as_carrier(carrier)
    masks = []
    for s in subbasis:
        m = s if isinstance(s, int) else carrier.mask(s)
        if m & ~carrier.full:
            raise CarrierError("subbasis member has points outside the carrier")
        masks.append(m)
    full = carrier.full
    nbhd = []
    for i in range(len(carrier)):
        m = full
        for s in masks:
            if s >> i & 1:
                m &= s
        nbhd.append(m)
    return FinTopology(carrier, _union_closure(nbhd))


def join_topology(a: FinTopology, b: FinTopology) -> FinTopology:
    if a.carrier != b.carrier:
        raise CarrierError("carrier mismatch")
    return generate_topology(a.carrier, a.opens | b.opens)


def product_topology(a: FinTopology, b: FinTopology, carrier: Carrier) -> FinTopology:
    """Classical product; `carrier` lists pairs in row-major order (i, j) -> i*|b| + j."""
    nb = len(b.carrier)
    rect = []
    for u in a.opens:
        for v in b.opens:
            m = 0
            for i in bits(u):
                for j in bits(v):
                    m |= 1 << (i * nb + j)
            rect.append(m)
    return generate_topology(carrier, rect)


def subspace_topology(t: FinTopology, mask: int, carrier: Carrier) -> FinTopology:
    """Trace topology on `mask`; `carrier` lists the points of `mask` in index order."""
    idx = list(bits(mask))
    opens = set()
    for o in t.opens:
        m = 0
        for k, i in enumerate(idx):
            if o >> i & 1:
                m |= 1 << k
        opens.add(m)
    return FinTopology(carrier, frozenset(opens))


def quotient_topology(t: FinTopology, blocks: list[int], carrier: Carrier) -> FinTopology:
    """Quotient by a partition given as masks; block k becomes point k of `carrier`."""
    opens = set()
    for o in t.opens:
        if all(o & b in (0, b) for b in blocks):
            opens.add(sum(1 << k for k, b in enumerate(blocks) if o & b))
    return FinTopology(carrier, frozenset(opens))


def enumerate_preorders(n: int) -> list[tuple[int, ...]]:
    """All preorders on range(n), each as the tuple of up-set masks per point.

    Order is deterministic: by the bitmask of the off-diagonal relation.
    """
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    result = []
    for rel in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if rel >> k & 1:
                up[i] |= 1 << j
        # transitive iff each up-set is closed under taking up-sets
        if all(all(up[j] & ~up[i] == 0 for j in bits(up[i])) for i in range(n)):
            result.append(tuple(up))
    return result


def enumerate_topologies(carrier) -> list[FinTopology]:
    carrier = as_carrier(carrier)
    return [FinTopology.from_preorder(carrier, up) for up in enumerate_preorders(len(carrier))]


def irreducible_closed_sets(t: FinTopology) -> list[int]:
    """Nonempty closed sets not covered by two closed sets missing part of them."""
    closed = t.closed_sets
    found = []
    for c in closed:
        if c == 0:
            continue
        ok = True
        for a, b in product(closed, repeat=2):
            if c & ~(a | b) == 0 and c & ~a and c & ~b:
                ok = False
                break
        if ok:
            found.append(c)
    return found
