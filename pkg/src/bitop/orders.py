"""B-valued orders and the specialization B-order of a space."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .bsets import BSet, Carrier, CarrierError, as_carrier, point_set
from .bvals import FF, TOP, TT, BVal, implies, leq, meet
from .spaces import BSpace, closure


@dataclass(frozen=True)
class BOrder:
    """A carrier x carrier matrix of B values; row index is the first argument."""

    carrier: Carrier
    matrix: tuple[tuple[BVal, ...], ...]

    def __call__(self, x: str, y: str) -> BVal:
        c = self.carrier
        return self.matrix[c.index(x)][c.index(y)]

    def at(self, i: int, j: int) -> BVal:
        return self.matrix[i][j]

    def __len__(self) -> int:
        return len(self.carrier)

    def is_reflexive(self) -> bool:
        return all(self.matrix[i][i] is TOP for i in range(len(self)))

    def is_transitive(self) -> bool:
        n = len(self)
        m = self.matrix
        return all(
            leq(meet(m[y][z], m[x][y]), m[x][z]) for x in range(n) for y in range(n) for z in range(n)
        )

    def is_border(self) -> bool:
        return self.is_reflexive() and self.is_transitive()

    def opposite(self) -> "BOrder":
        n = len(self)
        return BOrder(self.carrier, tuple(tuple(self.matrix[j][i] for j in range(n)) for i in range(n)))

    def render(self) -> str:
        """Labelled matrix in the layout of a printed table (row = first argument)."""
        names = self.carrier.points
        width = max([len(p) for p in names] + [2])
        head = " " * width + " | " + " ".join(p.rjust(width) for p in names)
        rows = [head, "-" * len(head)]
        for i, p in enumerate(names):
            rows.append(p.rjust(width) + " | " + " ".join(str(v).rjust(width) for v in self.matrix[i]))
        return "\n".join(rows)


def border_from_function(carrier, fn: Callable[[int, int], BVal]) -> BOrder:
    carrier = as_carrier(carrier)
    n = len(carrier)
    return BOrder(carrier, tuple(tuple(fn(i, j) for j in range(n)) for i in range(n)))


def omega_of_family(carrier, family: Iterable[BSet]) -> BOrder:
    """Omega(Lambda)(x, y) = meet over lam of lam(x) -> lam(y)."""
    carrier = as_carrier(carrier)
    n = len(carrier)
    m = [[TOP] * n for _ in range(n)]
    for lam in family:
        if lam.carrier != carrier:
            raise CarrierError("carrier mismatch")
        vals = lam.values()
        for i in range(n):
            for j in range(n):
                m[i][j] = meet(m[i][j], implies(vals[i], vals[j]))
    return BOrder(carrier, tuple(tuple(r) for r in m))


def specialization(space: BSpace) -> BOrder:
    """Omega(tau)(x, y), read off as the value at x of the closure of 1_y."""
    c = space.carrier
    n = len(c)
    cols = [closure(space, point_set(c, y)).values() for y in c.points]
    return BOrder(c, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def subbasis_family(space: BSpace, tt_subbasis: Sequence[int] | None = None, ff_subbasis: Sequence[int] | None = None) -> list[BSet]:
    """{tt_U, ff_V} over subbases of the two components.

    Defaults to the minimal neighbourhoods, which form a basis of each component.
    """
    if tt_subbasis is None:
        tt_subbasis = sorted(set(space.top_tt.neighbourhoods))
    if ff_subbasis is None:
        ff_subbasis = sorted(set(space.top_ff.neighbourhoods))
    c = space.carrier
    return [BSet(c, u, 0) for u in tt_subbasis] + [BSet(c, 0, v) for v in ff_subbasis]


def specialization_via_subbasis(space: BSpace, tt_subbasis=None, ff_subbasis=None) -> BOrder:
    return omega_of_family(space.carrier, subbasis_family(space, tt_subbasis, ff_subbasis))


def is_symmetric(r: BOrder) -> bool:
    n = len(r)
    return all(r.at(i, j) == r.at(j, i) for i in range(n) for j in range(i + 1, n))


def is_separated(r: BOrder) -> bool:
    n = len(r)
    return not any(r.at(i, j) is TOP and r.at(j, i) is TOP for i in range(n) for j in range(i + 1, n))


def component_order(r: BOrder, which: BVal) -> frozenset[tuple[int, int]]:
    """Threshold at tt or ff: the pairs (i, j) with r(i, j) >= which."""
    if which not in (TT, FF):
        raise ValueError("component_order takes tt or ff")
    n = len(r)
    return frozenset((i, j) for i in range(n) for j in range(n) if leq(which, r.at(i, j)))


def preserves_border(f: Mapping[str, str], src: BOrder, tgt: BOrder) -> bool:
    missing = [p for p in src.carrier.points if p not in f]
    if missing:
        raise CarrierError(f"map is not total; missing {missing}")
    pts = src.carrier.points
    return all(leq(src(x1, x2), tgt(f[x1], f[x2])) for x1 in pts for x2 in pts)
