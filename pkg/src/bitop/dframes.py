"""Finite frames, d-frames, and the functors dO, F and G between them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Callable, Hashable, Iterable, Sequence

from .bvals import ALL, BOT, FF, TOP, TT, BVal, leq as bleq
from .spaces import BSpace


class FrameError(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FinFrame:
    """A finite lattice given by its elements and order relation.

    Meets and joins are found by searching the order, so nothing about the
    elements' representation is assumed.
    """

    elements: tuple[Hashable, ...]
    leq_fn: Callable[[Hashable, Hashable], bool]

    @classmethod
    def from_order(cls, elements: Iterable[Hashable], leq_fn) -> "FinFrame":
        return cls(tuple(elements), leq_fn)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def le(self) -> tuple[tuple[bool, ...], ...]:
        es = self.elements
        return tuple(tuple(bool(self.leq_fn(a, b)) for b in es) for a in es)

    def _bound(self, i: int, j: int, upper: bool) -> int | None:
        le = self.le
        n = len(self)
        if upper:
            cands = [k for k in range(n) if le[i][k] and le[j][k]]
            best = [k for k in cands if all(le[k][c] for c in cands)]
        else:
            cands = [k for k in range(n) if le[k][i] and le[k][j]]
            best = [k for k in cands if all(le[c][k] for c in cands)]
        return best[0] if len(best) == 1 else None

    @cached_property
    def _tables(self):
        n = len(self)
        meet = [[self._bound(i, j, False) for j in range(n)] for i in range(n)]
        join = [[self._bound(i, j, True) for j in range(n)] for i in range(n)]
        return meet, join

    @cached_property
    def bottom(self) -> int | None:
        n = len(self)
        c = [i for i in range(n) if all(self.le[i][j] for j in range(n))]
        return c[0] if len(c) == 1 else None

    @cached_property
    def top(self) -> int | None:
        n = len(self)
        c = [i for i in range(n) if all(self.le[j][i] for j in range(n))]
        return c[0] if len(c) == 1 else None

    def violations(self) -> list[str]:
        n = len(self)
        le = self.le
        found = []
        if any(not le[i][i] for i in range(n)):
            found.append("order not reflexive")
        if any(le[i][j] and le[j][i] and i != j for i in range(n) for j in range(n)):
            found.append("order not antisymmetric")
        if any(le[i][j] and le[j][k] and not le[i][k] for i in range(n) for j in range(n) for k in range(n)):
            found.append("order not transitive")
        if found:
            return found
        if self.bottom is None or self.top is None:
            found.append("missing bottom or top")
        meet, join = self._tables
        if any(meet[i][j] is None or join[i][j] is None for i in range(n) for j in range(n)):
            found.append("not a lattice")
            return found
        # a finite lattice is complete; binary distributivity gives the frame law
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                        found.append("not distributive")
                        return found
        return found

    def is_frame(self) -> bool:
        return not self.violations()

    def meet(self, a, b):
        i = self._tables[0][self.index[a]][self.index[b]]
        return self.elements[i]

    def join(self, a, b):
        i = self._tables[1][self.index[a]][self.index[b]]
        return self.elements[i]

    def leq(self, a, b) -> bool:
        return self.le[self.index[a]][self.index[b]]

    def join_all(self, items: Iterable[Hashable]):
        acc = self.elements[self.bottom]
        for x in items:
            acc = self.join(acc, x)
        return acc

    def meet_all(self, items: Iterable[Hashable]):
        acc = self.elements[self.top]
        for x in items:
            acc = self.meet(acc, x)
        return acc

    def down(self, a) -> frozenset:
        return frozenset(e for e in self.elements if self.leq(e, a))

    def up(self, a) -> frozenset:
        return frozenset(e for e in self.elements if self.leq(a, e))


@dataclass(frozen=True, eq=False)
class SliceObject:
    """A frame with the images of tt and ff under i_L: B -> L."""

    frame: FinFrame
    tt: Hashable
    ff: Hashable

    def is_valid(self) -> bool:
        f = self.frame
        return (
            f.is_frame()
            and f.meet(self.tt, self.ff) == f.elements[f.bottom]
            and f.join(self.tt, self.ff) == f.elements[f.top]
        )

    def i(self, b: BVal):
        f = self.frame
        return {BOT: f.elements[f.bottom], TT: self.tt, FF: self.ff, TOP: f.elements[f.top]}[b]


@dataclass(frozen=True, eq=False)
class DFrame:
    slice: SliceObject
    con: frozenset
    tot: frozenset

    @property
    def frame(self) -> FinFrame:
        return self.slice.frame

    @property
    def tt(self):
        return self.slice.tt

    @property
    def ff(self):
        return self.slice.ff

    def report(self) -> dict:
        return {
            "elements": len(self.frame),
            "con": len(self.con),
            "tot": len(self.tot),
            "violations": validate_dframe(self),
        }


def logic_meet(d: SliceObject, x, y):
    """x meet-in-the-logic-order y = (x /\\ ff) v (y /\\ ff) v (x /\\ y)."""
    f = d.frame
    return f.join(f.join(f.meet(x, d.ff), f.meet(y, d.ff)), f.meet(x, y))


def logic_join(d: SliceObject, x, y):
    """x join-in-the-logic-order y = (x /\\ tt) v (y /\\ tt) v (x /\\ y)."""
    f = d.frame
    return f.join(f.join(f.meet(x, d.tt), f.meet(y, d.tt)), f.meet(x, y))


def _directed_subsets(frame: FinFrame, items: Sequence, max_size: int = 3):
    for k in range(1, max_size + 1):
        for sub in combinations(items, k):
            if all(any(frame.leq(a, c) and frame.leq(b, c) for c in sub) for a in sub for b in sub):
                yield sub


def validate_dframe(d: DFrame) -> list[str]:
    """Tags of the violated d-frame axioms; empty when `d` is a d-frame."""
    f = d.frame
    s = d.slice
    if not s.is_valid():
        return ["frame"] if not f.is_frame() else ["tt-ff-complement"]
    found = []
    con, tot = d.con, d.tot
    es = f.elements
    if any(f.leq(a, b) and b in con and a not in con for a in es for b in es):
        found.append("con-↓")
    # finite directed sets have a greatest element, so this reduces to
    # membership; still checked literally on small directed subsets
    if any(f.join_all(sub) not in con for sub in _directed_subsets(f, sorted(con, key=f.index.get))):
        found.append("con-⋁↑")
    if any(f.leq(a, b) and a in tot and b not in tot for a in es for b in es):
        found.append("tot-↑")
    if any(logic_meet(s, a, b) not in con or logic_join(s, a, b) not in con for a in con for b in con):
        found.append("con-⊓⊔")
    if any(logic_meet(s, a, b) not in tot or logic_join(s, a, b) not in tot for a in tot for b in tot):
        found.append("tot-⊓⊔")
    if s.tt not in con or s.ff not in con:
        found.append("con-ttff")
    if s.tt not in tot or s.ff not in tot:
        found.append("tot-ttff")
    for a in con:
        for b in tot:
            if (f.meet(a, s.tt) == f.meet(b, s.tt) or f.meet(a, s.ff) == f.meet(b, s.ff)) and not f.leq(a, b):
                found.append("con-tot")
                break
        else:
            continue
        break
    return found


# the four-element algebra -----------------------------------------------------


def b_frame() -> FinFrame:
    return FinFrame.from_order(ALL, bleq)


def b_slice() -> SliceObject:
    return SliceObject(b_frame(), TT, FF)


def b_dframe() -> DFrame:
    return DFrame(b_slice(), frozenset({BOT, TT, FF}), frozenset({TT, FF, TOP}))


# functors ------------------------------------------------------------------


def _pair_leq(a, b) -> bool:
    return a[0] & ~b[0] == 0 and a[1] & ~b[1] == 0


def open_frame(space: BSpace) -> FinFrame:
    """tau[tt] x tau[ff], ordered componentwise."""
    return FinFrame.from_order(space.bopens(), _pair_leq)


def dO(space: BSpace) -> DFrame:
    full = space.carrier.full
    frame = open_frame(space)
    s = SliceObject(frame, (full, 0), (0, full))
    con = frozenset(e for e in frame.elements if not e[0] & e[1])
    tot = frozenset(e for e in frame.elements if e[0] | e[1] == full)
    return DFrame(s, con, tot)


def f_functor(s: SliceObject) -> DFrame:
    if not s.is_valid():
        raise FrameError("not a slice object: need a frame with a complemented pair tt, ff")
    f = s.frame
    return DFrame(s, f.down(s.tt) | f.down(s.ff), f.up(s.tt) | f.up(s.ff))


def g_functor(d: DFrame) -> SliceObject:
    if validate_dframe(d):
        raise FrameError("not a d-frame")
    return d.slice


# homomorphisms ---------------------------------------------------------------


def is_frame_hom(h: dict, src: FinFrame, tgt: FinFrame) -> bool:
    es = src.elements
    if any(e not in h for e in es):
        raise FrameError("map is not total on the source frame")
    if h[es[src.bottom]] != tgt.elements[tgt.bottom] or h[es[src.top]] != tgt.elements[tgt.top]:
        return False
    hi = [tgt.index[h[e]] for e in es]
    sm, sj = src._tables
    tm, tj = tgt._tables
    n = len(es)
    for a in range(n):
        for b in range(n):
            if hi[sm[a][b]] != tm[hi[a]][hi[b]] or hi[sj[a][b]] != tj[hi[a]][hi[b]]:
                return False
    # binary joins and the bottom already give all finite joins; checked to size 3 anyway
    for a, b, c in combinations(range(n), 3):
        if hi[sj[sj[a][b]][c]] != tj[tj[hi[a]][hi[b]]][hi[c]]:
            return False
    return True


def is_slice_hom(h: dict, src: SliceObject, tgt: SliceObject) -> bool:
    return is_frame_hom(h, src.frame, tgt.frame) and h[src.tt] == tgt.tt and h[src.ff] == tgt.ff


def is_dframe_hom(h: dict, src: DFrame, tgt: DFrame) -> bool:
    if not is_slice_hom(h, src.slice, tgt.slice):
        return False
    return all(h[a] in tgt.con for a in src.con) and all(h[a] in tgt.tot for a in src.tot)


def _interval_homs(src: FinFrame, lo_top, tgt: FinFrame, hi_top, bound: int) -> list[dict]:
    """Frame homomorphisms [0, lo_top] -> [0, hi_top], by brute force over all maps."""
    dom = sorted(src.down(lo_top), key=src.index.get)
    cod = sorted(tgt.down(hi_top), key=tgt.index.get)
    if len(cod) ** len(dom) > bound:
        raise BoundExceeded(f"{len(cod)}^{len(dom)} candidate maps exceeds the bound {bound}")
    sb, tb = src.elements[src.bottom], tgt.elements[tgt.bottom]
    found = []
    for values in product(cod, repeat=len(dom)):
        h = dict(zip(dom, values))
        if h[sb] != tb or h[lo_top] != hi_top:
            continue
        if all(
            h[src.meet(a, b)] == tgt.meet(h[a], h[b]) and h[src.join(a, b)] == tgt.join(h[a], h[b])
            for a in dom
            for b in dom
        ):
            found.append(h)
    return found


def _combine(src: SliceObject, tgt: SliceObject, h_tt: dict, h_ff: dict) -> dict:
    f, g = src.frame, tgt.frame
    return {a: g.join(h_tt[f.meet(a, src.tt)], h_ff[f.meet(a, src.ff)]) for a in f.elements}


def enumerate_slice_homs(src: SliceObject, tgt: SliceObject, max_elements: int = 64, bound: int = 1 << 20) -> list[dict]:
    """All slice-category morphisms src -> tgt.

    L is isomorphic to [0, tt] x [0, ff], so a morphism is a pair of frame
    homomorphisms on the two intervals; those are brute-forced separately and
    recombined.
    """
    if len(src.frame) > max_elements:
        raise BoundExceeded(f"source frame has {len(src.frame)} elements, bound is {max_elements}")
    tts = _interval_homs(src.frame, src.tt, tgt.frame, tgt.tt, bound)
    ffs = _interval_homs(src.frame, src.ff, tgt.frame, tgt.ff, bound)
    found = []
    for a in tts:
        for b in ffs:
            h = _combine(src, tgt, a, b)
            if is_slice_hom(h, src, tgt):
                found.append(h)
    return found


def enumerate_homs(src: DFrame, tgt: DFrame, max_elements: int = 64, bound: int = 1 << 20) -> list[dict]:
    """All d-frame homomorphisms src -> tgt."""
    return [
        h
        for h in enumerate_slice_homs(src.slice, tgt.slice, max_elements, bound)
        if all(h[a] in tgt.con for a in src.con) and all(h[a] in tgt.tot for a in src.tot)
    ]
