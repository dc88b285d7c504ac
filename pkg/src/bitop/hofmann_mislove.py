"""Compact and saturated B-sets, Scott-open B-filters, and their correspondence."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from .bsets import BSet, all_bsets, const_set, sub
from .bvals import ALL, FF, TT, BVal, from_flags, implies, join_all, leq, meet, meet_all
from .orders import specialization
from .spaces import BSpace


class FilterError(ValueError):
    pass


LITERAL_COMPACT_BOUND = 12


def _pair_le(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] & ~b[0] == 0 and a[1] & ~b[1] == 0


def _directed(family) -> bool:
    return all(any(_pair_le(a, c) and _pair_le(b, c) for c in family) for a in family for b in family)


def directed_families(space: BSpace, max_size: int | None = None):
    """Nonempty directed subfamilies of the open B-sets, as tuples of cut pairs."""
    opens = list(space.bopens())
    top = len(opens) if max_size is None else min(max_size, len(opens))
    for k in range(1, top + 1):
        for fam in combinations(opens, k):
            if _directed(fam):
                yield fam


def _fam_join(fam) -> tuple[int, int]:
    t = f = 0
    for a, b in fam:
        t |= a
        f |= b
    return t, f


@lru_cache(maxsize=64)
def _directed_table(space: BSpace) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Open B-sets, and every directed family as (member bitmask, index of its join)."""
    opens = list(space.bopens())
    n = len(opens)
    index = {lam: i for i, lam in enumerate(opens)}
    upper = [sum(1 << j for j in range(n) if _pair_le(opens[i], opens[j])) for i in range(n)]
    table = []
    for fam in range(1, 1 << n):
        members = [i for i in range(n) if fam >> i & 1]
        if any(not upper[a] & upper[b] & fam for a in members for b in members):
            continue
        table.append((fam, index[_fam_join([opens[i] for i in members])]))
    return opens, table


def is_compact_literal(space: BSpace, theta: BSet) -> bool:
    """sub(theta, -) preserves joins of every directed family of opens.

    A family is directed when every two members have an upper bound inside
    it. The join of the values has tt (ff) exactly when some member's value
    does, which is tested with one mask per component.
    """
    opens, table = _directed_table(space)
    vals = [sub(theta, space.bset(*lam)) for lam in opens]
    has_tt = sum(1 << i for i, v in enumerate(vals) if v & TT)
    has_ff = sum(1 << i for i, v in enumerate(vals) if v & FF)
    for fam, top in table:
        v = vals[top]
        if bool(fam & has_tt) != bool(v & TT) or bool(fam & has_ff) != bool(v & FF):
            return False
    return True


def is_compact(space: BSpace, theta: BSet, literal: bool | None = None) -> bool:
    """Compactness of a B-set.

    Compactness is decided on the cuts, and every subset of a finite space is
    compact, so the answer is always true. By default the directed-family
    definition is also checked when the space has at most 12 open B-sets;
    `literal` forces it on or off. A disagreement raises.
    """
    if theta.carrier != space.carrier:
        raise ValueError("carrier mismatch")
    if literal is None:
        literal = len(space.top_tt) * len(space.top_ff) <= LITERAL_COMPACT_BOUND
    if literal and not is_compact_literal(space, theta):
        raise AssertionError(f"directed-family check disagrees with the finite shortcut on {theta}")
    return True


_specialization = lru_cache(maxsize=256)(specialization)


def is_saturated(space: BSpace, theta: BSet) -> bool:
    """Omega(x, y) <= theta(x) -> theta(y) for all x, y."""
    om = _specialization(space)
    v = theta.values()
    n = len(v)
    return all(leq(om.at(i, j), implies(v[i], v[j])) for i in range(n) for j in range(n))


def saturate(space: BSpace, theta: BSet) -> BSet:
    """Pointwise meet of the open B-sets above theta."""
    t = f = space.carrier.full
    for u, v in space.bopens():
        if theta.t & ~u == 0 and theta.f & ~v == 0:
            t &= u
            f &= v
    return BSet(space.carrier, t, f)


@dataclass(frozen=True)
class BFilter:
    """A B-valued assignment on opens, stored as its two component filters."""

    space: BSpace
    tt_filter: frozenset[int]
    ff_filter: frozenset[int]

    def __call__(self, lam: BSet | tuple[int, int]) -> BVal:
        t, f = (lam.t, lam.f) if isinstance(lam, BSet) else lam
        return from_flags(t in self.tt_filter, f in self.ff_filter)

    def key(self) -> tuple:
        return (tuple(sorted(self.tt_filter)), tuple(sorted(self.ff_filter)))

    def __str__(self) -> str:
        c = self.space.carrier
        fmt = lambda fs: "[" + " ".join(c.format_set(m) for m in sorted(fs)) + "]"
        return f"F{fmt(self.tt_filter)} G{fmt(self.ff_filter)}"


def from_assignment(space: BSpace, fn: Callable[[BSet], BVal]) -> BFilter:
    c = space.carrier
    return BFilter(
        space,
        frozenset(u for u in space.top_tt.opens if leq(TT, fn(BSet(c, u, 0)))),
        frozenset(v for v in space.top_ff.opens if leq(FF, fn(BSet(c, 0, v)))),
    )


def filter_axiom_failures(space: BSpace, fn: Callable[[BSet], BVal], directed_max: int = 3) -> list[str]:
    """Which of F1, F2, F3 fail for an assignment on the open B-sets."""
    c = space.carrier
    opens = list(space.bopens())
    val = {lam: fn(space.bset(*lam)) for lam in opens}
    found = []
    if any(val[(const_set(c, b).t, const_set(c, b).f)] != b for b in ALL):
        found.append("F1")
    if any(val[(a[0] & b[0], a[1] & b[1])] != meet(val[a], val[b]) for a in opens for b in opens):
        found.append("F2")
    for fam in directed_families(space, directed_max):
        if val[_fam_join(fam)] != join_all(val[lam] for lam in fam):
            found.append("F3")
            break
    return found


def is_bfilter(f: BFilter, directed_max: int = 3) -> bool:
    return not filter_axiom_failures(f.space, f, directed_max)


def filter_of_set(space: BSpace, theta: BSet) -> BFilter:
    """The assignment lam -> sub(theta, lam)."""
    if not theta.is_inhabited():
        raise FilterError(f"not inhabited: sup of {theta} is {theta.sup()}")
    return from_assignment(space, lambda lam: sub(theta, lam))


def set_of_filter(space: BSpace, flt: BFilter, check: bool = True) -> BSet:
    if check and not is_bfilter(flt):
        raise FilterError(f"invalid B-filter: fails {', '.join(filter_axiom_failures(space, flt))}")
    t = f = space.carrier.full
    for u in flt.tt_filter:
        t &= u
    for v in flt.ff_filter:
        f &= v
    return BSet(space.carrier, t, f)


def _principal(opens, a: int) -> frozenset[int]:
    return frozenset(u for u in opens if a & ~u == 0)


def enumerate_bfilters(space: BSpace, max_opens: int = 64) -> list[BFilter]:
    """All Scott-open B-filters.

    Every filter of a finite lattice is principal, so the candidates are pairs
    of principal filters; each is kept only if it passes F1-F3.
    """
    nt, nf = len(space.top_tt), len(space.top_ff)
    if max(nt, nf) > max_opens:
        raise ValueError(f"component topology has more than {max_opens} opens")
    found = []
    for a in space.top_tt.sorted_opens:
        for b in space.top_ff.sorted_opens:
            flt = BFilter(space, _principal(space.top_tt.opens, a), _principal(space.top_ff.opens, b))
            if is_bfilter(flt):
                found.append(flt)
    return found


def saturated_compact_inhabited(space: BSpace) -> list[BSet]:
    return [
        th
        for th in all_bsets(space.carrier)
        if th.is_inhabited() and is_saturated(space, th) and is_compact(space, th, literal=False)
    ]


def verify_hm(space: BSpace, b_sober: bool | None = None) -> dict:
    """Check the correspondence between saturated compact sets and B-filters.

    The round trips are computed on every space, but `bijection_holds` is
    only reported when the space is B-sober; otherwise it is None and the
    round-trip results appear as findings.
    """
    if b_sober is None:
        from .sobriety import is_b_sober

        b_sober = is_b_sober(space)
    thetas = saturated_compact_inhabited(space)
    filters = enumerate_bfilters(space)
    failures = []

    fos = {}
    for th in thetas:
        flt = filter_of_set(space, th)
        fos[th] = flt
        bad = filter_axiom_failures(space, flt)
        if bad:
            failures.append(f"(i) filter of {th} fails {','.join(bad)}")

    opens = space.open_bsets()
    eq_ii = True
    for t1 in thetas:
        for t2 in thetas:
            rhs = meet_all(implies(sub(t1, lam), sub(t2, lam)) for lam in opens)
            if sub(t2, t1) != rhs:
                eq_ii = False
                failures.append(f"(ii) sub({t2}, {t1}) = {sub(t2, t1)} but filters give {rhs}")

    set_rt = all(set_of_filter(space, fos[th], check=False) == th for th in thetas)
    filter_rt = all(
        filter_of_set(space, s) == flt if (s := set_of_filter(space, flt)).is_inhabited() else False
        for flt in filters
    )
    counts_match = len(thetas) == len(filters)
    round_trips = set_rt and filter_rt and counts_match
    if b_sober:
        if not set_rt:
            failures.append("(iii) set -> filter -> set is not the identity")
        if not filter_rt:
            failures.append("(iii) filter -> set -> filter is not the identity")
    return {
        "n_saturated_inhabited": len(thetas),
        "n_bfilters": len(filters),
        "b_sober": b_sober,
        "bijection_holds": round_trips if b_sober else None,
        "set_round_trip": set_rt,
        "filter_round_trip": filter_rt,
        "eq_ii_holds": eq_ii,
        "failures": failures,
    }


def render_report(report: dict) -> list[str]:
    out = []
    for k, v in report.items():
        if k == "failures":
            out.append(f"failures = {len(v)}")
            out.extend(f"failure = {msg}" for msg in v)
        elif v is None:
            out.append(f"{k} = n/a")
        elif isinstance(v, bool):
            out.append(f"{k} = {str(v).lower()}")
        else:
            out.append(f"{k} = {v}")
    return out
