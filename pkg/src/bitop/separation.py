"""Separation axioms for finite bitopological spaces.

The B-valued axioms (T0, R0, T1, R1, Hausdorff, regular, T3, normal, T4) are
decided from their B-valued definitions.  Join and componentwise variants go
through the classical deciders on iota(S) and on the two components, so each
proven equivalence between the two families is an executable cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .bsets import BSet, bits
from .bvals import FF, TT, leq
from .orders import specialization, is_separated, is_symmetric
from .spaces import BSpace, closure, is_bclosed, iota, product, quotient
from .topology import FinTopology, irreducible_closed_sets, product_topology


# classical deciders ------------------------------------------------------


def classical_t0(t: FinTopology) -> bool:
    return len(set(t.point_closures)) == len(t.carrier)


def classical_t1(t: FinTopology) -> bool:
    return all(c == 1 << i for i, c in enumerate(t.point_closures))


def classical_r0(t: FinTopology) -> bool:
    """Every open set containing x contains the closure of {x}."""
    return all(t.point_closures[x] & ~u == 0 for u in t.opens for x in bits(u))


def classical_r0_symmetric(t: FinTopology) -> bool:
    """R0 read as: the specialization preorder is symmetric."""
    n = len(t.carrier)
    return all(t.leq(x, y) == t.leq(y, x) for x in range(n) for y in range(n))


def classical_r1(t: FinTopology) -> bool:
    """Points with different closures have disjoint neighbourhoods."""
    n = len(t.carrier)
    cl = t.point_closures
    for x in range(n):
        for y in range(x + 1, n):
            if cl[x] == cl[y]:
                continue
            if not any(u >> x & 1 and v >> y & 1 and not u & v for u in t.opens for v in t.opens):
                return False
    return True


def _order_mask(t: FinTopology, symmetric: bool = False) -> int:
    n = len(t.carrier)
    m = 0
    for x in range(n):
        for y in range(n):
            if t.leq(x, y) and (not symmetric or t.leq(y, x)):
                m |= 1 << (x * n + y)
    return m


def _square_carrier(t: FinTopology):
    from .spaces import pair_names

    return pair_names(t.carrier, t.carrier)


def classical_r1_closed_order(t: FinTopology, symmetric: bool = False) -> bool:
    """R1 read as: the specialization order (or its symmetric part) is closed in X x X."""
    sq = product_topology(t, t, _square_carrier(t))
    return sq.is_closed(_order_mask(t, symmetric))


def classical_regular(t: FinTopology) -> bool:
    for f in t.closed_sets:
        for x in range(len(t.carrier)):
            if f >> x & 1:
                continue
            if not any(u >> x & 1 and f & ~v == 0 and not u & v for u in t.opens for v in t.opens):
                return False
    return True


def classical_normal(t: FinTopology) -> bool:
    closed = t.closed_sets
    for f in closed:
        for g in closed:
            if f & g:
                continue
            if not any(f & ~u == 0 and g & ~v == 0 and not u & v for u in t.opens for v in t.opens):
                return False
    return True


def classical_sober(t: FinTopology) -> bool:
    cl = t.point_closures
    return all(sum(1 for c in cl if c == k) == 1 for k in irreducible_closed_sets(t))


def classical_compact(t: FinTopology) -> bool:
    """Always true: a finite space has finitely many opens, so every cover has a finite subcover."""
    return True


CLASSICAL: dict[str, Callable[[FinTopology], bool]] = {
    "T0": classical_t0,
    "T1": classical_t1,
    "R0": classical_r0,
    "R1": classical_r1,
    "regular": classical_regular,
    "normal": classical_normal,
    "sober": classical_sober,
    "compact": classical_compact,
}


def classical_axiom(t: FinTopology, axiom: str) -> bool:
    if axiom not in CLASSICAL:
        raise ValueError(f"unknown classical axiom {axiom!r}")
    return CLASSICAL[axiom](t)


# B-valued deciders -------------------------------------------------------


@lru_cache(maxsize=4096)
def _omega(space: BSpace):
    return specialization(space)


def is_t0(space: BSpace) -> bool:
    return is_separated(_omega(space))


def is_r0(space: BSpace) -> bool:
    return is_symmetric(_omega(space))


def is_t1(space: BSpace) -> bool:
    return is_t0(space) and is_r0(space)


def omega_as_bset(space: BSpace, square: BSpace, symmetric: bool = False) -> BSet:
    r = _omega(space)
    n = len(space)
    t = f = 0
    for i in range(n):
        for j in range(n):
            v = r.at(i, j)
            if symmetric:
                v = v & r.at(j, i)
            if v & TT:
                t |= 1 << (i * n + j)
            if v & FF:
                f |= 1 << (i * n + j)
    return BSet(square.carrier, t, f)


@lru_cache(maxsize=4096)
def _square(space: BSpace) -> BSpace:
    return product(space, space)


def is_r1(space: BSpace) -> bool:
    """Omega(tau) is a closed B-set of the product space S x S."""
    sq = _square(space)
    return is_bclosed(sq, omega_as_bset(space, sq))


def is_r1_symmetrized(space: BSpace) -> bool:
    """Omega(tau) /\\ Omega(tau)^op is a closed B-set of S x S."""
    sq = _square(space)
    return is_bclosed(sq, omega_as_bset(space, sq, symmetric=True))


def is_r0_via_closures(space: BSpace) -> bool:
    """lam(x) <= sub(cl(1_x), lam) for every open lam and every point x."""
    from .bsets import point_set, sub

    c = space.carrier
    cls = [closure(space, point_set(c, x)) for x in c.points]
    for lam in space.open_bsets():
        for i in range(len(c)):
            if not leq(lam.value_at_index(i), sub(cls[i], lam)):
                return False
    return True


def is_hausdorff(space: BSpace) -> bool:
    return is_t0(space) and is_r1(space)


def is_regular(space: BSpace) -> bool:
    """Every open lam is the join of the opens whose closure lies below lam."""
    tt, ff = space.top_tt, space.top_ff
    opens = list(space.bopens())
    clos = [(tt.closure(u), ff.closure(v)) for u, v in opens]
    for lt, lf in opens:
        jt = jf = 0
        for (u, v), (cu, cv) in zip(opens, clos):
            if cu & ~lt == 0 and cv & ~lf == 0:
                jt |= u
                jf |= v
        if (jt, jf) != (lt, lf):
            return False
    return True


def is_t3(space: BSpace) -> bool:
    return is_t0(space) and is_regular(space)


def is_normal(space: BSpace) -> bool:
    """For open lam >= closed mu there is an open nu with mu <= nu <= cl(nu) <= lam."""
    tt, ff = space.top_tt, space.top_ff
    opens = list(space.bopens())
    clos = [(tt.closure(u), ff.closure(v)) for u, v in opens]
    closed = list(space.bclosed())
    for lt, lf in opens:
        inside = [o for o, (cu, cv) in zip(opens, clos) if cu & ~lt == 0 and cv & ~lf == 0]
        for mt, mf in closed:
            if mt & ~lt or mf & ~lf:
                continue
            if not any(mt & ~u == 0 and mf & ~v == 0 for u, v in inside):
                return False
    return True


def is_t4(space: BSpace) -> bool:
    return is_t1(space) and is_normal(space)


def _join(space: BSpace) -> FinTopology:
    return iota(space)


def _both(space: BSpace, fn) -> bool:
    return fn(space.top_tt) and fn(space.top_ff)


def is_pairwise_hausdorff(space: BSpace) -> bool:
    """For each ordered pair x != y: a tt-nbhd of x misses some ff-nbhd of y."""
    tt, ff = space.top_tt.opens, space.top_ff.opens
    n = len(space)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if not any(u >> x & 1 and v >> y & 1 and not u & v for u in tt for v in ff):
                return False
    return True


def is_pairwise_hausdorff_diagonal(space: BSpace) -> bool:
    """The diagonal is closed in (X, tau[tt]) x (X, tau[ff])."""
    n = len(space)
    prod = product_topology(space.top_tt, space.top_ff, _square_carrier(space.top_tt))
    return prod.is_closed(sum(1 << (i * n + i) for i in range(n)))


def is_pairwise_hausdorff_weak(space: BSpace) -> bool:
    """For each x != y, disjoint U (tt) and V (ff) separate them in one of the two orders."""
    tt, ff = space.top_tt.opens, space.top_ff.opens
    n = len(space)
    for x in range(n):
        for y in range(x + 1, n):
            if not any(
                not u & v and ((u >> x & 1 and v >> y & 1) or (v >> x & 1 and u >> y & 1)) for u in tt for v in ff
            ):
                return False
    return True


def is_order_separated(space: BSpace) -> bool:
    tt, ff = space.top_tt, space.top_ff
    n = len(space)

    def le(x, y):
        return tt.leq(x, y) and ff.leq(y, x)

    for x in range(n):
        for y in range(n):
            if x != y and le(x, y) and le(y, x):
                return False
            if not le(x, y):
                if not any(u >> x & 1 and v >> y & 1 and not u & v for u in tt.opens for v in ff.opens):
                    return False
    return True


def _regular_wrt(a: FinTopology, b: FinTopology) -> bool:
    n = len(a.carrier)
    for f in a.closed_sets:
        for x in range(n):
            if f >> x & 1:
                continue
            if not any(u >> x & 1 and f & ~v == 0 and not u & v for u in a.opens for v in b.opens):
                return False
    return True


def is_pairwise_regular(space: BSpace) -> bool:
    return _regular_wrt(space.top_tt, space.top_ff) and _regular_wrt(space.top_ff, space.top_tt)


def is_pairwise_normal(space: BSpace) -> bool:
    tt, ff = space.top_tt, space.top_ff
    for f in tt.closed_sets:
        for g in ff.closed_sets:
            if f & g:
                continue
            if not any(f & ~v == 0 and g & ~u == 0 and not u & v for u in tt.opens for v in ff.opens):
                return False
    return True


def is_compact_space(space: BSpace) -> bool:
    from .bsets import const_set
    from .bvals import TOP
    from .hofmann_mislove import is_compact

    # decided on the cuts; the directed-family check is left to the oracle suite
    return is_compact(space, const_set(space.carrier, TOP), literal=False)


AXIOMS: dict[str, Callable[[BSpace], bool]] = {
    "T0": is_t0,
    "R0": is_r0,
    "T1": is_t1,
    "R1": is_r1,
    "Hausdorff": is_hausdorff,
    "regular": is_regular,
    "T3": is_t3,
    "normal": is_normal,
    "T4": is_t4,
    "joinT0": lambda s: classical_t0(_join(s)),
    "joinT1": lambda s: classical_t1(_join(s)),
    "cwT0": lambda s: _both(s, classical_t0),
    "cwT1": lambda s: _both(s, classical_t1),
    "cwR0": lambda s: _both(s, classical_r0),
    "cwR1": lambda s: _both(s, classical_r1),
    "cwRegular": lambda s: _both(s, classical_regular),
    "cwNormal": lambda s: _both(s, classical_normal),
    "pairwiseHausdorff": is_pairwise_hausdorff,
    "pairwiseHausdorffWeak": is_pairwise_hausdorff_weak,
    "orderSeparated": is_order_separated,
    "pairwiseRegular": is_pairwise_regular,
    "pairwiseNormal": is_pairwise_normal,
    "compact": is_compact_space,
}

AXIOM_NAMES = tuple(AXIOMS)


def check(space: BSpace, axiom: str) -> bool:
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}; known: {', '.join(AXIOM_NAMES)}")
    return AXIOMS[axiom](space)


@dataclass
class AxiomReport:
    space: str
    values: dict[str, bool] = field(default_factory=dict)

    def __getitem__(self, axiom: str) -> bool:
        return self.values[axiom]

    def lines(self) -> list[str]:
        return [f"{k} = {str(self.values[k]).lower()}" for k in AXIOM_NAMES if k in self.values]

    def render(self, fmt: str = "kv") -> str:
        if fmt == "kv":
            return "\n".join([f"space = {self.space}"] + self.lines())
        width = max(len(k) for k in AXIOM_NAMES)
        body = [f"  {k.ljust(width)}  {'yes' if self.values[k] else 'no'}" for k in AXIOM_NAMES if k in self.values]
        return "\n".join([f"Separation axioms for {self.space}:"] + body)


def classify(space: BSpace, axioms: Iterable[str] = AXIOM_NAMES) -> AxiomReport:
    return AxiomReport(space.name, {a: check(space, a) for a in axioms})


# T0 reflection -------------------------------------------------------------


def t0_classes(space: BSpace) -> list[int]:
    """Classes of x ~ y iff x and y have the same closure in both components."""
    classes: dict[tuple[int, int], int] = {}
    for i, key in enumerate(zip(space.top_tt.point_closures, space.top_ff.point_closures)):
        classes[key] = classes.get(key, 0) | 1 << i
    return sorted(classes.values(), key=lambda b: b & -b)


def t0_reflection(space: BSpace) -> tuple[BSpace, dict[str, str]]:
    return quotient(space, t0_classes(space), name=f"{space.name}/~" if space.name else "")


# the implication diagram ---------------------------------------------------

EDGES = (
    ("T4", "T3"),
    ("T3", "Hausdorff"),
    ("Hausdorff", "T1"),
    ("T1", "T0"),
    ("T4", "normal"),
    ("T3", "regular"),
    ("Hausdorff", "R1"),
    ("T1", "R0"),
    ("regular", "R1"),
    ("R1", "R0"),
)

EQUIVALENCES = (
    ("T0", "joinT0"),
    ("R0", "cwR0"),
    ("R1", "cwR1"),
    ("regular", "cwRegular"),
    ("normal", "cwNormal"),
)

ONE_WAY = (("T1", "joinT1"),)


def audit_report(report: AxiomReport) -> list[str]:
    v = report.values
    found = []
    for a, b in EDGES + ONE_WAY:
        if a in v and b in v and v[a] and not v[b]:
            found.append(f"{report.space}: {a} => {b} fails")
    for a, b in EQUIVALENCES:
        if a in v and b in v and v[a] != v[b]:
            found.append(f"{report.space}: {a} <=> {b} fails ({a}={str(v[a]).lower()}, {b}={str(v[b]).lower()})")
    return found


def audit_implications(reports: Iterable[AxiomReport]) -> list[str]:
    """Every violated edge or equivalence of the diagram; empty when all hold."""
    found = []
    for r in reports:
        found.extend(audit_report(r))
    return found


AUDITED_AXIOMS = tuple(sorted({a for pair in EDGES + EQUIVALENCES + ONE_WAY for a in pair}, key=AXIOM_NAMES.index))
