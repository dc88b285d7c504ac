"""Irreducible closed B-sets, B-points and d-points, sobriety, and sobrification."""

from __future__ import annotations

from dataclasses import dataclass

from .bsets import BSet, Carrier, const_set, point_set, popcount, sub
from .bvals import ALL, BOT, FF, TOP, TT, BVal, from_flags, join, meet
from .dframes import b_dframe, dO, enumerate_homs
from .separation import classical_sober, classical_t0
from .spaces import BSpace, closure, iota, subspace
from .topology import FinTopology, irreducible_closed_sets, quotient_topology

BRUTE_FORCE_BOUND = 64


# irreducible closed B-sets ---------------------------------------------------


def is_irreducible_closed(space: BSpace, gamma: BSet, closed: list[BSet] | None = None) -> bool:
    """Closed, sub(gamma, b) = b for the four constants, and sub distributes over joins of closed sets."""
    if not (space.top_tt.is_closed(gamma.t) and space.top_ff.is_closed(gamma.f)):
        return False
    c = space.carrier
    if any(sub(gamma, const_set(c, b)) != b for b in ALL):
        return False
    if closed is None:
        closed = space.closed_bsets()
    subs = [sub(gamma, mu) for mu in closed]
    return all(
        sub(gamma, closed[i] | closed[j]) == join(subs[i], subs[j])
        for i in range(len(closed))
        for j in range(i, len(closed))
    )


def irreducible_closed_bsets(space: BSpace) -> list[BSet]:
    """All irreducible closed B-sets, found directly from the definition."""
    closed = space.closed_bsets()
    found = [g for g in closed if is_irreducible_closed(space, g, closed)]
    return sorted(found, key=lambda g: (g.t, g.f))


def irreducible_closed_pairs(space: BSpace) -> list[BSet]:
    """tt_K | ff_K' for K, K' irreducible closed in the two component topologies."""
    c = space.carrier
    found = [
        BSet(c, k, kk)
        for k in irreducible_closed_sets(space.top_tt)
        for kk in irreducible_closed_sets(space.top_ff)
    ]
    return sorted(found, key=lambda g: (g.t, g.f))


# B-points --------------------------------------------------------------------


@dataclass(frozen=True)
class BPoint:
    """A B-point, kept as the generators of its two completely prime filters.

    The value on an open lam is tt if gt is inside lam[tt], joined with ff if
    gf is inside lam[ff].
    """

    space: BSpace
    gt: int
    gf: int

    def __call__(self, lam: BSet | tuple[int, int]) -> BVal:
        t, f = (lam.t, lam.f) if isinstance(lam, BSet) else lam
        return from_flags(self.gt & ~t == 0, self.gf & ~f == 0)

    def table(self) -> dict[tuple[int, int], BVal]:
        return {lam: self(lam) for lam in self.space.bopens()}

    def __str__(self) -> str:
        c = self.space.carrier
        return f"<{c.format_set(self.gt)}, {c.format_set(self.gf)}>"


def _completely_prime(t: FinTopology) -> list[int]:
    """Nonempty opens a with a inside u | v only if inside u or inside v."""
    opens = t.sorted_opens
    return [
        a
        for a in opens
        if a and all(a & ~(u | v) or not a & ~u or not a & ~v for u in opens for v in opens)
    ]


def b_points(space: BSpace) -> list[BPoint]:
    """B-points as pairs of completely prime filters of the two component topologies."""
    return [BPoint(space, a, b) for a in _completely_prime(space.top_tt) for b in _completely_prime(space.top_ff)]


def b_points_bruteforce(space: BSpace, bound: int = BRUTE_FORCE_BOUND) -> list[dict[tuple[int, int], BVal]]:
    """Every map from the open B-sets to B that preserves finite meets and joins and fixes constants.

    Backtracking search; returns value tables keyed by cut pairs.
    """
    opens = sorted(space.bopens(), key=lambda p: (popcount(p[0]) + popcount(p[1]), p))
    if len(opens) > bound:
        raise ValueError(f"{len(opens)} open B-sets exceeds the brute-force bound {bound}")
    full = space.carrier.full
    fixed = {(0, 0): BOT, (full, 0): TT, (0, full): FF, (full, full): TOP}
    index = {p: i for i, p in enumerate(opens)}
    n = len(opens)
    mt = [[index[(a[0] & b[0], a[1] & b[1])] for b in opens] for a in opens]
    jt = [[index[(a[0] | b[0], a[1] | b[1])] for b in opens] for a in opens]
    producers: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            producers[mt[a][b]].append((a, b, True))
            producers[jt[a][b]].append((a, b, False))
    val: list[BVal | None] = [fixed.get(p) for p in opens]
    free = [i for i in range(n) if val[i] is None]
    found = []

    def consistent(i: int) -> bool:
        v = val[i]
        for j in range(n):
            w = val[j]
            if w is None:
                continue
            m, k = val[mt[i][j]], val[jt[i][j]]
            if m is not None and m != meet(v, w):
                return False
            if k is not None and k != join(v, w):
                return False
        # pairs assigned earlier whose meet or join is i
        for a, b, is_meet in producers[i]:
            x, y = val[a], val[b]
            if x is not None and y is not None and v != (meet(x, y) if is_meet else join(x, y)):
                return False
        return True

    if not all(consistent(i) for i in range(n) if val[i] is not None):
        return []

    def go(pos: int):
        if pos == len(free):
            found.append({opens[i]: val[i] for i in range(n)})
            return
        i = free[pos]
        for v in ALL:
            val[i] = v
            if consistent(i):
                go(pos + 1)
        val[i] = None

    go(0)
    return found


def point_embedding(space: BSpace, x: str | int) -> BPoint:
    """Evaluation at x: generated by the minimal neighbourhoods of x."""
    i = space.carrier.index(x) if isinstance(x, str) else x
    return BPoint(space, space.top_tt.neighbourhoods[i], space.top_ff.neighbourhoods[i])


def bpoint_to_gamma(p: BPoint) -> BSet:
    """Cuts are the complements of the unions of opens where p lacks tt (resp. ff)."""
    s = p.space
    full = s.carrier.full
    ut = uf = 0
    for u in s.top_tt.opens:
        if not p((u, 0)) & TT:
            ut |= u
    for v in s.top_ff.opens:
        if not p((0, v)) & FF:
            uf |= v
    return BSet(s.carrier, full & ~ut, full & ~uf)


def gamma_to_bpoint(space: BSpace, gamma: BSet) -> BPoint:
    """p(lam) has tt iff lam[tt] meets gamma[tt], and ff iff lam[ff] meets gamma[ff]."""
    gt = gf = space.carrier.full
    for u in space.top_tt.opens:
        if u & gamma.t:
            gt &= u
    for v in space.top_ff.opens:
        if v & gamma.f:
            gf &= v
    return BPoint(space, gt, gf)


def representing_points(space: BSpace, p: BPoint) -> list[str]:
    return [x for x in space.points if point_embedding(space, x) == p]


def unrepresented_pairs(space: BSpace) -> list[tuple[BSet, list[str]]]:
    """Pairs of component irreducible closed sets not the point closures of exactly one point."""
    tt_cl = space.top_tt.point_closures
    ff_cl = space.top_ff.point_closures
    bad = []
    for g in irreducible_closed_pairs(space):
        reps = [x for i, x in enumerate(space.points) if tt_cl[i] == g.t and ff_cl[i] == g.f]
        if len(reps) != 1:
            bad.append((g, reps))
    return bad


def is_b_sober(space: BSpace) -> bool:
    """Every B-point is evaluation at exactly one point."""
    return all(len(representing_points(space, p)) == 1 for p in b_points(space))


def b_sober_via_pairs(space: BSpace) -> bool:
    return not unrepresented_pairs(space)


# d-points ---------------------------------------------------------------------


def _dp_ok(space: BSpace, p) -> bool:
    full = space.carrier.full
    for u, v in space.bopens():
        val = p((u, v))
        if not u & v and val is TOP:
            return False
        if u | v == full and val is BOT:
            return False
    return True


def d_points(space: BSpace) -> list[BPoint]:
    """B-points that also preserve consistency and totality."""
    return [p for p in b_points(space) if _dp_ok(space, p)]


def d_point_pairs(space: BSpace) -> list[BSet]:
    """Irreducible closed pairs (K, K') with:
    (a) if U and V are disjoint then U misses K or V misses K';
    (b) if U and V cover the space then U meets K or V meets K'.
    """
    full = space.carrier.full
    found = []
    for g in irreducible_closed_pairs(space):
        ok = True
        for u in space.top_tt.opens:
            for v in space.top_ff.opens:
                if not u & v and u & g.t and v & g.f:
                    ok = False
                if u | v == full and not (u & g.t or v & g.f):
                    ok = False
        if ok:
            found.append(g)
    return found


def d_points_via_homs(space: BSpace, max_elements: int = 64) -> list[dict]:
    return enumerate_homs(dO(space), b_dframe(), max_elements=max_elements)


def is_d_sober(space: BSpace) -> bool:
    """x -> evaluation at x is a bijection onto the d-points."""
    return all(len(representing_points(space, p)) == 1 for p in d_points(space))


def d_sober_via_pairs(space: BSpace) -> bool:
    tt_cl = space.top_tt.point_closures
    ff_cl = space.top_ff.point_closures
    for g in d_point_pairs(space):
        if sum(1 for i in range(len(space)) if tt_cl[i] == g.t and ff_cl[i] == g.f) != 1:
            return False
    return True


def is_join_sober(space: BSpace) -> bool:
    return classical_sober(iota(space))


def sobriety_report(space: BSpace) -> dict:
    bps = b_points(space)
    dps = d_points(space)
    witness = None
    for p in bps:
        reps = representing_points(space, p)
        if len(reps) != 1:
            g = bpoint_to_gamma(p)
            c = space.carrier
            witness = f"({c.format_set(g.t)}, {c.format_set(g.f)}) represented by {len(reps)} points"
            break
    return {
        "b_points": len(bps),
        "d_points": len(dps),
        "b_sober": is_b_sober(space),
        "d_sober": is_d_sober(space),
        "join_sober": is_join_sober(space),
        "witness": witness,
    }


# sobrification -----------------------------------------------------------------


@dataclass(frozen=True)
class Sobrification:
    space: BSpace
    gammas: tuple[BSet, ...]
    unit: dict[str, str]

    def is_unit_bijective(self) -> bool:
        return len(set(self.unit.values())) == len(self.unit) == len(self.space)

    def is_unit_homeomorphism(self, source: BSpace) -> bool:
        """The unit is a bijection carrying each component topology onto the other's."""
        if not self.is_unit_bijective():
            return False
        tgt = self.space.carrier
        img = [tgt.index(self.unit[x]) for x in source.points]

        def image(mask: int) -> int:
            return sum(1 << img[i] for i in range(len(img)) if mask >> i & 1)

        return {image(u) for u in source.top_tt.opens} == set(self.space.top_tt.opens) and {
            image(v) for v in source.top_ff.opens
        } == set(self.space.top_ff.opens)


def hat(gamma: BSet, lam: BSet) -> BVal:
    """lam-hat(gamma) = not sub(gamma, not lam)."""
    return ~sub(gamma, ~lam)


def sobrify(space: BSpace, name: str = "") -> Sobrification:
    """Space of irreducible closed B-sets, with opens lam-hat for each open lam.

    Points are named g0, g1, ... in order of (tt-cut mask, ff-cut mask).
    """
    gammas = tuple(irreducible_closed_bsets(space))
    carrier = Carrier(tuple(f"g{i}" for i in range(len(gammas))))
    tt, ff = set(), set()
    for lam in space.open_bsets():
        vals = [hat(g, lam) for g in gammas]
        tt.add(sum(1 << i for i, v in enumerate(vals) if v & TT))
        ff.add(sum(1 << i for i, v in enumerate(vals) if v & FF))
    out = BSpace(carrier, FinTopology(carrier, frozenset(tt)), FinTopology(carrier, frozenset(ff)), name or f"sob({space.name})")
    where = {(g.t, g.f): carrier.points[i] for i, g in enumerate(gammas)}
    unit = {}
    for x in space.points:
        cl = closure(space, point_set(space.carrier, x))
        unit[x] = where[(cl.t, cl.f)]
    return Sobrification(out, gammas, unit)


def satisfies_d_conditions(space: BSpace, gamma: BSet) -> bool:
    """For closed mu:
    (a) if mu is nowhere 0 then tt & gamma <= mu or ff & gamma <= mu;
    (b) if mu is nowhere 1 then gamma is not below mu.
    """
    c = space.carrier
    tt_gamma = BSet(c, gamma.t, 0)
    ff_gamma = BSet(c, 0, gamma.f)
    for mu in space.closed_bsets():
        vals = mu.values()
        if all(v is not BOT for v in vals) and not (tt_gamma <= mu or ff_gamma <= mu):
            return False
        if all(v is not TOP for v in vals) and gamma <= mu:
            return False
    return True


def d_sobrify(space: BSpace, name: str = "") -> BSpace:
    """Subspace of the sobrification on the gammas satisfying the d-point conditions."""
    sob = sobrify(space)
    keep = [sob.space.points[i] for i, g in enumerate(sob.gammas) if satisfies_d_conditions(space, g)]
    return subspace(sob.space, keep, name or f"dsob({space.name})")


# the componentwise criterion ------------------------------------------------------


def t0_reflection_topology(t: FinTopology) -> FinTopology:
    classes = t.kolmogorov_classes()
    carrier = Carrier(tuple(f"k{i}" for i in range(len(classes))))
    return quotient_topology(t, classes, carrier)


def componentwise_criterion(space: BSpace) -> dict[str, bool]:
    """join T0 together with sober T0-reflections of both components."""
    parts = {
        "joinT0": classical_t0(iota(space)),
        "tt_reflection_sober": classical_sober(t0_reflection_topology(space.top_tt)),
        "ff_reflection_sober": classical_sober(t0_reflection_topology(space.top_ff)),
    }
    parts["criterion"] = all(parts.values())
    return parts


def discrepancy_report(space: BSpace) -> dict:
    """Both sides of the componentwise characterization of B-sobriety, side by side.

    Neither side is treated as ground truth: `direct` decides B-sobriety from
    B-points and `via_pairs` from representation of irreducible closed pairs.
    """
    crit = componentwise_criterion(space)
    direct = is_b_sober(space)
    report = {
        "space": space.name,
        **crit,
        "b_sober_direct": direct,
        "b_sober_via_pairs": b_sober_via_pairs(space),
        "agree": crit["criterion"] == direct,
    }
    bad = unrepresented_pairs(space)
    if bad:
        g, reps = bad[0]
        c = space.carrier
        report["witness"] = f"({c.format_set(g.t)}, {c.format_set(g.f)}) represented by {len(reps)} points"
    return report
