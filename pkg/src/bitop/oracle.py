"""Pairs of independent computations of the same quantity, compared on one space."""

from __future__ import annotations

from dataclasses import dataclass

from . import separation as sep
from .bsets import all_bsets, sub
from .dframes import BoundExceeded
from .hofmann_mislove import filter_axiom_failures, is_compact_literal, is_saturated, saturate
from .orders import specialization, specialization_via_subbasis
from .sobriety import (
    b_points,
    b_points_bruteforce,
    b_sober_via_pairs,
    bpoint_to_gamma,
    d_point_pairs,
    d_points,
    d_points_via_homs,
    d_sober_via_pairs,
    gamma_to_bpoint,
    irreducible_closed_bsets,
    irreducible_closed_pairs,
    is_b_sober,
    is_d_sober,
)
from .spaces import BSpace, iota

AGREE, DISAGREE, SKIPPED = "agree", "disagree", "skipped"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""


def _cmp(name: str, a, b, detail: str = "") -> Check:
    return Check(name, AGREE if a == b else DISAGREE, "" if a == b else detail or f"{a!r} vs {b!r}")


def _omega_checks(space: BSpace) -> list[Check]:
    om = specialization(space)
    all_opens = specialization_via_subbasis(space, space.top_tt.sorted_opens, space.top_ff.sorted_opens)
    return [
        _cmp("omega closure=subbasis", om, specialization_via_subbasis(space), "matrices differ"),
        _cmp("omega closure=all-opens", om, all_opens, "matrices differ"),
    ]


def _axiom_checks(space: BSpace) -> list[Check]:
    tt, ff = space.top_tt, space.top_ff
    both = lambda fn: fn(tt) and fn(ff)
    pairs = [
        ("T0 = join T0", sep.is_t0(space), sep.classical_t0(iota(space))),
        ("R0 = componentwise R0", sep.is_r0(space), both(sep.classical_r0)),
        ("R0 = closure form", sep.is_r0(space), sep.is_r0_via_closures(space)),
        ("R0 = symmetric form", both(sep.classical_r0), both(sep.classical_r0_symmetric)),
        ("R1 = componentwise R1", sep.is_r1(space), both(sep.classical_r1)),
        ("R1 = symmetrized omega", sep.is_r1(space), sep.is_r1_symmetrized(space)),
        ("R1 = closed specialization order", both(sep.classical_r1), both(sep.classical_r1_closed_order)),
        ("Hausdorff = join T0 and componentwise R1", sep.is_hausdorff(space), sep.classical_t0(iota(space)) and both(sep.classical_r1)),
        ("regular = componentwise regular", sep.is_regular(space), both(sep.classical_regular)),
        ("normal = componentwise normal", sep.is_normal(space), both(sep.classical_normal)),
    ]
    return [_cmp(n, a, b) for n, a, b in pairs]


def _point_checks(space: BSpace, max_elements: int) -> list[Check]:
    out = [
        _cmp(
            "irreducible closed: definition = component pairs",
            [(g.t, g.f) for g in irreducible_closed_bsets(space)],
            [(g.t, g.f) for g in irreducible_closed_pairs(space)],
        )
    ]
    bps = b_points(space)
    n_opens = len(space.top_tt) * len(space.top_ff)
    if n_opens <= max_elements:
        brute = sorted(sorted(t.items()) for t in b_points_bruteforce(space, max_elements))
        out.append(_cmp("B-points: filter pairs = brute force", sorted(sorted(p.table().items()) for p in bps), brute, f"{len(bps)} vs {len(brute)} B-points"))
    else:
        out.append(Check("B-points: filter pairs = brute force", SKIPPED, f"{n_opens} open B-sets exceeds {max_elements}"))
    gammas = {(g.t, g.f) for g in irreducible_closed_pairs(space)}
    out.append(_cmp("B-points <-> irreducible closed", {(g.t, g.f) for g in map(bpoint_to_gamma, bps)}, gammas))
    out.append(_cmp("B-point round trip", all(gamma_to_bpoint(space, bpoint_to_gamma(p)) == p for p in bps), True))
    out.append(_cmp("B-sober: B-points = closed pairs", is_b_sober(space), b_sober_via_pairs(space)))
    dps = {(g.t, g.f) for g in map(bpoint_to_gamma, d_points(space))}
    out.append(_cmp("d-points: filter pairs = pair conditions", dps, {(g.t, g.f) for g in d_point_pairs(space)}))
    try:
        homs = d_points_via_homs(space, max_elements)
        out.append(_cmp("d-points: filter pairs = d-frame homs", len(dps), len(homs)))
    except BoundExceeded as e:
        out.append(Check("d-points: filter pairs = d-frame homs", SKIPPED, str(e)))
    out.append(_cmp("d-sober: d-points = pair conditions", is_d_sober(space), d_sober_via_pairs(space)))
    return out


def _set_checks(space: BSpace, max_elements: int) -> list[Check]:
    out = []
    thetas = list(all_bsets(space.carrier))
    if len(list(space.bopens())) <= max_elements // 4:
        bad = [str(th) for th in thetas if not is_compact_literal(space, th)]
        out.append(Check("compact: literal = shortcut", DISAGREE if bad else AGREE, ", ".join(bad[:3])))
    else:
        out.append(Check("compact: literal = shortcut", SKIPPED, "too many open B-sets for directed families"))
    bad = [str(th) for th in thetas if is_saturated(space, th) != (saturate(space, th) == th)]
    out.append(Check("saturated = fixed by saturate", DISAGREE if bad else AGREE, ", ".join(bad[:3])))
    bad = [
        str(th)
        for th in thetas
        if ("F1" not in filter_axiom_failures(space, lambda lam, th=th: sub(th, lam))) != th.is_inhabited()
    ]
    out.append(Check("sub(theta,-) meets F1 = inhabited", DISAGREE if bad else AGREE, ", ".join(bad[:3])))
    return out


def run_oracles(space: BSpace, max_elements: int = 64) -> list[Check]:
    return (
        _omega_checks(space)
        + _axiom_checks(space)
        + _point_checks(space, max_elements)
        + _set_checks(space, max_elements)
    )
