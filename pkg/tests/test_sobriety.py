import pytest

from bitop.bsets import BSet, const_set
from bitop.bvals import TOP
from bitop.catalog import CATALOG, get
from bitop.separation import check, classical_sober
from bitop.sobriety import (
    b_points,
    b_points_bruteforce,
    bpoint_to_gamma,
    d_points,
    d_sobrify,
    discrepancy_report,
    gamma_to_bpoint,
    irreducible_closed_bsets,
    irreducible_closed_pairs,
    is_b_sober,
    is_d_sober,
    point_embedding,
    representing_points,
    sobriety_report,
    sobrify,
)
from bitop.spaces import dot_product, is_homeomorphic, omega
from bitop.topology import FinTopology


def test_t4x3_irreducible_closed():
    s = get("T4X3")
    c = s.carrier
    got = {(g.t, g.f) for g in irreducible_closed_bsets(s)}
    want = {(c.mask(k), c.mask(kk)) for k in ("z", "xy") for kk in ("x", "yz")}
    assert got == want


def test_counts():
    assert len(irreducible_closed_bsets(get("SIERP"))) == 4
    one = omega(FinTopology.discrete(["a"]))
    assert irreducible_closed_bsets(one) == [const_set(one.carrier, TOP)]
    assert len(b_points(one)) == 1


def test_sierpinski_points_are_evaluations():
    s = get("SIERP")
    pts = b_points(s)
    assert len(pts) == 4
    assert {point_embedding(s, x) for x in s.points} == set(pts)
    assert is_b_sober(s)


def test_t4x3_extra_point():
    s = get("T4X3")
    c = s.carrier
    pts = b_points(s)
    assert len(pts) == 4
    extra = gamma_to_bpoint(s, BSet(c, c.mask("z"), c.mask("x")))
    assert extra in pts and representing_points(s, extra) == []
    assert not is_b_sober(s)
    assert is_d_sober(s) and extra not in d_points(s)


def test_bruteforce_bound():
    with pytest.raises(ValueError, match="bound"):
        b_points_bruteforce(get("DOT22"), bound=8)


@pytest.mark.parametrize("name", list(CATALOG))
def test_point_gamma_correspondence(name):
    s = get(name)
    gammas = irreducible_closed_pairs(s)
    assert sorted((g.t, g.f) for g in map(bpoint_to_gamma, b_points(s))) == [(g.t, g.f) for g in gammas]
    for g in gammas:
        assert bpoint_to_gamma(gamma_to_bpoint(s, g)) == g


def test_hausdorff_catalog_spaces_are_d_sober():
    for e in CATALOG.values():
        if check(e.space, "Hausdorff"):
            assert is_d_sober(e.space)


def test_sober_spaces_are_t0(spaces3):
    for s in spaces3:
        if is_b_sober(s) or is_d_sober(s):
            assert check(s, "T0")


def test_sobrify_t4x3():
    s = get("T4X3")
    sob = sobrify(s)
    assert len(sob.space) == 4 and is_b_sober(sob.space)
    assert sob.is_unit_bijective() is False and len(set(sob.unit.values())) == 3


def test_sobrify_sierpinski_fixed():
    s = get("SIERP")
    sob = sobrify(s)
    assert sob.is_unit_homeomorphism(s)


def test_sobrify_omega_is_dot_of_sobrifications():
    for t in (FinTopology.from_sets("ab", [[], ["a"], ["a", "b"]]), FinTopology.indiscrete("ab")):
        sob = sobrify(omega(t)).space
        sob_x = _classical_sobrification(t)
        assert classical_sober(sob_x)
        assert is_homeomorphic(sob, dot_product(sob_x, sob_x))


def _classical_sobrification(t):
    """Points are irreducible closed sets; opens are the sets of those meeting an open."""
    from bitop.bsets import Carrier
    from bitop.topology import irreducible_closed_sets

    ks = irreducible_closed_sets(t)
    c = Carrier(tuple(f"k{i}" for i in range(len(ks))))
    return FinTopology(c, frozenset(sum(1 << i for i, k in enumerate(ks) if k & u) for u in t.opens))


def test_d_sobrify():
    t = get("T4X3")
    assert is_homeomorphic(d_sobrify(t), t)
    assert is_homeomorphic(d_sobrify(get("SIERP")), get("SIERP"))
    chain = get("CHAIN2")
    assert len(d_sobrify(chain)) == len(d_points(chain))


@pytest.mark.parametrize("name", list(CATALOG))
def test_d_sobrify_is_d_sober(name):
    assert is_d_sober(d_sobrify(get(name)))


def test_reports():
    r = sobriety_report(get("T4X3"))
    assert r["b_sober"] is False and r["d_sober"] is True and r["witness"]
    assert set(r) == {"b_points", "d_points", "b_sober", "d_sober", "join_sober", "witness"}
    d = discrepancy_report(get("T4X3"))
    assert d["criterion"] is True and d["b_sober_direct"] is False
    assert discrepancy_report(get("SIERP"))["agree"] is True
