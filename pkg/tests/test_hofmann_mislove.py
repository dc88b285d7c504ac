import pytest

from bitop.bsets import all_bsets, const_set, parse_bset, point_set, sub
from bitop.bvals import BOT, TOP, TT, meet
from bitop.catalog import CATALOG, get
from bitop.hofmann_mislove import (
    BFilter,
    FilterError,
    enumerate_bfilters,
    filter_axiom_failures,
    filter_of_set,
    is_compact,
    is_compact_literal,
    is_saturated,
    saturate,
    set_of_filter,
    verify_hm,
)
from bitop.separation import check
from bitop.spaces import omega
from bitop.topology import FinTopology


def test_compactness():
    s = get("T4X3")
    assert all(is_compact_literal(s, th) for th in all_bsets(s.carrier))
    assert is_compact(s, const_set(s.carrier, TOP))


def test_opens_are_saturated():
    for e in CATALOG.values():
        assert all(is_saturated(e.space, lam) for lam in e.space.open_bsets())


def test_saturate_example():
    s = get("T4X3")
    assert saturate(s, point_set(s.carrier, "x")) == parse_bset(s.carrier, "tt{x y} ff{x}")


@pytest.mark.parametrize("name", list(CATALOG))
def test_saturate_is_least_saturated_above(name):
    s = get(name)
    lams = list(all_bsets(s.carrier))
    sats = [th for th in lams if is_saturated(s, th)]
    for th in lams[:: 3 if len(lams) > 64 else 1]:
        hull = saturate(s, th)
        assert th <= hull and is_saturated(s, hull) and saturate(s, hull) == hull
        assert all(hull <= m for m in sats if th <= m)
        assert is_saturated(s, th) == (hull == th)


def test_filter_of_set():
    s = get("T4X3")
    c = s.carrier
    whole = filter_of_set(s, const_set(c, TOP))
    for lam in s.open_bsets():
        assert whole(lam) == sub(const_set(c, TOP), lam)
    f = filter_of_set(s, saturate(s, point_set(c, "x")))
    assert f(parse_bset(c, "tt{x y} ff{x}")) is TOP
    assert f(parse_bset(c, "tt{z}")) is BOT
    with pytest.raises(FilterError, match="not inhabited"):
        filter_of_set(s, parse_bset(c, "tt{z}"))


def test_set_of_filter():
    s = get("T4X3")
    c = s.carrier
    assert set_of_filter(s, filter_of_set(s, const_set(c, TOP))) == const_set(c, TOP)
    flt = BFilter(
        s,
        frozenset(u for u in s.top_tt.opens if u & c.mask("x")),
        frozenset(v for v in s.top_ff.opens if v & c.mask("x")),
    )
    assert set_of_filter(s, flt) == saturate(s, point_set(c, "x"))
    with pytest.raises(FilterError):
        set_of_filter(s, BFilter(s, frozenset(s.top_tt.opens), frozenset({c.full})))


def test_filter_counts():
    assert len(enumerate_bfilters(get("SIERP"))) == 4
    assert len(enumerate_bfilters(omega(FinTopology.discrete(["a"])))) == 1


@pytest.mark.parametrize("name", list(CATALOG))
def test_filters_commute_with_tt(name):
    s = get(name)
    for f in enumerate_bfilters(s):
        for lam in s.open_bsets():
            assert f(const_set(s.carrier, TT) & lam) == meet(TT, f(lam))


def test_principal_filters_are_all_filters():
    # brute force over every family of opens on the Sierpinski space
    s = get("SIERP")
    tt, ff = sorted(s.top_tt.opens), sorted(s.top_ff.opens)
    found = set()
    for a in range(1 << len(tt)):
        for b in range(1 << len(ff)):
            f = BFilter(s, frozenset(u for i, u in enumerate(tt) if a >> i & 1), frozenset(v for i, v in enumerate(ff) if b >> i & 1))
            if not filter_axiom_failures(s, f):
                found.add(f.key())
    assert found == {f.key() for f in enumerate_bfilters(s)}


def test_sub_filter_iff_inhabited(spaces2):
    for s in spaces2:
        for th in all_bsets(s.carrier):
            bad = filter_axiom_failures(s, lambda lam, th=th: sub(th, lam))
            assert ("F1" not in bad) == th.is_inhabited()
            assert (not bad) == th.is_inhabited()


@pytest.mark.parametrize("name", list(CATALOG))
def test_verify_hm(name):
    r = verify_hm(get(name))
    assert not r["failures"] and r["eq_ii_holds"]
    if r["b_sober"]:
        assert r["bijection_holds"]
    else:
        assert r["bijection_holds"] is None


def test_hm_counts():
    r = verify_hm(get("SIERP"))
    assert r["n_saturated_inhabited"] == r["n_bfilters"] == 4


def test_compact_hausdorff_is_normal(spaces3):
    for s in spaces3:
        if check(s, "compact") and (check(s, "Hausdorff") or check(s, "regular")):
            assert check(s, "normal")
