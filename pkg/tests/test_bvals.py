import pytest
from hypothesis import given, strategies as st

from bitop.bvals import ALL, BOT, FF, TOP, TT, BVal, from_flags, implies, join, join_all, leq, meet, meet_all, neg

vals = st.sampled_from(ALL)


def test_named_values():
    assert neg(BOT) is TOP
    assert meet(TT, FF) is BOT and join(TT, FF) is TOP
    assert implies(TT, FF) is FF


def test_text_round_trip():
    for v in ALL:
        assert BVal.parse(str(v)) is v
    assert [str(v) for v in ALL] == ["0", "ff", "tt", "1"]
    with pytest.raises(ValueError):
        BVal.parse("true")


def test_operators_match_functions():
    for a in ALL:
        assert ~a is neg(a)
        for b in ALL:
            assert a & b is meet(a, b)
            assert a | b is join(a, b)


@given(vals, vals, vals)
def test_distributive_lattice(a, b, c):
    assert meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
    assert join(a, meet(b, c)) == meet(join(a, b), join(a, c))
    assert meet(a, meet(b, c)) == meet(meet(a, b), c)


@given(vals, vals)
def test_boolean_laws(a, b):
    assert meet(a, neg(a)) is BOT and join(a, neg(a)) is TOP
    assert neg(meet(a, b)) == join(neg(a), neg(b))
    assert neg(neg(a)) is a
    assert leq(a, b) == (meet(a, b) == a)


@given(vals, vals, vals)
def test_residuation(a, b, c):
    assert leq(meet(c, a), b) == leq(c, implies(a, b))


def test_implication_is_top_exactly_on_order():
    for a in ALL:
        for b in ALL:
            assert (implies(a, b) is TOP) == leq(a, b)


def test_flags_and_folds():
    assert from_flags(True, False) is TT and from_flags(False, True) is FF
    assert meet_all([]) is TOP and join_all([]) is BOT
    assert join_all([TT, FF]) is TOP
