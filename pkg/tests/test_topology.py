import pytest
from hypothesis import given, strategies as st

from bitop.bsets import Carrier
from bitop.topology import (
    FinTopology,
    TopologyError,
    enumerate_preorders,
    enumerate_topologies,
    generate_topology,
    irreducible_closed_sets,
)

XYZ = Carrier(("x", "y", "z"))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 4), (3, 29), (4, 355)])
def test_topology_counts(n, count):
    # number of preorders on n labelled points
    assert len(enumerate_preorders(n)) == count


def test_generate():
    ab = Carrier(("a", "b"))
    assert generate_topology(ab, [["a"]]).opens == {0, 1, 3}
    assert generate_topology(ab, []).opens == {0, 3}
    t = generate_topology(XYZ, [["x", "y"], ["z"]])
    assert t.opens == {0, XYZ.mask("xy"), XYZ.mask("z"), XYZ.full}


def test_validation_reports_witness():
    with pytest.raises(TopologyError) as e:
        FinTopology.from_sets(XYZ, [[], ["x"], ["y"], ["x", "y", "z"]])
    assert e.value.witness
    with pytest.raises(TopologyError):
        FinTopology.from_sets(XYZ, [[], ["x"]])


tops3 = st.sampled_from(enumerate_topologies(XYZ))
masks3 = st.integers(0, 7)


@given(tops3, masks3, masks3)
def test_closure_laws(t, a, b):
    cl = t.closure
    assert a & ~cl(a) == 0
    assert cl(cl(a)) == cl(a)
    assert cl(a | b) == cl(a) | cl(b)
    assert t.is_closed(cl(a))
    assert t.interior(a) == XYZ.full & ~cl(XYZ.full & ~a)


@given(tops3)
def test_preorder_round_trip(t):
    # the specialization preorder regenerates the topology as its up-sets
    up = tuple(sum(1 << y for y in range(3) if t.leq(x, y)) for x in range(3))
    assert FinTopology.from_preorder(XYZ, up) == t


@given(tops3)
def test_irreducible_closed_are_point_closures_up_to_kolmogorov(t):
    # on a finite space every irreducible closed set is the closure of a point
    assert set(irreducible_closed_sets(t)) == set(t.point_closures)
