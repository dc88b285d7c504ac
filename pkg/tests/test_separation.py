import pytest

from bitop.bsets import Carrier
from bitop.catalog import CATALOG, get
from bitop.search import PREDICATES
from bitop.separation import (
    AXIOM_NAMES,
    AxiomReport,
    audit_implications,
    audit_report,
    check,
    classical_r0,
    classical_regular,
    classical_t0,
    classical_t1,
    classify,
    is_pairwise_hausdorff,
    is_pairwise_hausdorff_diagonal,
    t0_classes,
    t0_reflection,
)
from bitop.spaces import is_homeomorphic, omega
from bitop.topology import FinTopology


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_expectations(name):
    e = CATALOG[name]
    for axiom, want in e.expected.items():
        assert PREDICATES[axiom](e.space) == want, axiom


def test_sierpinski_two_points():
    t = FinTopology.from_sets("ab", [[], ["a"], ["a", "b"]])
    assert classical_t0(t) and not classical_t1(t) and not classical_r0(t)


def test_partition_topology():
    c = Carrier(("aa", "ab", "ba", "bb"))
    t = FinTopology.from_sets(c, [[], ["aa", "ab"], ["ba", "bb"], list(c.points)])
    s = omega(t)
    assert check(s, "R0") and check(s, "R1") and check(s, "regular") and not check(s, "T0")
    assert classical_regular(t)


def test_report_rendering():
    r = classify(get("T4X3"))
    lines = r.render("kv").splitlines()
    assert lines[0] == "space = T4X3"
    assert [ln.split(" = ")[0] for ln in lines[1:]] == list(AXIOM_NAMES)
    assert "T4 = true" in lines and "pairwiseNormal = false" in lines
    assert "T4" in r.render("text")


def test_audit_negative_path():
    assert audit_implications(classify(e.space) for e in CATALOG.values()) == []
    bad = AxiomReport("broken", {a: False for a in AXIOM_NAMES} | {"T4": True})
    found = audit_report(bad)
    assert "broken: T4 => T3 fails" in found


def test_pairwise_hausdorff_variants_on_catalog():
    for e in CATALOG.values():
        if is_pairwise_hausdorff(e.space):
            assert is_pairwise_hausdorff_diagonal(e.space)


def test_t0_reflection():
    assert len(t0_classes(get("DOT22"))) == 4
    refl, _ = t0_reflection(get("T4X3"))
    assert is_homeomorphic(refl, get("T4X3"))
    one, mapping = t0_reflection(omega(FinTopology.indiscrete("ab")))
    assert len(one) == 1 and set(mapping) == {"a", "b"}


def test_unknown_axiom():
    with pytest.raises(ValueError, match="unknown axiom"):
        check(get("T4X3"), "T5")
