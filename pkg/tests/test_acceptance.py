"""The nine acceptance criteria, each reported on one summary line."""

import time
from itertools import combinations

from conftest import record

from bitop import cli
from bitop.bvals import ALL, FF, TOP, TT, BOT
from bitop.catalog import CATALOG
from bitop.dframes import DFrame, b_slice, dO, f_functor, validate_dframe
from bitop.hofmann_mislove import verify_hm
from bitop.oracle import AGREE, SKIPPED, _axiom_checks, _omega_checks, _point_checks
from bitop.search import PREDICATES, audit_all
from bitop.separation import EDGES, EQUIVALENCES, check
from bitop.sobriety import discrepancy_report, is_b_sober, is_d_sober, is_join_sober, sobrify
from bitop.spaces import is_homeomorphic

T4X3_OMEGA = {
    ("x", "x"): "1", ("x", "y"): "tt", ("x", "z"): "0",
    ("y", "x"): "tt", ("y", "y"): "1", ("y", "z"): "ff",
    ("z", "x"): "0", ("z", "y"): "ff", ("z", "z"): "1",
}


def test_1_omega_table(capsys):
    start = time.perf_counter()
    code = cli.main(["order", "T4X3"])
    elapsed = time.perf_counter() - start
    got = {}
    for line in capsys.readouterr().out.splitlines():
        key, val = line.split(" = ")
        x, y = key[len("omega("):-1].split(",")
        got[(x, y)] = val
    passed = code == 0 and got == T4X3_OMEGA and elapsed < 1.0
    record(1, passed, f"9/9 entries {'match' if got == T4X3_OMEGA else 'DIFFER'}; {elapsed:.3f}s")
    assert passed


EXAMPLE_SUITE = {
    "T4X3": {
        "T1": True, "T4": True, "T3": True, "Hausdorff": True,
        "pairwiseRegular": False, "pairwiseNormal": False, "pairwiseHausdorff": False,
    },
    "PNORM3": {"pairwiseNormal": True, "normal": False},
    "SIERP": {"T0": True, "b_sober": True},
    "DOT22": {"T1": True, "Hausdorff": True, "b_sober": True, "cwT0": False},
    "CHAIN2": {"joinT1": True, "R0": False},
}


def test_2_example_suite():
    start = time.perf_counter()
    wrong = [
        f"{name}.{ax}"
        for name, facts in EXAMPLE_SUITE.items()
        for ax, want in facts.items()
        if PREDICATES[ax](CATALOG[name].space) != want
    ]
    elapsed = time.perf_counter() - start
    n = sum(len(f) for f in EXAMPLE_SUITE.values())
    passed = not wrong and elapsed < 5.0
    record(2, passed, f"{n - len(wrong)}/{n} facts match; {elapsed:.2f}s {' '.join(wrong)}")
    assert passed


def test_3_implication_audit():
    start = time.perf_counter()
    res = audit_all(3)
    elapsed = time.perf_counter() - start
    passed = res.spaces == 841 and not res.violations and elapsed < 60.0
    record(3, passed, f"{res.spaces} spaces, {len(EDGES)} edges + {len(EQUIVALENCES)} equivalences, "
           f"{len(res.violations)} violations; {elapsed:.1f}s")
    assert len(EDGES) == 10 and len(EQUIVALENCES) == 5
    assert passed, res.violations[:5]


def test_4_dual_paths(spaces3):
    disagreements, skipped, total = [], 0, 0
    for s in spaces3:
        for c in _omega_checks(s) + _axiom_checks(s) + _point_checks(s, 64):
            total += 1
            if c.status == SKIPPED:
                skipped += 1
            elif c.status != AGREE:
                disagreements.append(f"{s.name}: {c.name}")
    passed = not disagreements and not skipped
    record(4, passed, f"{total} checks on {len(spaces3)} spaces, {len(disagreements)} disagreements, {skipped} skipped")
    assert passed, disagreements[:5]


def test_5_sobriety_chain(spaces3):
    bad = []
    for s in spaces3:
        b, d, j = is_b_sober(s), is_d_sober(s), is_join_sober(s)
        if b and not d:
            bad.append(f"{s.name}: B-sober but not d-sober")
        if d and not j:
            bad.append(f"{s.name}: d-sober but not join sober")
        if check(s, "Hausdorff") and not d:
            bad.append(f"{s.name}: Hausdorff but not d-sober")
    record(5, not bad, f"{len(spaces3)} spaces, {len(bad)} violations")
    assert not bad, bad[:5]


def test_6_sobrification():
    bad = []
    for name, e in CATALOG.items():
        s = e.space
        sob = sobrify(s)
        if not is_b_sober(sob.space):
            bad.append(f"{name}: output not B-sober")
        if sob.is_unit_homeomorphism(s) != is_b_sober(s):
            bad.append(f"{name}: unit homeomorphism = {sob.is_unit_homeomorphism(s)}, B-sober = {is_b_sober(s)}")
        if not is_homeomorphic(sobrify(sob.space).space, sob.space):
            bad.append(f"{name}: not idempotent")
    record(6, not bad, f"{len(CATALOG)} catalog spaces, {len(bad)} failures")
    assert not bad, bad


def test_7_hofmann_mislove():
    details, ok = [], True
    for name in ("SIERP", "DOT22", "T4X3"):
        start = time.perf_counter()
        r = verify_hm(CATALOG[name].space)
        elapsed = time.perf_counter() - start
        if name == "T4X3":
            good = not r["failures"] and r["eq_ii_holds"]
        else:
            good = r["b_sober"] and r["bijection_holds"] and r["eq_ii_holds"] and not r["failures"]
        good = good and elapsed < 10.0
        ok = ok and good
        details.append(f"{name} {'ok' if good else 'FAIL'} ({r['n_saturated_inhabited']}<->{r['n_bfilters']}, {elapsed:.2f}s)")
    record(7, ok, "; ".join(details))
    assert ok


def test_8_dframes():
    bad = []
    for name, e in CATALOG.items():
        d = dO(e.space)
        bad += [f"{name} dO {v}" for v in validate_dframe(d)]
        bad += [f"{name} F {v}" for v in validate_dframe(f_functor(d.slice))]
    subsets = [frozenset(c) for k in range(5) for c in combinations(ALL, k)]
    valid = [(c, t) for c in subsets for t in subsets if not validate_dframe(DFrame(b_slice(), c, t))]
    unique = valid == [(frozenset({BOT, TT, FF}), frozenset({TT, FF, TOP}))]
    passed = not bad and unique
    record(8, passed, f"{2 * len(CATALOG)} d-frames valid: {not bad}; valid (con,tot) pairs on B: {len(valid)}")
    assert passed, bad


def test_9_discrepancy_report(capsys):
    r = discrepancy_report(CATALOG["T4X3"].space)
    cli.main(["sobriety", "T4X3"])
    out = capsys.readouterr().out
    shown = "audit.criterion = true" in out and "audit.b_sober_direct = false" in out
    passed = r["criterion"] is True and r["b_sober_direct"] is False and not r["agree"] and shown
    record(9, passed, f"T4X3: criterion={str(r['criterion']).lower()}, "
           f"direct B-sober={str(r['b_sober_direct']).lower()}, witness {r.get('witness')}")
    assert passed
