import subprocess
import sys

import pytest

from bitop import cli
from bitop.catalog import get
from bitop.sobriety import is_b_sober
from bitop.spaces import is_homeomorphic, parse_space


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "T4X3")
    assert code == 0 and "T4 = true" in out and "pairwiseNormal = false" in out
    code, out, _ = run(capsys, "classify", "PNORM3")
    assert "pairwiseNormal = true" in out and "normal = false" in out


def test_bad_file(capsys, tmp_path):
    p = tmp_path / "bad.space"
    p.write_text("points: a b\ntt-opens: {} {a}\nff-opens: {} {a b}\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 1 and "line 2" in err
    code, _, err = run(capsys, "oracle", str(p))
    assert code == 1
    code, _, err = run(capsys, "classify", "NOPE")
    assert code == 1 and "catalog" in err


def test_order_formats(capsys):
    _, kv, _ = run(capsys, "order", "T4X3")
    assert "omega(y,z) = ff" in kv.splitlines()
    _, text, _ = run(capsys, "--format", "text", "order", "T4X3")
    assert " y | tt  1 ff" in text


def test_sobriety_and_hm(capsys):
    code, out, _ = run(capsys, "sobriety", "T4X3")
    assert code == 0
    assert "b_sober = false" in out and "d_sober = true" in out and "witness = ({z}, {x})" in out
    code, out, _ = run(capsys, "hm", "SIERP")
    assert code == 0 and "bijection_holds = true" in out
    _, out, _ = run(capsys, "hm", "T4X3")
    assert "bijection_holds = n/a" in out


def test_sobrify_writes_space(capsys, tmp_path):
    p = tmp_path / "t4x3-sob.space"
    code, _, _ = run(capsys, "sobrify", "T4X3", "-o", str(p))
    assert code == 0
    s = parse_space(p.read_text())
    assert s.points == ("g0", "g1", "g2", "g3") and is_b_sober(s)
    code, _, _ = run(capsys, "sobrify", "SIERP", "-o", str(p))
    assert is_homeomorphic(parse_space(p.read_text()), get("SIERP"))


def test_dframe_and_catalog(capsys):
    code, out, _ = run(capsys, "dframe", "T4X3")
    assert code == 0 and "violations = none" in out and "elements = 16" in out
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and out.count("; ok;") == 5
    code, out, _ = run(capsys, "catalog", "CHAIN2", "--show")
    assert parse_space(out) == get("CHAIN2")


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--points", "3", "--check-implications")
    assert code == 0 and "spaces = 841" in out and "violations = 0" in out
    code, out, _ = run(capsys, "search", "--points", "2", "--find", "joinT1 & !T1")
    assert code == 0 and "# homeomorphic to CHAIN2" in out
    code, _, err = run(capsys, "search", "--points", "2", "--find", "T1 &")
    assert code == 1
    code, _, _ = run(capsys, "search", "--points", "9", "--check-implications")
    assert code == 1


@pytest.mark.parametrize("name", ["T4X3", "SIERP"])
def test_oracle_agrees(capsys, name):
    code, out, _ = run(capsys, "oracle", name)
    assert code == 0
    assert "disagree" not in out and out.count("= agree") >= 20


def test_output_is_deterministic(capsys):
    first = run(capsys, "search", "--points", "2", "--find", "T1 & !cwT0")
    assert run(capsys, "search", "--points", "2", "--find", "T1 & !cwT0") == first


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "bitop", "order", "CHAIN2"], capture_output=True, text=True)
    assert r.returncode == 0 and "omega(0,1) = ff" in r.stdout
