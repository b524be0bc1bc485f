import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from torslat import cli
from torslat.iso import IsoReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [json.loads(line) for line in out.splitlines()]


def test_ind(capsys):
    code, out, _ = run(capsys, "ind", "2")
    assert code == 0
    assert len(lines(out)) == 4
    assert lines(out)[0] == {"p": 1, "q": 1, "word": ""}


def test_hom(capsys):
    code, out, _ = run(capsys, "hom", "2", "1-2:R", "S1")
    assert code == 0
    data = lines(out)[0]
    assert data["hom_dim"] == data["oracle"] == 1


def test_hom_bad_module(capsys):
    code, out, err = run(capsys, "hom", "2", "banana", "S1")
    assert code == 2 and out == "" and "hom" in err


def test_lattice_json_and_dot(capsys):
    code, out, _ = run(capsys, "lattice", "2")
    data = json.loads(out)
    assert code == 0 and len(data["elements"]) == 6 and data["covers"][0] == [0, 1]
    _, out, _ = run(capsys, "lattice", "2", "--labels")
    assert json.loads(out)["covers"][0][2] == {"p": 1, "q": 1, "word": ""}
    _, out, _ = run(capsys, "lattice", "2", "--format", "dot", "--labels")
    assert out.startswith("digraph tors") and 'label="M[1-2:R]"' in out


def test_weak(capsys):
    code, out, _ = run(capsys, "weak", "2")
    data = json.loads(out)
    assert code == 0 and len(data["elements"]) == 6 and [2, 1, 0] in data["elements"]
    _, out, _ = run(capsys, "weak", "2", "--format", "dot")
    assert '"(0, 1, 2)" [label="012"]' in out


def test_cjc(capsys):
    code, out, _ = run(capsys, "cjc", "2")
    faces = lines(out)
    assert code == 0 and len(faces) == 6
    assert max(len(f["joinands"]) for f in faces) == 2


def test_arcs(capsys, tmp_path):
    code, out, _ = run(capsys, "arcs", "3")
    assert code == 0 and len(lines(out)) == 11
    _, out, _ = run(capsys, "arcs", "3", "--facets")
    assert len(lines(out)) == 11
    target = tmp_path / "arcs.svg"
    code, out, err = run(capsys, "arcs", "3", "--render", str(target))
    assert code == 0 and out == "" and "11" in err
    ET.parse(target)


def test_delta(capsys, tmp_path):
    code, out, _ = run(capsys, "delta", "210")
    assert code == 0
    assert lines(out)[0]["arcs"] == [{"b": 0, "t": 1, "sides": {}}, {"b": 1, "t": 2, "sides": {}}]
    target = tmp_path / "d.svg"
    code, _, _ = run(capsys, "delta", "210", "--render", str(target))
    assert code == 0 and "<path" in target.read_text()
    code, _, err = run(capsys, "delta", "211")
    assert code == 2 and "permutation" in err


def test_phi(capsys):
    code, out, _ = run(capsys, "phi", "2", "--class", "5")
    data = lines(out)[0]
    assert code == 0 and data["phi"] == data["phi_via_cjr"] == [2, 1, 0]
    code, _, err = run(capsys, "phi", "2", "--class", "6")
    assert code == 2 and "class id" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "3")
    data = lines(out)[0]
    assert code == 0 and data["sizes"] == [24, 24] and data["failures"] == []


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_isomorphism",
                        lambda n: IsoReport(n, (1, 2), bijective=False, failures=["phi misses 1"]))
    code, out, err = run(capsys, "verify", "2")
    assert code == 1 and "phi misses 1" in err and lines(out)[0]["bijective"] is False


def test_budget_exit_code(capsys, monkeypatch):
    from torslat import iso
    iso.tors_lattice.cache_clear()
    monkeypatch.setenv("TORSLAT_BUDGET", "3")
    code, _, err = run(capsys, "lattice", "2")
    iso.tors_lattice.cache_clear()
    assert code == 1 and "more than 3 torsion classes" in err


@pytest.mark.parametrize("argv", [[], ["ind"], ["ind", "zero"], ["ind", "0"], ["lattice", "2", "--format", "png"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2
    out, err = capsys.readouterr()
    assert out == "" and "usage" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "torslat", "ind", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"p": 1, "q": 1, "word": ""}
