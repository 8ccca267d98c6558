import json
import subprocess
import sys

import pytest

from gpforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_example(capsys):
    code, out, err = run(capsys, "example")
    assert code == 0
    d = json.loads(out)
    assert d["schema"] == "gpforge/1" and d["verified"]
    assert d["record"]["curve"]["a"] == "142608512/250308167443425"
    assert "y^2 =" in err


def test_example_integer_model(capsys):
    code, out, _ = run(capsys, "example", "--integer-model")
    im = json.loads(out)["record"]["integer_model"]
    assert all(c.endswith("/1") for c in (im["curve"]["a"], im["curve"]["b"]))


def test_generate_multiple(capsys):
    code, out, _ = run(capsys, "generate", "--T", "2", "--n", "2", "--m", "1,2,3")
    d = json.loads(out)
    assert code == 0 and [r["m"] for r in d["records"]] == [1, 2, 3]
    assert len({(r["curve"]["a"], r["curve"]["b"]) for r in d["records"]}) == 3


@pytest.mark.parametrize("argv", [
    ["generate", "--T", "1", "--n", "2"],
    ["generate", "--T", "2", "--n", "2", "--m", "9"],
    ["generate", "--T", "2", "--n", "2", "--m", "x"],
    ["verify", "--p", "1", "--ratio", "2", "--range", "1..3"],
    ["verify", "--poly", "1,0,0,1", "--p", "1", "--ratio", "2", "--range", "13"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_degenerate_ratio_message(capsys):
    _, _, err = run(capsys, "generate", "--T", "1", "--n", "2", "--m", "1")
    assert "degenerate ratio" in err


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["generate"])
    assert exc.value.code == 2


def test_verify_example_curve(capsys):
    code, out, _ = run(capsys, "verify", "--curve",
                       "142608512/250308167443425,62553486161362657/65873099809751270400,2",
                       "--p", "1/512", "--ratio", "4", "--range", "1..8")
    assert code == 0 and len(json.loads(out)["hits"]) == 8


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--curve",
                       "142608512/250308167443425,62553486161362657/65873099809751270400,2",
                       "--height", "4", "--min-len", "8")
    seqs = json.loads(out)["sequences"]
    assert any(s["base"] == "1/128" and s["ratio"] == "4/1" for s in seqs)


def test_audit(capsys):
    code, out, err = run(capsys, "audit", "--t", "2,3,5/2", "--strict")
    statuses = {e["id"]: e["status"] for e in json.loads(out)["report"]["entries"]}
    assert code == 0
    assert statuses["EQ1_A"] == "REFUTED" and statuses["S4_CLOSED_FORMS"] == "CONFIRMED"


def test_length10(capsys):
    code, out, _ = run(capsys, "length10", "--t", "2", "--height", "10")
    d = json.loads(out)
    assert code == 0 and d["hits"] == [] and d["degenerate"]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "ex.json"
    assert main(["--out", str(path), "example"]) == 0
    assert json.loads(path.read_text())["command"] == "example"


def test_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "gpforge", "audit", "--t", "2,3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["schema"] == "gpforge/1"
