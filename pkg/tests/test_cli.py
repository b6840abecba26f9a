import json
import subprocess
import sys

import pytest

from dimmonoid.cli import main
from dimmonoid.extnat import from_json_value, parse_vector
from dimmonoid.system import format_system, parse_system, system_from_dict

GS_TEXT = "# x >= y\nvars 2\nunit 1 1\nineq 1 0 >= 0 1\n"
SLOPE_TEXT = "vars 2\nunit 1 2\nineq 2 0 >= 0 1\n"
IV_TEXT = "vars 2\nunit 1 1\neq 2 0 = 1 1\nineq 1 0 >= 0 1\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "gs.sys": GS_TEXT, "nd.sys": SLOPE_TEXT, "iv.sys": IV_TEXT,
        "free.sys": "vars 2\nunit 1 1\ncong 1 1 mod 2\n",
        "bad.sys": "vars 2\nineq 1 0 >= 0\n",
        "nounit.sys": "vars 2\nineq 1 0 >= 0 1\n",
        "badunit.sys": "vars 2\nunit 1 2\nineq 1 0 >= 0 1\n",
        "g.txt": "1 1\n1,0  # comment\n",
        "free.txt": "(1,1)\n(2,0)\n(0,2)\n",
        "p.sys": "vars 1\ncong 1 mod 2\n",
        "c.mat": "1 1\n",
        "gs.json": json.dumps({"vars": 2, "unit": [1, 1], "ineq": [{"lhs": [1, 0], "rhs": [0, 1]}]}),
    }.items():
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_basic_examples(files, capsys):
    assert run(capsys, "member", files["gs.sys"], "3", "1") == (0, "true\n", "")
    assert run(capsys, "w-gens", files["gs.sys"]) == (0, "(1,0)\n(1,1)\n", "")
    code, out, err = run(capsys, "member", files["gs.sys"], "1", "2", "3")
    assert code == 2 and out == "" and "3 entries" in err


@pytest.mark.parametrize("argv,expected", [
    (["member", "gs.sys", "0", "inf"], "false\n"),
    (["member", "gs.json", "inf", "2"], "true\n"),
    (["classify", "gs.sys", "1", "0"], "W_minus_V\n"),
    (["classify", "gs.sys", "∞", "0"], "InfinitePart\n"),
    (["gens", "gs.sys"], "(1,0)\n(1,1)\n(inf,0)\n(inf,inf)\n"),
    (["v-gens", "free.sys"], "(0,2)\n(1,1)\n(2,0)\n"),
    (["dual", "gs.sys"], "vars 2\nunit 1 1\nineq 0 1 >= 1 0\n"),
    (["idempotents", "gs.sys"], "(0,0)\n(inf,0)\n(inf,inf)\n"),
    (["minimals", "nd.sys", "--mode", "W_minus_V"], "(1,0)\n(1,1)\n"),
    (["minimals", "nd.sys"], "(1,0)\n"),
    (["superdecomposable", "gs.sys", "inf", "inf"], "false\n"),
    (["full-affine", "g.txt"], "false witness (0,1)\n"),
    (["full-affine", "free.txt"], "true\n"),
    (["full-affine", "--system", "nd.sys"], "true\n"),
    (["synthesize", "free.txt"], "vars 2\ncong 1 1 mod 2\n"),
    (["synthesize", "--system", "gs.sys"], "vars 2\neq 0 1 = 1 0\n"),
    (["compose", "p.sys", "c.mat", "gs.sys"], "vars 2\nunit 1 1\ncong 1 1 mod 2\nineq 1 0 >= 0 1\n"),
    (["realize", "gs.sys"], "Intersection arity=2 children=1\n  Pullback [1 0; 0 1]\n    GS (x >= y)\n"),
    (["verify-realize", "gs.sys"], "true\n"),
    (["oracle", "gs.sys", "--bound", "1"], "(0,0)\n(1,0)\n(1,1)\n"),
])
def test_golden_outputs(files, capsys, argv, expected):
    argv = [files.get(a, a) for a in argv]
    code, out, err = run(capsys, *argv)
    assert (code, out) == (0, expected), err


def test_report_and_compare(files, capsys):
    code, out, _ = run(capsys, "report", files["iv.sys"], "--dual")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "idempotent_count 3"
    assert lines[-1] == "compare non-isomorphic by idempotent_count"
    code, out, _ = run(capsys, "report", files["gs.sys"], "--compare", files["gs.json"])
    assert out.splitlines()[-1] == "compare undecided"
    code, out, _ = run(capsys, "report", files["nd.sys"], "--dual")
    assert out.splitlines()[-1] == "compare non-isomorphic by w_generator_count,minimal_W_minus_V_count"


@pytest.mark.parametrize("argv,code,needle", [
    (["superdecomposable", "gs.sys", "0", "1"], 1, "witness (0,1)"),
    (["synthesize", "g.txt"], 1, "witness (0,1)"),
    (["member", "bad.sys", "1", "1"], 2, "error:"),
    (["member", "missing.sys", "1", "1"], 2, "error:"),
    (["member", "gs.sys", "1", "x"], 2, "bad N0* literal"),
    (["compose", "p.sys", "gs.sys", "gs.sys"], 2, "bad matrix row"),
])
def test_error_exit_codes(files, capsys, argv, code, needle):
    argv = [files.get(a, a) for a in argv]
    got, out, err = run(capsys, *argv)
    assert got == code and out == "" and needle in err


def test_unit_policy_warns_and_proceeds(files, capsys):
    code, out, err = run(capsys, "realize", files["badunit.sys"])
    assert code == 0 and "warning" in err and out.startswith("Intersection")
    code, out, err = run(capsys, "verify-realize", files["nounit.sys"])
    assert code == 0 and err == "" and out == "true\n"


def test_verify_realize_json(files, capsys):
    code, out, _ = run(capsys, "--format", "json", "verify-realize", files["gs.sys"], "--bound", "2")
    obj = json.loads(out)
    assert obj == {"command": "verify-realize", "bound": 2, "result": True, "counterexample": None}


def test_format_flag_positions(files, capsys):
    a = run(capsys, "--format", "json", "gens", files["gs.sys"])
    b = run(capsys, "gens", files["gs.sys"], "--format", "json")
    assert a == b
    obj = json.loads(a[1])
    assert obj["command"] == "gens"
    assert obj["generators"] == [[1, 0], [1, 1], ["inf", 0], ["inf", "inf"]]


def test_json_round_trips_through_text(files, capsys):
    _, text, _ = run(capsys, "dual", files["nd.sys"])
    _, js, _ = run(capsys, "--format", "json", "dual", files["nd.sys"])
    S = system_from_dict(json.loads(js)["system"])
    assert format_system(S) == text and parse_system(text) == S
    _, text, _ = run(capsys, "gens", files["gs.sys"])
    _, js, _ = run(capsys, "--format", "json", "gens", files["gs.sys"])
    from_json = [tuple(from_json_value(a) for a in v) for v in json.loads(js)["generators"]]
    assert from_json == [parse_vector(line) for line in text.splitlines()]
    _, js, _ = run(capsys, "--format", "json", "report", files["iv.sys"], "--dual")
    obj = json.loads(js)
    assert obj["verdict"] == "non-isomorphic" and obj["distinguishing"] == ["idempotent_count"]
    assert obj["report"]["idempotent_count"] == 3 and obj["other"]["idempotent_count"] == 2


def test_determinism(files, capsys):
    outs = {run(capsys, "--format", "json", "report", files["nd.sys"], "--dual")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "dimmonoid", "member", files["gs.sys"], "1", "2", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and "error" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "dimmonoid", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verify-realize" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "dimmonoid", "oracle", "--help"], capture_output=True, text=True)
    assert "default 4" in proc.stdout


def test_verify_realize_failure_exits_one(files, capsys, monkeypatch):
    from dimmonoid import realize

    monkeypatch.setattr(realize, "counterexample", lambda T, S, bound: ((1, 1), "dual"))
    assert run(capsys, "verify-realize", files["gs.sys"]) == (1, "false counterexample (1,1) dual\n", "")
