import json
import shutil
import subprocess

import pytest

from picardcm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound_example1(capsys):
    code, out, _ = run(capsys, "bound", "--field-poly=1,-2,-1", "--mu=3,0,-2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["N_mu"] == {"sign": 1, "factors": {"2": "84", "7": "3", "13": "3"}}
    assert data["prime_set"] == [2, 3, 7, 13]
    assert data["t2"] == "19" and data["t2_cubed"] == "6859"


def test_bound_example2_table(capsys):
    code, out, _ = run(capsys, "bound", "--field-poly=-1,-4,-1", "--mu=5,2,-2")
    assert code == 0
    assert "N_mu       2^153*5^18*13^3*31^3*47^3" in out


def test_bound_deterministic_and_parallel(capsys):
    args = ["bound", "--field-poly=-28,-21,0", "--mu=0,2,0", "--json"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    _, c, _ = run(capsys, *args, "--parallel", "2")
    assert a == b == c


def test_bound_validation_errors(capsys):
    code, _, err = run(capsys, "bound", "--field-poly=1,-2,-1", "--mu=3,0,0")
    assert code == 2 and json.loads(err)["error"] == "mu generates no cubic field"
    code, _, err = run(capsys, "bound", "--field-poly=1,-2,-1", "--mu=3,0,-2", "--alt-isogeny")
    assert code == 2 and "not implemented" in err
    code, _, _ = run(capsys, "bound", "--field-poly=0,-1,0", "--mu=0,2,0")
    assert code == 2
    code, _, _ = run(capsys, "bound", "--field-poly=1,-2", "--mu=0,2,0")
    assert code == 2
    code, _, err = run(capsys, "bound", "--field-poly=1,-2,-1", "--mu=3,0,-2", "--t2", "5")
    assert code == 2


def test_bound_order_basis_file(capsys, tmp_path):
    from conftest import example_orders

    f, _, o, _ = example_orders(5)
    path = tmp_path / "order.json"
    path.write_text(json.dumps({"order_basis": [[str(x) for x in r] for r in o.rows]}))
    code, out, _ = run(capsys, "bound", "--field-poly=-28,-21,0", "--mu=0,2,0", "--order-basis", str(path), "--json")
    assert code == 0
    assert json.loads(out)["N_mu"]["factors"]["2"] == "433"
    path.write_text("{}")
    code, _, _ = run(capsys, "bound", "--field-poly=-28,-21,0", "--mu=0,2,0", "--order-basis", str(path))
    assert code == 2


def test_find_mu(capsys):
    code, out, _ = run(capsys, "find-mu", "--field-poly=-1,-4,-1", "--json")
    data = json.loads(out)
    assert code == 0 and data["t2_cap"] == "67" and data["count"] > 0
    assert all(int(c["t2"]) <= 67 for c in data["candidates"])
    code, out, _ = run(capsys, "find-mu", "--field-poly=-1,-4,-1", "--cap", "1", "--json")
    assert json.loads(out)["count"] == 0
    code, _, _ = run(capsys, "find-mu", "--field-poly=0,-1,0")
    assert code == 2


@pytest.fixture
def curve_file(tmp_path):
    p = tmp_path / "curve.json"
    p.write_text(json.dumps({"a": "-1274", "b": "24440", "c": "-130975"}))
    return str(p)


def test_invariants_and_classify(capsys, curve_file):
    code, out, _ = run(capsys, "invariants", "--curve", curve_file, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["invariants"]["j1"] == "-1529437/441800"
    assert data["denominators"]["den_abs"]["factors"] == {"2": "3", "5": "1", "47": "1"}
    code, out, _ = run(capsys, "classify", "--curve", curve_file, "--prime", "47", "--json")
    data = json.loads(out)
    assert data["case"] == 3 and data["a_bar_squared_mod_p"] == 361 % 47
    code, out, _ = run(capsys, "classify", "--curve", curve_file, "--prime", "7")
    assert "none" in out
    code, _, _ = run(capsys, "classify", "--curve", curve_file, "--prime", "3")
    assert code == 2
    code, _, _ = run(capsys, "invariants", "--curve", curve_file + ".missing")
    assert code == 2


def test_classpoly(capsys, tmp_path):
    p = tmp_path / "pts.json"
    p.write_text(json.dumps([{"j1": "1", "j2": "1"}, {"j1": "2", "j2": "3"}]))
    code, out, _ = run(capsys, "classpoly", "--points", str(p), "--json")
    data = json.loads(out)
    assert code == 0 and data["H1"] == ["2", "-3", "1"] and data["H2hat"] == ["-5", "4"]
    p.write_text(json.dumps([{"j1": "1", "j2": "1"}, {"j1": "1", "j2": "3"}]))
    assert run(capsys, "classpoly", "--points", str(p))[0] == 2


def test_constant_b(capsys):
    code, out, _ = run(capsys, "constant-B", "--field-poly=1,-2,-1", "--json")
    assert code == 0 and json.loads(out)["B"] == "15"
    code, out, _ = run(capsys, "constant-B", "--field-poly=1,-2,-1", "--include-sqrt-minus-3", "--json")
    assert json.loads(out)["B"] == "9"


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify-examples", "--ids", "1,2,5", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and [e["id"] for e in data["examples"]] == [1, 2, 5]
    assert run(capsys, "verify-examples", "--ids", "12")[0] == 2


def test_verify_examples_mismatch_exit_code(capsys, monkeypatch):
    import picardcm.cli as cli
    from picardcm.exact import FactoredNumber
    from picardcm.reference import load_examples

    records = load_examples()
    rec = records[1]
    broken = dict(rec.factored, N_mu=FactoredNumber({2: 1}))
    records[1] = type(rec)(**{**rec.__dict__, "factored": broken})
    monkeypatch.setattr(cli, "load_examples", lambda: records)
    code, out, _ = run(capsys, "verify-examples", "--ids", "1")
    assert code == 1 and "FAIL" in out and "N_mu" in out


@pytest.mark.skipif(shutil.which("picardcm") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["picardcm", "constant-B", "--field-poly=-1,-4,-1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("B = 27")
