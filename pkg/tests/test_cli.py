"""Command-line behavior: exit codes, reports, determinism."""

import json

import pytest

from lrsnet.cli import main
from lrsnet.constraints import derive_zero_sets, format_pattern

TOY_JSON = json.dumps({
    "h": 4, "r": [1, 3, 2, 3],
    "S": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
    "t": 2, "rho": 2, "ell": 3,
})


@pytest.fixture
def toy_instance(tmp_path):
    path = tmp_path / "toy.json"
    path.write_text(TOY_JSON)
    return str(path)


@pytest.fixture
def toy_pattern(tmp_path):
    sc = derive_zero_sets([{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}],
                          (1, 3, 2, 3), (6, 7, 2, 8))
    path = tmp_path / "toy.pattern"
    path.write_text(format_pattern(sc))
    return str(path)


def test_check_toy_pattern_holds(toy_pattern, capsys):
    rc = main(["check", toy_pattern, "--n", "23"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["holds"] and out["cover_dim"] == 9
    assert out["k"] == 9


def test_check_violating_pattern(tmp_path, capsys):
    path = tmp_path / "bad.pattern"
    path.write_text("1\n1\n")
    rc = main(["check", str(path), "--n", "2"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert out["witness"] == [1, 2]


def test_check_empty_sets_hold(tmp_path, capsys):
    path = tmp_path / "free.pattern"
    path.write_text("-\n-\n")
    rc = main(["check", str(path), "--n", "4"])
    assert rc == 0


def test_check_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.pattern"
    path.write_text("1 2\nnope\n")
    rc = main(["check", str(path), "--n", "4"])
    assert rc == 2
    assert "line 2" in capsys.readouterr().err


def test_construct_micro_pattern(tmp_path, capsys):
    path = tmp_path / "micro.pattern"
    path.write_text("2\n1\n")
    out_file = tmp_path / "code.json"
    rc = main(["construct", str(path), "--n", "4", "--ell", "2",
               "--parts", "2,2", "--q", "3", "--m", "2", "--out", str(out_file)])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert doc["distance"] == 3 and doc["distance_optimal"]
    assert doc["support_ok"]
    from lrsnet.construct import from_json

    cc = from_json(out_file.read_text())
    assert len(cc.matrix) == 2


def test_construct_refuses_violating_without_subcode(tmp_path, capsys):
    path = tmp_path / "bad.pattern"
    path.write_text("1\n1\n")
    rc = main(["construct", str(path), "--n", "4", "--ell", "2", "--parts", "2,2"])
    assert rc == 1
    captured = capsys.readouterr()
    assert "witness" in captured.out
    assert "--subcode" in captured.err


def test_construct_subcode_rows(tmp_path, capsys):
    path = tmp_path / "bad.pattern"
    path.write_text("1\n1\n")
    rc = main(["construct", str(path), "--n", "4", "--ell", "2",
               "--parts", "2,2", "--subcode"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert doc["cover_dim"] == 3
    assert doc["distance"] == 2 and doc["distance_optimal"]


def test_design_toy(toy_instance, capsys):
    rc = main(["design", toy_instance])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert doc["n"] == 23 and doc["distance"] == 15
    assert doc["cover_dim"] == 9
    assert doc["parts"] == [8, 7, 8]


def test_design_table_sweep(toy_instance, tmp_path, capsys):
    out_file = tmp_path / "table.json"
    rc = main(["design", toy_instance, "--table", "4", "--out", str(out_file)])
    assert rc == 0
    rows = json.loads(out_file.read_text())
    assert [(r["n"], r["distance"]) for r in rows] == [
        (15, 7), (19, 11), (23, 15), (27, 19)]
    assert [r["q"] for r in rows] == [2, 3, 4, 5]
    assert [r["cover_dim"] for r in rows] == [9, 9, 9, 9]
    assert rows[1]["parts"] == [10, 9]
    text = capsys.readouterr().out
    assert "[23,9,15]" in text


def test_tables_alias(toy_instance, capsys):
    rc = main(["tables", toy_instance, "--lmax", "2"])
    assert rc == 0
    assert "[19,9,11]" in capsys.readouterr().out


def test_design_unreachable_message(tmp_path, capsys):
    doc = {"h": 2, "r": [1, 1], "S": [[1]], "t": 0, "rho": 0, "ell": 1}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    rc = main(["design", str(path)])
    assert rc == 2
    assert "message 2" in capsys.readouterr().err


def test_simulate_no_adversary_recovers(tmp_path, capsys):
    # micro instance with t = rho = 0: every decode trial must succeed
    doc = {"h": 2, "r": [1, 1], "S": [[1, 2], [1, 2]], "t": 0, "rho": 0, "ell": 2}
    inst_path = tmp_path / "inst.json"
    inst_path.write_text(json.dumps(doc))
    design_path = tmp_path / "design.json"
    rc = main(["design", str(inst_path), "--build", "--out", str(design_path)])
    assert rc == 0
    capsys.readouterr()
    rc = main(["simulate", str(design_path), "--trials", "40"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["channel"]["bounds_ok"]
    assert out["decode"]["successes"] == out["decode"]["trials"]


def test_simulate_adversarial_micro_design(tmp_path, capsys):
    # two fully informed sources, one malicious node: the designed [4,2,3]
    # code over F_16 corrects the injected weight-1 errors in every trial
    doc = {"h": 2, "r": [1, 1], "S": [[1, 2], [1, 2]], "t": 1, "rho": 0, "ell": 1}
    inst_path = tmp_path / "inst.json"
    inst_path.write_text(json.dumps(doc))
    design_path = tmp_path / "design.json"
    rc = main(["design", str(inst_path), "--build", "--out", str(design_path)])
    assert rc == 0
    capsys.readouterr()
    rc = main(["simulate", str(design_path), "--trials", "30", "--seed", "2"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["design"]["distance"] == 3
    assert out["decode"]["error_weight"] == 1
    assert out["decode"]["successes"] == out["decode"]["trials"]


def test_construct_parts_mismatch_exit_code(tmp_path, capsys):
    path = tmp_path / "p.pattern"
    path.write_text("2\n1\n")
    rc = main(["construct", str(path), "--n", "4", "--parts", "2,3"])
    assert rc == 2
    assert "sum" in capsys.readouterr().err


def test_simulate_binary_field_channel(toy_instance, tmp_path, capsys):
    # ell = 1 design suggests q = 2; the channel then runs over F_2
    design_path = tmp_path / "design1.json"
    rc = main(["design", toy_instance, "--ell", "1", "--out", str(design_path)])
    assert rc == 0
    capsys.readouterr()
    rc = main(["simulate", str(design_path), "--trials", "30", "--seed", "4"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["design"]["q"] == 2
    assert out["channel"]["bounds_ok"]


def test_simulate_deterministic(toy_instance, tmp_path, capsys):
    design_path = tmp_path / "design.json"
    main(["design", toy_instance, "--out", str(design_path)])
    capsys.readouterr()
    main(["simulate", str(design_path), "--trials", "25", "--seed", "9"])
    first = capsys.readouterr().out
    main(["simulate", str(design_path), "--trials", "25", "--seed", "9"])
    second = capsys.readouterr().out
    assert first == second


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["check"])
    assert exc.value.code == 2
