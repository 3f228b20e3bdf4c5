import json

from jsplit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_josp_writes_algebra(tmp_path, capsys):
    out = tmp_path / "alg.json"
    code, stdout, _ = run(capsys, "josp", "--n", "2", "--m", "1",
                          "--out", str(out))
    assert code == 0
    assert json.loads(stdout)["dim"] == 8
    assert json.loads(out.read_text())["dim"] == 8


def test_josp_matrix_realization_to_stdout(capsys):
    code, stdout, _ = run(capsys, "josp", "--n", "1", "--m", "1",
                          "--realization", "matrix")
    assert code == 0
    doc = json.loads(stdout)
    assert doc["dim"] == 4
    assert doc["basis"] == ["h11", "v11", "u11", "k11"]


def test_check_command_verdicts(tmp_path, capsys):
    alg = tmp_path / "alg.json"
    run(capsys, "josp", "--n", "1", "--m", "2", "--out", str(alg))
    code, stdout, stderr = run(capsys, "check", str(alg))
    assert code == 0
    report = json.loads(stdout)
    verdicts = {v["name"]: v["ok"] for v in report["verdicts"]}
    assert verdicts == {"supercommutative": True, "super_jordan": True}
    assert "super_jordan=True" in stderr


def test_full_pipeline_split(tmp_path, capsys):
    alg = tmp_path / "alg.json"
    mod = tmp_path / "mod.json"
    ext = tmp_path / "ext.json"
    run(capsys, "josp", "--n", "1", "--m", "1", "--out", str(alg))
    run(capsys, "bimodule", "--n", "1", "--m", "1", "--kind", "skew-op",
        "--out", str(mod))
    code, _, _ = run(capsys, "extend", str(alg), str(mod), "--out", str(ext))
    assert code == 0
    code, stdout, _ = run(capsys, "split", str(ext))
    assert code == 0
    result = json.loads(stdout)
    assert result["result"] == "split"
    assert result["verified"] is True
    assert result["tau"] == []


def test_counterexample_command(tmp_path, capsys):
    out = tmp_path / "ce.json"
    code, stdout, _ = run(capsys, "counterexample", "--out", str(out))
    assert code == 0
    report = json.loads(stdout)
    assert all(v["ok"] for v in report["verdicts"])
    assert report["witness"] is not None
    # the emitted file solves to no-split through the split command
    code, stdout, _ = run(capsys, "split", str(out))
    assert code == 0
    result = json.loads(stdout)
    assert result["result"] == "no-split"
    assert ["u11", "k11"] in result["violated_pairs"]
    assert any(c != "0" for c in result["witness"])


def test_peirce_command(tmp_path, capsys):
    alg = tmp_path / "alg.json"
    run(capsys, "josp", "--n", "2", "--m", "1", "--out", str(alg))
    code, stdout, _ = run(capsys, "peirce", str(alg),
                          "--idempotents", "h11,h22,v11")
    assert code == 0
    report = json.loads(stdout)
    assert report["relations_hold"] is True
    dims = {tuple(c["key"]): c["dim"] for c in report["components"]}
    assert dims[("h11",)] == 1
    assert dims[("h11", "v11")] == 2


def test_peirce_on_extension_file(tmp_path, capsys):
    alg = tmp_path / "alg.json"
    mod = tmp_path / "mod.json"
    ext = tmp_path / "ext.json"
    run(capsys, "josp", "--n", "2", "--m", "1", "--out", str(alg))
    run(capsys, "bimodule", "--n", "2", "--m", "1", "--kind", "reg",
        "--out", str(mod))
    run(capsys, "extend", str(alg), str(mod), "--out", str(ext))
    code, stdout, _ = run(capsys, "peirce", str(ext),
                          "--idempotents", "h11,h22,v11")
    assert code == 0
    report = json.loads(stdout)
    assert report["relations_hold"] is True
    # extension components double the base algebra's
    dims = {tuple(c["key"]): c["dim"] for c in report["components"]}
    assert dims[("h11", "v11")] == 4


def test_peirce_rejects_incomplete_family(tmp_path, capsys):
    alg = tmp_path / "alg.json"
    run(capsys, "josp", "--n", "2", "--m", "1", "--out", str(alg))
    code, stdout, _ = run(capsys, "peirce", str(alg), "--idempotents", "h11")
    assert code == 1
    assert "error" in json.loads(stdout)


def test_suite_passes_and_is_deterministic(capsys):
    args = ("suite", "--grid", "1,1", "--kind", "reg", "--kind", "skew",
            "--counterexample", "--seed", "5")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert all(v["ok"] for v in report["verdicts"])
    names = {v["name"] for v in report["verdicts"]}
    assert "realizations_isomorphic" in names
    assert "no_split[counterexample]" in names
    assert "split_perturbed[skew]" in names


def test_suite_classical_regression_point(capsys):
    # the odd-free degenerate size runs the construction checks only
    code, stdout, _ = run(capsys, "suite", "--grid", "1,0", "--kind", "none")
    assert code == 0
    report = json.loads(stdout)
    assert report["kinds"] == []
    assert {v["name"] for v in report["verdicts"]} == {
        "realizations_isomorphic", "supercommutative", "super_jordan"}
    assert all(v["ok"] for v in report["verdicts"])


def test_suite_parallel_matches_serial(capsys):
    base = ("suite", "--grid", "1,1", "2,1", "--kind", "reg", "--seed", "2")
    _, serial, _ = run(capsys, *base)
    _, parallel, _ = run(capsys, *base, "--jobs", "2")
    assert serial == parallel


def test_check_fails_on_broken_table(tmp_path, capsys):
    alg = tmp_path / "alg.json"
    run(capsys, "josp", "--n", "1", "--m", "1", "--out", str(alg))
    doc = json.loads(alg.read_text())
    # corrupt h·h to land on v: stays graded but is no longer a Jordan table
    doc["constants"] = [
        [0, 0, 1, "1"] if (i, j, k) == (0, 0, 0) else [i, j, k, c]
        for i, j, k, c in doc["constants"]]
    doc["unit"] = None
    alg.write_text(json.dumps(doc))
    code, stdout, _ = run(capsys, "check", str(alg))
    assert code == 1
    verdicts = {v["name"]: v["ok"] for v in json.loads(stdout)["verdicts"]}
    assert verdicts["super_jordan"] is False


def test_cli_entry_point_installed():
    import shutil

    assert shutil.which("jsplit") is not None
