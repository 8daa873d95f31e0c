import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]


def run_cli(*args, cwd=ROOT):
    env = {"PYTHONPATH": str(ROOT / "src"), "PATH": "/usr/bin:/bin"}
    return subprocess.run([sys.executable, "-m", "tforge.cli", *args],
                          capture_output=True, text=True, cwd=cwd, env=env)


def test_verify_passing_fixture():
    res = run_cli("verify", "fixtures/fig3_gbtd_3_9.json")
    assert res.returncode == 0
    assert "PASS" in res.stdout


def test_verify_mutated_fixture(tmp_path, fig3):
    from tforge.algebra import block
    from tforge.designs import DesignGrid, dumps_grid

    cells = dict(fig3.cells)
    rc = next(iter(sorted(cells)))
    b = cells[rc]
    swap = next(p for p in fig3.points if p not in b)
    cells[rc] = block(list(b[:-1]) + [swap])
    bad = DesignGrid(fig3.kind, fig3.lam, fig3.k_set,
                     fig3.points, fig3.rows, fig3.cols, cells)
    path = tmp_path / "mutated.json"
    path.write_text(dumps_grid(bad))
    res = run_cli("verify", str(path))
    assert res.returncode == 1


def test_verify_missing_file():
    res = run_cli("verify", "definitely_missing.json")
    assert res.returncode == 2


def test_construct_fq_gbtd_and_verify(tmp_path):
    out = tmp_path / "g13.json"
    res = run_cli("construct", "fq-gbtd", "--q", "13", "-o", str(out))
    assert res.returncode == 0
    res = run_cli("verify", str(out))
    assert res.returncode == 0


def test_construct_fq_gbtd_rejects_bad_q():
    res = run_cli("construct", "fq-gbtd", "--q", "11")
    assert res.returncode == 2


def test_construct_drtd(tmp_path):
    out = tmp_path / "d4.json"
    res = run_cli("construct", "drtd", "--k", "3", "--q", "4", "-o", str(out))
    assert res.returncode == 0
    assert run_cli("verify", str(out)).returncode == 0


def test_code_pipeline(tmp_path):
    code_path = tmp_path / "c.json"
    res = run_cli("code", "to-code", "fixtures/fig1.json", "-o", str(code_path))
    assert res.returncode == 0
    obj = json.loads(code_path.read_text())
    assert obj["q"] == 3 and obj["n"] == 4 and len(obj["words"]) == 6
    res = run_cli("code", "stats", str(code_path))
    assert res.returncode == 0
    assert "n=4 q=3 M=6 d=3" in res.stdout
    assert "c(C): 2" in res.stdout


def test_code_bound_equality_and_violation():
    res = run_cli("code", "bound", "--n", "10", "--d", "9", "--q", "7", "--m", "21")
    assert res.returncode == 0 and "equality" in res.stdout
    res = run_cli("code", "bound", "--n", "29", "--d", "28", "--q", "16", "--m", "34")
    assert res.returncode == 1 and "violated" in res.stdout


def test_search_starter_cli(tmp_path):
    out = tmp_path / "starter.json"
    res = run_cli("search", "starter", "--kind", "gbtd", "--m", "7",
                  "--budget", "2000000", "-o", str(out))
    assert res.returncode == 0
    assert json.loads(out.read_text())["starter_kind"] == "gbtd"


def test_derive_recipe_gbtp_33(tmp_path):
    res = run_cli("derive", "recipes/gbtp_33.json", "--out-dir", str(tmp_path))
    assert res.returncode == 0, res.stderr
    assert (tmp_path / "gbtp_33.json").exists()
    res = run_cli("verify", str(tmp_path / "gbtp_33.json"))
    assert res.returncode == 0


def test_search_design_cli(tmp_path):
    spec = tmp_path / "params.json"
    spec.write_text(json.dumps({"K": [2, 3], "v": 9, "m": 4, "n": 5, "star3": True}))
    out = tmp_path / "found.json"
    res = run_cli("search", "design", "--spec", str(spec), "-o", str(out))
    assert res.returncode == 0
    assert run_cli("verify", str(out)).returncode == 0


def test_search_coloring_cli(tmp_path):
    out = tmp_path / "colored.json"
    res = run_cli("search", "coloring", "--in", "fixtures/fig2_rbibd_15.json",
                  "--colors", "3", "--pi", "-o", str(out))
    assert res.returncode == 0
    res = run_cli("search", "coloring", "--in", "fixtures/fig2_rbibd_15.json",
                  "--colors", "1")
    assert res.returncode == 1


def test_construct_explicit_objects(tmp_path):
    for sub, name in (("frgbtd-6-8", "f.json"), ("igbtp-33", "i.json")):
        out = tmp_path / name
        assert run_cli("construct", sub, "-o", str(out)).returncode == 0
        assert run_cli("verify", str(out)).returncode == 0


def test_cert_cli():
    res = run_cli("code", "cert-2q3", "--m", "16")
    assert res.returncode == 0
    assert "15708" in res.stdout and "15689" in res.stdout
    assert run_cli("code", "cert-2q3", "--m", "6").returncode == 2


def test_stdout_pipe():
    res = run_cli("construct", "td", "--k", "4", "--q", "3", "-o", "-")
    assert res.returncode == 0
    obj = json.loads(res.stdout)
    assert obj["kind"] == "TD"


def test_outputs_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli("construct", "fq-gbtd", "--q", "7", "-o", str(a))
    run_cli("construct", "fq-gbtd", "--q", "7", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_derive_recipe_gbtd_27(tmp_path):
    res = run_cli("derive", "recipes/gbtd_3_27.json", "--out-dir", str(tmp_path))
    assert res.returncode == 0, res.stderr
    assert run_cli("verify", str(tmp_path / "gbtd_3_27.json")).returncode == 0


def test_derive_recipe_gbtd_49(tmp_path):
    res = run_cli("derive", "recipes/gbtd_3_49.json", "--out-dir", str(tmp_path))
    assert res.returncode == 0, res.stderr
    assert run_cli("verify", str(tmp_path / "gbtd_3_49.json")).returncode == 0
