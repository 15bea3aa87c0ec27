import json

import pytest

from treeminor.cli import EX_DATAERR, EX_USAGE, run
from treeminor.tree import path_tree, spider, star_tree
from treeminor.treeio import load_tree, save_tree


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, T in {"p2": path_tree(2), "p5": path_tree(5), "k13": star_tree(3),
                    "s33": spider(3, 3), "s32": spider(3, 2)}.items():
        paths[name] = str(tmp_path / f"{name}.tree")
        save_tree(paths[name], T)
    return paths


def test_solve_path(files, capsys):
    assert run(["solve", "--host", files["p2"], "--pattern", files["p2"]]) == 0
    assert capsys.readouterr().out.strip() == "yes"


def test_solve_exit_status_and_json(files, capsys):
    assert run(["solve", "--host", files["p5"], "--pattern", files["k13"], "--exit-status"]) == 1
    assert capsys.readouterr().out.strip() == "no"
    code = run(["solve", "--host", files["s33"], "--pattern", files["s32"], "--exit-status", "--json"])
    out = capsys.readouterr().out.splitlines()
    assert code == 2 and out[0] == "unknown"
    assert json.loads(out[1])["regime"] == "hard-fallback"
    assert run(["solve", "--host", files["s33"], "--pattern", files["s32"], "--allow-exact"]) == 0
    assert capsys.readouterr().out.strip() == "yes"


def test_classify(files, capsys):
    assert run(["classify", "--host", files["s32"], "--pattern", files["s32"]]) == 0
    assert json.loads(capsys.readouterr().out)["regime"] == "poly-lobster-pair"


def test_oracle_and_agreement(files, capsys):
    for host, pattern in (("s33", "s32"), ("p5", "k13"), ("s32", "k13")):
        run(["oracle", "--host", files[host], "--pattern", files[pattern]])
        exact = capsys.readouterr().out.strip()
        run(["solve", "--host", files[host], "--pattern", files[pattern], "--allow-exact"])
        assert capsys.readouterr().out.strip() == exact
    run(["oracle", "--host", files["s32"], "--pattern", files["k13"], "--root-host", "0", "--root-pattern", "0"])
    assert capsys.readouterr().out.strip() == "yes"
    run(["oracle", "--host", files["s32"], "--pattern", files["k13"], "--method", "dp"])
    assert capsys.readouterr().out.strip() == "yes"
    code = run(["oracle", "--host", files["s32"], "--pattern", files["k13"], "--root-host", "0"])
    assert code == EX_USAGE


def test_usage_and_data_errors(files, tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == EX_USAGE
    with pytest.raises(SystemExit) as exc:
        run(["solve", "--host", files["p2"]])
    assert exc.value.code == EX_USAGE
    assert run(["solve", "--host", str(tmp_path / "missing"), "--pattern", files["p2"]]) == EX_DATAERR
    bad = tmp_path / "bad.tree"
    bad.write_text("p tree 3\ne 0 1\ne 0 1\n")
    assert run(["classify", "--host", str(bad), "--pattern", files["p2"]]) == EX_DATAERR
    assert run(["selftest", "--max-n", "9"]) == EX_USAGE


def test_gen_trees_diam_and_verify(tmp_path, capsys):
    isc = tmp_path / "i.json"
    isc.write_text(json.dumps({"universe": 2, "sets": [[2], [1, 2]], "k": 1}))
    sol = tmp_path / "sol.json"
    sol.write_text(json.dumps({"selection": [1]}))
    stem = str(tmp_path / "d")
    assert run(["gen", "trees-diam", "--isc", str(isc), "-o", stem, "--witness", str(sol)]) == 0
    T, _ = load_tree(stem + ".T.tree")
    P, _ = load_tree(stem + ".P.tree")
    assert (T.n, P.n) == (85, 68)
    labels = json.loads((tmp_path / "d.labels.json").read_text())
    assert labels["P:p"] == 0
    capsys.readouterr()
    args = ["verify", "--host", stem + ".T.tree", "--pattern", stem + ".P.tree"]
    assert run(args + ["--witness", stem + ".witness.json"]) == 0
    assert capsys.readouterr().out.strip() == "valid"
    broken = tmp_path / "w.json"
    broken.write_text(json.dumps({"map": [0] * T.n}))
    assert run(args + ["--witness", str(broken), "--exit-status"]) == 1
    assert capsys.readouterr().out.strip() == "invalid"


def test_gen_isc_and_ippc(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 1 2\n1 -1 0\n1 0\n")
    out = tmp_path / "isc.json"
    assert run(["gen", "isc", "--cnf", str(cnf), "-o", str(out), "--exact3"]) == 0
    assert json.loads(out.read_text())["k"] == 4
    ippc = tmp_path / "ippc.json"
    assert run(["gen", "ippc", "--cnf", str(cnf), "-o", str(ippc)]) == 0
    sol = tmp_path / "sol.json"
    sol.write_text(json.dumps({"f": [1], "g": [[0, 1], [0, 2]]}))
    stem = str(tmp_path / "pw")
    assert run(["gen", "trees-pw", "--ippc", str(ippc), "-o", stem, "--witness", str(sol)]) == 0
    labels = json.loads((tmp_path / "pw.labels.json").read_text())
    assert labels["meta:padding"] == 0
    capsys.readouterr()
    assert run(["verify", "--host", stem + ".T.tree", "--pattern", stem + ".P.tree",
                "--witness", stem + ".witness.json"]) == 0
    assert capsys.readouterr().out.strip() == "valid"
    assert run(["oracle", "--host", stem + ".T.tree", "--pattern", stem + ".P.tree"]) == 0
    assert capsys.readouterr().out.strip() == "yes"


def test_gen_rejects_bad_cnf(tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 1 1\n1 0\n")
    assert run(["gen", "ippc", "--cnf", str(cnf), "-o", str(tmp_path / "x.json")]) == EX_DATAERR


def test_selftest(capsys):
    assert run(["selftest", "--max-n", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4 and all(line.startswith("PASS") for line in lines)
