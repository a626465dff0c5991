import json
import subprocess
import sys


from gvindex.cli import main
from gvindex.series import FR, var_mono
from gvindex.series.serialize import series_from_json

t1, t2 = var_mono("t1"), var_mono("t2")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm6.1", "--q-order", "6")
    assert code == 0 and "criterion 1: PASS" in out
    code, out, _ = run(capsys, "verify", "--suite", "dmvv26", "--q-order", "3", "--p-order", "2")
    assert code == 0 and "conjecture: empirically verified" in out
    code, _, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == 2 and "unknown suite" in err


def test_verify_report_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--suite", "lemma4.3", "--out", str(path))
    rep = json.loads(path.read_text())
    assert code == 0 and rep[0]["criterion"] == 7 and rep[0]["ok"]
    assert any("2^(-2N)" in n for n in rep[0]["notes"])


def test_genus_outputs(capsys):
    code, a, _ = run(capsys, "genus", "--space", "hilbert", "--flavor", "chi0", "--q-order", "2")
    assert code == 0
    s = series_from_json(json.loads(a))
    assert s.coefficient(1) == FR.binomial(t1, 1, -1) * FR.binomial(t2, 1, -1)
    _, b, _ = run(capsys, "genus", "--space", "symprod", "--flavor", "chi0", "--q-order", "2")
    assert a == b
    _, c, _ = run(capsys, "genus", "--space", "moduli", "--rank", "1", "--q-order", "2")
    assert a == c
    _, unit, _ = run(capsys, "genus", "--space", "hilbert", "--q-order", "0")
    assert json.loads(unit) == {"cutoffs": {"Q": 0},
                                "terms": [{"grading": {"Q": 0}, "num": [[{}, "1/1"]], "den": []}]}


def test_genus_elliptic_and_csv(capsys):
    code, out, _ = run(capsys, "genus", "--space", "symprod", "--flavor", "elliptic",
                       "--q-order", "1", "--p-order", "1", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "Q,p,numerator,denominator"


def test_genus_worker_invariance(capsys):
    args = ("genus", "--space", "moduli", "--rank", "2", "--flavor", "chiy", "--q-order", "2")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--workers", "4")
    assert a == b


def test_genus_usage_errors(capsys):
    assert run(capsys, "genus", "--space", "hilbert", "--rank", "2")[0] == 2
    assert run(capsys, "genus", "--space", "hilbert", "--q-order", "-1")[0] == 2
    assert run(capsys, "genus", "--space", "nowhere")[0] == 2
    assert run(capsys, "genus", "--space", "hilbert", "--p-order", "2")[0] == 2


def test_gv_conifold(capsys):
    code, out, _ = run(capsys, "gv", "--geometry", "conifold", "--degree", "6")
    obj = json.loads(out)
    assert code == 0
    assert obj["table"] == [{"class": {"Q": 1}, "g": 0, "n": 1, "N": 1}]
    assert obj["metadata"]["orientation"] == "resolved"


def test_gv_5d_table(capsys):
    code, out, _ = run(capsys, "gv", "--geometry", "5d", "--box", "4,4", "--convention", "paper")
    assert code == 0
    N = {(r["class"]["Q"], r["class"]["Qm"], r["g"]): r["N"] for r in json.loads(out)["table"]
         if r["N"]}
    want = {}
    for r in range(1, 5):
        for s in range(5):
            if abs(r - s) == 1:
                want[(r, s, 0)] = 1
            if r == s:
                want[(r, s, 1)] = 1
    assert N == want


def test_gv_6d(capsys):
    code, out, _ = run(capsys, "gv", "--geometry", "6d", "--q-order", "2", "--p-order", "1")
    obj = json.loads(out)
    assert code == 0 and obj["metadata"]["ctilde_consistent"]
    assert [1, 1, 0, 2] in obj["ctilde"]
    _, again, _ = run(capsys, "gv", "--geometry", "6d", "--q-order", "2", "--p-order", "1",
                      "--workers", "3")
    assert again == out


def test_gv_rank_geometries(capsys):
    code, out, _ = run(capsys, "gv", "--geometry", "fm:2,0", "--q-order", "2")
    assert code == 0 and json.loads(out)["table"]
    code, _, err = run(capsys, "gv", "--geometry", "fm:3,1", "--q-order", "2")
    assert code == 1 and "integrality" in err
    assert run(capsys, "gv", "--geometry", "fm")[0] == 2
    assert run(capsys, "gv", "--geometry", "k3")[0] == 2
    assert run(capsys, "gv", "--geometry", "5d", "--box", "4")[0] == 2


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "gvindex", "verify", "--suite", "nosuch"],
                       capture_output=True, text=True)
    assert p.returncode == 2
