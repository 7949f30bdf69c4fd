import json
import os
import subprocess
import sys

sys.path.insert(0, os.environ["LINDEL_MODULE_DIR"])
sys.path.insert(0, os.environ["LINDEL_PKG_DIR"])

import lindel  # noqa: E402


def test_parse_roundtrip():
    text = "ring Q[x,y] local; ideal I = x*y, x^3 - y^2;"
    normalized = lindel.parse_ring(text)
    assert lindel.parse_ring(normalized) == normalized


def test_koszul_verdicts_carry_bounds():
    good = lindel.koszul("ring Q[x,y]; ideal I = x*y;", bound=5)
    assert good["koszul"]["status"] == "koszul_up_to"
    assert good["koszul"]["bound"] == 5
    bad = lindel.koszul("ring Q[x,y]; ideal I = x*y, y^2, x^4;", bound=4)
    assert bad["koszul"]["status"] == "not_koszul"
    assert bad["koszul"]["witness"] == [2, 4]


def test_semigroup_pipeline():
    r = lindel.semigroup([4, 5, 11])
    assert len(r["toric_ideal"]) == 3
    assert r["invariants"]["multiplicity"] == 4
    assert r["invariants"]["tag"] == "almost minimal multiplicity"
    assert r["koszul"]["status"] == "not_koszul"


def test_classify_and_filtration():
    c = lindel.stretched_classify("ring Q[x,y]; ideal I = x^3, x*y, y^2;")
    assert c["classification"]["prediction"] == "PredictNotKoszul"
    cert = lindel.filtration_verify(
        "ring Q[x,y] local; ideal I = x*y, x^3 - y^2;",
        "zero =\nX = x\nY = y\nmax = x, y\n",
    )
    assert cert["certificate"]["weak_ok"] is True


def test_golod():
    g = lindel.golod("ring Q[x,y]; ideal I = x^2, y^2;")
    assert g["golod"]["status"] == "not_golod"
    assert g["golod"]["first_discrepancy"] == 3


def test_sweep_agrees():
    s = lindel.sweep_ev(hmax=2, smax=3, bound=4)
    assert s["all_agree"] is True


def test_errors_translate():
    try:
        lindel.stretched_classify("ring Q[x,y,z];")
    except lindel.PreconditionError:
        pass
    else:
        raise AssertionError("expected PreconditionError")


def test_cli_binary_repro():
    cli = os.environ.get("LINDEL_CLI")
    if not cli:
        return
    out = subprocess.run([cli, "repro"], capture_output=True, text=True)
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["all_ok"] is True
