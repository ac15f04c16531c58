import io
import json
import subprocess
import sys

import pytest

from knotproj import catalog as cat
from knotproj.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_alex():
    assert run("alex", "--matrix", "1,1;0,-1", "--q", "3") == (0, "t^2 - 3*t + 1\n", "")
    assert run("alex", "--matrix", "1,1;0,-1")[1] == "t^2 - 3*t + 1\n"
    assert run("alex", "--matrix", "", "--q", "3")[1] == "1\n"
    assert run("alex", "--matrix=-1,1;0,-1", "--q", "1")[1] == "t^2 - t + 1\n"


def test_alex_json_requires_q():
    code, _, err = run("alex", "--matrix", "1,1;0,-1", "--format", "json")
    assert code == 2 and "--q" in err
    code, out, _ = run("alex", "--matrix", "1,1;0,-1", "--format", "json", "--q", "3")
    assert code == 0 and json.loads(out) == {"q": 3, "alexander_class": "t^2 - 3*t + 1"}


@pytest.mark.parametrize(
    "argv",
    [
        ("alex", "--matrix", "1,0;0,1"),
        ("alex", "--matrix", "1"),
        ("alex", "--matrix", "1,x;0,1"),
        ("alex", "--matrix", "1,2;3"),
        ("verify", "--theorem", "1", "--n", "4"),
        ("verify", "--theorem", "3", "--n", "2"),
        ("verify", "--theorem", "4"),
        ("module", "--presentation", "t^"),
        ("bogus",),
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_cert():
    code, out, _ = run("cert", "--matrix", "1,1;0,-1", "--q", "3")
    assert code == 0 and out.startswith("TrulyKnotted\nevidence: t^2 - 3*t + 1\n")
    code, out, _ = run("cert", "--matrix", "", "--q", "3", "--format", "json")
    assert json.loads(out)["verdict"] == "NotDistinguished"


def test_module():
    assert run("module", "--presentation", "t-1")[1] == "nontrivial\nFitting_0 generator: t - 1\n"
    assert run("module", "--presentation", "t^3")[1].startswith("trivial\n")
    code, out, _ = run("module", "--presentation", "t-1,t;-1,-t+1", "--format", "json")
    assert json.loads(out) == {"trivial": False, "fitting0": "-t^2 + 3*t - 1", "order_class": "t^2 - 3*t + 1"}


def test_catalog_list():
    code, out, _ = run("catalog", "list")
    assert code == 0
    assert "Theorem 1 knot K: n=5 mu=2 singular=DoublePointsOnly" in out
    assert "spun trefoil: n=1 mu=3" in out
    code, out, _ = run("catalog", "list", "--format", "json", "--n", "6")
    docs = json.loads(out)
    assert [cat.descriptor_from_dict(d) for d in docs] == cat.catalog(6)


@pytest.mark.parametrize("argv", [("verify", "--theorem", "1", "--n", "7"), ("verify", "--theorem", "2"), ("verify", "--theorem", "3", "--n", "6")])
def test_verify_deterministic(argv):
    first = run(*argv)
    second = run(*argv)
    assert first[0] == 0 and first == second


def test_verify_theorem2_report_rows():
    _, out, _ = run("verify", "--theorem", "2")
    rows = [line for line in out.splitlines() if line.startswith("  PASS")]
    assert len(rows) == 8
    assert out.rstrip().endswith("overall: PASS")


def test_verify_json():
    code, out, _ = run("verify", "--theorem", "3", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["overall"] and d["theorem"] == "3"


def test_verify_failure_exits_1(monkeypatch):
    bad = cat.TheoremReport("2", (cat.Check("forced", False),))
    monkeypatch.setattr(cat, "verify", lambda theorem, n=None: bad)
    assert run("verify", "--theorem", "2")[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "knotproj", "alex", "--matrix", "1,1;0,-1", "--q", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "t^2 - 3*t + 1\n"
