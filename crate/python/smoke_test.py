"""Smoke test for the chowwitt_py extension.

Builds the cdylib with cargo, copies it next to a temporary import path as
chowwitt_py.so and exercises each entry point. Run directly or under pytest.
"""

import importlib
import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    subprocess.run(["cargo", "build", "-q", "-p", "chowwitt-py"], cwd=ROOT, check=True)
    built = ROOT / "target" / "debug" / "libchowwitt_py.so"
    dest = pathlib.Path(tempfile.mkdtemp()) / "chowwitt_py.so"
    shutil.copy(built, dest)
    sys.path.insert(0, str(dest.parent))
    return importlib.import_module("chowwitt_py")


def test_module():
    cw = load()
    assert cw.parse_space("Bmu(4)xBGm") == "Bmu(4) x BGm"

    rep = json.loads(cw.compute("Bmu(4)", field="C", bound=2))
    assert rep["space"] == "CHW(Bmu(4))"
    row = next(r for r in rep["bidegrees"] if r["degree"] == 2 and r["twist"] == "0")
    assert row["invariant_factors"] == [8] and row["free_rank"] == 0

    hi = json.loads(cw.compute("P(2) x P(3)", field="R", bound=3, theory="hi"))
    assert hi["space"].startswith("HI(")

    cmp = json.loads(cw.compare("BGm x Bmu(3)", field="F7", bound=3))
    assert all(c["passed"] for c in cmp["checks"])

    kun = json.loads(cw.kunneth("BGm x Bmu(3)", bound=3))
    assert any(c["detail"].startswith("iso") for c in kun["checks"])

    orc = json.loads(cw.oracle("P(2) x P(2)", bound=2))
    assert orc["checks"] and all(c["passed"] for c in orc["checks"])

    try:
        cw.compute("Bmu(6)", field="F3")
    except ValueError as e:
        assert str(e)
    else:
        raise AssertionError("expected ValueError")


if __name__ == "__main__":
    test_module()
    print("smoke test ok")
