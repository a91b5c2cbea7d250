import io
import json
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from epoly.cli import main
from epoly.polycore import Poly2, PolyX, loads_polyx, loads_series

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"
CASES = [line.split(None, 1) for line in (GOLDEN / "cases.txt").read_text().splitlines() if line.strip()]


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def _at_root(monkeypatch):
    monkeypatch.chdir(ROOT)
    monkeypatch.delenv("EPOLY_FORMAT", raising=False)


@pytest.mark.parametrize("name, cmd", CASES, ids=[c[0] for c in CASES])
def test_golden(name, cmd, capsys):
    code, out, _ = run(shlex.split(cmd), capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_torus_knot_example(capsys):
    code, out, _ = run("epoly --group torusknot --knot 2,3 --n 2 --stratum irr".split(), capsys)
    assert (code, out) == (0, "x^2 - 2x + 1\n")


def test_rectangular_partitions_of_4(capsys):
    code, out, _ = run("partitions --n 4 --rectangular".split(), capsys)
    assert code == 0
    assert len(out.splitlines()) == 11


def test_invariants_example(capsys):
    code, out, _ = run("invariants --group surface --genus 2 --n 3".split(), capsys)
    assert (code, out) == (0, "euler: 0, components: 1\n")


def test_json_roundtrips_through_decoders(capsys):
    _, out, _ = run("epoly --group nonorientable --genus 3 --n 2 --format json".split(), capsys)
    _, text, _ = run("epoly --group nonorientable --genus 3 --n 2".split(), capsys)
    p = loads_polyx(out)
    assert isinstance(p, PolyX)
    assert p.to_text() + "\n" == text
    _, out2, _ = run("series --group surface --genus 2 --max-n 3 --format json".split(), capsys)
    s = loads_series(out2)
    assert s.order == 3 and s.coeff(0) == Poly2.one()


def test_env_var_sets_default_format(capsys, monkeypatch):
    monkeypatch.setenv("EPOLY_FORMAT", "json")
    _, out, _ = run("epoly --group torusknot --knot 2,3 --n 2 --stratum irr".split(), capsys)
    assert out == (GOLDEN / "torus23_irr.json").read_text()
    _, out, _ = run("epoly --group torusknot --knot 2,3 --n 2 --stratum irr --format text".split(), capsys)
    assert out == "x^2 - 2x + 1\n"


def test_stdin_series(capsys, monkeypatch):
    data = (GOLDEN / "cstar_series.json").read_text()
    code, out, _ = run(["pexp", "--in", "-", "--order", "5"], capsys, stdin=data, monkeypatch=monkeypatch)
    assert code == 0
    assert out == (GOLDEN / "pexp_cstar.txt").read_text()


@pytest.mark.parametrize(
    "cmd",
    [
        "",
        "frobnicate",
        "epoly --group torusknot --knot 2,4 --n 2",
        "epoly --group torusknot --knot 2 --n 2",
        "epoly --group lattice --rank 2 --n 2",
        "epoly --group free --n 2",
        "epoly --group free --rank 2 --n 0",
        "epoly --group free --rank 2 --n 2 --stratum bogus",
        "partitions --n 3 --format latex",
        "pexp --in tests/golden/missing.json",
        "pexp --in tests/golden/cstar_pexp.json --order 6",
        "verify --suite nope",
    ],
)
def test_usage_errors_exit_2(cmd, capsys):
    code, out, err = run(shlex.split(cmd), capsys)
    assert code == 2
    assert out == ""
    assert err


@pytest.mark.parametrize(
    "cmd",
    [
        "epoly --group free --rank 3 --n 3",
        "plog --in tests/golden/cstar_series.json",
    ],
)
def test_computation_errors_exit_1(cmd, capsys):
    code, out, err = run(shlex.split(cmd), capsys)
    assert code == 1
    assert err.startswith("error: ")


def test_verify_exit_status(capsys):
    code, out, _ = run("verify --suite gl3 --format json".split(), capsys)
    assert code == 0
    assert all(r["status"] == "pass" for r in json.loads(out))
    code, out, _ = run("verify --suite gl2".split(), capsys)
    assert code == 1
    assert out.splitlines()[-1].endswith("failed (seed 0)")


def test_truncating_known_series(capsys):
    code, out, _ = run("plog --in tests/golden/cstar_pexp.json --order 2".split(), capsys)
    assert code == 0
    assert out == "t^0: 0\nt^1: uv - 1\nt^2: 0\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "epoly", "cartan", "--genus", "1", "--n", "2"],
        capture_output=True, text=True, cwd=ROOT,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "cartan_g1_n2.txt").read_text()
