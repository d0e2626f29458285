import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
import sympy

from ellbundle.cli import OPERATION_ROUTES, main

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("op", sorted(OPERATION_ROUTES))
def test_every_route_succeeds(op, capsys):
    code, out, err = run(OPERATION_ROUTES[op], capsys)
    assert code == 0, err
    assert out.strip()


@pytest.mark.parametrize("op", sorted(OPERATION_ROUTES))
def test_every_route_emits_json(op, capsys):
    code, out, err = run(["--format", "json"] + OPERATION_ROUTES[op], capsys)
    assert code == 0, err
    json.loads(out)


def test_routes_cover_every_module():
    modules = {op.split(".")[0] for op in OPERATION_ROUTES}
    assert {"curve", "bundles", "spectral", "cohomology", "chern_formulas", "fibration",
            "stability", "identities"} <= modules


def test_classify_cusp(capsys):
    code, out, _ = run(["curve", "classify", "--g2", "0", "--g3", "0"], capsys)
    assert code == 0 and out.strip() == "Cuspidal"


def test_known_outputs(capsys):
    assert run(OPERATION_ROUTES["curve.add"], capsys)[1].strip() == "(1, 0)"
    assert run(OPERATION_ROUTES["fibration.trivial_det_solve"], capsys)[1].strip() == "a = 0 mod 2, N0 = [1]"
    assert run(OPERATION_ROUTES["stability.stability_threshold"], capsys)[1].strip() == "2"
    assert run(OPERATION_ROUTES["chern_formulas.ch_Ud_fibration"], capsys)[1].strip() == "zeta - L"
    code, out, _ = run(["section", "ch", "--L", "1", "--alpha", "0", "--n", "2", "--a", "0",
                        "--truncation", "3"], capsys)
    assert out.strip() == "2 + L + 1/2*L^2 + 1/6*L^3"


def test_golden_ch_U0_fibration(capsys):
    code, out, _ = run(["chern", "ua", "--n", "3", "--a", "0", "--ring", "fibration"], capsys)
    golden = (GOLDEN / "chern_ua_n3_a0_fibration.txt").read_text()
    assert code == 0 and out == golden


def test_golden_matches_sympy_oracle():
    from test_chern_formulas import LL, S, Z, sympy_class

    def Rc(c):
        return sum((sympy.exp(j * LL) for j in range(c)), sympy.Integer(0))

    expr = sympy.exp(-Z) * Rc(3) - Rc(0) + sympy.exp(-S) * (1 - sympy.exp(-Z))
    assert str(sympy_class(expr, 8)) == (GOLDEN / "chern_ua_n3_a0_fibration.txt").read_text().strip()


def test_verify_identities(capsys):
    code, out, _ = run(["verify-identities", "--suite", "master", "--nmax", "6"], capsys)
    assert code == 0 and "15 passed, 0 failed" in out


def test_deterministic(capsys):
    argv = OPERATION_ROUTES["spectral.fiber_of_r"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_domain_error_exit_1(capsys):
    code, out, err = run(["curve", "add", "--g2", "0", "--g3", "0", "--P", "0,0", "--Q", "p0"], capsys)
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "SingularPointError"


def test_not_on_curve_exit_1(capsys):
    code, _, err = run(["curve", "neg", "--g2", "4", "--g3", "0", "--P", "2,2"], capsys)
    assert code == 1 and json.loads(err)["error"] == "NotOnCurveError"


def test_range_error_exit_1(capsys):
    code, _, err = run(["section", "splitting", "--n", "3", "--a", "4"], capsys)
    assert code == 1 and json.loads(err)["error"] == "RangeError"


def test_usage_errors_exit_2(capsys):
    assert run(["bogus"], capsys)[0] == 2
    assert run(["curve", "classify", "--g2", "1"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "ellbundle", "curve", "classify", "--g2", "3", "--g3", "1"],
                         capture_output=True, text=True, env=dict(os.environ))
    assert out.returncode == 0 and out.stdout.strip() == "Nodal"
