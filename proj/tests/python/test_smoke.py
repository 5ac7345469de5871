import math
import os
import subprocess

import pytest

import ddinv


def test_bound_values():
    assert ddinv.c_constant(4, 1.0, 1.0) == pytest.approx(1 / 6, rel=1e-14)
    out = ddinv.theorem1_bound(10, 1.0, 2.0)
    assert out.applicable
    assert out.bound == pytest.approx(35 / 306, rel=1e-14)
    inapplicable = ddinv.theorem1_bound(3, 1.0, 1.0)
    assert not inapplicable.applicable
    assert inapplicable.bound is None
    assert ddinv.corollary_limit(1.0, 2.0) == pytest.approx(2 / 3)
    assert ddinv.f_max_closed_form(5, 1.0, 1.0) == 0.25
    assert ddinv.g_lambda(9, 10, 1.0, 2.0) == pytest.approx(ddinv.g_max_closed_form(10, 1.0, 2.0))


def test_validation_errors_map_to_value_error():
    with pytest.raises(ddinv.DdinvError, match=r"NonPositiveEntry\(1,2\)"):
        ddinv.validate_ddp([[2, -1], [-1, 2]])
    with pytest.raises(ValueError, match="DominanceViolated"):
        ddinv.validate_ddp([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
    t = ddinv.validate_ddp([[3, 1, 1], [1, 3, 2], [1, 1, 3]], require_symmetric=False)
    assert not t.symmetric
    with pytest.raises(ddinv.DdinvError, match="NotSymmetric"):
        ddinv.error_report(t)


def test_error_report_matches_hand_values():
    t = ddinv.validate_ddp([[3, 1, 1, 1], [1, 3, 1, 1], [1, 1, 3, 1], [1, 1, 1, 3]])
    rep = ddinv.error_report(t)
    assert rep.max_norm == pytest.approx(1 / 12, abs=1e-12)
    assert rep.bound.bound == pytest.approx(2 / 3, abs=1e-12)
    assert rep.ratio == pytest.approx(0.125)
    assert ddinv.diag_approx(t) == [1 / 3] * 4


def test_exact_inverse_against_numpy():
    np = pytest.importorskip("numpy")
    t = ddinv.random_ddp(40, 1.0, 3.0, 1.0, 5)
    ours = np.array(ddinv.exact_inverse(t))
    ref = np.linalg.inv(np.array(t.to_list()))
    assert np.max(np.abs(ours - ref)) < 1e-14
    assert ddinv.check_recursion_identity(t) < 1e-10
    assert ddinv.check_hold_identity(t) < 1e-10


def test_worst_case_and_discussion_report():
    t = ddinv.worst_case_example(3, 1.0, 2.0)
    assert t.to_list() == [[4, 1, 1], [1, 4, 1], [1, 1, 2]]
    p = ddinv.dominance_params(t)
    assert (p.m, p.M, p.delta) == (1.0, 2.0, [2.0, 2.0, 0.0])
    rep = ddinv.discussion_example_report(3, 1.0, 2.0)
    assert rep.error == pytest.approx(0.125)
    assert rep.scaled_error == pytest.approx(0.5)


def test_solvers():
    t = ddinv.worst_case_example(50, 1.0, 50.0)
    rows = t.to_list()
    b = [sum(r) for r in rows]
    cg = ddinv.pcg_solve(t, b, use_diag_precond=False)
    pcg = ddinv.pcg_solve(t, b)
    assert cg.converged and pcg.converged
    assert pcg.iterations <= cg.iterations
    assert pcg.method == "pcg-diag"
    jac = ddinv.jacobi_solve(ddinv.worst_case_example(10, 1.0, 2.0), [float(sum(r)) for r in
                             ddinv.worst_case_example(10, 1.0, 2.0).to_list()])
    assert jac.converged
    assert len(jac.residual_history) == jac.iterations + 1
    assert max(abs(x - 1) for x in jac.solution) < 1e-8


def test_sweep_rows_and_csv():
    rows = ddinv.run_sweep("random", [10, 30], m=1.0, M=2.0, seed=7, reps=2, threads=2)
    assert [(r.n, r.seed) for r in rows] == [(10, 7), (10, 8), (30, 7), (30, 8)]
    for r in rows:
        assert r.scaled_error == pytest.approx(r.error * (r.n - 1) ** 2 * r.m, rel=1e-15)
        assert (r.ratio is None) == (r.bound is None)
        if r.ratio is not None:
            assert r.ratio <= 1 + 1e-9
    csv = ddinv.sweep_csv(rows)
    assert csv.splitlines()[0] == "family,n,m,M,c_value,bound,error,scaled_error,ratio,seed"
    assert csv == ddinv.sweep_csv(ddinv.run_sweep("random", [10, 30], m=1.0, M=2.0, seed=7, reps=2))
    with pytest.raises(ddinv.DdinvError):
        ddinv.run_sweep("worstcase", [2])


def test_matrix_text_round_trip():
    rows = [[0.1, 1 / 3], [2e-300, math.pi]]
    assert ddinv.parse_matrix(ddinv.format_matrix(rows)) == rows


@pytest.mark.skipif("DDINV_BIN" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    exe = os.environ["DDINV_BIN"]
    ok = subprocess.run([exe, "bound", "--n", "4", "--m", "1", "--M", "1"], capture_output=True, text=True)
    assert ok.returncode == 0
    assert "C=0.166667 bound=0.666667" in ok.stdout
    bad = tmp_path / "neg.txt"
    bad.write_text("2\n2 -1\n-1 2\n")
    res = subprocess.run([exe, "validate", str(bad)], capture_output=True, text=True)
    assert res.returncode == 2
    assert "NonPositiveEntry(1,2)" in res.stderr
    missing = subprocess.run([exe, "validate", str(tmp_path / "none.txt")], capture_output=True)
    assert missing.returncode == 1
