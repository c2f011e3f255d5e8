import io

import cyclecollide.verify as verify
from cyclecollide import QuadratureConfig, StirlingRow


def test_run_verify_prints_one_line_per_criterion():
    buffer = io.StringIO()
    code = verify.run_verify(stream=buffer)
    lines = buffer.getvalue().splitlines()
    assert code == 0
    assert lines[-1] == "all criteria passed"
    body = lines[:-1]
    assert len(body) == len(verify.CRITERIA)
    assert all(line.startswith("PASS ") for line in body)
    for criterion, line in zip(verify.CRITERIA, body):
        assert criterion.name in line


def test_corrupted_recurrence_fails_row_sum_criterion(monkeypatch):
    real = verify.stirling_row

    def corrupted(n):
        row = real(n)
        if n == 137:  # single off-by-one deep in the table
            coeffs = list(row.coeffs)
            coeffs[3] += 1
            return StirlingRow(n, tuple(coeffs))
        return row

    monkeypatch.setattr(verify, "stirling_row", corrupted)
    passed, detail = verify.check_row_sums()
    assert not passed
    assert "137" in detail


def test_strangled_quadrature_reports_convergence_failure(monkeypatch):
    def starved(**kwargs):
        kwargs["max_subdivisions"] = 1
        kwargs.setdefault("abs_tol", 0.0)
        kwargs["rel_tol"] = 1e-13
        return QuadratureConfig(**kwargs)

    monkeypatch.setattr(verify, "QuadratureConfig", starved)
    criterion = next(c for c in verify.CRITERIA if c.name == "parseval-exactness")
    result = criterion.run()
    assert not result.passed
    assert "QuadratureConvergenceError" in result.detail


def test_failure_turns_into_exit_code(monkeypatch):
    criteria = (
        verify.Criterion("forced", 30.0, lambda: (False, "forced failure")),
        verify.Criterion("fine", 30.0, lambda: (True, "ok")),
    )
    monkeypatch.setattr(verify, "CRITERIA", criteria)
    buffer = io.StringIO()
    assert verify.run_verify(stream=buffer) == 1
    out = buffer.getvalue()
    assert "FAIL forced: forced failure" in out
    assert "PASS fine: ok" in out
    assert out.splitlines()[-1] == "criterion failures"