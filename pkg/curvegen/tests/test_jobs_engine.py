"""Job parsing, export engines and the curvegen command line."""

import copy
import json
import subprocess
import sys

import pytest

from curvegen.cli import main
from curvegen.cusp import CuspEngine, degdet
from curvegen.engine import export
from curvegen.job import Job, JobError, job_path, list_jobs, load_job

SHIPPED = [
    "hermitian_f9_26",
    "klein_f8_q1",
    "klein_f8_q2",
    "rs_f8_7",
    "rs_f64_63",
    "suzuki_f8_63",
]


def job_obj(name):
    return json.loads(job_path(name).read_text())


def test_shipped_jobs_parse():
    assert list_jobs() == sorted(SHIPPED)
    for name in SHIPPED:
        job = load_job(name)
        pts = job.resolve_points()
        assert len(pts) == len(set(pts))


def test_job_errors():
    obj = job_obj("hermitian_f9_26")

    def check(mutate):
        bad = copy.deepcopy(obj)
        mutate(bad)
        with pytest.raises(JobError):
            Job(bad)

    check(lambda o: o.pop("field"))
    check(lambda o: o["G"].__setitem__("others", [1, 2]))
    check(lambda o: o["G"]["finite"].append({"point": [[1, 0], [1, 0]], "mult": 1}))
    # element of y-degree beyond the coordinate ring
    check(lambda o: o["x"].__setitem__("num", [[[1, 0]]] * 5))


def test_job_rejects_bad_points():
    obj = job_obj("hermitian_f9_26")
    bad = copy.deepcopy(obj)
    bad["points"][0] = [[1, 0], [1, 0]]  # (1, 1) is not on y^3 + y = x^4
    with pytest.raises(JobError):
        Job(bad).resolve_points()
    bad = copy.deepcopy(obj)
    bad["points"][1] = bad["points"][0]
    with pytest.raises(JobError):
        Job(bad).resolve_points()


def test_cusp_pole_order_oracle():
    job = load_job("suzuki_f8_63")
    eng = CuspEngine(job)
    ring = job.ring
    x = ring.monomial(1, 0)
    y = ring.monomial(0, 1)
    assert eng.pole(x) == 8
    assert eng.pole(y) == 10
    assert eng.pole(ring.mul(x, y)) == 18
    assert eng.pole(ring.mul(y, ring.mul(y, y))) == 30
    assert eng.pole(ring.const(1)) == 0


def test_degdet_triangular():
    from curvegen.field import Field

    F8 = Field(2, 3, [1, 1, 0, 1], [0, 1, 0])
    # columns of a 2x2 triangular matrix: deg det = 3 + 1
    cols = [[[1, 0, 0, 1], [0, 1]], [[], [0, 1]]]
    assert degdet(F8, cols) == 4


@pytest.mark.parametrize("name", ["rs_f8_7", "rs_f64_63"])
def test_export_matches_shipped_fixture(name):
    from pathlib import Path

    obj = export(load_job(name))
    repo = Path(__file__).resolve().parents[2]
    shipped = json.loads((repo / "src" / "agcode" / "data" / f"{name}.json").read_text())
    assert obj == shipped


def test_export_hermitian_summary():
    obj = export(load_job("hermitian_f9_26"))
    assert obj["n"] == 26 and obj["gamma"] == 3 and obj["degG"] == 17
    assert obj["a"] == [0, 4, 8]
    assert obj["b"] == [-15, -14, -10]


def test_export_klein_summary():
    q1 = export(load_job("klein_f8_q1"))
    assert (q1["n"], q1["gamma"], q1["degG"]) == (22, 3, 18)
    assert q1["a"] == [0, 7, 5]
    assert q1["b"] == [-12, -17, -13]
    q2 = export(load_job("klein_f8_q2"))
    assert q2["b"] == [-12, -14, -16]


def test_cli_list_and_errors(tmp_path, capsys):
    assert main(["--list"]) == 0
    out = capsys.readouterr().out.split()
    assert out == sorted(SHIPPED)
    assert main(["no_such_job", "-o", str(tmp_path / "x.json")]) == 2
    with pytest.raises(SystemExit):
        main(["rs_f8_7"])  # missing -o


def test_cli_export_roundtrip(tmp_path, capsys):
    out = tmp_path / "rs.json"
    assert main(["rs_f8_7", "-o", str(out), "-q"]) == 0
    obj = json.loads(out.read_text())
    assert obj["n"] == 7 and obj["gamma"] == 1
    # a job given by path works the same way
    src = tmp_path / "job.json"
    src.write_text(json.dumps(job_obj("rs_f8_7")))
    out2 = tmp_path / "rs2.json"
    assert main([str(src), "-o", str(out2)]) == 0
    assert json.loads(out2.read_text()) == obj
    assert "n=7" in capsys.readouterr().out
