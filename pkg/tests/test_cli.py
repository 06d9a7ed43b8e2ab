"""Command-line interface: formats, exit codes, determinism, stdin."""

import io
import json
import random

import pytest

from agcode.cli import main
from agcode.decoder import decode

from conftest import get_pc


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_info_text(capsys):
    rc, out, _ = run(capsys, "info", "hermitian_f9_26")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "n = 26"
    assert lines[1] == "k = 15"
    assert lines[2] == "gamma = 3"
    assert lines[3] == "genus = 3"
    assert lines[4] == "|G| = 17"
    assert lines[5] == "nu:"
    assert lines[6] == "  s = 0\tnu = 9"
    assert "d_LO = 9" in lines
    assert "N_h = 10" in lines
    assert "N_eta = 9" in lines
    assert "N_deg = 13" in lines
    assert "N_iter = 32" in lines


def test_info_json_suzuki(capsys):
    rc, out, _ = run(capsys, "info", "suzuki_f8_63", "--format", "json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["n"] == 63 and obj["k"] == 26
    assert obj["d_lo"] == 25
    assert obj["N_deg"] == 16 and obj["N_iter"] == 91


def test_info_accepts_a_path(tmp_path, capsys):
    from agcode.codedata import load_fixture

    p = tmp_path / "c.json"
    load_fixture("rs_f8_7").save(p)
    rc, out, _ = run(capsys, "info", str(p))
    assert rc == 0 and "n = 7" in out


def test_encode_decode_roundtrip(capsys):
    rc, out, _ = run(capsys, "encode", "rs_f8_7", "1,a,a^2")
    assert rc == 0
    word = out.strip()
    rc, out, _ = run(capsys, "decode", "rs_f8_7", word)
    assert rc == 0
    lines = dict(l.split(" = ", 1) for l in out.splitlines() if " = " in l)
    pc = get_pc("rs_f8_7")
    F = pc.code.field
    expected = ",".join(F.format(F.parse(t)) for t in ("1", "a", "a^2"))
    assert lines["message"] == expected
    assert lines["residual_weight"] == "0"
    assert lines["verified"] == "true"


def test_decode_from_stdin(capsys, monkeypatch):
    rc, out, _ = run(capsys, "encode", "rs_f8_7", "1,0,a")
    word = out.strip()
    monkeypatch.setattr("sys.stdin", io.StringIO(f"codeword = {word}\n"))
    rc, out, _ = run(capsys, "decode", "rs_f8_7", "-")
    assert rc == 0 and "verified = true" in out


def test_decode_json_and_trace(capsys):
    pc = get_pc("rs_f8_7")
    word = ",".join(pc.code.field.format(0) for _ in range(7))
    rc, out, _ = run(capsys, "decode", "rs_f8_7", word, "--format", "json", "--trace")
    assert rc == 0
    obj = json.loads(out)
    assert obj["message"] == [[0, 0, 0]] * 3
    assert obj["verified"] is True
    assert len(obj["trace"]) == obj["iterations"]


def test_decode_verify_exit_code(capsys):
    pc = get_pc("rs_f8_7")
    F = pc.code.field
    rng = random.Random(11)
    v = [rng.randrange(F.q) for _ in range(7)]
    res = decode(v, pc)
    rc, out, _ = run(capsys, "decode", "rs_f8_7", ",".join(map(F.format, v)), "--verify")
    assert rc == (0 if res.verified else 3)
    rc, _, _ = run(capsys, "decode", "rs_f8_7", ",".join(map(F.format, v)), "--selfcheck")
    assert rc in (0, 3) and rc == 0  # selfcheck without --verify still exits 0


def test_simulate_deterministic(capsys):
    args = ("simulate", "klein_f8_q1", "--errors", "2", "--trials", "5",
            "--seed", "3", "--format", "json")
    rc, out1, _ = run(capsys, *args)
    assert rc == 0
    rc, out2, _ = run(capsys, *args)
    r1, r2 = json.loads(out1), json.loads(out2)
    r1.pop("mean_decode_seconds"), r2.pop("mean_decode_seconds")
    assert r1 == r2
    assert r1["trials"] == 5 and r1["error_weight"] == 2
    assert r1["successes"] == 5 and r1["failures"] == 0
    assert set(r1) == {"trials", "error_weight", "successes", "failures", "ties",
                       "max_iterations", "max_poly_degree"}


def test_simulate_text_format(capsys):
    rc, out, _ = run(capsys, "simulate", "rs_f8_7", "--errors", "1", "--trials", "3")
    assert rc == 0
    assert "successes = 3" in out
    assert "mean_decode_seconds = " in out


def test_selftest(capsys):
    rc, out, _ = run(capsys, "selftest", "rs_f8_7", "--vectors", "5")
    assert rc == 0
    assert "selftest passed: 5 random vectors" in out


def test_error_exit_codes(capsys):
    rc, _, err = run(capsys, "info", "no_such_fixture")
    assert rc == 2 and "no such file or fixture" in err
    rc, _, err = run(capsys, "decode", "rs_f8_7", "1,0,1")
    assert rc == 2 and "expected 7" in err
    rc, _, err = run(capsys, "encode", "rs_f8_7", "1,zz,0")
    assert rc == 2
    with pytest.raises(SystemExit):
        main(["simulate", "rs_f8_7", "--errors", "-1"])
    with pytest.raises(SystemExit):
        main(["bogus"])
