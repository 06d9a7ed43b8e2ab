"""Curve-data model: bookkeeping, validation, serialization, fixtures."""

import copy
import json
import random

import pytest

from agcode.codedata import CodeData, CodeDataError, list_fixtures, load_fixture

from conftest import get_pc


def test_shipped_fixtures_load_and_validate():
    names = list_fixtures()
    assert names == sorted(
        [
            "hermitian_f9_26",
            "klein_f8_q1",
            "klein_f8_q2",
            "rs_f8_7",
            "rs_f64_63",
            "suzuki_f8_63",
        ]
    )
    for name in names:
        code = load_fixture(name)  # validate=True
        assert code.k == len(code.message_support())
        assert code.k == code.degG - code.genus + 1


def test_message_support_and_phi():
    code = load_fixture("hermitian_f9_26")
    support = code.message_support()
    assert support[0] == -15 and support[-1] == 0
    assert len(support) == 15
    assert -13 not in support
    for s in support:
        k, m = code.phi_of(s)
        assert k >= 0 and s == code.gamma * k + code.b[m]
        assert code.in_lambdabar(s)
    assert not code.in_lambdabar(-13)
    with pytest.raises(ValueError):
        code.phi_rbar(-13)


def test_rbar_delta_and_lt():
    code = load_fixture("hermitian_f9_26")
    f = code.rbar_zero()
    with pytest.raises(ValueError):
        code.rbar_delta(f)
    f[1] = [0, 0, 2]  # x^2 ybar_1: delta = 6 - 14 = -8
    f[2] = [3]  # ybar_2: delta = -10
    assert code.rbar_delta(f) == -8
    assert code.rbar_lt(f) == (-8, 1, 2, 2)


def test_mul_y_is_linear_and_matches_evaluations():
    code = load_fixture("klein_f8_q1")
    F, gamma = code.field, code.gamma
    rng = random.Random(0)
    for _ in range(20):
        f = [[rng.randrange(F.q) for _ in range(3)] for _ in range(gamma)]
        i = rng.randrange(gamma)
        prod = code.mul_y(i, f)
        lhs = code.eval_rbar(prod)
        f_ev = code.eval_rbar(f)
        rhs = [F.mul(a, b) for a, b in zip(code.ev_y[i], f_ev)]
        assert lhs == rhs


def test_encode_linearity():
    pc = get_pc("rs_f8_7")
    code, F = pc.code, pc.code.field
    rng = random.Random(1)
    m1 = [rng.randrange(F.q) for _ in range(code.k)]
    m2 = [rng.randrange(F.q) for _ in range(code.k)]
    c = rng.randrange(F.q)
    lhs = code.encode([F.add(a, F.mul(c, b)) for a, b in zip(m1, m2)], pc.encoder)
    e1, e2 = code.encode(m1, pc.encoder), code.encode(m2, pc.encoder)
    assert lhs == [F.add(a, F.mul(c, b)) for a, b in zip(e1, e2)]
    with pytest.raises(ValueError):
        code.encode(m1 + [0], pc.encoder)


def _corrupt(obj, fn):
    obj = copy.deepcopy(obj)
    fn(obj)
    return obj


def test_validate_rejects_corruption():
    obj = json.loads(json.dumps(load_fixture("rs_f8_7").to_json()))

    def flip_table(o):
        o["table"][0][0][0][0] = [1 - d for d in o["table"][0][0][0][0]]

    def bad_apery(o):
        o["a"][0] = 1

    def bad_shape(o):
        o["ev_x"].pop()

    def bad_rank(o):
        o["table"][0][0] = []

    for fn in (flip_table, bad_apery, bad_shape, bad_rank):
        with pytest.raises(CodeDataError):
            CodeData.from_json(_corrupt(obj, fn))
    # the original still validates
    CodeData.from_json(obj).validate()


def test_malformed_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(CodeDataError):
        CodeData.load(p)
    p.write_text(json.dumps({"n": 3}))
    with pytest.raises(CodeDataError):
        CodeData.load(p)


def test_json_roundtrip(tmp_path):
    for name in ("rs_f8_7", "hermitian_f9_26"):
        code = load_fixture(name)
        p = tmp_path / f"{name}.json"
        code.save(p)
        again = CodeData.load(p)
        assert again.to_json() == code.to_json()
