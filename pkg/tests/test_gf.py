"""Field arithmetic: axioms, notation, tables, serialization."""

import random

import pytest

from agcode.gf import GF

F8 = GF(2, 3, [1, 1, 0, 1], [0, 1, 0])
F9 = GF(3, 2, [1, 0, 1], [1, 1])


@pytest.mark.parametrize("F", [F8, F9], ids=["F8", "F9"])
def test_field_axioms_exhaustive(F):
    q = F.q
    for a in range(q):
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.mul(a, 0) == 0
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.sub(F.add(a, b), b) == a
            for c in range(q):
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_field_axioms_sampled_f64():
    F = GF(2, 6, [1, 1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 0])
    rng = random.Random(0)
    for _ in range(2000):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        if a:
            assert F.div(F.mul(a, b), a) == b


def test_generator_order():
    for F in (F8, F9):
        seen = {F.from_power(k) for k in range(F.q - 1)}
        assert len(seen) == F.q - 1
        assert 0 not in seen
        assert F.from_power(None) == 0
        for k in range(F.q - 1):
            assert F.log(F.from_power(k)) == k


def test_pow_matches_repeated_mul():
    for F in (F8, F9):
        for a in range(1, F.q):
            acc = 1
            for k in range(2 * F.q):
                assert F.pow(a, k) == acc
                acc = F.mul(acc, a)
            assert F.mul(F.pow(a, -1), a) == 1
    assert F9.pow(0, 0) == 1
    assert F9.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        F9.pow(0, -1)


def test_digit_roundtrip_and_parse():
    for F in (F8, F9):
        for a in range(F.q):
            assert F.from_digits(F.digits(a)) == a
            assert F.parse(F.format(a)) == a
    assert F9.parse("a^2") == F9.mul(F9.generator, F9.generator)
    assert F9.parse("a") == F9.generator
    assert F9.parse("-1") == F9.neg(1)
    assert F9.parse(" 2 ") == 2
    assert F9.parse("[1,2]") == F9.from_digits([1, 2])
    with pytest.raises(ValueError):
        F9.parse("[1,2")
    with pytest.raises(ValueError):
        F9.parse("5")  # outside the prime subfield
    with pytest.raises(ValueError):
        F9.parse("[3,0]")


def test_np_tables_match_scalar_ops():
    for F in (F8, F9):
        add_t, mul_t = F.np_tables()
        for a in range(F.q):
            for b in range(F.q):
                assert add_t[a, b] == F.add(a, b)
                assert mul_t[a, b] == F.mul(a, b)


def test_json_roundtrip():
    for F in (F8, F9):
        G = GF.from_json(F.to_json())
        assert G == F
        assert hash(G) == hash(F)
    assert F8 != F9


def test_bad_construction():
    with pytest.raises(ValueError):
        GF(4, 1, [1, 1], [1])  # p not prime
    with pytest.raises(ValueError):
        GF(2, 2, [1, 0, 1], [0, 1])  # reducible modulus
    with pytest.raises(ValueError):
        GF(2, 3, [1, 1, 0, 1], [1, 0, 0])  # generator of small order
    with pytest.raises(ValueError):
        GF(2, 17, [1] + [0] * 16 + [1], [0, 1] + [0] * 15)  # over the size cap


def test_element_check():
    with pytest.raises(ValueError):
        F9.check(9)
    with pytest.raises(ValueError):
        F9.check(-1)
    with pytest.raises(ValueError):
        F9.check("3")
    assert F9.check(8) == 8
