"""Polynomial lists and module rows: normalization, arithmetic, orders."""

import random

import pytest

from agcode.codedata import load_fixture
from agcode.gf import GF
from agcode.polyring import (
    ModuleRow,
    coeff_at,
    padd,
    paxpy,
    pdeg,
    peval,
    plc,
    pmul,
    pneg,
    pscale,
    pshift,
    ptrim,
    row_axpy,
    row_leading,
)

F9 = GF(3, 2, [1, 0, 1], [1, 1])


def rand_poly(rng, F, maxdeg):
    return ptrim([rng.randrange(F.q) for _ in range(rng.randrange(maxdeg + 2))])


def test_normalization():
    assert ptrim([0, 0]) == []
    assert ptrim([1, 2, 0]) == [1, 2]
    assert pdeg([]) == -1
    assert pdeg([5]) == 0
    assert coeff_at([1, 2], 5) == 0
    assert coeff_at([1, 2], 1) == 2
    with pytest.raises(ValueError):
        coeff_at([1], -1)
    with pytest.raises(ValueError):
        plc([])


def test_ring_axioms_random():
    rng = random.Random(0)
    F = F9
    for _ in range(300):
        a = rand_poly(rng, F, 6)
        b = rand_poly(rng, F, 6)
        c = rand_poly(rng, F, 6)
        assert padd(F, a, b) == padd(F, b, a)
        assert padd(F, a, pneg(F, a)) == []
        assert pmul(F, a, b) == pmul(F, b, a)
        assert pmul(F, a, padd(F, b, c)) == padd(F, pmul(F, a, b), pmul(F, a, c))
        assert pmul(F, pmul(F, a, b), c) == pmul(F, a, pmul(F, b, c))
        x = rng.randrange(F.q)
        assert peval(F, padd(F, a, b), x) == F.add(peval(F, a, x), peval(F, b, x))
        assert peval(F, pmul(F, a, b), x) == F.mul(peval(F, a, x), peval(F, b, x))


def test_paxpy_matches_composition():
    rng = random.Random(1)
    F = F9
    for _ in range(200):
        a = rand_poly(rng, F, 6)
        b = rand_poly(rng, F, 6)
        c = rng.randrange(F.q)
        k = rng.randrange(4)
        direct = paxpy(F, a, b, c, k)
        composed = padd(F, a, pshift(pscale(F, b, c), k))
        assert direct == composed
        assert not direct or direct[-1] != 0


def test_pscale_pshift_edges():
    assert pscale(F9, [1, 2], 0) == []
    assert pscale(F9, [1, 2], 1) == [1, 2]
    assert pshift([], 3) == []
    assert pshift([1], 2) == [0, 0, 1]


def test_module_row_basics():
    row = ModuleRow.zero(3)
    assert row.is_zero()
    assert row.max_degree() == -1
    row.u[1] = [0, 1]
    assert not row.is_zero()
    assert row.max_degree() == 1
    cp = row.copy()
    cp.u[1][0] = 5
    assert row.u[1][0] == 0


def test_row_axpy_componentwise():
    F = F9
    a = ModuleRow([[1], []], [[2], [0, 1]])
    b = ModuleRow([[], [1]], [[1], [1]])
    out = row_axpy(F, a, b, 2, 1)
    assert out.u == [[1], [0, 2]]
    # the degree-1 term of w[1] cancels: add(1, 2) = 0 in F9
    assert out.w == [[2, 2], []]
    with pytest.raises(ValueError):
        row_axpy(F, a, ModuleRow.zero(3), 1, 0)


def test_row_leading_weights_and_tie_break():
    code = load_fixture("hermitian_f9_26")
    # a = (0, 4, 8), b = (-15, -14, -10), gamma = 3
    row = ModuleRow([[1], [], []], [[], [], []])
    lt = row_leading(row, 0, code)
    assert (lt.has_z, lt.col, lt.xdeg, lt.sdeg) == (True, 0, 0, 0)
    # weight of x^5 ybar_0 is 15 - 15 = 0: the tie goes to the z-side
    row = ModuleRow([[1], [], []], [[0, 0, 0, 0, 0, 1], [], []])
    lt = row_leading(row, 0, code)
    assert lt.has_z
    # shifting s moves only the z-side weights
    lt = row_leading(row, -1, code)
    assert not lt.has_z and lt.col == 0 and lt.sdeg == 0
    row = ModuleRow([[], [], []], [[], [0, 1], [3]])
    # x ybar_1 has weight -11, ybar_2 has weight -10
    lt = row_leading(row, 0, code)
    assert (lt.has_z, lt.col, lt.xdeg, lt.coeff, lt.sdeg) == (False, 2, 0, 3, -10)
    with pytest.raises(ValueError):
        row_leading(ModuleRow.zero(3), 0, code)
