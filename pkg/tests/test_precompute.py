"""Precomputation pipeline: kernel basis, Lagrange basis, nu-table, cache."""

import random

import pytest

from agcode.codedata import CodeDataError, load_fixture
from agcode.precompute import PrecomputedCode, compute_dlo, precompute, precompute_cached

from conftest import get_pc

ALL = ["hermitian_f9_26", "klein_f8_q1", "klein_f8_q2", "rs_f8_7", "rs_f64_63", "suzuki_f8_63"]


@pytest.mark.parametrize("name", ALL)
def test_kernel_basis_evaluates_to_zero(name):
    pc = get_pc(name)
    code = pc.code
    for f in pc.eta:
        assert code.eval_rbar(f) == [0] * code.n


@pytest.mark.parametrize("name", ALL)
def test_footprint_size_and_order(name):
    pc = get_pc(name)
    code = pc.code
    assert len(pc.footprint) == code.n
    deltas = [code.gamma * k + code.b[j] for k, j in pc.footprint]
    assert deltas == sorted(deltas)
    assert len(set(deltas)) == code.n


@pytest.mark.parametrize("name", ALL)
def test_lagrange_basis_is_dual_to_points(name):
    pc = get_pc(name)
    code = pc.code
    for i, h in enumerate(pc.lagrange):
        ev = code.eval_rbar(h)
        assert ev == [1 if t == i else 0 for t in range(code.n)]


def test_compute_hv_interpolates():
    pc = get_pc("klein_f8_q2")
    code, F = pc.code, pc.code.field
    rng = random.Random(3)
    v = [rng.randrange(F.q) for _ in range(code.n)]
    assert code.eval_rbar(pc.compute_hv(v)) == v
    with pytest.raises(ValueError):
        pc.compute_hv(v + [0])


@pytest.mark.parametrize(
    "name,d_lo", [("hermitian_f9_26", 9), ("klein_f8_q1", 5), ("klein_f8_q2", 4),
                  ("rs_f8_7", 5), ("rs_f64_63", 25), ("suzuki_f8_63", 25)]
)
def test_decoding_radius(name, d_lo):
    pc = get_pc(name)
    assert pc.d_lo == d_lo
    assert pc.correctable() == (d_lo - 1) // 2
    assert min(pc.nu_table.values()) == d_lo


def test_bounds_hermitian_values():
    pc = get_pc("hermitian_f9_26")
    assert (pc.n_h, pc.n_eta, pc.n_deg, pc.n_iter) == (10, 9, 13, 32)


def test_bounds_suzuki_values():
    pc = get_pc("suzuki_f8_63")
    assert (pc.n_h, pc.n_eta, pc.n_deg, pc.n_iter) == (11, 9, 16, 91)
    assert max(max(len(p) - 1 for p in f if p) for f in pc.eta) <= pc.n_eta
    assert max(max((len(p) - 1 for p in f if p), default=0) for f in pc.lagrange) <= pc.n_h


def test_genus_zero_degree_cap():
    pc = get_pc("rs_f64_63")
    assert pc.n_deg == pc.code.n == 63


def test_nu_rejects_radius_below_floor():
    code = load_fixture("hermitian_f9_26")
    # zero lead degrees give nu(0) = 0 < n - |G|
    with pytest.raises(CodeDataError):
        compute_dlo(code, [0, 0, 0])


def test_sidecar_cache_roundtrip(tmp_path):
    src = load_fixture("rs_f8_7")
    path = tmp_path / "code.json"
    src.save(path)
    pc1 = precompute_cached(path)
    assert (tmp_path / "code.json.pre.json").exists()
    pc2 = precompute_cached(path)
    assert isinstance(pc2, PrecomputedCode)
    assert pc1.to_json() == pc2.to_json()
    # stale cache is ignored when the data file changes
    load_fixture("rs_f8_7").save(path)
    pc3 = precompute_cached(path)
    assert pc3.to_json() == pc1.to_json()
    direct = precompute(src)
    assert direct.to_json() == pc1.to_json()
