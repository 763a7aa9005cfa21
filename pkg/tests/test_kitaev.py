import numpy as np
import pytest

from tetranacci.chain import ChainParams, build_chain_matrix
from tetranacci.denselinalg import sym_eigen
from tetranacci.errors import DegenerateCouplingError
from tetranacci.kitaev import (KitaevParams, XYParams, bdg_matrix,
                               bdg_spectrum, effective_h_matrix,
                               kitaev_effective_coeffs,
                               kitaev_effective_hoppings, kitaev_spectrum,
                               xy_effective_hoppings)


def test_effective_coeffs_mu_zero():
    c = kitaev_effective_coeffs(0.5, KitaevParams(mu=0.0, t=1.0, delta=0.3, n=4))
    assert c.eta == 0.0


def test_effective_hoppings_simple():
    t1, t2 = kitaev_effective_hoppings(KitaevParams(mu=0.7, t=1.0, delta=0.0, n=4))
    assert t2 == 1.0 and t1 == 1.4


def test_effective_coeffs_quoted_point():
    c = kitaev_effective_coeffs(0.0, KitaevParams(mu=1.0, t=2.0, delta=1.0, n=4))
    assert abs(c.zeta - (-11.0 / 3.0)) < 1e-14
    assert abs(c.eta - (-4.0 / 3.0)) < 1e-14


def test_effective_coeffs_rejects_t_eq_delta():
    with pytest.raises(DegenerateCouplingError):
        kitaev_effective_coeffs(0.0, KitaevParams(mu=0.5, t=1.0, delta=1.0, n=4))


def test_xy_hoppings():
    assert xy_effective_hoppings(XYParams(jx=1.0, jy=1.0, hfield=0.0))[0] == 0.0
    assert xy_effective_hoppings(XYParams(jx=1.0, jy=1.0, hfield=1.0)) == (-4.0, 1.0)
    assert xy_effective_hoppings(XYParams(jx=2.0, jy=-1.0, hfield=0.3))[1] == -2.0


def test_h_matrix_structure():
    p = KitaevParams(mu=0.6, t=1.1, delta=0.4, n=5)
    h = effective_h_matrix(p)
    assert np.allclose(h, h.T)
    bulk = p.mu ** 2 + (p.delta - p.t) ** 2 + (p.delta + p.t) ** 2
    assert abs(h[2, 2] - bulk) < 1e-14
    assert abs(h[0, 1] - 2.0 * p.t * p.mu) < 1e-14
    assert abs(h[0, 2] - (p.t ** 2 - p.delta ** 2)) < 1e-14
    # boundary deficits: first site misses the (delta+t)^2 term, last the other
    assert abs(h[0, 0] - (p.mu ** 2 + (p.delta - p.t) ** 2)) < 1e-14
    assert abs(h[-1, -1] - (p.mu ** 2 + (p.delta + p.t) ** 2)) < 1e-14


def test_h_matrix_t_eq_delta_drops_second_neighbor():
    h = effective_h_matrix(KitaevParams(mu=0.3, t=1.0, delta=1.0, n=5))
    assert np.abs(np.diag(h, 2)).max() == 0.0


def test_h_matrix_n2():
    p = KitaevParams(mu=0.5, t=0.8, delta=0.2, n=2)
    h = effective_h_matrix(p)
    assert h.shape == (2, 2)
    assert abs(h[0, 0] - (p.mu ** 2 + (p.delta - p.t) ** 2)) < 1e-14


def test_spectrum_vs_bdg():
    rng = np.random.default_rng(0)
    for _ in range(10):
        p = KitaevParams(mu=rng.normal(), t=rng.normal(),
                         delta=0.5 * rng.normal(), n=6)
        a = np.array(kitaev_spectrum(p))
        b = np.array(bdg_spectrum(p))
        scale = max(1.0, np.abs(b).max())
        assert np.abs(np.sort(a) - np.sort(b)).max() <= 1e-8 * scale


def test_majorana_point_zero_mode():
    p = KitaevParams(mu=0.0, t=1.0, delta=1.0, n=8)
    w, _ = sym_eigen(effective_h_matrix(p))
    assert abs(w[0]) < 1e-10


def test_delta_zero_reduces_to_tridiagonal_chain():
    p = KitaevParams(mu=0.4, t=0.9, delta=0.0, n=7)
    chain = ChainParams(mu=p.mu, t1=p.t, t2=0.0, n=p.n)
    w, _ = sym_eigen(build_chain_matrix(chain))
    want = sorted(np.concatenate([np.abs(w), -np.abs(w)]))
    got = kitaev_spectrum(p)
    assert np.abs(np.array(got) - want).max() < 1e-9


def test_spectrum_symmetric_in_mu():
    p_plus = KitaevParams(mu=0.7, t=1.0, delta=0.4, n=6)
    p_minus = KitaevParams(mu=-0.7, t=1.0, delta=0.4, n=6)
    a = np.abs(kitaev_spectrum(p_plus))
    b = np.abs(kitaev_spectrum(p_minus))
    assert np.abs(np.sort(a) - np.sort(b)).max() < 1e-10


def test_t_delta_duality_regimes_differ():
    strong = KitaevParams(mu=0.5, t=2.0, delta=0.5, n=6)   # t/delta = 4
    weak = KitaevParams(mu=0.5, t=0.5, delta=2.0, n=6)     # t/delta = 0.25
    a = np.array(kitaev_spectrum(strong))
    b = np.array(kitaev_spectrum(weak))
    assert np.abs(a - b).max() > 1e-6


def test_bdg_matrix_structure():
    p = KitaevParams(mu=0.5, t=0.8, delta=0.2, n=3)
    m = bdg_matrix(p)
    assert m.shape == (6, 6)
    assert np.allclose(m, m.T)
    assert m[0, 0] == -p.mu
    assert m[0, 3 + 1] == -p.delta
