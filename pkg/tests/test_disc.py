"""Hypergeometric evaluator, spherical functions, Cartan/Haar, Plancherel."""

import random

import mpmath
import numpy as np
import pytest

from moyal_sl2.disc import (
    RadialFunction,
    calibrate_haar_constant,
    cartan_coords,
    cartan_t,
    gauss_panels,
    group_from_cartan,
    haar_integrate,
    hc_integral_zonal,
    hyp2f1,
    norm2_radial,
    plancherel_norm,
    radial_bump,
    radial_bump_smooth,
    spherical_transform,
    spherical_zeta,
    transform_grid,
    zeta_l2_norm2,
    zeta_rows,
)
from moyal_sl2.psrep import a_t, k_theta, random_su11

RNG = random.Random(211)


# -- 2F1 ------------------------------------------------------------------------

def test_hyp2f1_trivial_values():
    assert hyp2f1(0.3 + 1j, -0.7, 1.0, 0.0) == 1.0
    for x in (0.1, 0.45, 0.7, 0.95):
        assert abs(hyp2f1(1.0, 1.0, 1.0, x) - 1.0 / (1.0 - x)) < 1e-12
        assert abs(hyp2f1(2.0, 0.0, 1.0, x) - 1.0) < 1e-15


def test_hyp2f1_domain():
    with pytest.raises(ValueError):
        hyp2f1(1.0, 1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        hyp2f1(1.0, 1.0, 1.0, -0.2)


@pytest.mark.parametrize("tau", [0.5, 1.0, 2.0, 5.0, 10.0, 20.0])
@pytest.mark.parametrize("n", [0, 1, 3, 8])
def test_hyp2f1_against_mpmath(tau, n):
    s = 0.5 + 1j * tau
    for x in (0.05, 0.3, 0.5, 0.71, 0.9, 0.985):
        mine = hyp2f1(s + n, s - n, 1.0, x)
        ref = complex(mpmath.hyp2f1(complex(s + n), complex(s - n), 1.0, x))
        assert abs(mine - ref) <= 1e-10 * max(1.0, abs(ref))


def test_hyp2f1_terminating_large_x():
    # terminating series is valid arbitrarily close to 1
    for x in (0.2, 0.9, 0.999):
        mine = hyp2f1(4.0, -2.0, 1.0, x)
        ref = complex(mpmath.hyp2f1(4, -2, 1, x))
        assert abs(mine - ref) < 1e-12 * max(1.0, abs(ref))


def test_hyp2f1_log_case():
    # c - a - b = 0 (the tau = 0 endpoint), real parameters
    for x in (0.6, 0.8, 0.95):
        mine = hyp2f1(0.5, 0.5, 1.0, x)
        ref = complex(mpmath.hyp2f1(0.5, 0.5, 1.0, x))
        assert abs(mine - ref) <= 1e-10 * max(1.0, abs(ref))


# -- spherical functions -----------------------------------------------------------

def test_zeta_at_origin():
    for n in (0, 1, 2, 5):
        for s in (0.5 + 2j, 1.0, 2.0, 0.5):
            assert spherical_zeta(n, s, 0.0) == 1.0


def test_zeta_terminating_example():
    # zeta_{1,1} = 1 - X = sech^2(t/2)
    for t in (0.3, 1.0, 2.5):
        assert abs(spherical_zeta(1, 1.0, t) - 1.0 / np.cosh(t / 2) ** 2) < 1e-14


@pytest.mark.parametrize("tau", [0.5, 1.0, 2.0, 5.0, 10.0])
def test_zonal_zeta_matches_harish_chandra_integral(tau):
    s = 0.5 + 1j * tau
    for t in (0.25, 1.0, 2.5, 5.0):
        lhs = spherical_zeta(0, s, t)
        rhs = hc_integral_zonal(s, t)
        assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(rhs))


def test_zeta_rows_matches_scalar():
    taus = [0.3, 1.7, 6.0]
    ts = [0.2, 1.1, 3.3, 5.5]
    rows = zeta_rows(2, [0.5 + 1j * q for q in taus], ts)
    for i, q in enumerate(taus):
        for j, t in enumerate(ts):
            assert abs(rows[i, j] - spherical_zeta(2, 0.5 + 1j * q, t)) < 1e-11


def test_zeta_symmetry_s_to_one_minus_s():
    # Euler transformation: zeta_{n,s} = zeta_{n,1-s}
    for n in (0, 2):
        for tau in (0.7, 3.0):
            for t in (0.5, 2.0):
                a = spherical_zeta(n, 0.5 + 1j * tau, t)
                b = spherical_zeta(n, 0.5 - 1j * tau, t)
                assert abs(a - b) < 1e-11 * max(1.0, abs(a))


# -- Cartan coordinates --------------------------------------------------------------

def test_cartan_identity():
    t, th, ps = cartan_coords(group_from_cartan(0.0, 0.4, 0.4))
    assert t == 0.0 and abs(th - ps) < 1e-12


def test_cartan_at_matches_svd_oracle():
    for tval in (0.3, 1.2, 2.8):
        g = a_t(tval)
        t, th, ps = cartan_coords(g)
        assert abs(t - tval) < 1e-12
        assert abs(cartan_t(g) - tval) < 1e-10
        assert abs(th) < 1e-12 and abs(ps) < 1e-12


def test_cartan_roundtrip():
    for _ in range(50):
        g = random_su11(RNG, t_max=2.5)
        t, th, ps = cartan_coords(g)
        back = group_from_cartan(t, th, ps)
        assert np.max(np.abs(back.m - g.m)) < 1e-10
        assert abs(cartan_t(g) - t) < 1e-9


def test_cartan_rejects_non_su11():
    from moyal_sl2.psrep import GroupElement

    g = GroupElement(np.array([[1.0, 0.5j], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        cartan_coords(g)


# -- Haar integration -----------------------------------------------------------------

def test_haar_radial_factorization():
    # F depending only on t reduces to the 1-D weighted integral
    fn = lambda g: np.exp(-cartan_t(g) ** 2)
    val = haar_integrate(fn, 6.0, n_t=48, n_angle=6).real
    t, w = gauss_panels(0.0, 6.0, 4, 48)
    ref = float(np.sum(np.exp(-(t**2)) * np.sinh(t) * w))
    assert abs(val - ref) < 1e-8 * ref


def test_haar_bi_invariance():
    fn = lambda g: np.exp(-cartan_t(g) ** 2) * (1.0 + 0.3 * np.cos(np.angle(g.m[0, 0])))
    base = haar_integrate(fn, 8.0, n_t=40, n_angle=16)
    for _ in range(2):
        g0 = random_su11(RNG, t_max=0.5)
        shifted = lambda g: fn(GroupElementWrap(g0.m @ g.m))
        val = haar_integrate(shifted, 8.0, n_t=40, n_angle=16)
        assert abs(val - base) < 2e-4 * abs(base)


class GroupElementWrap:
    """Tiny adapter so shifted integrands can reuse cartan_t/angles."""

    def __init__(self, m):
        self.m = m

    def is_su11(self, tol=1e-8):
        return True


def test_haar_ball_volume_refinement():
    fn = lambda g: 1.0 if cartan_t(g) < 2.0 else 0.0
    coarse = haar_integrate(fn, 2.0, n_t=32, n_angle=4).real
    fine = haar_integrate(fn, 2.0, n_t=64, n_angle=4).real
    exact = np.cosh(2.0) - 1.0
    assert abs(fine - exact) < abs(coarse - exact) + 1e-12
    assert abs(fine - exact) < 1e-10


# -- spherical transform ----------------------------------------------------------------

def test_transform_zero():
    f = RadialFunction(lambda t: 0.0 * np.asarray(t), 0, (0.0, 2.0))
    assert spherical_transform(f, 0.5 + 1j) == 0.0


def test_transform_point_mass_limit():
    t0 = 1.5
    s = 0.5 + 0.8j
    target = spherical_zeta(0, s, t0)
    prev = None
    for width in (0.4, 0.2, 0.1):
        f = radial_bump(t0, width, ell=0)
        mass = float(
            np.sum(
                f(gauss_panels(*f.support, 2, 48)[0])
                * np.sinh(gauss_panels(*f.support, 2, 48)[0])
                * gauss_panels(*f.support, 2, 48)[1]
            )
        )
        val = spherical_transform(f, s) / mass
        err = abs(val - target)
        if prev is not None:
            assert err < prev
        prev = err
    assert prev < 5e-3


def test_transform_matches_high_resolution_oracle():
    f = radial_bump(1.2, 0.8, ell=0)
    for s in (0.5 + 0.5j, 0.5 + 3j, 0.75):
        a = spherical_transform(f, s)
        # 4x resolution independent quadrature
        t, w = gauss_panels(*f.support, 8, 64)
        vals = np.asarray(f(t), complex)
        zs = zeta_rows(0, [s], t)[0]
        b = complex(np.sum(vals * zs * np.sinh(t) * w))
        assert abs(a - b) <= 1e-8 * max(1.0, abs(b))


def test_transform_real_on_principal_line():
    f = radial_bump(1.4, 0.9, ell=2)
    taus = np.array([0.5, 1.5, 4.0])
    vals = transform_grid(f, 0.5 + 1j * taus)
    assert np.max(np.abs(vals.imag)) < 1e-12
    conj_vals = transform_grid(f, 0.5 - 1j * taus)
    assert np.max(np.abs(vals - conj_vals)) < 1e-10


# -- Plancherel --------------------------------------------------------------------------

def test_zeta_l2_norms_exact_values():
    # int zeta_{l,p}^2 sinh dt = 2/(2p-1): the printed discrete weights
    # (p - 1/2) are exactly the reciprocal norms.
    for ell in (1, 2, 3):
        for p in range(1, ell + 1):
            assert abs(zeta_l2_norm2(ell, p) - 2.0 / (2 * p - 1)) < 1e-10


def test_haar_calibration_is_unity():
    c0 = calibrate_haar_constant()
    assert abs(c0 - 1.0) < 1e-6


def test_plancherel_zonal():
    for t0, width in ((1.2, 0.8), (2.2, 1.0)):
        f = radial_bump(t0, width, ell=0)
        bd = plancherel_norm(f)
        assert not bd.discrete
        assert bd.relative_error < 1e-3


def test_plancherel_ell2():
    f = radial_bump(1.5, 1.0, ell=2)
    bd = plancherel_norm(f)
    assert [p for p, _, _ in bd.discrete] == [1, 2]
    assert [w for _, w, _ in bd.discrete] == [0.5, 1.5]
    assert bd.relative_error < 1e-3


def test_plancherel_positivity():
    f = radial_bump(1.5, 0.9, ell=2)
    bd = plancherel_norm(f)
    assert bd.continuous >= 0
    assert all(v >= 0 and w > 0 for _, w, v in bd.discrete)


def test_plancherel_discrete_only_profile():
    """A profile proportional to zeta_{2,2} is captured by the p = 2 atom."""
    f = RadialFunction(lambda t: 1.0 / np.cosh(np.asarray(t) / 2) ** 4, 2, (0.0, 40.0))
    bd = plancherel_norm(f)
    # direct norm = 2/3; continuous part vanishes by orthogonality
    assert abs(bd.direct - 2.0 / 3.0) < 1e-9
    assert bd.continuous < 1e-10
    assert abs(bd.discrete[1][2] - (2.0 / 3.0) ** 2) < 1e-9
    assert bd.relative_error < 1e-9


def test_spectral_decay_superpolynomial():
    # faster-than-quadratic decay per doubling in the reachable tau range
    f = radial_bump_smooth(1.5, 1.0, ell=0)
    vals = [abs(spherical_transform(f, 0.5 + 1j * tau)) for tau in (4.0, 8.0, 16.0, 32.0)]
    for lo, hi in zip(vals, vals[1:]):
        assert hi < lo / 4.0
