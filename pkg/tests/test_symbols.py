"""Partial-Fourier symbol calculus: the exact operator identities.

This is the heart of the exact layer: the transported star actions
collapse to first-order operators (the cubic moment map of F included),
the ad transport equals the explicit normal form m + Y, and that normal
form equals the infinitesimal principal series at (mu, ell) = (-2, 1/nu),
all identically in the formal variable nu.
"""

import random

from moyal_sl2.diffops import DiffOp, random_diffop
from moyal_sl2.gaussrat import QQi
from moyal_sl2.liealg import BASIS, E, F, FRAME, H, LieElement, bracket
from moyal_sl2.polynomials import ETA, L, LP, NU_INV, Polynomial
from moyal_sl2.starprod import HOM_SIGN, ad_star_as_diffop
from moyal_sl2.symbols import (
    EPS_LEFT,
    SIGMA_F,
    ComplexCoordinate,
    ad_transport,
    calibrate_signs,
    dP_infinitesimal,
    fourier_conjugate,
    fourier_deconjugate,
    ha_poly,
    la_poly,
    left_transport,
    m_cocycle,
    rho_hat,
    tau,
    verify_prop34,
    verify_right_action,
    y_field,
    z_field,
)

I = QQi(0, 1)


# -- calibration -----------------------------------------------------------

def test_calibration_unique_and_frozen():
    from moyal_sl2.starprod import SIGMA_OMEGA

    assert calibrate_signs() == (SIGMA_OMEGA, SIGMA_F, EPS_LEFT) == (-1, 1, -1)


# -- Fourier dictionary ------------------------------------------------------

def test_dictionary_axioms():
    assert fourier_conjugate(DiffOp.mult(LP)) == DiffOp.partial("eta").scale(I * SIGMA_F)
    assert fourier_conjugate(DiffOp.partial("l")) == DiffOp.partial("l")
    assert fourier_conjugate(DiffOp.partial("lp")) == DiffOp.mult(ETA.scale(I * SIGMA_F))
    # applied twice: l'^2 -> -d_eta^2
    assert fourier_conjugate(DiffOp.mult(LP * LP)) == DiffOp.partial("eta", 2).scale(QQi(-1))


def test_dictionary_is_algebra_homomorphism():
    rng = random.Random(41)
    for _ in range(40):
        d1 = random_diffop(rng, max_order=2, n_terms=2)
        d2 = random_diffop(rng, max_order=2, n_terms=2)
        # operators live in (l, lp): strip eta directions
        d1 = DiffOp({(a, b, 0): p for (a, b, c), p in d1.terms.items()})
        d2 = DiffOp({(a, b, 0): p for (a, b, c), p in d2.terms.items()})
        lhs = fourier_conjugate(d1.compose(d2))
        rhs = fourier_conjugate(d1).compose(fourier_conjugate(d2))
        assert lhs == rhs


def test_dictionary_roundtrip():
    rng = random.Random(43)
    for _ in range(30):
        d = random_diffop(rng, max_order=3, n_terms=3)
        d = DiffOp({(a, b, 0): p for (a, b, c), p in d.terms.items()})
        assert fourier_deconjugate(fourier_conjugate(d)) == d


# -- complex coordinate --------------------------------------------------------

def test_complex_coordinate_identities():
    for eps in (1, -1):
        coord = ComplexCoordinate(eps)
        assert coord.d_z().apply(coord.z_poly()) == Polynomial.const(1)
        assert coord.d_z().apply(coord.zbar_poly()).is_zero()
        assert coord.d_zbar().apply(coord.zbar_poly()) == Polynomial.const(1)
        assert coord.d_zbar().apply(coord.z_poly()).is_zero()


# -- h_A, l_A, tau_A, Z_A --------------------------------------------------------

def test_ha_la_examples():
    z = Polynomial.var("z")
    he = ha_poly(E)
    assert he.is_zero()
    assert la_poly(E) == LieElement(Polynomial.const(1), Polynomial.zero(), Polynomial.zero())
    hh = ha_poly(H)
    assert hh == LieElement(Polynomial.zero(), Polynomial.const(1), Polynomial.zero())
    assert la_poly(H) == LieElement(z.scale(2), Polynomial.zero(), Polynomial.zero())
    hf = ha_poly(F)
    assert hf == LieElement(Polynomial.zero(), -z, Polynomial.zero())
    assert la_poly(F) == LieElement(-(z * z), Polynomial.zero(), Polynomial.zero())


def test_tau_examples():
    z = Polynomial.var("z")
    half_inv = Polynomial.monomial(QQi(1) / QQi(2), nu=-1)
    assert tau(E).is_zero()
    assert tau(H) == half_inv + Polynomial.const(1)
    assert tau(F) == -(z * (half_inv + Polynomial.const(1)))


def test_z_field_examples():
    coord = ComplexCoordinate(1)
    assert z_field(E, 1) == coord.d_z()
    assert z_field(H, 1) == DiffOp.mult(coord.realize(Polynomial.var("z")).scale(2)).compose(coord.d_z())
    zr = coord.realize(Polynomial.var("z"))
    assert z_field(F, 1) == DiffOp.mult(-(zr * zr)).compose(coord.d_z())


# -- the collapse identity (Prop 3.4 shape) --------------------------------------

def test_left_action_collapses_exactly():
    for a in BASIS:
        assert verify_prop34(a).is_zero(), a
    # linear combinations too
    a = E.scale(QQi(2)) + H.scale(QQi(-1)) + F.scale(QQi(3))
    assert verify_prop34(a).is_zero()


def test_left_transport_is_first_order():
    for a in BASIS:
        assert left_transport(a).order() <= 1


def test_right_action_mirror():
    for a in BASIS:
        assert verify_right_action(a).is_zero(), a


def test_left_minus_right_is_ad():
    for x in BASIS:
        ad_form = ad_transport(x)
        diff = left_transport(x) - right_transport_helper(x)
        assert diff == ad_form


def right_transport_helper(x):
    from moyal_sl2.symbols import right_transport

    return right_transport(x)


# -- the normal form m + Y and the equivalence with dP ------------------------------

def test_m_and_y_tables():
    assert m_cocycle(E).is_zero()
    assert m_cocycle(H) == Polynomial.const(2)
    assert m_cocycle(F) == L.scale(-2) + ETA.scale(I)
    assert y_field(E) == DiffOp.partial("l")
    assert y_field(H) == DiffOp({(1, 0, 0): L.scale(2), (0, 0, 1): ETA.scale(2)})
    yf = y_field(F)
    assert yf.terms[(1, 0, 0)] == Polynomial.monomial(1, eta=2, nu=2) - L * L
    assert yf.terms[(0, 0, 1)] == Polynomial.monomial(-2, l=1, eta=1)


def test_ad_transport_equals_rho_hat():
    """Fourier-conjugated ad equals m + Y, exactly and identically in nu."""
    for x in BASIS:
        assert ad_transport(x) == rho_hat(x), x
    x = E.scale(QQi(1, 2)) + F.scale(QQi(-3))
    assert ad_transport(x) == rho_hat(x)


def test_rho_hat_equals_principal_series_generator():
    """rho(X) = dP(X) at mu = -2, ell = 1/nu, exactly (Laurent nu)."""
    mu = QQi(-2)
    for x in BASIS:
        assert rho_hat(x) == dP_infinitesimal(x, mu, NU_INV), x


def test_dP_F_display():
    op = dP_infinitesimal(F, QQi(-2), NU_INV)
    assert op.terms[(0, 0, 0)] == L.scale(-2) + ETA.scale(I)
    assert op.terms[(1, 0, 0)] == Polynomial.monomial(1, eta=2, nu=2) - L * L
    assert op.terms[(0, 0, 1)] == Polynomial.monomial(-2, l=1, eta=1)


def test_dP_E_any_weights():
    assert dP_infinitesimal(E, QQi(-2), QQi(5)) == DiffOp.partial("l")


def test_rho_hat_lie_property():
    """[rho(X), rho(Y)] = s rho([X,Y]) with the global sign from the star layer."""
    for x, y in [(E, F), (E, H), (F, H)]:
        lhs = rho_hat(x).commutator(rho_hat(y)).scale(QQi(HOM_SIGN))
        assert lhs == rho_hat(bracket(x, y)), (x, y)
