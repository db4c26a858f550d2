"""Partial-Fourier symbol calculus for the star representation.

The partial Fourier transform acts only in the l' variable, with kernel
exp(-i * sigma_F * eta * l').  Conjugation by it is the substitution
dictionary

    (mult by l')  ->  i sigma_F d_eta
    d_{l'}        ->  i sigma_F eta (mult)

with l and d_l untouched; it is an algebra homomorphism on operators.

Two discrete conventions are not pinned by the construction itself: the
orientation sigma_Omega of the Poisson tensor and the kernel sign
sigma_F.  They are calibrated once (calibrate_signs) by requiring

  * the transported left star multiplication by lambda_E to equal the
    first-order field tau_E + Z_E, and
  * the transported ad operator of F to match the explicit normal form
    m(F) + Y(F) = (-2l + i eta) + (nu^2 eta^2 - l^2) d_l - 2 l eta d_eta,

and then frozen: SIGMA_OMEGA = -1 (starprod), SIGMA_F = +1.  With this
freeze the *left* action realizes the formal symbol z antiholomorphically
(z -> l - i nu eta, EPS_LEFT = -1) while the right action realizes it
holomorphically (z -> l + i nu eta); the difference of the two transports
is the real operator m + Y, which coincides with the principal-series
generator dP at (mu, ell) = (-2, 1/nu).
"""

from __future__ import annotations

from .diffops import DiffOp
from .gaussrat import QQi
from .liealg import BASIS, FRAME, E, F, H, LieElement, bracket, decompose
from .polynomials import Polynomial

SIGMA_F = 1
# orientation of the formal-z realization used by the left action
EPS_LEFT = -1

_I = QQi(0, 1)
_HALF = QQi(1) / QQi(2)


# ---------------------------------------------------------------------------
# Fourier conjugation dictionary
# ---------------------------------------------------------------------------

def fourier_conjugate(op: DiffOp, sigma_f: int = SIGMA_F) -> DiffOp:
    """Conjugate an (l, l')-operator by the partial Fourier transform.

    Result acts on (l, eta).  Exact; input must not involve eta.
    """
    out = DiffOp.zero()
    for (a_l, a_lp, a_eta), coeff in op.terms.items():
        if a_eta or coeff.uses("eta"):
            raise ValueError("operator already involves eta")
        for n in range(coeff.degree("lp") + 1):
            p_n = coeff.coefficient_of("lp", n)
            if not p_n:
                continue
            phase = (_I * sigma_f) ** (n + a_lp)
            term = DiffOp.mult(p_n.scale(phase))
            if n:
                term = term.compose(DiffOp.partial("eta", n))
            if a_l:
                term = term.compose(DiffOp.partial("l", a_l))
            if a_lp:
                term = term.compose(DiffOp.mult(Polynomial.var("eta", a_lp)))
            out = out + term
    return out


def fourier_deconjugate(op: DiffOp, sigma_f: int = SIGMA_F) -> DiffOp:
    """Inverse dictionary: (l, eta)-operator back to (l, l')."""
    out = DiffOp.zero()
    for (a_l, a_lp, a_eta), coeff in op.terms.items():
        if a_lp or coeff.uses("lp"):
            raise ValueError("operator already involves lp")
        for n in range(coeff.degree("eta") + 1):
            p_n = coeff.coefficient_of("eta", n)
            if not p_n:
                continue
            phase = (-_I * sigma_f) ** (n + a_eta)
            term = DiffOp.mult(p_n.scale(phase))
            if n:
                term = term.compose(DiffOp.partial("lp", n))
            if a_l:
                term = term.compose(DiffOp.partial("l", a_l))
            if a_eta:
                term = term.compose(DiffOp.mult(Polynomial.var("lp", a_eta)))
            out = out + term
    return out


# ---------------------------------------------------------------------------
# Complex coordinate z = l + i eps nu eta
# ---------------------------------------------------------------------------

class ComplexCoordinate:
    """The identification (l, eta) -> z = l + i*eps*nu*eta and its d/dz.

    eps = +1 is the printed orientation; the left star action calibrates
    to eps = -1 (see module docstring).  For either eps the operator
    identities d_z z = 1 and d_z zbar = 0 hold exactly.
    """

    def __init__(self, eps: int = 1):
        self.eps = eps

    def z_poly(self) -> Polynomial:
        return Polynomial.var("l") + Polynomial.monomial(_I * self.eps, eta=1, nu=1)

    def zbar_poly(self) -> Polynomial:
        return Polynomial.var("l") + Polynomial.monomial(-_I * self.eps, eta=1, nu=1)

    def d_z(self) -> DiffOp:
        """(1/(2 nu)) (nu d_l - i eps d_eta)."""
        return DiffOp(
            {
                (1, 0, 0): Polynomial.const(_HALF),
                (0, 0, 1): Polynomial.monomial(-_I * self.eps * _HALF, nu=-1),
            }
        )

    def d_zbar(self) -> DiffOp:
        return DiffOp(
            {
                (1, 0, 0): Polynomial.const(_HALF),
                (0, 0, 1): Polynomial.monomial(_I * self.eps * _HALF, nu=-1),
            }
        )

    def realize(self, poly: Polynomial) -> Polynomial:
        """Substitute the formal z placeholder by l + i*eps*nu*eta."""
        return poly.substitute("z", self.z_poly())


# ---------------------------------------------------------------------------
# The Def-3.3 polynomials and the first-order normal form
# ---------------------------------------------------------------------------

def ha_poly(a: LieElement) -> LieElement:
    """h_a(z) = a_h + [a_lp, z E]; stabilizer-valued, degree <= 1 in z."""
    a_h, a_l, a_lp = decompose(a)
    z = Polynomial.var("z")
    return a_h + bracket(a_lp, E.scale(z))


def la_poly(a: LieElement) -> LieElement:
    """l_a(z) = a_l + [a_h, z E] + (1/2) [z E, [z E, a_lp]]; degree <= 2."""
    a_h, a_l, a_lp = decompose(a)
    ze = E.scale(Polynomial.var("z"))
    return a_l + bracket(a_h, ze) + bracket(ze, bracket(ze, a_lp)).scale(_HALF)


def tau(a: LieElement, frame=FRAME) -> Polynomial:
    """tau_a = (1/(2 nu)) beta(h_a, o) + (1/2) spur(h_a), in (z, nu)."""
    h = ha_poly(a)
    beta = killing_poly(h, frame)
    sp = frame.spur(h)
    if not isinstance(sp, Polynomial):
        sp = Polynomial.const(sp)
    return beta.scale(_HALF).mul_nu_power(-1) + sp.scale(_HALF)


def tau_conj(a: LieElement, frame=FRAME) -> Polynomial:
    """The right-action counterpart (1/(2 nu)) beta(h_a, o) - (1/2) spur(h_a)."""
    h = ha_poly(a)
    beta = killing_poly(h, frame)
    sp = frame.spur(h)
    if not isinstance(sp, Polynomial):
        sp = Polynomial.const(sp)
    return beta.scale(_HALF).mul_nu_power(-1) - sp.scale(_HALF)


def killing_poly(x: LieElement, frame=FRAME) -> Polynomial:
    from .liealg import killing

    out = killing(x, frame.o)
    if not isinstance(out, Polynomial):
        out = Polynomial.const(out)
    return out


def z_field(a: LieElement, eps: int = 1) -> DiffOp:
    """The first-order field l_a(z) d_z, expanded into (l, eta) at orientation eps."""
    coord = ComplexCoordinate(eps)
    la = la_poly(a)
    coeff = la.e if isinstance(la.e, Polynomial) else Polynomial.const(la.e)
    return DiffOp.mult(coord.realize(coeff)).compose(coord.d_z())


# ---------------------------------------------------------------------------
# rho_hat = m + Y and the principal-series generators
# ---------------------------------------------------------------------------

def m_cocycle(x: LieElement) -> Polynomial:
    """Multiplier m(x) = 2 x_h - 2 x_f l + i x_f eta (the explicit normal form)."""
    out = Polynomial.const(2 * x.h)
    out = out + Polynomial.monomial(-2 * x.f, l=1)
    out = out + Polynomial.monomial(_I * x.f, eta=1)
    return out


def y_field(x: LieElement) -> DiffOp:
    """Y(x): the real flow fields d_l, 2l d_l + 2 eta d_eta, (nu^2 eta^2 - l^2) d_l - 2 l eta d_eta."""
    op = DiffOp.zero()
    if x.e:
        op = op + DiffOp.partial("l").map_coeffs(lambda p: p.scale(x.e))
    if x.h:
        op = op + DiffOp(
            {(1, 0, 0): Polynomial.monomial(2 * x.h, l=1),
             (0, 0, 1): Polynomial.monomial(2 * x.h, eta=1)}
        )
    if x.f:
        op = op + DiffOp(
            {(1, 0, 0): Polynomial.monomial(x.f, eta=2, nu=2) + Polynomial.monomial(-x.f, l=2),
             (0, 0, 1): Polynomial.monomial(-2 * x.f, l=1, eta=1)}
        )
    return op


def rho_hat(x: LieElement) -> DiffOp:
    """The transported star representation rho(x) = m(x) + Y(x) on (l, eta)."""
    return DiffOp.mult(m_cocycle(x)) + y_field(x)


def dP_infinitesimal(x: LieElement, mu, ell) -> DiffOp:
    """Infinitesimal principal-series action with multiplier weight (mu, ell).

    Basis table (derived by differentiating the group action along the
    three one-parameter subgroups):

        dP(E) = d_l
        dP(H) = -mu + 2 l d_l + 2 eta d_eta
        dP(F) = (mu l + i ell nu eta) + (nu^2 eta^2 - l^2) d_l - 2 l eta d_eta

    ell may be an exact scalar or a Polynomial (e.g. 1/nu, Laurent).
    """
    mu = QQi.coerce(mu) if not isinstance(mu, QQi) else mu
    if not isinstance(ell, Polynomial):
        ell = Polynomial.const(ell)
    op = DiffOp.zero()
    if x.e:
        op = op + DiffOp({(1, 0, 0): Polynomial.const(x.e)})
    if x.h:
        op = op + DiffOp(
            {(0, 0, 0): Polynomial.const(-mu * x.h),
             (1, 0, 0): Polynomial.monomial(2 * x.h, l=1),
             (0, 0, 1): Polynomial.monomial(2 * x.h, eta=1)}
        )
    if x.f:
        cocycle = Polynomial.monomial(mu * x.f, l=1) + (
            ell * Polynomial.monomial(_I * x.f, eta=1, nu=1)
        )
        op = op + DiffOp.mult(cocycle) + DiffOp(
            {(1, 0, 0): Polynomial.monomial(x.f, eta=2, nu=2) + Polynomial.monomial(-x.f, l=2),
             (0, 0, 1): Polynomial.monomial(-2 * x.f, l=1, eta=1)}
        )
    return op


# ---------------------------------------------------------------------------
# Transported star actions and the Prop-3.4 check
# ---------------------------------------------------------------------------

def left_transport(a: LieElement, frame=FRAME, sigma=None, sigma_f: int = SIGMA_F) -> DiffOp:
    """(1/(2 nu)) F (lambda_a * .) F^{-1} as an exact (l, eta)-operator."""
    from .starprod import SIGMA_OMEGA, left_mult_op

    sigma = SIGMA_OMEGA if sigma is None else sigma
    op = fourier_conjugate(left_mult_op(frame.moment_map(a), sigma), sigma_f)
    return op.mul_nu_power(-1).map_coeffs(lambda p: p.scale(_HALF))


def right_transport(a: LieElement, frame=FRAME, sigma=None, sigma_f: int = SIGMA_F) -> DiffOp:
    """(1/(2 nu)) F (. * lambda_a) F^{-1}."""
    from .starprod import SIGMA_OMEGA, right_mult_op

    sigma = SIGMA_OMEGA if sigma is None else sigma
    op = fourier_conjugate(right_mult_op(frame.moment_map(a), sigma), sigma_f)
    return op.mul_nu_power(-1).map_coeffs(lambda p: p.scale(_HALF))


def verify_prop34(a: LieElement, frame=FRAME, eps: int = EPS_LEFT) -> DiffOp:
    """Residual of the left-action collapse identity; zero operator on success.

    The transported left star multiplication must equal
    tau_a * id + l_a(z) d_z with the formal z realized at the calibrated
    orientation eps (the cubic moment map of F collapses to first order).
    """
    coord = ComplexCoordinate(eps)
    rhs = DiffOp.mult(coord.realize(tau(a, frame))) + z_field(a, eps)
    return left_transport(a, frame) - rhs


def verify_right_action(a: LieElement, frame=FRAME, eps: int = EPS_LEFT) -> DiffOp:
    """Residual of the mirrored identity for the right star action.

    The right action realizes z at the opposite orientation and picks up
    the conjugate multiplier tau_conj with a reversed field sign:
    (1/(2nu)) F (. * lambda_a) F^{-1} = tau_conj(a) - l_a(z) d_z at -eps.
    """
    coord = ComplexCoordinate(-eps)
    rhs = DiffOp.mult(coord.realize(tau_conj(a, frame))) - z_field(a, -eps)
    return right_transport(a, frame) - rhs


def ad_transport(x: LieElement, frame=FRAME) -> DiffOp:
    """F ad(x) F^{-1}; equals rho_hat(x) under the frozen calibration."""
    from .starprod import ad_star_as_diffop

    return fourier_conjugate(ad_star_as_diffop(x, frame))


# ---------------------------------------------------------------------------
# One-time sign calibration
# ---------------------------------------------------------------------------

def calibrate_signs(frame=FRAME):
    """Search the discrete convention space for the coherent sign choice.

    Requires zero residual of (i) the Prop-3.4 collapse for A = E (which
    ties sigma_Omega and the product sigma_F*eps) and (ii) the transported
    ad(F) against the explicit normal form m(F) + Y(F) (which pins
    sigma_F).  Returns the unique triple (sigma_omega, sigma_f, eps_left).
    """
    from .starprod import ad_star_as_diffop

    hits = []
    target_f = rho_hat(F)
    for sigma in (1, -1):
        for sigma_f in (1, -1):
            ad_f = fourier_conjugate(ad_star_as_diffop(F, frame, sigma), sigma_f)
            if ad_f != target_f:
                continue
            from .starprod import left_mult_op

            lt = fourier_conjugate(left_mult_op(frame.moment_map(E), sigma), sigma_f)
            lt = lt.mul_nu_power(-1).map_coeffs(lambda p: p.scale(_HALF))
            for eps in (1, -1):
                coord = ComplexCoordinate(eps)
                rhs = DiffOp.mult(coord.realize(tau(E, frame))) + z_field(E, eps)
                if lt == rhs:
                    hits.append((sigma, sigma_f, eps))
    if len(hits) != 1:
        raise RuntimeError(f"sign calibration not unique: {hits}")
    return hits[0]
