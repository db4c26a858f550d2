"""sl(2) Lie-algebra core: bracket, Killing form, orbit chart, moment map.

Basis (E, H, F) with the commutation table

    [E, H] = -2E,   [F, H] = 2F,   [E, F] = H,

realized by E = (0 1; 0 0), F = (0 0; 1 0), H = (1 0; 0 -1).  Coefficients
are generic: exact scalars (QQi) for ordinary elements, Polynomials for
chart-valued elements such as Ad(exp(l E) exp(l' F)) o.

The symplectic frame fixes the base point o = H/8, which normalizes the
Kirillov pairing to Omega(E, F) = beta(o, [E, F]) = 1 so that (E, F) is a
unit symplectic basis of the orbit chart.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gaussrat import QQi
from .polynomials import LP, L, Polynomial


@dataclass(frozen=True)
class LieElement:
    """Element e*E + h*H + f*F; coefficients are QQi or Polynomial."""

    e: object
    h: object
    f: object

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.e + other.e, self.h + other.h, self.f + other.f)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.e - other.e, self.h - other.h, self.f - other.f)

    def __neg__(self) -> "LieElement":
        return LieElement(-self.e, -self.h, -self.f)

    def scale(self, c) -> "LieElement":
        return LieElement(c * self.e, c * self.h, c * self.f)

    def is_zero(self) -> bool:
        return not (self.e or self.h or self.f)

    def __repr__(self):
        return f"({self.e})*E + ({self.h})*H + ({self.f})*F"


E = LieElement(QQi(1), QQi(0), QQi(0))
H = LieElement(QQi(0), QQi(1), QQi(0))
F = LieElement(QQi(0), QQi(0), QQi(1))
ZERO = LieElement(QQi(0), QQi(0), QQi(0))
BASIS = (E, H, F)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """[x, y] extended bilinearly from the commutation table."""
    a, b, c = x.e, x.h, x.f
    ap, bp, cp = y.e, y.h, y.f
    return LieElement(
        -2 * (a * bp) + 2 * (ap * b),
        a * cp - ap * c,
        -2 * (b * cp) + 2 * (bp * c),
    )


def killing(x: LieElement, y: LieElement):
    """Killing form beta(x, y) = tr(ad x o ad y); beta(H,H)=8, beta(E,F)=4."""
    return 8 * (x.h * y.h) + 4 * (x.e * y.f + x.f * y.e)


def ad_matrix(x: LieElement):
    """Matrix of ad(x) on the ordered basis (E, H, F), columns = images."""
    cols = [bracket(x, b) for b in BASIS]
    return [[c.e for c in cols], [c.h for c in cols], [c.f for c in cols]]


def decompose(a: LieElement):
    """Projections (A_h, A_l, A_lp) onto span(H), span(E), span(F)."""
    zero = a.e - a.e  # zero of whatever coefficient ring a lives in
    return (
        LieElement(zero, a.h, zero),
        LieElement(a.e, zero, zero),
        LieElement(zero, zero, a.f),
    )


class SymplecticFrame:
    """Base point, Kirillov pairing and trace form of the orbit chart.

    o = H/8 makes Omega(E, F) = 1.  The orientation sign of the Poisson
    tensor is *not* stored here; it is the global calibration constant
    SIGMA_OMEGA of the star-product layer.
    """

    def __init__(self, base_scale=Fraction(1, 8)):
        self.o = H.scale(QQi(base_scale))
        self.omega_EF = killing(self.o, bracket(E, F))

    def omega(self, x: LieElement, y: LieElement):
        """Kirillov pairing Omega(x, y) = beta(o, [x, y]) on the chart."""
        return killing(self.o, bracket(x, y))

    def spur(self, h: LieElement):
        """spur(h) = Omega([h, E], F) for h in the stabilizer span(H)."""
        if h.e or h.f:
            raise ValueError("spur is only defined on span(H)")
        return self.omega(bracket(h, E), F)

    def chart_phi(self, l=None, lp=None) -> LieElement:
        """Ad(exp(l E)) Ad(exp(l' F)) o with exact polynomial coefficients.

        ad E and ad F are nilpotent of order 3, so both exponentials
        truncate exactly.
        """
        l = L if l is None else l
        lp = LP if lp is None else lp
        x = self.o
        # Ad(exp(lp F)): X + lp [F,X] + lp^2/2 [F,[F,X]]
        x = _ad_exp(F, lp, x)
        # Ad(exp(l E))
        x = _ad_exp(E, l, x)
        return x

    def moment_map(self, a: LieElement) -> Polynomial:
        """lambda_a(l, l') = beta(chart_phi(l, l'), a), exact polynomial."""
        phi = self.chart_phi()
        out = killing(phi, a)
        if not isinstance(out, Polynomial):
            out = Polynomial.const(out)
        return out


def _ad_exp(gen: LieElement, t, x: LieElement) -> LieElement:
    """Ad(exp(t*gen)) x for gen in {E, F} (nilpotent, exact)."""
    b1 = bracket(gen, x)
    b2 = bracket(gen, b1)
    half = QQi(Fraction(1, 2))
    return x + b1.scale(t) + b2.scale(half).scale(t * t)


FRAME = SymplecticFrame()


def moment_basis(frame: SymplecticFrame = FRAME):
    """The three moment polynomials (lambda_E, lambda_H, lambda_F)."""
    return tuple(frame.moment_map(b) for b in BASIS)
