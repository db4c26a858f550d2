"""Principal series of SL(2,C): noncompact and compact pictures, orbits.

The noncompact picture acts on functions of a complex variable by a
Mobius map with a |cz+d|-multiplier; the compact picture acts on
homogeneous functions on the unit sphere of C^2 (the flag sphere).  The
real form SU(1,1) has three orbits on the sphere, classified by the sign
of the indefinite form [s,s] = |s1|^2 - |s2|^2, and the weight map
A(phi) = [s,s]^{-mu/2} phi identifies the open-orbit restrictions with
sections over SU(1,1)/U(1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DET_TOL = 1e-12
NULL_CONE_EPS = 1e-9

_J = np.diag([1.0, -1.0]).astype(complex)


@dataclass
class GroupElement:
    """2x2 complex matrix with unit determinant."""

    m: np.ndarray

    def __post_init__(self):
        self.m = np.asarray(self.m, dtype=complex).reshape(2, 2)
        scale = max(1.0, float(np.max(np.abs(self.m))) ** 2)
        if abs(np.linalg.det(self.m) - 1.0) > 1e-12 * scale + 1e-10:
            raise ValueError("determinant must be 1")

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.m @ other.m)

    def inv(self) -> "GroupElement":
        a, b, c, d = self.m.ravel()
        return GroupElement(np.array([[d, -b], [-c, a]]))

    def is_sl2r(self, tol: float = DET_TOL) -> bool:
        return float(np.max(np.abs(self.m.imag))) <= tol

    def is_su11(self, tol: float = DET_TOL) -> bool:
        return float(np.max(np.abs(self.m.conj().T @ _J @ self.m - _J))) <= tol

    def is_su2(self, tol: float = DET_TOL) -> bool:
        return float(np.max(np.abs(self.m.conj().T @ self.m - np.eye(2)))) <= tol


IDENTITY = GroupElement(np.eye(2))

# Fixed Cayley element: C * SL(2,R) * C^-1 = SU(1,1).
CAYLEY = GroupElement(np.array([[1.0, 1.0j], [1.0j, 1.0]]) / np.sqrt(2.0))


def k_theta(theta: float) -> GroupElement:
    """U(1) element diag(e^{i theta}, e^{-i theta}) of SU(1,1)."""
    return GroupElement(np.diag([np.exp(1j * theta), np.exp(-1j * theta)]))


def a_t(t: float) -> GroupElement:
    """Hyperbolic element (cosh t, sinh t; sinh t, cosh t)."""
    return GroupElement(np.array([[np.cosh(t), np.sinh(t)], [np.sinh(t), np.cosh(t)]]))


def random_su11(rng, t_max: float = 1.5) -> GroupElement:
    th = rng.uniform(0, 2 * np.pi)
    ps = rng.uniform(0, 2 * np.pi)
    t = rng.uniform(0, t_max)
    return k_theta(th) @ a_t(t) @ k_theta(ps)


def random_sl2c(rng, scale: float = 0.7) -> GroupElement:
    x = np.array(
        [[rng.gauss(0, scale), rng.gauss(0, scale)], [rng.gauss(0, scale), rng.gauss(0, scale)]]
    ) + 1j * np.array(
        [[rng.gauss(0, scale), rng.gauss(0, scale)], [rng.gauss(0, scale), rng.gauss(0, scale)]]
    )
    x = x - np.trace(x) / 2 * np.eye(2)  # traceless => exp has det 1
    from scipy.linalg import expm

    return GroupElement(expm(x))


def cayley_conjugate(g: GroupElement) -> GroupElement:
    """Conjugation by the fixed Cayley element, SU(1,1) <-> SL(2,R)."""
    if g.is_su11(1e-9):
        return GroupElement(CAYLEY.inv().m @ g.m @ CAYLEY.m)
    return GroupElement(CAYLEY.m @ g.m @ CAYLEY.inv().m)


def mobius(m: np.ndarray, z):
    return (m[0, 0] * z + m[0, 1]) / (m[1, 0] * z + m[1, 1])


# ---------------------------------------------------------------------------
# Noncompact picture
# ---------------------------------------------------------------------------

def act_noncompact(g: GroupElement, mu: complex, ell: int, f):
    """P^{mu,ell}(g) f (z) = |cz+d|^mu ((cz+d)/|cz+d|)^ell f((az+b)/(cz+d)).

    (a b; c d) is the inverse of g.  ell must be an integer (the phase
    factor is then single-valued).  Mobius poles evaluate to nan and are
    meant to be excluded by the caller.
    """
    if ell != int(ell):
        raise ValueError("ell must be an integer")
    ell = int(ell)
    gi = g.inv().m

    def out(z):
        z = np.asarray(z, dtype=complex)
        den = gi[1, 0] * z + gi[1, 1]
        with np.errstate(divide="ignore", invalid="ignore"):
            w = np.abs(den)
            mult = np.exp(mu * np.log(w)) * (den / w) ** ell
            val = mult * f((gi[0, 0] * z + gi[0, 1]) / den)
        return np.where(w < 1e-13, np.nan, val)

    return out


# ---------------------------------------------------------------------------
# Sphere points and the compact picture
# ---------------------------------------------------------------------------

@dataclass
class SpherePoint:
    """Unit vector of C^2 (representative of a point of the flag sphere)."""

    s: np.ndarray

    def __post_init__(self):
        self.s = np.asarray(self.s, dtype=complex).reshape(2)
        n = np.linalg.norm(self.s)
        if abs(n - 1.0) > 1e-12:
            raise ValueError("sphere point must be unit norm")

    def gauge(self) -> "SpherePoint":
        """Canonical phase gauge: first nonzero component real positive."""
        for comp in self.s:
            if abs(comp) > 1e-13:
                return SpherePoint(self.s * (abs(comp) / comp))
        raise ValueError("zero vector")


def normalize(v: np.ndarray) -> SpherePoint:
    return SpherePoint(np.asarray(v, dtype=complex) / np.linalg.norm(v))


def bracket_form(s, sp) -> complex:
    """[z, w] = z1 conj(w1) - z2 conj(w2)."""
    z = s.s if isinstance(s, SpherePoint) else np.asarray(s)
    w = sp.s if isinstance(sp, SpherePoint) else np.asarray(sp)
    return complex(z[0] * np.conj(w[0]) - z[1] * np.conj(w[1]))


def orbit_classify(s, eps: float = NULL_CONE_EPS) -> str:
    b = bracket_form(s, s).real
    if b > eps:
        return "O1"
    if b < -eps:
        return "O2"
    return "O3"


def group_act(g: GroupElement, s: SpherePoint) -> SpherePoint:
    """g . s = g(s) / ||g(s)||."""
    return normalize(g.m @ s.s)


def act_compact(g: GroupElement, mu: complex, phi):
    """P^{mu,ell}(g) phi (s) = phi(g^{-1}.s) ||g^{-1}(s)||^mu.

    phi must satisfy the homogeneity phi(lam s) = lam^{-ell} phi(s); the
    output then satisfies it again (ell is carried by phi itself).
    """
    gi = g.inv()

    def out(s: SpherePoint):
        v = gi.m @ s.s
        n = np.linalg.norm(v)
        return phi(SpherePoint(v / n)) * n**mu

    return out


def from_chart(fw, ell: int):
    """Lift a chart function F(w), w = s2/s1, to a homogeneous phi on S.

    phi(s) = (s1/|s1|)^{-ell} F(s2/s1); vanishes at the chart boundary
    s1 = 0 (test functions are compactly supported in the chart).
    """

    def phi(s: SpherePoint):
        s1, s2 = s.s
        if abs(s1) < 1e-13:
            return 0.0
        phase = s1 / abs(s1)
        return phase ** (-ell) * fw(s2 / s1)

    return phi


# ---------------------------------------------------------------------------
# Quadrature on the flag sphere (total mass 1)
# ---------------------------------------------------------------------------

def cp1_nodes(n_u: int = 64, n_theta: int = 64):
    """Fubini-Study quadrature nodes s(u, theta) and weights (mass 1)."""
    u, wu = np.polynomial.legendre.leggauss(n_u)
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    s1 = np.sqrt((1 + u) / 2)
    s2r = np.sqrt((1 - u) / 2)
    pts = []
    wts = []
    for i in range(n_u):
        for th in theta:
            pts.append(SpherePoint(np.array([s1[i], s2r[i] * np.exp(1j * th)])))
            wts.append(wu[i] * (2 * np.pi / n_theta) / (4 * np.pi))
    return pts, np.array(wts)


def quadrature_CP1(f, n_u: int = 64, n_theta: int = 64) -> complex:
    """Integrate a bounded function over the flag sphere, unit total mass."""
    pts, wts = cp1_nodes(n_u, n_theta)
    vals = np.array([f(p) for p in pts], dtype=complex)
    return complex(np.sum(vals * wts))


def inner_product(phi1, phi2, n_u: int = 64, n_theta: int = 64) -> complex:
    return quadrature_CP1(lambda s: phi1(s) * np.conj(phi2(s)), n_u, n_theta)


# ---------------------------------------------------------------------------
# The orbit weight map A
# ---------------------------------------------------------------------------

def map_A(phi, mu: complex, orbit: str = "O1"):
    """psi(s) = [s,s]^{-mu/2} phi(s) on an open orbit.

    The weight uses the real logarithm of |[s,s]| with the orbit sign, so
    phi must be supported away from the null cone O3.
    """
    sgn = 1.0 if orbit == "O1" else -1.0

    def psi(s: SpherePoint):
        b = bracket_form(s, s).real * sgn
        if b <= NULL_CONE_EPS:
            return 0.0
        return np.exp(-(mu / 2) * np.log(b)) * phi(s)

    return psi


def intertwining_residual(phi, mu: complex, ell: int, g: GroupElement, s: SpherePoint,
                          orbit: str = "O1") -> float:
    """|psi(g^{-1}.s) - P(g)phi(s) [s,s]^{-mu/2}| at one sample point."""
    psi = map_A(phi, mu, orbit)
    lhs = psi(group_act(g.inv(), s))
    sgn = 1.0 if orbit == "O1" else -1.0
    b = bracket_form(s, s).real * sgn
    if b <= NULL_CONE_EPS:
        return 0.0
    rhs = act_compact(g, mu, phi)(s) * np.exp(-(mu / 2) * np.log(b))
    return abs(lhs - rhs)


# ---------------------------------------------------------------------------
# Picture transfer (e2 chart)
# ---------------------------------------------------------------------------

def picture_transfer(f, mu: complex, ell: int):
    """Noncompact f(z) -> compact-picture phi on S (z = s1/s2 chart).

    phi(s) = (s2/|s2|)^{-ell} |s2|^{mu} f(s1/s2); satisfies the ell
    homogeneity by construction and intertwines act_noncompact at weight
    (mu, -ell) with act_compact at (mu, ell) -- the two charts of the
    sphere carry opposite U(1) weights.
    """

    def phi(s: SpherePoint):
        s1, s2 = s.s
        if abs(s2) < 1e-13:
            return 0.0
        phase = s2 / abs(s2)
        return phase ** (-ell) * abs(s2) ** mu * f(s1 / s2)

    return phi


def picture_transfer_inverse(phi, mu: complex):
    """Compact phi -> noncompact f(z) = (1+|z|^2)^{mu/2} phi(s(z))."""

    def f(z):
        z = complex(z)
        r = np.sqrt(1 + abs(z) ** 2)
        s = SpherePoint(np.array([z, 1.0]) / r)
        return r**mu * phi(s)

    return f
