"""Sparse multivariate polynomials over the Gaussian rationals.

A polynomial is a dictionary mapping exponent tuples to QQi coefficients,
in the fixed variable order

    (l, lp, eta, nu, z)

where ``lp`` is the second chart coordinate l', ``eta`` the partial-Fourier
dual variable, ``nu`` the deformation parameter and ``z`` a formal complex
placeholder used by the symbol calculus.  Zero coefficients are never
stored, so equality of dictionaries is equality of polynomials.

Two deliberate asymmetries between the variables:

* ``nu`` is a formal *parameter*, not a coordinate: differentiation in nu
  is rejected, and nu exponents may be negative (Laurent), which is what
  makes the exact division by 2*nu in the star representation and the
  formal substitution ell = 1/nu possible.
* ``z`` is a placeholder that is only ever eliminated by substitution
  (z -> l + i*nu*eta or its mirror); it is likewise not differentiable.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussrat import QQi

VARS = ("l", "lp", "eta", "nu", "z")
_VIDX = {name: k for k, name in enumerate(VARS)}
# differentiation is only defined in the genuine coordinates
DIFF_VARS = ("l", "lp", "eta")
_ZERO_EXP = (0, 0, 0, 0, 0)


class Polynomial:
    """Immutable sparse polynomial in (l, lp, eta, nu, z) over QQi."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        canonical = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = QQi.coerce(coeff)
                if coeff:
                    canonical[tuple(exp)] = coeff
        self.terms = canonical

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def const(c) -> "Polynomial":
        return Polynomial({_ZERO_EXP: QQi.coerce(c)})

    @staticmethod
    def var(name: str, power: int = 1) -> "Polynomial":
        exp = [0] * len(VARS)
        exp[_VIDX[name]] = power
        return Polynomial({tuple(exp): QQi(1)})

    @staticmethod
    def monomial(coeff, **powers) -> "Polynomial":
        """Build coeff * prod(var**power) from keyword powers, e.g. l=2, nu=-1."""
        exp = [0] * len(VARS)
        for name, p in powers.items():
            exp[_VIDX[name]] = p
        return Polynomial({tuple(exp): QQi.coerce(coeff)})

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, QQi(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return _raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce_poly(other))

    def __rsub__(self, other):
        return _coerce_poly(other) - self

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = _coerce_poly(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, QQi(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = QQi.coerce(c)
        if not c:
            return Polynomial.zero()
        return _raw({e: c * v for e, v in self.terms.items()})

    # -- calculus ----------------------------------------------------------

    def diff(self, name: str) -> "Polynomial":
        """Exact partial derivative in l, lp or eta.

        nu and z are formal (parameter / placeholder); differentiating in
        them is a usage error, not zero.
        """
        if name not in DIFF_VARS:
            raise ValueError(f"cannot differentiate in formal variable {name!r}")
        k = _VIDX[name]
        out = {}
        for exp, c in self.terms.items():
            if exp[k] == 0:
                continue
            new = list(exp)
            new[k] -= 1
            out[tuple(new)] = c * exp[k]
        return _raw(out)

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, name: str, value) -> "Polynomial":
        """Substitute a polynomial (or scalar) for a variable.

        For nu, only scalar substitution is supported because nu exponents
        may be negative; the scalar must be nonzero in that case.
        """
        k = _VIDX[name]
        if isinstance(value, Polynomial):
            if name == "nu" and any(e[k] < 0 for e in self.terms):
                raise ValueError("polynomial substitution into Laurent nu powers")
            out = Polynomial.zero()
            for exp, c in self.terms.items():
                rest = list(exp)
                p = rest[k]
                rest[k] = 0
                out = out + Polynomial({tuple(rest): c}) * value**p
            return out
        value = QQi.coerce(value) if not isinstance(value, QQi) else value
        out = Polynomial.zero()
        for exp, c in self.terms.items():
            rest = list(exp)
            p = rest[k]
            rest[k] = 0
            out = out + Polynomial({tuple(rest): c * value**p})
        return out

    def eval_numeric(self, **values) -> complex:
        """Evaluate to a complex (or numpy array) from numeric variable values.

        Every variable appearing with nonzero exponent must be supplied.
        Values may be scalars or numpy arrays (broadcast together).
        """
        total = 0
        for exp, c in self.terms.items():
            term = complex(c)
            for k, p in enumerate(exp):
                if p == 0:
                    continue
                name = VARS[k]
                if name not in values:
                    raise ValueError(f"missing value for variable {name!r}")
                term = term * values[name] ** p
            total = total + term
        return total

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, name: str) -> int:
        """Largest exponent of a variable (0 for the zero polynomial)."""
        k = _VIDX[name]
        return max((e[k] for e in self.terms), default=0)

    def min_degree(self, name: str) -> int:
        k = _VIDX[name]
        return min((e[k] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def uses(self, name: str) -> bool:
        k = _VIDX[name]
        return any(e[k] != 0 for e in self.terms)

    def coefficient_of(self, name: str, power: int) -> "Polynomial":
        """Collect the coefficient polynomial of var**power."""
        k = _VIDX[name]
        out = {}
        for exp, c in self.terms.items():
            if exp[k] == power:
                new = list(exp)
                new[k] = 0
                out[tuple(new)] = c
        return _raw(out)

    # -- Laurent handling in nu ----------------------------------------------

    def mul_nu_power(self, k: int) -> "Polynomial":
        j = _VIDX["nu"]
        out = {}
        for exp, c in self.terms.items():
            new = list(exp)
            new[j] += k
            out[tuple(new)] = c
        return _raw(out)

    def has_negative_nu(self) -> bool:
        return self.min_degree("nu") < 0

    # -- comparison / presentation --------------------------------------------

    def __eq__(self, other):
        try:
            other = _coerce_poly(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda t: t[0])))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return self.text()

    def text(self) -> str:
        """Canonical text form with a deterministic monomial order."""
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            c = self.terms[exp]
            factors = []
            for k, p in enumerate(exp):
                if p == 0:
                    continue
                factors.append(VARS[k] if p == 1 else f"{VARS[k]}^{p}")
            mono = "*".join(factors)
            cs = repr(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)


def _raw(terms: dict) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    p.terms = terms
    return p


def _coerce_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction, QQi)):
        return Polynomial.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")


# convenient generators
L = Polynomial.var("l")
LP = Polynomial.var("lp")
ETA = Polynomial.var("eta")
NU = Polynomial.var("nu")
Z = Polynomial.var("z")
NU_INV = Polynomial.monomial(1, nu=-1)
ONE_P = Polynomial.const(1)


def random_polynomial(rng, max_degree=4, n_terms=6, vars=("l", "lp"), denom=4):
    """Seeded random polynomial with small rational coefficients (test helper)."""
    terms = {}
    for _ in range(n_terms):
        exp = [0] * len(VARS)
        for name in vars:
            exp[_VIDX[name]] = rng.randrange(0, max_degree + 1)
        num = rng.randrange(-6, 7)
        if num == 0:
            continue
        coeff = QQi(Fraction(num, rng.randrange(1, denom + 1)),
                    Fraction(rng.randrange(-3, 4), rng.randrange(1, denom + 1)))
        terms[tuple(exp)] = terms.get(tuple(exp), QQi(0)) + coeff
    return Polynomial(terms)
