"""Polynomial-coefficient differential operators in (l, lp, eta).

An operator is a finite sum  sum_alpha  p_alpha(l,lp,eta,nu) * d^alpha
stored as a sparse map from derivative multi-indices alpha = (a_l, a_lp,
a_eta) to Polynomial coefficients (normal form: all multiplications to the
left of all derivatives).  Composition expands by the Leibniz rule and
re-normalizes, so `apply(compose(D1, D2), p) == apply(D1, apply(D2, p))`
holds exactly.
"""

from __future__ import annotations

from math import comb

from .gaussrat import QQi
from .polynomials import DIFF_VARS, Polynomial

_ZERO_IDX = (0, 0, 0)
_DIDX = {name: k for k, name in enumerate(DIFF_VARS)}


class DiffOp:
    """Finite sum of Polynomial * (d_l^a d_lp^b d_eta^c) in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        canonical = {}
        if terms:
            for idx, poly in terms.items():
                if not isinstance(poly, Polynomial):
                    poly = Polynomial.const(poly)
                if poly:
                    canonical[tuple(idx)] = poly
        self.terms = canonical

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "DiffOp":
        return DiffOp()

    @staticmethod
    def identity() -> "DiffOp":
        return DiffOp({_ZERO_IDX: Polynomial.const(1)})

    @staticmethod
    def mult(poly) -> "DiffOp":
        """Multiplication operator u -> poly * u."""
        if not isinstance(poly, Polynomial):
            poly = Polynomial.const(poly)
        return DiffOp({_ZERO_IDX: poly})

    @staticmethod
    def partial(name: str, order: int = 1) -> "DiffOp":
        idx = [0, 0, 0]
        idx[_DIDX[name]] = order
        return DiffOp({tuple(idx): Polynomial.const(1)})

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for idx, p in other.terms.items():
            s = out.get(idx, Polynomial.zero()) + p
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return DiffOp(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DiffOp({i: -p for i, p in self.terms.items()})

    def scale(self, c) -> "DiffOp":
        return DiffOp({i: p.scale(c) for i, p in self.terms.items()})

    def map_coeffs(self, fn) -> "DiffOp":
        return DiffOp({i: fn(p) for i, p in self.terms.items()})

    # -- action and composition ------------------------------------------------

    def apply(self, poly: Polynomial) -> Polynomial:
        out = Polynomial.zero()
        for idx, coeff in self.terms.items():
            d = poly
            for k, order in enumerate(idx):
                for _ in range(order):
                    d = d.diff(DIFF_VARS[k])
            if d:
                out = out + coeff * d
        return out

    def compose(self, other: "DiffOp") -> "DiffOp":
        """Operator product self o other, Leibniz-expanded to normal form."""
        out: dict = {}
        for a, p in self.terms.items():
            for b, q in other.terms.items():
                # d^a (q * d^b .) = sum_{g <= a} C(a,g) (d^g q) d^{a-g+b}
                for g0 in range(a[0] + 1):
                    for g1 in range(a[1] + 1):
                        for g2 in range(a[2] + 1):
                            dq = q
                            for k, gk in enumerate((g0, g1, g2)):
                                for _ in range(gk):
                                    dq = dq.diff(DIFF_VARS[k])
                            if not dq:
                                continue
                            n = comb(a[0], g0) * comb(a[1], g1) * comb(a[2], g2)
                            idx = (a[0] - g0 + b[0], a[1] - g1 + b[1], a[2] - g2 + b[2])
                            add = (p * dq).scale(n)
                            s = out.get(idx, Polynomial.zero()) + add
                            if s:
                                out[idx] = s
                            else:
                                out.pop(idx, None)
        return DiffOp(out)

    def commutator(self, other: "DiffOp") -> "DiffOp":
        return self.compose(other) - other.compose(self)

    # -- queries ---------------------------------------------------------------

    def order(self) -> int:
        return max((sum(i) for i in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def mul_nu_power(self, k: int) -> "DiffOp":
        return self.map_coeffs(lambda p: p.mul_nu_power(k))

    def has_negative_nu(self) -> bool:
        return any(p.has_negative_nu() for p in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return self.text()

    def text(self) -> str:
        """Canonical text form (deterministic term order)."""
        if not self.terms:
            return "0"
        parts = []
        for idx in sorted(self.terms):
            coeff = self.terms[idx].text()
            ds = "".join(
                f"d_{DIFF_VARS[k]}" + (f"^{o}" if o > 1 else "")
                for k, o in enumerate(idx)
                if o
            )
            parts.append(f"({coeff})*{ds}" if ds else f"({coeff})")
        return " + ".join(parts)


def random_diffop(rng, max_order=3, n_terms=3, coeff_vars=("l", "lp")):
    """Seeded random operator of bounded order (test helper)."""
    from .polynomials import random_polynomial

    terms = {}
    for _ in range(n_terms):
        idx = [0, 0, 0]
        budget = rng.randrange(0, max_order + 1)
        for _ in range(budget):
            idx[rng.randrange(3)] += 1
        p = random_polynomial(rng, max_degree=2, n_terms=3, vars=coeff_vars)
        if not p:
            continue
        key = tuple(idx)
        terms[key] = terms.get(key, Polynomial.zero()) + p
    return DiffOp(terms)
