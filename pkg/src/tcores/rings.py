"""Coefficient rings for truncated series: rationals, complexes, polynomials.

Polynomials are sparse maps from exponent tuples to coefficients; negative
exponents are allowed when the ring is created as a Laurent ring.  Exact
rings compare coefficients by equality, the complex ones by an absolute
tolerance.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    """Sparse multivariate polynomial over Fraction or complex coefficients."""

    __slots__ = ("names", "terms")

    def __init__(self, names, terms=None):
        self.names = tuple(names)
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != len(self.names):
                    raise ValueError("exponent tuple does not match variable count")
                if coeff != 0:
                    clean[exps] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, names, value) -> "Poly":
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def variable(cls, names, name, coeff=1) -> "Poly":
        idx = tuple(names).index(name)
        exps = tuple(1 if i == idx else 0 for i in range(len(names)))
        return cls(names, {exps: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.names != self.names:
                raise ValueError("polynomials over different variables")
            return other
        if isinstance(other, (int, Fraction, float, complex)):
            return Poly.constant(self.names, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Poly(self.names, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(self.names, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need a Laurent monomial")
        result = Poly.constant(self.names, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, name: str, value):
        """Replace one variable by a scalar value; exponents may be negative
        only if the value is invertible (handled by Python's ** operator)."""
        idx = self.names.index(name)
        rest = self.names[:idx] + self.names[idx + 1 :]
        out = Poly(rest, {})
        for e, c in self.terms.items():
            scalar = c * value ** e[idx]
            out = out + Poly(rest, {e[:idx] + e[idx + 1 :]: scalar})
        return out

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), 0)

    def degree_in(self, name: str) -> int:
        """Largest exponent of the variable; -1 for the zero polynomial."""
        idx = self.names.index(name)
        if not self.terms:
            return -1
        return max(e[idx] for e in self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, float, complex)):
            other = Poly.constant(self.names, other)
        return (
            isinstance(other, Poly)
            and self.names == other.names
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def isclose(self, other, tol: float) -> bool:
        other = self._lift(other)
        for e in set(self.terms) | set(other.terms):
            if abs(complex(self.terms.get(e, 0)) - complex(other.terms.get(e, 0))) > tol:
                return False
        return True

    def max_abs_difference(self, other) -> float:
        other = self._lift(other)
        keys = set(self.terms) | set(other.terms)
        if not keys:
            return 0.0
        return max(
            abs(complex(self.terms.get(e, 0)) - complex(other.terms.get(e, 0)))
            for e in keys
        )

    def _monomial_str(self, exps) -> str:
        pieces = []
        for name, e in zip(self.names, exps):
            if e == 0:
                continue
            pieces.append(name if e == 1 else f"{name}^{e}")
        return "*".join(pieces)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = self._monomial_str(exps)
            if mono:
                chunks.append(f"{c}*{mono}")
            else:
                chunks.append(f"{c}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"Poly({self})"


class RationalField:
    """Exact rational coefficients."""

    name = "QQ"
    exact = True

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_fraction(self, fr: Fraction):
        return Fraction(fr)

    def coerce(self, value):
        return Fraction(value)

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def div_int(self, a, n: int):
        return a / n

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def str_coeff(self, a) -> str:
        return str(a)


class ComplexField:
    """Double-precision complex coefficients with an absolute tolerance."""

    exact = False

    def __init__(self, tol: float = 1e-8):
        self.tol = tol
        self.name = "CC"

    @property
    def zero(self):
        return 0j

    @property
    def one(self):
        return 1 + 0j

    def from_fraction(self, fr: Fraction):
        return complex(fr)

    def coerce(self, value):
        return complex(value)

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.tol

    def is_zero(self, a) -> bool:
        return a == 0

    def div_int(self, a, n: int):
        return a / n

    def inv(self, a):
        return 1 / a

    def str_coeff(self, a) -> str:
        return str(a)


class PolynomialRing:
    """Polynomials (or Laurent polynomials) over an exact or complex base."""

    def __init__(self, names, base=None, laurent: bool = False):
        self.names = tuple(names)
        self.base = base if base is not None else RationalField()
        self.laurent = laurent
        kind = "Laurent" if laurent else "poly"
        self.name = f"{self.base.name}[{','.join(self.names)}]({kind})"

    @property
    def exact(self) -> bool:
        return self.base.exact

    @property
    def zero(self):
        return Poly(self.names, {})

    @property
    def one(self):
        return Poly.constant(self.names, self.base.one)

    def var(self, name: str) -> Poly:
        return Poly.variable(self.names, name, self.base.one)

    def monomial(self, exps, coeff=1) -> Poly:
        exps = tuple(exps)
        if not self.laurent and any(e < 0 for e in exps):
            raise ValueError("negative exponents need a Laurent ring")
        return Poly(self.names, {exps: self.base.coerce(coeff)})

    def from_fraction(self, fr: Fraction) -> Poly:
        return Poly.constant(self.names, self.base.from_fraction(fr))

    def coerce(self, value) -> Poly:
        if isinstance(value, Poly):
            if value.names != self.names:
                raise ValueError("polynomial from a different ring")
            return value
        return Poly.constant(self.names, self.base.coerce(value))

    def eq(self, a, b) -> bool:
        if self.base.exact:
            return a == b
        return a.isclose(b, self.base.tol)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def div_int(self, a: Poly, n: int) -> Poly:
        if self.base.exact:
            return a * Fraction(1, n)
        return a * (1.0 / n)

    def inv(self, a: Poly) -> Poly:
        if len(a.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible here")
        (exps, coeff), = a.terms.items()
        if any(exps) and not self.laurent:
            raise ZeroDivisionError("nonconstant monomial needs a Laurent ring")
        inv_c = (
            1 / Fraction(coeff) if self.base.exact else 1 / coeff
        )
        return Poly(self.names, {tuple(-e for e in exps): inv_c})

    def str_coeff(self, a) -> str:
        return f"({a})"
