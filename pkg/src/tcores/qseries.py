"""Truncated power series over pluggable rings, plus the series builders
used by the identity verifiers: partition sums weighted by hooks,
eta-style infinite products, the type-A Macdonald sum, and principal
specializations of Schur polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, enumerate_partitions
from .rings import Poly, PolynomialRing, RationalField


class RingMismatchError(TypeError):
    """Operands live in different coefficient rings."""


class BadConstantTermError(ValueError):
    """exp needs constant term 0; log and inversion need a unit."""


class TruncatedSeries:
    """A power series modulo q^(N+1), coefficients in a fixed ring.

    Mixed-order arithmetic truncates to the smaller order.  Comparisons use
    the ring's rule: exact equality for exact rings, absolute tolerance for
    the complex ones.
    """

    __slots__ = ("ring", "coeffs", "var")

    def __init__(self, ring, coeffs, var: str = "q"):
        self.ring = ring
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")
        self.var = var

    @classmethod
    def zero(cls, ring, order: int, var: str = "q") -> "TruncatedSeries":
        return cls(ring, [ring.zero] * (order + 1), var)

    @classmethod
    def one(cls, ring, order: int, var: str = "q") -> "TruncatedSeries":
        c = [ring.zero] * (order + 1)
        c[0] = ring.one
        return cls(ring, c, var)

    @classmethod
    def monomial(cls, ring, k: int, order: int, coeff=None, var: str = "q") -> "TruncatedSeries":
        c = [ring.zero] * (order + 1)
        if 0 <= k <= order:
            c[k] = ring.one if coeff is None else coeff
        return cls(ring, c, var)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _align(self, other):
        if not isinstance(other, TruncatedSeries):
            raise RingMismatchError("expected a TruncatedSeries")
        if other.ring is not self.ring and other.ring.name != self.ring.name:
            raise RingMismatchError(
                f"rings differ: {self.ring.name} vs {other.ring.name}"
            )
        n = min(self.order, other.order)
        return n

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.ring, self.coeffs[: order + 1], self.var)

    def __add__(self, other):
        n = self._align(other)
        return TruncatedSeries(
            self.ring,
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)],
            self.var,
        )

    def __sub__(self, other):
        n = self._align(other)
        return TruncatedSeries(
            self.ring,
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)],
            self.var,
        )

    def __neg__(self):
        return TruncatedSeries(self.ring, [-c for c in self.coeffs], self.var)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(
                self.ring, [c * other for c in self.coeffs], self.var
            )
        n = self._align(other)
        ring = self.ring
        out = [ring.zero] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if ring.is_zero(a):
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if ring.is_zero(b):
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(ring, out, self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * self.ring.inv(self.ring.coerce(other))

    def inverse(self) -> "TruncatedSeries":
        ring = self.ring
        try:
            c0inv = ring.inv(self.coeffs[0])
        except ZeroDivisionError as exc:
            raise BadConstantTermError("constant term is not invertible") from exc
        n = self.order
        out = [ring.zero] * (n + 1)
        out[0] = c0inv
        for k in range(1, n + 1):
            acc = ring.zero
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if ring.is_zero(a):
                    continue
                acc = acc + a * out[k - i]
            out[k] = -(c0inv * acc)
        return TruncatedSeries(ring, out, self.var)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedSeries.one(self.ring, self.order, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exp(self) -> "TruncatedSeries":
        ring = self.ring
        if not ring.is_zero(self.coeffs[0]):
            raise BadConstantTermError("exp needs constant term 0")
        n = self.order
        out = [ring.zero] * (n + 1)
        out[0] = ring.one
        for k in range(1, n + 1):
            acc = ring.zero
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if ring.is_zero(a):
                    continue
                acc = acc + (a * out[k - i]) * i
            out[k] = ring.div_int(acc, k)
        return TruncatedSeries(ring, out, self.var)

    def log(self) -> "TruncatedSeries":
        ring = self.ring
        if not ring.eq(self.coeffs[0], ring.one):
            raise BadConstantTermError("log needs constant term 1")
        n = self.order
        out = [ring.zero] * (n + 1)
        for k in range(1, n + 1):
            acc = self.coeffs[k] * k
            for i in range(1, k):
                if ring.is_zero(out[i]):
                    continue
                acc = acc - (out[i] * i) * self.coeffs[k - i]
            out[k] = ring.div_int(acc, k)
        return TruncatedSeries(ring, out, self.var)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            if self.order != other.order:
                return False
            return all(
                self.ring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs)
            )
        if isinstance(other, int):
            probe = TruncatedSeries.one(self.ring, self.order, self.var) * other
            return self == probe
        return NotImplemented

    def first_mismatch(self, other):
        """Index and values of the first differing coefficient, or None."""
        n = self._align(other)
        for i in range(n + 1):
            if not self.ring.eq(self.coeffs[i], other.coeffs[i]):
                return i, self.coeffs[i], other.coeffs[i]
        return None

    def max_abs_difference(self, other) -> float:
        """Largest coefficientwise |difference| as a float (complex rings)."""
        n = self._align(other)
        worst = 0.0
        for i in range(n + 1):
            a, b = self.coeffs[i], other.coeffs[i]
            if isinstance(a, Poly) or isinstance(b, Poly):
                d = a.max_abs_difference(b)
            else:
                d = abs(complex(a) - complex(b))
            worst = max(worst, d)
        return worst

    def __str__(self):
        ring = self.ring
        chunks = []
        for i, c in enumerate(self.coeffs):
            if ring.is_zero(c) and not (i == 0 and len(self.coeffs) == 1):
                continue
            cs = ring.str_coeff(c) if hasattr(ring, "str_coeff") else str(c)
            if i == 0:
                chunks.append(cs)
            elif i == 1:
                chunks.append(f"{cs}*{self.var}")
            else:
                chunks.append(f"{cs}*{self.var}^{i}")
        body = " + ".join(chunks) if chunks else "0"
        return f"{body} (+O({self.var}^{self.order + 1}))"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncatedSeries[{self.ring.name}]({self})"


def series_arith(f: TruncatedSeries, g: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    return f.exp()


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    return f.log()


def geometric_multiples(ring, step: int, order: int, coeff, var: str = "q") -> TruncatedSeries:
    """coeff * (q^step + q^(2 step) + ...) truncated; the expansion of
    coeff * q^step / (1 - q^step)."""
    c = [ring.zero] * (order + 1)
    k = step
    while k <= order:
        c[k] = c[k] + coeff
        k += step
    return TruncatedSeries(ring, c, var)


def log_one_minus_power(ring, m: int, order: int, var: str = "q") -> TruncatedSeries:
    """log(1 - q^m) = -sum_j q^(j m) / j, truncated."""
    c = [ring.zero] * (order + 1)
    j = 1
    while j * m <= order:
        c[j * m] = c[j * m] - ring.from_fraction(Fraction(1, j))
        j += 1
    return TruncatedSeries(ring, c, var)


def one_minus_power(ring, m: int, order: int, var: str = "q") -> TruncatedSeries:
    c = [ring.zero] * (order + 1)
    c[0] = ring.one
    if m <= order:
        c[m] = -ring.one
    return TruncatedSeries(ring, c, var)


def eta_like_product(exponent, order: int, ring=None, var: str = "q") -> TruncatedSeries:
    """prod_m (1 - q^m)^exponent, with a ring-element exponent.

    Computed as exp(exponent * sum_m log(1 - q^m)); factors with m beyond
    the truncation order cannot contribute.
    """
    if ring is None:
        ring = RationalField()
    total = TruncatedSeries.zero(ring, order, var)
    for m in range(1, order + 1):
        total = total + log_one_minus_power(ring, m, order, var)
    scaled = TruncatedSeries(
        ring, [c * exponent for c in total.coeffs], var
    )
    return scaled.exp()


def partition_sum_series(
    rho,
    r: int,
    order: int,
    ring=None,
    marker=None,
    source=None,
    var: str = "q",
) -> TruncatedSeries:
    """sum over partitions of q^size * prod of rho(h) over hooks divisible
    by r, optionally times marker^(number of such hooks).

    `source(n)` may supply the partitions of size n (e.g. a t-core filter);
    by default all partitions are used.
    """
    if ring is None:
        ring = RationalField()
    coeffs = [ring.zero] * (order + 1)
    for n in range(order + 1):
        parts = source(n) if source is not None else enumerate_partitions(n)
        acc = ring.zero
        for p in parts:
            hooks = p.hooks(r)
            term = ring.one
            for h in hooks:
                term = term * rho(h)
            if marker is not None:
                term = term * marker ** len(hooks)
            acc = acc + term
        coeffs[n] = acc
    return TruncatedSeries(ring, coeffs, var)


@dataclass(frozen=True)
class MacdonaldTerm:
    """One summand of the type-A sum: an integer vector with the fixed total
    1 + ... + t, its permutation sign (0 if residues repeat), and its
    q-exponent."""

    a: tuple[int, ...]
    epsilon: int
    omega: int


def residue_sign(a, t: int) -> int:
    """Sign of the residues of `a` as a permutation of res(1..t); 0 on repeats."""
    res = [x % t for x in a]
    if len(set(res)) != t:
        return 0
    target = [(i % t) for i in range(1, t + 1)]
    pos = {r: i for i, r in enumerate(target)}
    perm = [pos[r] for r in res]
    sign = 1
    for i in range(t):
        for j in range(i + 1, t):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def macdonald_terms(t: int, order: int) -> list[MacdonaldTerm]:
    """All vectors with entry sum 1+...+t whose q-exponent is at most the
    truncation order; every nonzero-sign vector is checked to have an
    integral nonnegative exponent."""
    if t < 2:
        raise ValueError("t must be at least 2")
    total = t * (t + 1) // 2
    sq_base = sum(i * i for i in range(1, t + 1))
    budget = 2 * t * order + sq_base
    out = []

    def rec(i, remaining_sum, remaining_budget, chosen):
        slots = t - i
        if slots == 0:
            if remaining_sum == 0:
                a = tuple(chosen)
                eps = residue_sign(a, t)
                omega = Fraction(sum(x * x for x in a) - sq_base, 2 * t)
                if eps != 0:
                    if omega.denominator != 1 or omega < 0:
                        raise AssertionError(
                            f"nonzero-sign vector {a} has exponent {omega}"
                        )
                    if omega <= order:
                        out.append(MacdonaldTerm(a, eps, int(omega)))
            return
        if remaining_sum * remaining_sum > slots * remaining_budget:
            return
        k = 0
        while True:
            vals = (k,) if k == 0 else (k, -k)
            alive = False
            for v in vals:
                sq = v * v
                if sq <= remaining_budget:
                    alive = True
                    chosen.append(v)
                    rec(i + 1, remaining_sum - v, remaining_budget - sq, chosen)
                    chosen.pop()
            if not alive:
                break
            k += 1

    rec(0, total, budget, [])
    out.sort(key=lambda term: (term.omega, term.a))
    return out


def _macdonald_ring(t: int) -> PolynomialRing:
    return PolynomialRing(tuple(f"x{i}" for i in range(1, t + 1)), laurent=True)


def macdonald_lhs(t: int, order: int) -> TruncatedSeries:
    """prod_m (1-q^m)^(t-1) prod_{j<i} (1-(x_i/x_j) q^(m-1)) (1-(x_j/x_i) q^m)."""
    ring = _macdonald_ring(t)
    result = TruncatedSeries.one(ring, order)
    for m in range(1, order + 2):
        if m <= order:
            result = result * one_minus_power(ring, m, order) ** (t - 1)
        for i in range(1, t + 1):
            for j in range(1, i):
                # ratio x_i / x_j carried as a Laurent monomial
                up = [0] * t
                up[i - 1] = 1
                up[j - 1] = -1
                ratio = ring.monomial(tuple(up))
                down = ring.monomial(tuple(-e for e in up))
                if m - 1 <= order:
                    c = [ring.zero] * (order + 1)
                    c[0] = ring.one
                    if m - 1 == 0:
                        c[0] = ring.one - ratio
                    else:
                        c[m - 1] = -ratio
                    result = result * TruncatedSeries(ring, c)
                if m <= order:
                    c = [ring.zero] * (order + 1)
                    c[0] = ring.one
                    c[m] = -down
                    result = result * TruncatedSeries(ring, c)
    return result


def macdonald_rhs(t: int, order: int) -> TruncatedSeries:
    """sum over vectors of sign * q^omega * x_1^(1-a_1) ... x_t^(t-a_t)."""
    ring = _macdonald_ring(t)
    coeffs = [ring.zero] * (order + 1)
    for term in macdonald_terms(t, order):
        exps = tuple(i + 1 - term.a[i] for i in range(t))
        coeffs[term.omega] = coeffs[term.omega] + ring.monomial(exps, term.epsilon)
    return TruncatedSeries(ring, coeffs)


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, k: int) -> Poly:
    """The p-binomial coefficient [m choose k]_p as an exact polynomial."""
    names = ("p",)
    if k < 0 or k > m:
        return Poly(names, {})
    if k == 0 or k == m:
        return Poly.constant(names, Fraction(1))
    # Pascal recurrence [m k] = [m-1 k-1] + p^k [m-1 k]
    pk = Poly(names, {(k,): Fraction(1)})
    return gaussian_binomial(m - 1, k - 1) + pk * gaussian_binomial(m - 1, k)


def complete_homogeneous_principal(k: int, n: int) -> Poly:
    """h_k evaluated at 1, p, ..., p^(n-1): the p-binomial [n+k-1 choose k]."""
    if k < 0:
        return Poly(("p",), {})
    if k == 0:
        return Poly.constant(("p",), Fraction(1))
    return gaussian_binomial(n + k - 1, k)


def schur_principal(partition: Partition, n: int) -> Poly:
    """Schur polynomial at 1, p, ..., p^(n-1), by the determinant of
    complete homogeneous specializations; zero when the partition has more
    than n rows."""
    ell = len(partition.parts)
    if ell == 0:
        return Poly.constant(("p",), Fraction(1))
    entries = [
        [
            complete_homogeneous_principal(partition.parts[i] - (i + 1) + (j + 1), n)
            for j in range(ell)
        ]
        for i in range(ell)
    ]
    return _det(entries)


def _det(matrix: list[list[Poly]]) -> Poly:
    n = len(matrix)
    names = matrix[0][0].names
    cache: dict[tuple[int, ...], Poly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Poly:
        if row == n:
            return Poly.constant(names, Fraction(1))
        key = cols
        if key in cache:
            return cache[key]
        acc = Poly(names, {})
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[key] = acc
        return acc

    return minor(0, tuple(range(n)))
