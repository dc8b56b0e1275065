from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from tcores.partitions import Partition, enumerate_partitions, enumerate_t_cores
from tcores.qseries import (
    BadConstantTermError,
    RingMismatchError,
    TruncatedSeries,
    complete_homogeneous_principal,
    eta_like_product,
    gaussian_binomial,
    geometric_multiples,
    macdonald_lhs,
    macdonald_rhs,
    macdonald_terms,
    one_minus_power,
    partition_sum_series,
    residue_sign,
    schur_principal,
    series_arith,
    series_exp,
    series_log,
)
from tcores.rings import ComplexField, Poly, PolynomialRing, RationalField

QQ = RationalField()


def qq_series(coeffs, order=None):
    coeffs = [Fraction(c) for c in coeffs]
    if order is not None:
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
    return TruncatedSeries(QQ, coeffs)


def ssyt_schur_principal(parts, n):
    """Oracle: enumerate semistandard fillings with entries <= n and sum
    p^(sum of entries - cell count)."""
    parts = tuple(parts)
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    poly = {}

    def fill(idx, values):
        if idx == len(cells):
            weight = sum(values.values()) - len(cells)
            poly[weight] = poly.get(weight, 0) + 1
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, values[(i, j - 1)])
        if i > 0:
            lo = max(lo, values[(i - 1, j)] + 1)
        for v in range(lo, n + 1):
            values[(i, j)] = v
            fill(idx + 1, values)
            del values[(i, j)]

    fill(0, {})
    return Poly(("p",), {(k,): Fraction(v) for k, v in poly.items()})


def test_series_arith_examples():
    f = qq_series([1, 1], order=2)  # 1 + q
    g = qq_series([1, -1], order=2)  # 1 - q
    assert series_arith(f, g, "mul") == qq_series([1, 0, -1])
    one = TruncatedSeries.one(QQ, 2)
    assert f * one == f
    geo = qq_series([1] * 5)
    assert geo * qq_series([1, -1], order=4) == TruncatedSeries.one(QQ, 4)
    assert series_arith(f, g, "add") == qq_series([2, 0, 0])
    assert series_arith(f, g, "sub") == qq_series([0, 2, 0])


def test_mixed_orders_truncate():
    f = qq_series([1, 2, 3, 4])
    g = qq_series([1, 1])
    assert (f + g).order == 1
    assert (f * g).order == 1


def test_ring_mismatch():
    f = qq_series([1, 1])
    g = TruncatedSeries(ComplexField(), [1 + 0j, 1 + 0j])
    with pytest.raises(RingMismatchError):
        f + g


def test_exp_log_basics():
    zero = TruncatedSeries.zero(QQ, 5)
    assert series_exp(zero) == TruncatedSeries.one(QQ, 5)
    f = one_minus_power(QQ, 1, 10)
    assert series_exp(series_log(f)) == f
    with pytest.raises(BadConstantTermError):
        series_exp(TruncatedSeries.one(QQ, 3))
    with pytest.raises(BadConstantTermError):
        series_log(TruncatedSeries.zero(QQ, 3))


def test_partition_generating_function_via_exp():
    N = 12
    total = TruncatedSeries.zero(QQ, N)
    for k in range(1, N + 1):
        total = total + geometric_multiples(QQ, k, N, Fraction(1, k))
    pgf = series_exp(total)
    counts = [len(list(enumerate_partitions(n))) for n in range(N + 1)]
    assert [int(c) for c in pgf.coeffs] == counts


def test_eta_like_product_examples():
    assert eta_like_product(0, 6) == TruncatedSeries.one(QQ, 6)
    eta = eta_like_product(1, 12)
    assert [int(c) for c in eta.coeffs] == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
    ring = PolynomialRing(("beta",))
    beta = ring.var("beta")
    sym = eta_like_product(beta - 1, 3, ring)
    assert sym.coeffs[1] == ring.one - beta


def test_partition_sum_series_examples():
    pgf = partition_sum_series(lambda h: Fraction(1), 1, 8)
    counts = [len(list(enumerate_partitions(n))) for n in range(9)]
    assert [int(c) for c in pgf.coeffs] == counts

    ring = PolynomialRing(("beta",))
    beta = ring.var("beta")
    no = partition_sum_series(lambda h: ring.one - beta * Fraction(1, h * h), 1, 4, ring)
    assert no.coeffs[1] == ring.one - beta

    # a weight vanishing on multiples of t restricts the sum to t-cores
    t = 3
    killed = partition_sum_series(lambda h: Fraction(0 if h % t == 0 else 1), 1, 10)
    core_counts = [0] * 11
    for lam in enumerate_t_cores(t, 10):
        core_counts[lam.size] += 1
    assert [int(c) for c in killed.coeffs] == core_counts


def test_series_pow_and_inverse():
    f = one_minus_power(QQ, 1, 8)
    assert f * f.inverse() == TruncatedSeries.one(QQ, 8)
    assert f ** -2 == (f.inverse()) ** 2
    assert [int(c) for c in (f ** -1).coeffs] == [1] * 9


def test_residue_sign_rules():
    assert residue_sign(tuple(range(1, 6)), 5) == 1
    assert residue_sign((1, 2, 3, 4, 6), 5) == 0  # residue 1 repeats
    assert residue_sign((2, 1, 3), 3) == -1
    for term in macdonald_terms(3, 3):
        assert term.epsilon in (-1, 1)
        assert term.omega >= 0


def test_macdonald_constant_term_t2():
    lhs = macdonald_lhs(2, 0)
    rhs = macdonald_rhs(2, 0)
    ring = lhs.ring
    want = ring.one - ring.monomial((-1, 1))  # 1 - x2/x1
    assert lhs.coeffs[0] == want
    assert rhs.coeffs[0] == want


def test_macdonald_exact_small():
    assert macdonald_lhs(2, 4) == macdonald_rhs(2, 4)
    assert macdonald_lhs(3, 3) == macdonald_rhs(3, 3)
    assert macdonald_lhs(4, 2) == macdonald_rhs(4, 2)


def test_gaussian_binomial_against_brute():
    for n in range(1, 5):
        for k in range(0, 5):
            brute = {}
            for combo in combinations_with_replacement(range(n), k):
                s = sum(combo)
                brute[s] = brute.get(s, 0) + 1
            want = Poly(("p",), {(s,): Fraction(v) for s, v in brute.items()})
            assert complete_homogeneous_principal(k, n) == want


def test_schur_principal_examples():
    assert schur_principal(Partition((1,)), 2) == Poly(
        ("p",), {(0,): Fraction(1), (1,): Fraction(1)}
    )
    assert schur_principal(Partition((1, 1)), 1) == Poly(("p",), {})
    assert schur_principal(Partition(()), 3) == Poly(("p",), {(0,): Fraction(1)})


def test_schur_principal_against_ssyt_oracle():
    for size in range(6):
        for lam in enumerate_partitions(size):
            for n in range(1, 4):
                assert schur_principal(lam, n) == ssyt_schur_principal(
                    lam.parts, n
                ), (lam, n)


def test_series_str_and_json():
    f = qq_series([1, Fraction(3, 2), 0, 2])
    assert str(f) == "1 + 3/2*q + 2*q^3 (+O(q^4))"
    assert f.to_json() == ["1", "3/2", "0", "2"]


small_fractions = st.fractions(
    min_value=-3, max_value=3, max_denominator=6
)


@given(st.lists(small_fractions, min_size=1, max_size=7))
def test_log_exp_roundtrip(tail):
    f = TruncatedSeries(QQ, [Fraction(0)] + tail)
    assert series_log(series_exp(f)) == f


@given(st.lists(small_fractions, min_size=1, max_size=7))
def test_exp_log_roundtrip(tail):
    f = TruncatedSeries(QQ, [Fraction(1)] + tail)
    assert series_exp(series_log(f)) == f


@given(
    st.lists(small_fractions, min_size=3, max_size=5),
    st.lists(small_fractions, min_size=3, max_size=5),
    st.lists(small_fractions, min_size=3, max_size=5),
)
def test_ring_laws(a, b, c):
    n = min(len(a), len(b), len(c)) - 1
    f = TruncatedSeries(QQ, a[: n + 1])
    g = TruncatedSeries(QQ, b[: n + 1])
    h = TruncatedSeries(QQ, c[: n + 1])
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
