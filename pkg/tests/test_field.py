from fractions import Fraction
from itertools import combinations, permutations

import pytest
import sympy
from hypothesis import given, strategies as st

from qhomology.field import (QQ, FieldMismatch, cyclotomic_polynomial, eval_poincare,
                             make_field, multiplicative_order, q_binomial, q_factorial,
                             q_int, root_of_unity)

from strategies import ORDERS, field_and_scalars, scalars

X = sympy.Symbol("x")


def to_sympy(a):
    return sum(sympy.Rational(c.numerator, c.denominator) * X ** k for k, c in enumerate(a.coords))


def reduce_sympy(expr, M):
    return sympy.Poly(sympy.rem(sympy.expand(expr), sympy.cyclotomic_poly(M, X), X), X)


def same(a, expr):
    """a equals the sympy polynomial expr modulo Phi_M."""
    return reduce_sympy(to_sympy(a) - expr, a.field.M).is_zero


# -- the fields themselves -------------------------------------------------------

@pytest.mark.parametrize("M", range(1, 25))
def test_cyclotomic_polynomial_matches_sympy(M):
    expected = sympy.Poly(sympy.cyclotomic_poly(M, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(M)) == [int(c) for c in expected]


def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)


def test_root_arithmetic():
    z4 = root_of_unity(4)
    assert z4 * z4 == -1
    z3 = root_of_unity(3)
    assert z3 * z3 * z3 == 1
    assert root_of_unity(2) == -1
    z6 = root_of_unity(6)
    assert all(z6 ** k != 1 for k in range(1, 6)) and z6 ** 6 == 1


@pytest.mark.parametrize("M", [2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15])
def test_primitive_root_has_exact_order(M):
    assert multiplicative_order(root_of_unity(M)) == M


def test_bad_orders_rejected():
    with pytest.raises(ValueError):
        make_field(0)
    with pytest.raises(ValueError):
        make_field(-3)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        make_field(3).embed(root_of_unity(4))


def test_embedding_sends_root_to_power():
    F = make_field(12)
    z3 = F.embed(root_of_unity(3))
    assert z3 ** 3 == 1 and z3 != 1
    assert z3 == root_of_unity(12) ** 4


@given(field_and_scalars())
def test_ring_operations_match_sympy(data):
    F, (a, b, c) = data
    sa, sb = to_sympy(a), to_sympy(b)
    assert same(a + b, sa + sb)
    assert same(a * b, sa * sb)
    assert same(a - b, sa - sb)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(field_and_scalars(k=2))
def test_inverse(data):
    F, (a, b) = data
    if a:
        assert a * a.inverse() == F.one
        assert (b / a) * a == b
    else:
        with pytest.raises(ZeroDivisionError):
            a.inverse()


@given(st.sampled_from(ORDERS).flatmap(lambda M: scalars(make_field(M))),
       st.integers(-4, 6))
def test_powers(a, n):
    if n < 0 and not a:
        return
    expect = a.field.one
    base = a if n >= 0 else a.inverse()
    for _ in range(abs(n)):
        expect = expect * base
    assert a ** n == expect


# -- q-combinatorics -----------------------------------------------------------------

def test_q_integers():
    assert q_int(3, root_of_unity(3)) == 0
    assert q_int(4, 1) == 4
    assert q_int(3, 2) == 7
    assert q_int(0, 5) == 0


def test_q_factorials():
    assert q_factorial(3, 1) == 6
    assert q_factorial(3, 2) == 21
    for N in range(2, 9):
        assert q_factorial(N, root_of_unity(N)) == 0
        assert q_factorial(N - 1, root_of_unity(N)) != 0


def test_q_binomials():
    q = QQ(Fraction(7, 3))
    assert q_binomial(2, 1, q) == 1 + q
    assert all(q_binomial(n, 0, q) == 1 for n in range(6))
    assert q_binomial(3, 5, q) == 0
    for N in range(2, 9):
        z = root_of_unity(N)
        assert all(q_binomial(N, k, z) == 0 for k in range(1, N))


def _inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


@pytest.mark.parametrize("q", [QQ(2), QQ(Fraction(-1, 3)), root_of_unity(5), root_of_unity(6)])
@pytest.mark.parametrize("n", range(0, 6))
def test_factorial_is_inversion_sum(n, q):
    assert q_factorial(n, q) == sum((q ** _inversions(w) for w in permutations(range(n))), q.field.zero)


@pytest.mark.parametrize("q", [QQ(2), QQ(Fraction(1, 3)), root_of_unity(4), root_of_unity(3)])
def test_binomial_counts_subsets_by_inversions(q):
    # [n, k]_q = sum over k-subsets S of {0..n-1} of q^(sum(S) - k(k-1)/2)
    for n in range(0, 8):
        for k in range(0, n + 1):
            oracle = sum((q ** (sum(S) - k * (k - 1) // 2) for S in combinations(range(n), k)),
                         q.field.zero)
            assert q_binomial(n, k, q) == oracle


@given(st.integers(0, 8), st.integers(0, 9),
       st.sampled_from(["z2", "z3", "z4", "z5", "z6", "2", "1/3"]))
def test_binomial_recursion(n, k, qs):
    q = root_of_unity(int(qs[1:])) if qs.startswith("z") else QQ(Fraction(qs))
    k = min(k, n + 1)
    assert q_binomial(n + 1, k, q) == q_binomial(n, k, q) * q ** k + q_binomial(n, k - 1, q)


def test_poincare_evaluation():
    assert eval_poincare({0: 1, 1: 1, 2: 1}, root_of_unity(3)) == 0
    assert eval_poincare({0: 1}, 17) == 1
    assert eval_poincare({0: 2, 1: 2}, -1) == 0
