import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhomology.derham import (QForm, basis, check_face_identities, d_power, d_power_product_rhs,
                              derivation_x, exterior_d, face_operator, kernel_witness,
                              leibniz_rhs, mul, q_derivation_xi, random_form,
                              simplicial_differential, truncate_to_ncomplex,
                              twisted_exterior_d, vanishing_checker)
from qhomology.field import QQ, make_field, q_binomial, root_of_unity
from qhomology.linalg import ExactMatrix
from qhomology.ncomplex import homology

Q = QQ(Fraction(3, 5))
seeds = st.integers(0, 10 ** 6)


def gens(n, field=QQ):
    return ([QForm.x(n, i, field) for i in range(n)],
            [QForm.xi(n, i, field) for i in range(n)])


def random_mixed(rng, n, field, max_poly=2):
    k = rng.randint(0, n)
    return random_form(rng, n, k, max_poly, field)


# -- algebra ---------------------------------------------------------------------

def test_xi_relations():
    _, (xi0, xi1) = gens(2)
    assert mul(xi1, xi0, Q) == mul(xi0, xi1, Q).scale(Q)
    assert mul(xi0, xi0, Q) == 0


def test_x_commutes_with_xi():
    (x0, x1), (xi0, xi1) = gens(2)
    a = mul(mul(x0, xi0, Q), mul(x1, xi1, Q), Q)
    assert a == mul(mul(x0, x1, Q), mul(xi0, xi1, Q), Q)
    assert mul(xi1, x0, Q) == mul(x0, xi1, Q)


@given(seeds, st.integers(1, 3))
def test_product_is_associative(seed, n):
    rng = random.Random(seed)
    q = QQ(Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4)))
    a, b, c = (random_mixed(rng, n, QQ) for _ in range(3))
    assert mul(mul(a, b, q), c, q) == mul(a, mul(b, c, q), q)


def test_top_form_reorders_by_inversions():
    _, xi = gens(3)
    # xi2 xi1 xi0 has three inversions
    assert mul(mul(xi[2], xi[1], Q), xi[0], Q) == mul(mul(xi[0], xi[1], Q), xi[2], Q).scale(Q ** 3)


def test_derivations():
    _, (xi0, xi1) = gens(2)
    w = mul(xi0, xi1, Q)
    assert q_derivation_xi(0, w, Q) == xi1
    assert q_derivation_xi(1, w, Q) == xi0.scale(Q.inverse())
    assert derivation_x(0, QForm.monomial(2, (2, 0), (1,))) == QForm.monomial(2, (1, 0), (1,), 2)


def test_homogeneity_checks():
    (x0, _), (xi0, _) = gens(2)
    with pytest.raises(ValueError):
        (x0 + xi0).form_degree()
    with pytest.raises(ValueError):
        QForm.monomial(2, None, (1, 0))
    with pytest.raises(ValueError):
        mul(x0, QForm.x(3, 0), Q)


# -- the differential -------------------------------------------------------------------

def test_differential_examples():
    (x0, x1), (xi0, xi1) = gens(2)
    assert exterior_d(x0, Q) == xi0
    assert exterior_d(mul(x0, xi1, Q), Q) == mul(xi0, xi1, Q)
    assert exterior_d(mul(x1, xi0, Q), Q) == mul(xi0, xi1, Q).scale(Q)
    assert d_power(mul(x0, x1, Q), Q, 2) == mul(xi0, xi1, Q).scale(1 + Q)


def test_second_power_vanishes_only_at_minus_one():
    (x0, x1), _ = gens(2)
    assert d_power(mul(x0, x1, QQ(-1)), QQ(-1), 2) == 0
    z = root_of_unity(3)
    (y0, y1), _ = gens(2, z.field)
    w = mul(y0, y1, z)
    assert d_power(w, z, 2) != 0
    assert d_power(w, z, 3) == 0


@given(st.integers(2, 5), st.integers(1, 3), seeds)
def test_nth_power_vanishes_at_root(N, n, seed):
    q = root_of_unity(N)
    rng = random.Random(seed)
    w = random_mixed(rng, n, q.field, max_poly=N + 1)
    assert d_power(w, q, N) == 0


def test_single_variable_second_power_vanishes():
    # with one variable every 1-form is already top degree
    w = QForm.monomial(1, (4,), ())
    assert exterior_d(w, Q) == QForm.monomial(1, (3,), (0,), 4)
    assert d_power(w, Q, 2) == 0


@given(st.integers(1, 3), seeds)
def test_leibniz_with_function_on_the_left(n, seed):
    rng = random.Random(seed)
    f = random_form(rng, n, 0, 2, QQ)
    v = random_mixed(rng, n, QQ)
    assert exterior_d(mul(f, v, Q), Q) == leibniz_rhs(f, v, Q)


def test_leibniz_counterexample():
    # d(xi1 * x0) = xi0 xi1, while the q-graded rule predicts q^2 xi0 xi1
    (x0, _), (_, xi1) = gens(2)
    u, v = xi1, x0
    assert exterior_d(mul(u, v, Q), Q) == mul(QForm.xi(2, 0), xi1, Q)
    assert leibniz_rhs(u, v, Q) == mul(QForm.xi(2, 0), xi1, Q).scale(Q * Q)
    z = root_of_unity(3)
    uz, vz = QForm.xi(2, 1, z.field), QForm.x(2, 0, z.field)
    assert exterior_d(mul(uz, vz, z), z) != leibniz_rhs(uz, vz, z)


def test_leibniz_holds_at_minus_one_on_the_counterexample():
    q = QQ(-1)
    u, v = QForm.xi(2, 1), QForm.x(2, 0)
    assert exterior_d(mul(u, v, q), q) == leibniz_rhs(u, v, q)


@given(st.integers(2, 4), st.integers(2, 3), seeds)
def test_power_product_rule_is_trivial_at_root(N, n, seed):
    # every middle Gaussian binomial vanishes and d^N = 0, so both sides are 0
    q = root_of_unity(N)
    assert all(q_binomial(N, p, q) == 0 for p in range(1, N))
    rng = random.Random(seed)
    u = random_mixed(rng, n, q.field)
    v = random_mixed(rng, n, q.field)
    assert d_power(mul(u, v, q), q, N) == 0
    assert d_power_product_rhs(u, v, N, q) == 0


def test_power_product_rule_fails_with_leibniz_at_generic_q():
    u, v = QForm.xi(2, 1), QForm.x(2, 0)
    assert d_power(mul(u, v, Q), Q, 1) != d_power_product_rhs(u, v, 1, Q)


# -- finite truncations ------------------------------------------------------------

def test_basis_sizes():
    assert len(basis(3, 1, 2)) == 3 * 6
    assert basis(2, 3, 0) == []
    assert basis(2, 0, 1) == [((1, 0), ()), ((0, 1), ())]


def test_linear_piece_differential_is_identity():
    z = root_of_unity(3)
    T = truncate_to_ncomplex(2, z, 1, 3)
    assert T.dims == {0: 2, -1: 2}
    assert T.diff(0) == ExactMatrix.identity(2, z.field)


@pytest.mark.parametrize("N", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_truncations_are_n_complexes(n, N):
    q = root_of_unity(N)
    for m in range(0, 4):
        assert truncate_to_ncomplex(n, q, m, N).N == N


def test_constants_carry_homology():
    T = truncate_to_ncomplex(2, root_of_unity(3), 0, 3)
    assert homology(T, 1, 0).dim == 1


# -- faces --------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_face_identities(n):
    assert check_face_identities(n, 3) == []


def test_face_index_out_of_range():
    with pytest.raises(ValueError):
        face_operator(2, QForm.xi(2, 0))


@given(st.integers(1, 3), seeds)
def test_alternating_faces_are_classical_d(n, seed):
    rng = random.Random(seed)
    w = random_mixed(rng, n, QQ, 3)
    assert simplicial_differential(w, QQ(-1)) == twisted_exterior_d(w, QQ(-1))


@given(st.integers(1, 3), seeds, st.sampled_from(["2", "-1/3", "z3", "z4"]))
def test_faces_reassemble_to_twisted_differential(n, seed, qs):
    q = root_of_unity(int(qs[1:])) if qs.startswith("z") else QQ(Fraction(qs))
    rng = random.Random(seed)
    w = random_mixed(rng, n, q.field, 3)
    assert simplicial_differential(w, q) == twisted_exterior_d(w, q)


def test_faces_do_not_reassemble_to_d_itself():
    w = QForm.monomial(2, (0, 1), (0,))
    # one face only: x1 xi0 -> xi0 xi1 with weight q^0; d puts in q
    assert simplicial_differential(w, Q) == QForm.monomial(2, (0, 0), (0, 1))
    assert exterior_d(w, Q) == QForm.monomial(2, (0, 0), (0, 1), Q)


# -- vanishing of homology -----------------------------------------------------------

def test_vanishing_for_two_variables_order_two():
    r = vanishing_checker(2, 2, 4)
    assert r["violations"] == []
    assert r["constants"] == {(1, 0): 1}


def test_vanishing_fails_for_three_variables_order_three():
    r = vanishing_checker(3, 3, 3)
    assert (1, 1, 1, 3) in r["violations"]
    assert r["constants"] == {(1, 0): 1, (2, 0): 1}


def test_kernel_witness_is_a_genuine_class():
    N, n, m, p, i = 3, 3, 1, 1, 1
    q = root_of_unity(N)
    w = kernel_witness(n, N, m, p, i)
    assert w is not None and w.form_degree() == i
    assert d_power(w, q, p) == 0
    assert kernel_witness(2, 2, 2, 1, 1) is None
