from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhomology.deltaset import (BUILTINS, DeltaSet, RootOfUnityError, SimplicialIdentityViolation,
                                builtin, chain_ncomplex, circle, dq_power, dq_power_oracle,
                                from_simplices, point, random_delta_set, simplex_boundary,
                                standard_simplex)
from qhomology.field import QQ, root_of_unity
from qhomology.linalg import ExactMatrix
from qhomology.ncomplex import NotNilpotent


def test_two_simplex_faces():
    x = standard_simplex(2)
    assert x.cells == {0: ["0", "1", "2"], 1: ["01", "02", "12"], 2: ["012"]}
    assert x.face(2, 0, "012") == "12"
    assert x.face(1, 0, x.face(2, 2, "012")) == "1"
    assert x.face(1, 1, x.face(2, 0, "012")) == "1"
    assert x.iterated_face((0, 2), "012", 2) == x.iterated_face((1, 0), "012", 2) == "1"


def test_point_and_circle_are_valid():
    assert point().dimension == 0
    assert circle().cells == {0: ["v"], 1: ["e"]}


def test_swapped_faces_violate_identities():
    x = standard_simplex(2)
    faces = dict(x.faces)
    m = dict(faces[(1, 0)])
    m["01"], faces[(1, 1)] = "0", dict(faces[(1, 1)], **{"01": "1"})
    faces[(1, 0)] = m
    with pytest.raises(SimplicialIdentityViolation):
        DeltaSet(x.cells, faces)


def test_missing_face_rejected():
    with pytest.raises(ValueError):
        DeltaSet({0: ["a"], 1: ["e"]}, {(1, 0): {"e": "a"}})


def test_unknown_builtin():
    with pytest.raises(ValueError):
        builtin("torus")


def test_dq_on_two_simplex():
    q = QQ(Fraction(5, 7))
    assert dq_power(standard_simplex(2), "012", 1, q) == {"12": QQ(1), "02": q, "01": q * q}


def test_dq_square_on_two_simplex():
    q = QQ(Fraction(5, 7))
    x = standard_simplex(2)
    expect = {"2": 1 + q, "1": (1 + q) * q, "0": (1 + q) * q * q}
    assert dq_power(x, "012", 2, q) == expect
    assert dq_power_oracle(x, "012", 2, q) == expect
    assert dq_power(x, "012", 0, q) == {"012": QQ(1)}
    assert dq_power(x, "012", 2, -1) == {}


def test_classical_boundary_at_minus_one():
    # columns 01, 02, 12; rows 0, 1, 2; d(ab) = b - a
    c = chain_ncomplex(standard_simplex(2), QQ(-1), 2)
    assert c.diff(1) == ExactMatrix.from_rows([[-1, -1, 0], [1, 0, -1], [0, 1, 1]], QQ)


def test_root_of_unity_required():
    with pytest.raises(RootOfUnityError):
        chain_ncomplex(standard_simplex(2), QQ(2), 3)
    with pytest.raises(RootOfUnityError):
        chain_ncomplex(standard_simplex(2), root_of_unity(4), 3)


def test_order_two_differential_is_also_order_four():
    assert chain_ncomplex(standard_simplex(3), QQ(-1), 4).N == 4


@pytest.mark.parametrize("name", sorted(BUILTINS))
@pytest.mark.parametrize("N", range(2, 7))
def test_builtins_give_n_complexes(name, N):
    c = chain_ncomplex(builtin(name), root_of_unity(N), N)
    assert c.N == N


@given(st.integers(0, 10 ** 6), st.integers(2, 6))
def test_random_delta_sets_give_n_complexes(seed, N):
    chain_ncomplex(random_delta_set(seed), root_of_unity(N), N)


def test_non_primitive_root_still_nilpotent_at_its_order():
    # zeta_6 ** 2 has order 3
    q = root_of_unity(6) ** 2
    chain_ncomplex(standard_simplex(4), q, 3)


def test_chain_complex_at_wrong_order_is_not_nilpotent():
    with pytest.raises(NotNilpotent):
        c = chain_ncomplex(standard_simplex(4), root_of_unity(3))
        c.with_order(2)


@given(st.integers(0, 10 ** 6), st.sampled_from(["z2", "z3", "z4", "2", "-1/3"]))
def test_power_formula(seed, qs):
    q = root_of_unity(int(qs[1:])) if qs.startswith("z") else QQ(Fraction(qs))
    x = random_delta_set(seed)
    for n, cells in x.cells.items():
        for cell in cells:
            for k in range(min(n, 4) + 1):
                assert dq_power(x, cell, k, q) == dq_power_oracle(x, cell, k, q)


def test_dims_of_two_simplex():
    c = chain_ncomplex(standard_simplex(2), root_of_unity(3), 3)
    assert c.dims == {0: 3, 1: 3, 2: 1}


def test_boundary_counts():
    x = simplex_boundary(3)
    assert {n: len(cs) for n, cs in x.cells.items()} == {0: 4, 1: 6, 2: 4}


def test_round_trip_dict():
    x = random_delta_set(4)
    assert DeltaSet.from_dict(x.to_dict()) == x


def test_from_simplices_closes_under_faces():
    x = from_simplices([[2, 0, 1]])
    assert x == standard_simplex(2)
