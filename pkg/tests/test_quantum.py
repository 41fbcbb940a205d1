from itertools import product

import pytest

from qhomology.field import QQ, root_of_unity
from qhomology.linalg import Subspace
from qhomology.quantum import (coaction_checks, comultiplication_degree2_check, deg2_index,
                               deg2_label, displayed_relations, format_relation, in_ideal,
                               relations_from_covariance)

ORIENTATIONS = ("literal", "column", "mixed", "transposed")


def commutator_span(n, F):
    vecs = []
    for X, Y in product(product(range(n), repeat=2), repeat=2):
        if X < Y:
            v = [F.zero] * n ** 4
            v[deg2_index(n, *X, *Y)] = F.one
            v[deg2_index(n, *Y, *X)] = -F.one
            vecs.append(tuple(v))
    return Subspace.span(n ** 4, vecs, F)


def test_index_round_trip():
    for n in (1, 2, 3):
        for idx in range(n ** 4):
            assert deg2_index(n, *deg2_label(n, idx)) == idx


def test_format_relation():
    F = QQ
    v = [F.zero] * 16
    v[deg2_index(2, 0, 1, 1, 0)] = F(2)
    assert format_relation(2, v) == "(2)*a12*a21"
    assert format_relation(2, [F.zero] * 16) == "0"


@pytest.mark.parametrize("N", [2, 3, 4])
def test_one_variable_has_no_relations(N):
    q = root_of_unity(N)
    assert relations_from_covariance(1, q, "column").dim == 0
    assert displayed_relations(1, q).dim == 0


@pytest.mark.parametrize("orientation", ORIENTATIONS)
def test_classical_case_is_commutative(orientation):
    # at q = -1 every forced relation is a consequence of commutativity
    assert commutator_span(2, QQ).contains_subspace(relations_from_covariance(2, QQ(-1), orientation))


def test_displayed_column_relation_is_in_displayed_ideal():
    q = root_of_unity(3)
    F = q.field
    assert in_ideal(displayed_relations(2, q), {(0, 0, 1, 0): F.one, (1, 0, 0, 0): -q}, 2)
    assert not in_ideal(displayed_relations(2, q), {(0, 0, 1, 1): F.one}, 2)


@pytest.mark.parametrize("N", [3, 4])
def test_displayed_relations_differ_from_forced_ones(N):
    q = root_of_unity(N)
    assert relations_from_covariance(2, q, "literal") != displayed_relations(2, q)
    assert relations_from_covariance(2, q, "column") != displayed_relations(2, q)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_column_orientation_is_consistent(N):
    q = root_of_unity(N)
    I = relations_from_covariance(2, q, "column")
    assert comultiplication_degree2_check(2, q, I)["ok"]
    res = coaction_checks(2, q, I, "column")
    assert res["b"] and res["c"]


@pytest.mark.parametrize("orientation", ["literal", "mixed"])
def test_mixed_orientations_do_not_commute_with_d(orientation):
    q = root_of_unity(3)
    res = coaction_checks(2, q, relations_from_covariance(2, q, orientation), orientation)
    assert res["b"] and not res["c"]


def test_displayed_relations_fail_comultiplication():
    q = root_of_unity(3)
    assert not comultiplication_degree2_check(2, q)["ok"]


def test_transposed_coaction_breaks_column_relations():
    q = root_of_unity(3)
    res = coaction_checks(2, q, relations_from_covariance(2, q, "column"), "transposed")
    assert not res["b"]


def test_dropping_a_relation_breaks_comultiplication():
    q = root_of_unity(3)
    vs = relations_from_covariance(2, q, "column").vectors
    for k in range(len(vs)):
        J = Subspace.span(16, vs[:k] + vs[k + 1:], q.field)
        assert not comultiplication_degree2_check(2, q, J)["ok"]
