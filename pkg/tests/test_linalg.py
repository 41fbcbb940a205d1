import pytest
import sympy
from hypothesis import given, strategies as st

from qhomology.field import QQ, make_field, root_of_unity
from qhomology.linalg import (ContainmentError, Echelon, ExactMatrix, ShapeMismatch, Subspace,
                              WellDefinednessError, image_basis, induced_map, inverse,
                              kernel_basis, kron, rank, solve, subquotient)

from strategies import ORDERS, matrices


def multiplication_block(a):
    """Matrix over Q of y -> a*y on Q(zeta_M) in the power basis."""
    F = a.field
    basis = [F.from_coords([1 if j == k else 0 for j in range(F.degree)]) for k in range(F.degree)]
    return sympy.Matrix(F.degree, F.degree,
                        lambda i, k: sympy.Rational((a * basis[k]).coords[i].numerator,
                                                    (a * basis[k]).coords[i].denominator))


def restrict_scalars(m):
    """The (rows*d) x (cols*d) rational matrix of m; its rank is d * rank(m)."""
    d = m.field.degree
    out = sympy.zeros(m.rows * d, m.cols * d)
    for i in range(m.rows):
        for j in range(m.cols):
            out[i * d:(i + 1) * d, j * d:(j + 1) * d] = multiplication_block(m[i, j])
    return out


def fields():
    return st.sampled_from(ORDERS).map(make_field)


# -- rank ---------------------------------------------------------------------------

def test_rank_examples():
    assert rank(ExactMatrix.identity(3)) == 3
    assert rank(ExactMatrix.zeros(2, 5)) == 0
    z = root_of_unity(3)
    F = z.field
    assert rank(ExactMatrix.from_rows([[F.one, z], [z, z * z]], F)) == 1


@given(fields().flatmap(lambda F: matrices(F)))
def test_rank_matches_restriction_of_scalars(m):
    d = m.field.degree
    if m.rows and m.cols:
        assert restrict_scalars(m).rank() == d * rank(m)
    else:
        assert rank(m) == 0


@given(matrices(QQ, 5, 5))
def test_rank_over_q_matches_sympy(m):
    sm = sympy.Matrix(m.rows, m.cols, lambda i, j: int(m[i, j].coords[0]))
    assert rank(m) == sm.rank()


@given(fields().flatmap(lambda F: matrices(F)))
def test_echelon_transform(m):
    e = Echelon(m)
    assert e.transform @ m == e.reduced
    assert rank(e.transform) == m.rows


# -- kernel, image, solve -----------------------------------------------------------------

def test_kernel_examples():
    assert kernel_basis(ExactMatrix.identity(3)).dim == 0
    assert kernel_basis(ExactMatrix.zeros(2, 2)).dim == 2
    K = kernel_basis(ExactMatrix.from_rows([[1, 1]], QQ))
    assert K == Subspace.span(2, [(QQ(1), QQ(-1))])


def test_kernel_over_cyclotomic_example():
    z = root_of_unity(3)
    F = z.field
    m = ExactMatrix.from_rows([[F.one, z], [z, z * z]], F)
    K = kernel_basis(m)
    assert K.dim == 1
    assert K == Subspace.span(2, [(-z, F.one)], F)


@given(fields().flatmap(lambda F: matrices(F)))
def test_rank_nullity(m):
    K = kernel_basis(m)
    assert K.dim + rank(m) == m.cols
    for v in K.vectors:
        assert not any(m.apply(v))
    assert image_basis(m).dim == rank(m)


def test_solve_examples():
    v = (QQ(2), QQ(-1), QQ(5))
    assert solve(ExactMatrix.identity(3), v) == v
    assert solve(ExactMatrix.zeros(2, 2), (QQ(1), QQ(0))) is None
    m = ExactMatrix.from_rows([[1, 1]], QQ)
    x = solve(m, (QQ(2),))
    assert m.apply(x) == (QQ(2),)


@given(fields().flatmap(lambda F: st.tuples(matrices(F), st.lists(st.integers(-3, 3), min_size=4, max_size=4))))
def test_solve_in_image_always_succeeds(data):
    m, coeffs = data
    F = m.field
    x0 = tuple(F(c) for c in coeffs[:m.cols])
    b = m.apply(x0)
    x = solve(m, b)
    assert x is not None and m.apply(x) == b


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        ExactMatrix.identity(2) @ ExactMatrix.identity(3)
    with pytest.raises(ShapeMismatch):
        solve(ExactMatrix.identity(2), (QQ(1),))
    with pytest.raises(ZeroDivisionError):
        inverse(ExactMatrix.zeros(2, 2))


@given(fields().flatmap(lambda F: matrices(F, 3, 3)))
def test_inverse(m):
    if m.rows != m.cols:
        return
    if rank(m) < m.rows:
        with pytest.raises(ZeroDivisionError):
            inverse(m)
    else:
        assert inverse(m) @ m == ExactMatrix.identity(m.rows, m.field)


def test_kron_shape_and_entries():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]], QQ)
    b = ExactMatrix.from_rows([[0, 5]], QQ)
    k = kron(a, b)
    assert k.shape == (2, 4)
    assert k[1, 3] == 20 and k[0, 1] == 5


# -- subquotients --------------------------------------------------------------------------

def _e(i, n=2):
    return tuple(QQ(1 if j == i else 0) for j in range(n))


def test_subquotient_examples():
    full = Subspace.span(2, [_e(0), _e(1)])
    zero = Subspace.span(2, [])
    assert subquotient(full, full).dim == 0
    assert subquotient(full, zero).dim == 2
    H = subquotient(full, Subspace.span(2, [_e(0)]))
    assert H.dim == 1
    assert H.class_of(_e(0)) == (QQ(0),)
    with pytest.raises(ContainmentError):
        subquotient(Subspace.span(2, [_e(0)]), Subspace.span(2, [_e(1)]))


def test_induced_map_identity_and_zero():
    full = Subspace.span(2, [_e(0), _e(1)])
    H = subquotient(full, Subspace.span(2, [_e(0)]))
    assert induced_map(ExactMatrix.identity(2), H, H) == ExactMatrix.identity(1)
    assert induced_map(ExactMatrix.zeros(2, 2), H, H).is_zero()


def test_induced_map_not_well_defined():
    full = Subspace.span(2, [_e(0), _e(1)])
    H = subquotient(full, Subspace.span(2, [_e(0)]))
    swap = ExactMatrix.from_rows([[0, 1], [1, 0]], QQ)
    with pytest.raises(WellDefinednessError):
        induced_map(swap, H, H)


@given(fields().flatmap(lambda F: matrices(F, 4, 4)))
def test_subquotient_dimension(m):
    # Ker(m) / (Ker(m) intersected with nothing) and Im / Im(m m) style check:
    # dim (span(all) / Im m) = n - rank when m is square
    if m.rows != m.cols:
        return
    n = m.rows
    F = m.field
    full = Subspace.span(n, [tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)], F)
    assert subquotient(full, image_basis(m)).dim == n - rank(m)
