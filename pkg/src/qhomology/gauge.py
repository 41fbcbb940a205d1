"""
q-connections nabla = d + A on a trivial rank-r bundle with polynomial
coefficients, their N-curvature, gauge transformations, Chern forms and the
N = 3 Chern-Simons density.
"""

import random as _random

from .derham import QForm, exterior_d, d_power, mul, random_form, derivation_x
from .field import _as_scalar, multiplicative_order, q_binomial_row
from .linalg import ExactMatrix, inverse


class NotOrderZero(ArithmeticError):
    """nabla^N(f s) differs from f nabla^N(s) for a probe f."""

    def __init__(self, probe, column, lhs, rhs):
        self.probe, self.column, self.lhs, self.rhs = probe, column, lhs, rhs
        super().__init__("nabla^N is not multiplication by a matrix: probe %s, column %d"
                         % (probe, column))


class MatrixForm:
    """r x r matrix of QForms over a common field and variable count."""

    __slots__ = ("r", "n", "field", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)
        self.r = len(self.entries)
        if any(len(row) != self.r for row in self.entries):
            raise ValueError("matrix form must be square")
        first = self.entries[0][0]
        self.n, self.field = first.n, first.field
        for row in self.entries:
            for e in row:
                if e.n != self.n or e.field is not self.field:
                    raise ValueError("entries disagree on variables or field")

    @classmethod
    def zero(cls, r, n, field):
        z = QForm.zero(n, field)
        return cls([[z] * r for _ in range(r)])

    @classmethod
    def identity(cls, r, n, field):
        return cls.scalar(r, QForm.const(n, 1, field))

    @classmethod
    def scalar(cls, r, w):
        z = QForm.zero(w.n, w.field)
        return cls([[w if i == j else z for j in range(r)] for i in range(r)])

    @classmethod
    def constant(cls, m, n):
        """Embed an ExactMatrix as a matrix of constant 0-forms."""
        return cls([[QForm.const(n, m[i, j], m.field) for j in range(m.cols)]
                    for i in range(m.rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def map(self, fn):
        return MatrixForm([[fn(e) for e in row] for row in self.entries])

    def __add__(self, other):
        return MatrixForm([[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return MatrixForm([[a - b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, c):
        return self.map(lambda e: e.scale(c))

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, MatrixForm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def form_degrees(self):
        return sorted({k for row in self.entries for e in row for k in e.form_degrees()})

    def trace(self):
        acc = QForm.zero(self.n, self.field)
        for i in range(self.r):
            acc = acc + self.entries[i][i]
        return acc

    def column(self, j):
        return VectorForm([row[j] for row in self.entries])

    @classmethod
    def from_columns(cls, cols):
        r = len(cols)
        return cls([[cols[j][i] for j in range(r)] for i in range(r)])

    def __repr__(self):
        return "MatrixForm(%s)" % [[str(e) for e in row] for row in self.entries]


class VectorForm:
    __slots__ = ("entries", "n", "field")

    def __init__(self, entries):
        self.entries = tuple(entries)
        self.n, self.field = self.entries[0].n, self.entries[0].field

    @classmethod
    def basis(cls, r, j, n, field):
        z = QForm.zero(n, field)
        return cls([QForm.const(n, 1, field) if i == j else z for i in range(r)])

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __add__(self, other):
        return VectorForm([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return VectorForm([a - b for a, b in zip(self.entries, other.entries)])

    def scale(self, c):
        return VectorForm([e.scale(c) for e in self.entries])

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, VectorForm):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "VectorForm(%s)" % [str(e) for e in self.entries]


def mat_mul(a, b, q):
    r = a.r
    rows = []
    for i in range(r):
        row = []
        for k in range(r):
            acc = QForm.zero(a.n, a.field)
            for j in range(r):
                acc = acc + mul(a[i, j], b[j, k], q)
            row.append(acc)
        rows.append(row)
    return MatrixForm(rows)


def mat_apply(a, s, q):
    out = []
    for i in range(a.r):
        acc = QForm.zero(a.n, a.field)
        for j in range(a.r):
            acc = acc + mul(a[i, j], s[j], q)
        out.append(acc)
    return VectorForm(out)


def scalar_times(w, s, q):
    return VectorForm([mul(w, e, q) for e in s.entries])


def mat_d(a, q):
    return a.map(lambda e: exterior_d(e, q))


def vec_d(s, q):
    return VectorForm([exterior_d(e, q) for e in s.entries])


# -- connections ------------------------------------------------------------------

class QConnection:
    """nabla = d + A with A a matrix of 1-forms; q should have order N."""

    def __init__(self, A, q, N=None):
        q = _as_scalar(q)
        if A.field is not q.field:
            A = A.map(lambda e: e.to_field(q.field))
        if any(k != 1 for k in A.form_degrees()):
            raise ValueError("connection form must have form degree 1")
        order = multiplicative_order(q, bound=64)
        if N is None:
            N = order
        if N is None or order != N:
            raise ValueError("q must be a primitive %s-th root of unity" % N)
        self.A, self.q, self.N = A, q, N

    @property
    def r(self):
        return self.A.r

    @property
    def n(self):
        return self.A.n

    @property
    def field(self):
        return self.A.field


def nabla_apply(conn, s):
    return vec_d(s, conn.q) + mat_apply(conn.A, s, conn.q)


def nabla_power(conn, s, k):
    for _ in range(k):
        s = nabla_apply(conn, s)
    return s


def default_probes(n, field):
    """x_i, x_i x_j and x_i^2 for the variable pairs (0-based)."""
    probes = []
    for i in range(n):
        probes.append(QForm.x(n, i, field))
        a = [0] * n
        a[i] = 2
        probes.append(QForm.monomial(n, a, (), 1, field))
        for j in range(i + 1, n):
            b = [0] * n
            b[i] = b[j] = 1
            probes.append(QForm.monomial(n, b, (), 1, field))
    return probes


def order_zero_defects(conn, probes=None):
    """[(probe, column, nabla^N(f e_j), f nabla^N(e_j))] where they differ."""
    q, N = conn.q, conn.N
    probes = probes if probes is not None else default_probes(conn.n, conn.field)
    out = []
    for j in range(conn.r):
        e = VectorForm.basis(conn.r, j, conn.n, conn.field)
        base = nabla_power(conn, e, N)
        for f in probes:
            lhs = nabla_power(conn, scalar_times(f, e, q), N)
            rhs = scalar_times(f, base, q)
            if lhs != rhs:
                out.append((f, j, lhs, rhs))
    return out


def curvature(conn, verify=True, probes=None):
    """The matrix whose j-th column is nabla^N(e_j).  With verify=True the
    order-0 property is checked on probe polynomials and NotOrderZero is
    raised when it fails."""
    cols = [nabla_power(conn, VectorForm.basis(conn.r, j, conn.n, conn.field), conn.N)
            for j in range(conn.r)]
    if verify:
        bad = order_zero_defects(conn, probes)
        if bad:
            raise NotOrderZero(*bad[0])
    return MatrixForm.from_columns(cols)


def binomial_expand(conn, f, s, n_power):
    """Candidate expansion of nabla^n(f s): sum_k [n, k]_q (d^k f) . (nabla^(n-k) s)."""
    q = conn.q
    row = q_binomial_row(n_power, q)
    acc = VectorForm([QForm.zero(conn.n, conn.field)] * conn.r)
    for k in range(n_power + 1):
        acc = acc + scalar_times(d_power(f, q, k), nabla_power(conn, s, n_power - k), q).scale(row[k])
    return acc


def connection_leibniz_rhs(conn, w, s):
    """Candidate value of nabla(w s): (d w) s + q^(deg w) w nabla(s)."""
    q = conn.q
    return scalar_times(exterior_d(w, q), s, q) + \
        scalar_times(w, nabla_apply(conn, s), q).scale(q ** w.form_degree())


def curvature_formula_n3(conn, eps_factor=None):
    """d^2 A + dA.A + c A.dA + A.A.A with c = q (or eps_factor when given)."""
    if conn.N != 3:
        raise ValueError("the closed formula is for N = 3")
    q, A = conn.q, conn.A
    c = q if eps_factor is None else eps_factor
    dA = mat_d(A, q)
    return (mat_d(dA, q) + mat_mul(dA, A, q) + mat_mul(A, dA, q).scale(c)
            + mat_mul(mat_mul(A, A, q), A, q))


def operator_cube_n3(conn):
    """d^2 A + d(A.A) + A.dA + A.A.A, the literal expansion of (d + A)^3 e_j."""
    q, A = conn.q, conn.A
    dA = mat_d(A, q)
    AA = mat_mul(A, A, q)
    return mat_d(dA, q) + mat_d(AA, q) + mat_mul(A, dA, q) + mat_mul(AA, A, q)


# -- gauge transformations ------------------------------------------------------------

def is_unipotent(g):
    """Identity plus strictly upper triangular polynomial part."""
    one = QForm.const(g.n, 1, g.field)
    for i in range(g.r):
        for j in range(g.r):
            e = g[i, j]
            if i == j and e != one:
                return False
            if i > j and not e.is_zero():
                return False
    return all(k == 0 for k in g.form_degrees())


def gauge_inverse(g, q):
    """Exact inverse for constant invertible or unipotent g."""
    if any(k != 0 for k in g.form_degrees()):
        raise ValueError("gauge transformations are matrices of functions")
    consts = all(all(sum(a) == 0 for (a, _) in e.terms) for row in g.entries for e in row)
    if consts:
        m = ExactMatrix.from_rows([[e.terms.get(((0,) * g.n, ()), g.field.zero)
                                    for e in row] for row in g.entries], g.field, g.r)
        return MatrixForm.constant(inverse(m), g.n)
    if not is_unipotent(g):
        raise ValueError("only constant or unipotent gauge transformations are supported")
    I = MatrixForm.identity(g.r, g.n, g.field)
    nil = I - g
    acc, term = I, I
    for _ in range(g.r - 1):
        term = mat_mul(term, nil, q)
        acc = acc + term
    return acc


def gauge_transform(conn, g):
    """A -> g^-1 dg + g^-1 A g."""
    q = conn.q
    g = g if g.field is conn.field else g.map(lambda e: e.to_field(conn.field))
    gi = gauge_inverse(g, q)
    A2 = mat_mul(gi, mat_d(g, q), q) + mat_mul(mat_mul(gi, conn.A, q), g, q)
    return QConnection(A2, q, conn.N)


def random_unipotent(rng, r, n, field, max_degree=1, coeff_range=2):
    one = QForm.const(n, 1, field)
    z = QForm.zero(n, field)
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            if i == j:
                row.append(one)
            elif j > i:
                row.append(random_form(rng, n, 0, max_degree, field, 0.6, coeff_range))
            else:
                row.append(z)
        rows.append(row)
    return MatrixForm(rows)


def random_constant_gauge(rng, r, n, field, entry=2):
    from .ncomplex import random_invertible
    return MatrixForm.constant(random_invertible(rng, r, field, entry), n)


def covariance_defect(conn, g):
    """F(g^-1 nabla g) - g^-1 F(nabla) g (curvatures taken columnwise)."""
    q = conn.q
    g = g if g.field is conn.field else g.map(lambda e: e.to_field(conn.field))
    F = curvature(conn, verify=False)
    F2 = curvature(gauge_transform(conn, g), verify=False)
    return F2 - mat_mul(mat_mul(gauge_inverse(g, q), F, q), g, q)


# -- Bianchi, Chern, Chern-Simons ------------------------------------------------------

def bianchi_form(conn, F=None):
    q = conn.q
    F = F if F is not None else curvature(conn, verify=False)
    return mat_d(F, q) + mat_mul(conn.A, F, q) - mat_mul(F, conn.A, q)


def bianchi_check(conn):
    return bianchi_form(conn).is_zero()


def chern_form(conn, p, F=None):
    """tr(F^p)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    q = conn.q
    F = F if F is not None else curvature(conn, verify=False)
    P = F
    for _ in range(p - 1):
        P = mat_mul(P, F, q)
    return P.trace()


def chern_closed(conn, p, F=None):
    return exterior_d(chern_form(conn, p, F), conn.q).is_zero()


def cs_density(A, q):
    """tr(dA.A + q A.dA + A.A.A)."""
    q = _as_scalar(q)
    if A.n != 3:
        raise ValueError("the Chern-Simons density is defined on 3 variables")
    dA = mat_d(A, q)
    return (mat_mul(dA, A, q) + mat_mul(A, dA, q).scale(q)
            + mat_mul(mat_mul(A, A, q), A, q)).trace()


def component(w, i):
    """The coefficient function of xi_i in a 1-form, as a 0-form."""
    return QForm(w.n, w.field, {(a, ()): c for (a, J), c in w.terms.items() if J == (i,)})


def second_partials_formula(w, q, factor=1):
    """factor * (d1 d2 w3 + q d1 d3 w2 + q^2 d2 d3 w1) xi1 xi2 xi3 for a
    scalar 1-form w on 3 variables (derivatives in 0-based indices)."""
    q = _as_scalar(q)
    if w.n != 3:
        raise ValueError("three variables required")
    dx = derivation_x
    f = (dx(0, dx(1, component(w, 2))) + dx(0, dx(2, component(w, 1))).scale(q)
         + dx(1, dx(2, component(w, 0))).scale(q * q))
    out = QForm(3, w.field, {(a, (0, 1, 2)): c for (a, _), c in f.terms.items()})
    return out.scale(factor)


def divergence_identity_check(A, q, factor=1):
    """tr(d^2 A) against the pure-second-partials expression.  With factor=1
    this is the displayed expression; the iterated differential carries an
    extra 1 + q, so factor=1+q is the variant that holds."""
    q = _as_scalar(q)
    lhs = d_power(A.trace(), q, 2)
    return lhs == second_partials_formula(A.trace(), q, factor)


def random_connection(seed, N, r=2, n=3, max_degree=1, density=0.5, coeff_range=2, q=None):
    from .field import root_of_unity
    q = q if q is not None else root_of_unity(N)
    rng = _random.Random(seed)
    F = q.field
    A = MatrixForm([[random_form(rng, n, 1, max_degree, F, density, coeff_range)
                     for _ in range(r)] for _ in range(r)])
    return QConnection(A, q, N)
