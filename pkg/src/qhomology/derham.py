"""
Polynomial q-differential forms.

A form on n variables is a finite sum of terms  c * x^alpha * xi_J  where
alpha is an exponent tuple, J a strictly increasing tuple of 0-based
indices and xi_j stands for dx_j.  The x's commute with everything; the
xi's obey xi_j xi_j = 0 and xi_i xi_j = q xi_j xi_i for i > j, so putting
a product into normal order costs one factor q per inversion.

The exterior differential is d = sum_i xi_i * (d/dx_i) acting by left
multiplication; with q a primitive N-th root of unity, d^N = 0.
"""

from itertools import combinations, combinations_with_replacement

from .field import QQ, CycloScalar, _as_scalar


class QForm:
    """Immutable polynomial q-form.  terms: {(alpha, J): CycloScalar}."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n, field, terms=None):
        self.n = n
        self.field = field
        clean = {}
        for (alpha, J), c in (terms or {}).items():
            c = field(c)
            if c:
                clean[(tuple(alpha), tuple(J))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, field, terms):
        obj = cls.__new__(cls)
        obj.n, obj.field, obj.terms = n, field, terms
        return obj

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls, n, field=QQ):
        return cls._raw(n, field, {})

    @classmethod
    def const(cls, n, c, field=QQ):
        return cls(n, field, {((0,) * n, ()): c})

    @classmethod
    def monomial(cls, n, alpha=None, J=(), c=1, field=QQ):
        alpha = tuple(alpha) if alpha is not None else (0,) * n
        if len(alpha) != n:
            raise ValueError("exponent tuple must have length %d" % n)
        if list(J) != sorted(set(J)):
            raise ValueError("xi indices must be strictly increasing")
        return cls(n, field, {(alpha, tuple(J)): c})

    @classmethod
    def x(cls, n, i, field=QQ):
        alpha = [0] * n
        alpha[i] = 1
        return cls.monomial(n, alpha, (), 1, field)

    @classmethod
    def xi(cls, n, i, field=QQ):
        return cls.monomial(n, None, (i,), 1, field)

    # -- linear structure ----------------------------------------------
    def _check(self, other):
        if self.n != other.n:
            raise ValueError("forms on %d and %d variables" % (self.n, other.n))
        if self.field is not other.field:
            raise ValueError("forms over %r and %r" % (self.field, other.field))

    def __add__(self, other):
        if not isinstance(other, QForm):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QForm._raw(self.n, self.field, out)

    def __neg__(self):
        return QForm._raw(self.n, self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        if not c:
            return QForm.zero(self.n, self.field)
        return QForm._raw(self.n, self.field, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, CycloScalar)) or hasattr(c, "denominator"):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, QForm):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def to_field(self, field):
        return QForm._raw(self.n, field,
                          {k: field(c) for k, c in self.terms.items()})

    # -- gradings --------------------------------------------------------
    def form_degrees(self):
        return sorted({len(J) for (_, J) in self.terms})

    def form_degree(self):
        """The common xi-degree; raises on mixed forms (zero form -> 0)."""
        degs = self.form_degrees()
        if len(degs) > 1:
            raise ValueError("form is not homogeneous: degrees %s" % degs)
        return degs[0] if degs else 0

    def bidegrees(self):
        return sorted({(len(J), sum(a)) for (a, J) in self.terms})

    def homogeneous_part(self, k):
        return QForm._raw(self.n, self.field,
                          {key: c for key, c in self.terms.items() if len(key[1]) == k})

    def __repr__(self):
        return "QForm(%d, %s)" % (self.n, self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (alpha, J), c in sorted(self.terms.items()):
            mono = "*".join(("x%d^%d" % (i, e) if e > 1 else "x%d" % i)
                            for i, e in enumerate(alpha) if e)
            xs = "*".join("xi%d" % j for j in J)
            body = "*".join(s for s in (mono, xs) if s)
            coeff = str(c)
            if body:
                parts.append(("(%s)*%s" % (coeff, body)) if coeff != "1" else body)
            else:
                parts.append(coeff)
        return " + ".join(parts)


def _merge_xi(J, K):
    """(sign exponent, merged index tuple) for xi_J * xi_K, or None if zero."""
    if not J or not K:
        return 0, J + K
    if set(J) & set(K):
        return None
    inv = 0
    for j in J:
        for k in K:
            if j > k:
                inv += 1
    return inv, tuple(sorted(J + K))


def mul(a, b, q):
    """q-wedge product a * b."""
    a._check(b)
    q = a.field(_as_scalar(q)) if not isinstance(q, CycloScalar) else q
    if q.field is not a.field:
        raise ValueError("q lives in %r, forms in %r" % (q.field, a.field))
    powers = {}
    out = {}
    for (al, J), c in a.terms.items():
        for (be, K), e in b.terms.items():
            m = _merge_xi(J, K)
            if m is None:
                continue
            inv, L = m
            if inv not in powers:
                powers[inv] = q ** inv
            key = (tuple(x + y for x, y in zip(al, be)), L)
            v = c * e
            if inv:
                v = v * powers[inv]
            s = out.get(key)
            s = v if s is None else s + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return QForm._raw(a.n, a.field, out)


def derivation_x(i, w):
    """Ordinary partial derivative d/dx_i, applied to coefficients."""
    out = {}
    for (alpha, J), c in w.terms.items():
        e = alpha[i]
        if e:
            beta = alpha[:i] + (e - 1,) + alpha[i + 1:]
            key = (beta, J)
            s = out.get(key)
            v = c * e
            s = v if s is None else s + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return QForm._raw(w.n, w.field, out)


def left_xi(i, w, q):
    """Left multiplication xi_i * w."""
    return mul(QForm.xi(w.n, i, w.field), w, q)


def exterior_d(w, q):
    """d w = sum_i xi_i * dw/dx_i.  On f * xi_J the new index i is placed
    with one factor q per smaller index already in J."""
    if not isinstance(q, CycloScalar):
        q = w.field(q)
    n = w.n
    qpow = [q ** k for k in range(n + 1)]
    out = {}
    for (alpha, J), c in w.terms.items():
        for i in range(n):
            e = alpha[i]
            if not e or i in J:
                continue
            below = sum(1 for j in J if j < i)
            L = tuple(sorted(J + (i,)))
            beta = alpha[:i] + (e - 1,) + alpha[i + 1:]
            v = c * e
            if below:
                v = v * qpow[below]
            key = (beta, L)
            s = out.get(key)
            s = v if s is None else s + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return QForm._raw(n, w.field, out)


def d_power(w, q, k):
    for _ in range(k):
        w = exterior_d(w, q)
    return w


def q_derivation_xi(i, w, q):
    """Left q-derivation d/dxi_i: xi_j -> delta_ij, x's -> 0.  Passing the
    p smaller xi's in front of xi_i costs q^(-p), so that
    sum_i xi_i d/dxi_i acts as the xi-degree on homogeneous forms."""
    if not isinstance(q, CycloScalar):
        q = w.field(q)
    out = {}
    for (alpha, J), c in w.terms.items():
        if i not in J:
            continue
        p = J.index(i)
        v = c * q ** (-p) if p else c
        key = (alpha, J[:p] + J[p + 1:])
        s = out.get(key)
        s = v if s is None else s + v
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return QForm._raw(w.n, w.field, out)


def koszul_operator(w, q):
    """sum_i x_i d/dxi_i; its (N-1)-st power is the candidate homotopy S."""
    acc = QForm.zero(w.n, w.field)
    for i in range(w.n):
        acc = acc + mul(QForm.x(w.n, i, w.field), q_derivation_xi(i, w, q), q)
    return acc


# -- bases of the bigraded pieces -------------------------------------------

def exponent_tuples(n, degree):
    """Exponent vectors of total degree `degree`, x_0-heavy first."""
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        out.append(tuple(alpha))
    out.sort(reverse=True)
    return out


def basis(n, form_degree, poly_degree):
    """Monomial basis of Omega^i(j): xi-index tuples in lex order, then
    exponents with x_0 heaviest first."""
    if form_degree < 0 or poly_degree < 0 or form_degree > n:
        return []
    return [(alpha, J) for J in combinations(range(n), form_degree)
            for alpha in exponent_tuples(n, poly_degree)]


def random_form(rng, n, form_degree, max_poly_degree, field=QQ, density=0.5,
                coeff_range=3):
    """Random homogeneous form with small integer coefficients."""
    terms = {}
    for j in range(max_poly_degree + 1):
        for key in basis(n, form_degree, j):
            if rng.random() < density:
                c = rng.randint(-coeff_range, coeff_range)
                if c:
                    terms[key] = c
    return QForm(n, field, terms)


# -- identities as computable expressions -------------------------------------

def leibniz_rhs(u, v, q):
    """d(u) v + q^(deg u) u d(v) for homogeneous u."""
    q = _as_scalar(q)
    return mul(exterior_d(u, q), v, q) + mul(u, exterior_d(v, q), q).scale(q ** u.form_degree())


def d_power_product_rhs(u, v, N, q):
    """sum_p q^(ip) [N, p]_q d^p(u) d^(N-p)(v), with i = deg u."""
    from .field import q_binomial_row
    q = _as_scalar(q)
    i = u.form_degree()
    row = q_binomial_row(N, q)
    acc = QForm.zero(u.n, u.field)
    for p in range(N + 1):
        acc = acc + mul(d_power(u, q, p), d_power(v, q, N - p), q).scale(q ** (i * p) * row[p])
    return acc


def koszul_homotopy(w, q, N):
    """S^(N-1) with S = sum_i x_i d/dxi_i."""
    for _ in range(N - 1):
        w = koszul_operator(w, q)
    return w


# -- finite truncations -------------------------------------------------------

def truncate_to_ncomplex(n, q, total_degree, N=None):
    """The total-degree-m piece: Omega^i(m-i) sits in homological degree -i,
    so the differential d: Omega^i -> Omega^(i+1) lowers the index by one."""
    from .linalg import ExactMatrix
    from .ncomplex import NComplex
    q = _as_scalar(q)
    F = q.field
    m = total_degree
    if N is None:
        from .field import multiplicative_order
        N = multiplicative_order(q, bound=64) or (min(n, m) + 2)
    bases = {i: basis(n, i, m - i) for i in range(0, min(n, m) + 1)}
    dims = {-i: len(b) for i, b in bases.items()}
    diffs = {}
    for i, src in bases.items():
        if i + 1 not in bases or not src:
            continue
        index = {key: r for r, key in enumerate(bases[i + 1])}
        cols = []
        for key in src:
            col = [F.zero] * len(index)
            for k, c in exterior_d(QForm._raw(n, F, {key: F.one}), q).terms.items():
                col[index[k]] = c
            cols.append(col)
        diffs[-i] = ExactMatrix.from_columns(cols, len(index), F)
    return NComplex(N, dims, diffs, F)


def form_to_vector(w, i, m):
    """Coordinates of the (i, m-i) part of w in basis(n, i, m-i)."""
    return tuple(w.terms.get(key, w.field.zero) for key in basis(w.n, i, m - i))


def vector_to_form(n, i, m, v, field):
    return QForm(n, field, {key: c for key, c in zip(basis(n, i, m - i), v)})


# -- faces -------------------------------------------------------------------------

def face_operator(nu, w):
    """The nu-th face on forms of degree k (simplicial degree p = n-k-1):
    differentiate in the nu-th missing index and insert its xi in order."""
    out = QForm.zero(w.n, w.field)
    for (alpha, J), c in w.terms.items():
        missing = [i for i in range(w.n) if i not in J]
        if nu >= len(missing):
            raise ValueError("face index %d out of range for a %d-form" % (nu, len(J)))
        i = missing[nu]
        e = alpha[i]
        if not e:
            continue
        beta = alpha[:i] + (e - 1,) + alpha[i + 1:]
        out = out + QForm._raw(w.n, w.field, {(beta, tuple(sorted(J + (i,)))): c * e})
    return out


def simplicial_differential(w, q):
    """sum_nu q^nu d_nu over the faces."""
    q = _as_scalar(q)
    out = QForm.zero(w.n, w.field)
    for k in w.form_degrees():
        part = w.homogeneous_part(k)
        for nu in range(w.n - k):
            out = out + face_operator(nu, part).scale(q ** nu)
    return out


def index_twist(w, q, inverse=False):
    """xi_J -> q^(sum J) xi_J (0-based indices)."""
    q = _as_scalar(q)
    if inverse:
        q = q.inverse()
    return QForm._raw(w.n, w.field, {(a, J): c * q ** sum(J) for (a, J), c in w.terms.items()})


def twisted_exterior_d(w, q):
    """T o d_(1/q) o T^(-1); this is what the faces reassemble to."""
    q = _as_scalar(q)
    return index_twist(exterior_d(index_twist(w, q, inverse=True), q.inverse()), q)


def check_face_identities(n, max_poly_degree, field=QQ):
    """Exhaustive test of d_i d_j = d_(j-1) d_i (i < j) on monomial bases.
    Returns a list of violations (empty when all hold)."""
    bad = []
    for k in range(n + 1):
        p = n - k - 1
        if p < 1:
            continue
        for m in range(max_poly_degree + 1):
            for key in basis(n, k, m):
                w = QForm._raw(n, field, {key: field.one})
                for j in range(1, p + 1):
                    for i in range(j):
                        if face_operator(i, face_operator(j, w)) != face_operator(j - 1, face_operator(i, w)):
                            bad.append((key, i, j))
    return bad


# -- vanishing of homology -----------------------------------------------------------

def vanishing_checker(n, N, max_total_degree):
    """Compute pH^i for each total-degree truncation at q = zeta_N.

    Returns {"cells": [(m, p, i, dim), ...], "claimed_zero": [...], "violations":
    [...], "constants": dims at m = 0}.  claimed_zero lists the cells with
    i + p + 1 <= N, m >= 1; violations are those among them with dim > 0.
    """
    from .field import root_of_unity
    from .ncomplex import homology
    q = root_of_unity(N)
    cells, claimed, violations = [], [], []
    constants = {}
    for m in range(0, max_total_degree + 1):
        T = truncate_to_ncomplex(n, q, m, N)
        for p in range(1, N):
            for i in range(0, min(n, m) + 1):
                dim = homology(T, p, -i).dim
                cells.append((m, p, i, dim))
                if m == 0:
                    constants[(p, i)] = dim
                elif i + p + 1 <= N:
                    claimed.append((m, p, i, dim))
                    if dim:
                        violations.append((m, p, i, dim))
    return {"cells": cells, "claimed_zero": claimed, "violations": violations,
            "constants": constants}


def kernel_witness(n, N, m, p, i):
    """A form of degree i, total degree m, killed by d^p but not in the image
    of d^(N-p); None if that cell vanishes."""
    from .field import root_of_unity
    from .ncomplex import homology
    q = root_of_unity(N)
    T = truncate_to_ncomplex(n, q, m, N)
    H = homology(T, p, -i)
    if not H.dim:
        return None
    return vector_to_form(n, i, m, H.lift.column(0), q.field)
