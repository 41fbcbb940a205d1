"""
Quadratic relations for a coacting matrix of generators a_ij on the q-de Rham
algebra, checked in degree two.

The degree-2 part of the free algebra on the a_ij has basis a_ij a_kl,
ordered lexicographically in (i, j, k, l) (0-based).  A set of relations is
a Subspace of that n^4-dimensional space.

Two ways of letting the matrix act are supported:

* "literal":     x_i -> sum_j a_ij x_j   and  xi_i -> sum_j a_ji xi_j
* "column":      x_j -> sum_i a_ij x_i   and  xi_j -> sum_i a_ij xi_i
* "mixed":       x_j -> sum_i a_ij x_i   and  xi_i -> sum_j a_ij xi_j
* "transposed":  x_i -> sum_j a_ij x_j   and  xi_i -> sum_j a_ij xi_j

Only "column" and "transposed" send d(x_j) = xi_j to the same combination
as x_j, so only they can commute with d on generators.
"""

from itertools import product

from .field import _as_scalar
from .linalg import ExactMatrix, Subspace, kernel_basis


def deg2_index(n, i, j, k, l):
    return ((i * n + j) * n + k) * n + l


def deg2_label(n, idx):
    l = idx % n
    idx //= n
    k = idx % n
    idx //= n
    j = idx % n
    i = idx // n
    return (i, j, k, l)


def _vector(n, F, coeffs):
    v = [F.zero] * n ** 4
    for (i, j, k, l), c in coeffs.items():
        v[deg2_index(n, i, j, k, l)] = v[deg2_index(n, i, j, k, l)] + c
    return tuple(v)


def format_relation(n, v):
    parts = []
    for idx, c in enumerate(v):
        if c:
            i, j, k, l = deg2_label(n, idx)
            parts.append("(%s)*a%d%d*a%d%d" % (c, i + 1, j + 1, k + 1, l + 1))
    return " + ".join(parts) or "0"


# -- how a matrix substitution acts on the generators ---------------------------

def _action(orientation):
    """(x_gen, xi_gen): functions (s, t) -> generator index pair for the
    coefficient of y_s in the image of y_t."""
    if orientation == "literal":
        return (lambda s, t: (t, s)), (lambda s, t: (s, t))
    if orientation == "column":
        return (lambda s, t: (s, t)), (lambda s, t: (s, t))
    if orientation == "mixed":
        # x_j -> sum_i a_ij x_i, dx_i -> sum_j a_ij dx_j
        return (lambda s, t: (s, t)), (lambda s, t: (t, s))
    if orientation == "transposed":
        return (lambda s, t: (t, s)), (lambda s, t: (t, s))
    raise ValueError("unknown orientation %r" % orientation)


def _image_of_word(n, gen_s, gen_t, t, u):
    """Image of y_t y_u: {(s, v): {(i, j, k, l): 1}} for the word y_s y_v."""
    out = {}
    for s, v in product(range(n), repeat=2):
        out.setdefault((s, v), {})
        key = gen_s(s, t) + gen_t(v, u)
        out[(s, v)][key] = out[(s, v)].get(key, 0) + 1
    return out


def _reduce_x(words, F):
    """Commutative normal form: y_s y_v -> y_min y_max."""
    out = {}
    for (s, v), coeffs in words.items():
        key = (min(s, v), max(s, v))
        acc = out.setdefault(key, {})
        for g, c in coeffs.items():
            acc[g] = acc.get(g, F.zero) + c
    return out


def _reduce_xi(words, q):
    """Normal form under xi_s xi_s = 0, xi_s xi_v = q xi_v xi_s (s > v)."""
    F = q.field
    out = {}
    for (s, v), coeffs in words.items():
        if s == v:
            continue
        key, w = ((s, v), F.one) if s < v else ((v, s), q)
        acc = out.setdefault(key, {})
        for g, c in coeffs.items():
            acc[g] = acc.get(g, F.zero) + c * w
    return out


def _combine(a, b, scale_b, F):
    out = {}
    for src, w in ((a, F.one), (b, scale_b)):
        for key, coeffs in src.items():
            acc = out.setdefault(key, {})
            for g, c in coeffs.items():
                acc[g] = acc.get(g, F.zero) + c * w
    return out


def omega_relation_images(n, q, orientation):
    """Images of the degree-2 relations of the forms algebra, reduced to
    normal words: {relation name: [coefficient dict per normal word]}."""
    q = _as_scalar(q)
    F = q.field
    gx, gxi = _action(orientation)
    out = {"x": [], "xi": []}
    for t, u in product(range(n), repeat=2):
        if t < u:
            a = _reduce_x(_image_of_word(n, gx, gx, t, u), F)
            b = _reduce_x(_image_of_word(n, gx, gx, u, t), F)
            out["x"].extend(_combine(a, b, -F.one, F).values())
        if t > u:
            a = _reduce_xi(_image_of_word(n, gxi, gxi, t, u), q)
            b = _reduce_xi(_image_of_word(n, gxi, gxi, u, t), q)
            out["xi"].extend(_combine(a, b, -q, F).values())
        if t == u:
            out["xi"].extend(_reduce_xi(_image_of_word(n, gxi, gxi, t, t), q).values())
    return out


def relations_from_covariance(n, q, orientation="literal"):
    """Span of all coefficient relations forced by requiring the substituted
    x's to commute and the substituted xi's to obey the q-exterior rules."""
    q = _as_scalar(q)
    imgs = omega_relation_images(n, q, orientation)
    vecs = [_vector(n, q.field, c) for c in imgs["x"] + imgs["xi"]]
    return Subspace.span(n ** 4, vecs, q.field)


def displayed_relations(n, q, column_order="lt", families=("row", "column", "diag", "cross")):
    """The displayed quadratic relations:
    row:    a_ij a_ik = a_ik a_ij
    column: a_ij a_kj = q a_kj a_ij     (i < k, or i > k with column_order="gt")
    diag:   a_ii a_jj - a_jj a_ii = a_ji a_ij - a_ij a_ji          (i < j)
    cross:  a_ji a_ij - a_ij a_ji = q^-1 a_ij a_ji - q a_ji a_ij   (i < j)
    """
    q = _as_scalar(q)
    F = q.field
    one = F.one
    vecs = []
    for i, j, k in product(range(n), repeat=3):
        if "row" in families and j < k:
            vecs.append({(i, j, i, k): one, (i, k, i, j): -one})
        if "column" in families and ((i < k) if column_order == "lt" else (i > k)):
            vecs.append({(i, j, k, j): one, (k, j, i, j): -q})
    for i, j in product(range(n), repeat=2):
        if i < j:
            if "diag" in families:
                vecs.append({(i, i, j, j): one, (j, j, i, i): -one,
                             (j, i, i, j): -one, (i, j, j, i): one})
            if "cross" in families:
                vecs.append({(j, i, i, j): one + q, (i, j, j, i): -one - q.inverse()})
    return Subspace.span(n ** 4, [_vector(n, F, v) for v in vecs], F)


# -- ideal membership ------------------------------------------------------------

def quotient_map(I):
    """P with ker P = I (rows: a basis of the annihilator of I)."""
    F = I.field
    if not I.dim:
        return ExactMatrix.identity(I.ambient_dim, F)
    rows = ExactMatrix.from_rows([list(v) for v in I.vectors], F, I.ambient_dim)
    ann = kernel_basis(rows).vectors
    return ExactMatrix.from_rows([list(v) for v in ann], F, I.ambient_dim)


def in_ideal(I, coeffs, n):
    P = quotient_map(I)
    return not any(P.apply(_vector(n, I.field, coeffs)))


def comultiplication_image(n, r, F):
    """Delta(r) as an n^4 x n^4 matrix V with V[left, right] the coefficient
    of left (x) right, under Delta(a_ij) = sum_m a_im (x) a_mj."""
    rows = [[F.zero] * n ** 4 for _ in range(n ** 4)]
    for idx, c in enumerate(r):
        if not c:
            continue
        i, j, k, l = deg2_label(n, idx)
        for m, p in product(range(n), repeat=2):
            a = deg2_index(n, i, m, k, p)
            b = deg2_index(n, m, j, p, l)
            rows[a][b] = rows[a][b] + c
    return ExactMatrix.from_rows(rows, F, n ** 4)


def comultiplication_degree2_check(n, q, relations=None):
    """Delta(I) lies in I (x) F2 + F2 (x) I, tested as P V P^T = 0."""
    q = _as_scalar(q)
    I = relations if relations is not None else displayed_relations(n, q)
    P = quotient_map(I)
    Pt = P.transpose()
    failures = []
    for r in I.vectors:
        if not (P @ comultiplication_image(n, r, q.field) @ Pt).is_zero():
            failures.append(r)
    return {"ok": not failures, "failures": failures}


def coaction_checks(n, q, relations=None, orientation="mixed"):
    """(b) the images of the forms-algebra relations lie in I (x) words;
    (c) the coaction commutes with d on the generators x_j."""
    q = _as_scalar(q)
    F = q.field
    I = relations if relations is not None else displayed_relations(n, q)
    P = quotient_map(I)
    imgs = omega_relation_images(n, q, orientation)
    bad_b = [c for c in imgs["x"] + imgs["xi"] if any(P.apply(_vector(n, F, c)))]
    gx, gxi = _action(orientation)
    bad_c = []
    for t in range(n):
        # alpha(d x_t) = alpha(xi_t) versus (1 (x) d) alpha(x_t)
        lhs = {s: gxi(s, t) for s in range(n)}
        rhs = {s: gx(s, t) for s in range(n)}
        if lhs != rhs:
            bad_c.append(t)
    return {"b": not bad_b, "c": not bad_c, "b_failures": bad_b, "c_failures": bad_c}


def mixed_commutation_check(n, q, relations=None, orientation="mixed"):
    """Whether the coaction respects x_s xi_t = xi_t x_s; this needs
    a_X a_Y = a_Y a_X modulo I for every pair used by the two actions."""
    q = _as_scalar(q)
    F = q.field
    I = relations if relations is not None else displayed_relations(n, q)
    P = quotient_map(I)
    gx, gxi = _action(orientation)
    bad = []
    for t, u in product(range(n), repeat=2):
        for s, v in product(range(n), repeat=2):
            X, Y = gx(s, t), gxi(v, u)
            c = {X + Y: F.one}
            c[Y + X] = c.get(Y + X, F.zero) - F.one
            if any(P.apply(_vector(n, F, c))):
                bad.append((X, Y))
    return {"ok": not bad, "failures": bad}
