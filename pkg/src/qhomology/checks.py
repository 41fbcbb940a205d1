"""
Single-instance checks.  Every check takes JSON-serializable keyword
parameters and returns (passed, detail); (check id, params) is therefore a
complete witness, and `replay` re-runs it.
"""

import random as _random
from fractions import Fraction
from itertools import permutations

from . import deltaset as ds
from . import derham as dr
from . import gauge as gg
from . import homops as ho
from . import ncomplex as nc
from . import quantum as qs
from .field import QQ, make_field, q_binomial, q_factorial, root_of_unity
from .linalg import ExactMatrix, Subspace, kernel_basis, rank

# -- parameters ---------------------------------------------------------------------


def parse_q(spec):
    """'zeta5' -> primitive 5th root in Q(zeta_5); '2', '-1/3' -> rationals."""
    if isinstance(spec, str) and spec.startswith("zeta"):
        return root_of_unity(int(spec[4:]))
    return QQ(Fraction(spec))


def q_label(q):
    return str(q)


def _small_profile(N):
    return {"degrees": (0, N), "max_chains": 2, "max_dim": 1, "entry": 2}


def _pair(N, seed, field):
    rng = _random.Random(seed)
    prof = _small_profile(N)
    return (nc.random_ncomplex(N, prof, rng.randrange(1 << 30), field),
            nc.random_ncomplex(N, prof, rng.randrange(1 << 30), field))


CHECKS = {}


def check(name):
    def deco(fn):
        CHECKS[name] = fn
        return fn
    return deco


def run_check(name, params):
    if name not in CHECKS:
        raise KeyError("unknown check %r" % (name,))
    try:
        passed, detail = CHECKS[name](**params)
    except Exception as e:  # a crash inside a check is a failure with its message
        passed, detail = False, {"error": "%s: %s" % (type(e).__name__, e)}
    return bool(passed), detail


def replay(witness):
    return run_check(witness["check"], witness["params"])


# -- q-combinatorics ------------------------------------------------------------------

@check("qcomb.root_vanishing")
def _root_vanishing(N):
    q = root_of_unity(N)
    bad = []
    if q_factorial(N, q):
        bad.append("[%d!]" % N)
    bad += ["[%d choose %d]" % (N, k) for k in range(1, N) if q_binomial(N, k, q)]
    return not bad, {"nonzero": bad}


def _inversions(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


@check("qcomb.factorial_inversions")
def _factorial_inversions(n, q):
    q = parse_q(q)
    oracle = q.field.zero
    for w in permutations(range(n)):
        oracle = oracle + q ** _inversions(w)
    value = q_factorial(n, q)
    return value == oracle, {"q_factorial": str(value), "permutation_sum": str(oracle)}


# -- Delta-sets -------------------------------------------------------------------------

def _delta(spec):
    kind, _, arg = spec.partition(":")
    if kind == "builtin":
        return ds.builtin(arg)
    if kind == "random":
        return ds.random_delta_set(int(arg))
    raise ValueError("unknown Delta-set spec %r" % spec)


@check("simplicial.n_complex")
def _simplicial_n_complex(deltaset, N):
    x = _delta(deltaset)
    try:
        ds.chain_ncomplex(x, root_of_unity(N), N)
    except nc.NotNilpotent as e:
        return False, {"window": list(e.window)}
    return True, {}


@check("simplicial.power_formula")
def _simplicial_power_formula(deltaset, q, max_power=4):
    x = _delta(deltaset)
    q = parse_q(q)
    for n, cells in sorted(x.cells.items()):
        for cell in cells:
            for k in range(min(n, max_power) + 1):
                a = ds.dq_power(x, cell, k, q)
                b = ds.dq_power_oracle(x, cell, k, q)
                if a != b:
                    return False, {"cell": cell, "power": k,
                                   "iterated": {c: str(v) for c, v in a.items()},
                                   "formula": {c: str(v) for c, v in b.items()}}
    return True, {}


# -- N-complexes ----------------------------------------------------------------------------

def _instance(N, seed, profile, exact=False):
    # integer entries: homology dimensions do not depend on the field
    gen = nc.random_exact if exact else nc.random_ncomplex
    return gen(N, profile, seed, QQ)


@check("ncomplex.total_order")
def _total_order(N, seed, profile="small"):
    c = _instance(N, seed, profile)
    try:
        T = nc.total_homology(c)
    except nc.NotNilpotent as e:
        return False, {"window": list(e.window)}
    return True, {"dims": {str(m): k for m, k in sorted(T.complex.dims.items())}}


@check("ncomplex.total_exact")
def _total_exact(seed, profile="small", N=3):
    c = _instance(N, seed, profile)
    T = nc.total_homology(c)
    return nc.is_exact_2complex(T.complex), {"dims": {str(m): k for m, k in sorted(T.complex.dims.items())}}


@check("ncomplex.diagram_commutes")
def _diagram_commutes(N, seed, profile="small"):
    D = nc.homology_diagram(_instance(N, seed, profile))
    for (p, i), dm in D.d_star.items():
        if (p - 1, i - 1) in D.i_star and (p + 1, i) in D.d_star and (p, i) in D.i_star:
            left = D.i_star[(p - 1, i - 1)] @ dm
            right = D.d_star[(p + 1, i)] @ D.i_star[(p, i)]
            if left != right:
                return False, {"cell": [p, i]}
    return True, {}


def _random_low_rank(rng, rows, cols, field=QQ):
    k = rng.randint(0, min(rows, cols))
    a = ExactMatrix.from_rows([[rng.randint(-2, 2) for _ in range(k)] for _ in range(rows)], field, k)
    b = ExactMatrix.from_rows([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(k)], field, cols)
    return a @ b


def random_map_pair(seed):
    rng = _random.Random(seed)
    x, y, z = (rng.randint(0, 3) for _ in range(3))
    return _random_low_rank(rng, y, x), _random_low_rank(rng, z, y)


@check("ncomplex.two_term")
def _two_term(seed):
    f, _ = random_map_pair(seed)
    T = nc.total_homology(nc.two_term(f))
    r = rank(f)
    expect = {(1, 1): f.cols - r, (2, 1): f.cols, (1, 0): f.rows, (2, 0): f.rows - r}
    got = {k: T.diagram.dim(*k) for k in expect}
    ok = got == expect and nc.is_exact_2complex(T.complex)
    return ok, {"expected": {str(k): v for k, v in expect.items()},
                "computed": {str(k): v for k, v in got.items()}}


@check("ncomplex.six_term")
def _six_term(seed):
    f, g = random_map_pair(seed)
    gf = g @ f
    rf, rg, rgf = rank(f), rank(g), rank(gf)
    expect = (f.cols - rf, gf.cols - rgf, g.cols - rg, f.rows - rf, gf.rows - rgf, g.rows - rg)
    T = nc.six_term(f, g)
    got = nc.six_term_dims(T)
    ok = got == expect and nc.is_exact_2complex(T.complex)
    return ok, {"expected": list(expect), "computed": list(got)}


@check("ncomplex.levels_nonzero")
def _levels_nonzero(N, seed, profile="small", exact=False):
    c = _instance(N, seed, profile, exact)
    dims = nc.homology_dims(c)
    nonzero = {p for (p, i), d in dims.items() if d and p < N}
    if not nonzero:
        return True, {"exact": True}
    missing = [p for p in range(1, N) if p not in nonzero]
    return not missing, {"levels_without_homology": missing}


@check("ncomplex.poincare_exact")
def _poincare_exact(N, seed, profile="small"):
    c = _instance(N, seed, profile, exact=True)
    if not nc.is_n_exact(c):
        return False, {"error": "generator produced a non-exact complex"}
    v = nc.poincare_at_root(c)
    return v == 0, {"value": str(v)}


@check("ncomplex.poincare_truncated")
def _poincare_truncated(N, length, dim=1):
    c = nc.elementary_chain(N, 0, length, dim, make_field(N))
    v = nc.poincare_at_root(c)
    return v != 0, {"value": str(v)}


# -- q-tensor / q-Hom ----------------------------------------------------------------------

@check("homops.tensor_order")
def _tensor_order(N, seed):
    q = root_of_unity(N)
    C, E = _pair(N, seed, q.field)
    try:
        ho.q_tensor(C, E, q)
    except nc.NotNilpotent as e:
        return False, {"window": list(e.window)}
    return True, {}


@check("homops.hom_order")
def _hom_order(N, seed, weight="degree"):
    q = root_of_unity(N)
    C, E = _pair(N, seed, q.field)
    try:
        ho.q_hom(C, E, q, weight=weight)
    except nc.NotNilpotent as e:
        return False, {"window": list(e.window)}
    return True, {}


@check("homops.tensor_expansion")
def _tensor_expansion(N, seed, q):
    q = parse_q(q)
    C, E = _pair(N, seed, q.field)
    T = ho.q_tensor(C, E, q, validate=False)
    rng = _random.Random(seed)
    F = q.field
    for n_deg, blocks in sorted(T.offsets.items()):
        for (i, j) in sorted(blocks):
            v = tuple(F(rng.randint(-2, 2)) for _ in range(C.dim(i)))
            w = tuple(F(rng.randint(-2, 2)) for _ in range(E.dim(j)))
            x = T.embed(i, j, v, w)
            for k in range(N + 1):
                if not T.complex.dim(n_deg - k):
                    continue
                lhs = tuple(T.complex.power_map(n_deg, k).apply(x))
                rhs = ho.tensor_power_expand(T, i, j, v, w, k)
                if lhs != rhs:
                    return False, {"block": [i, j], "power": k}
    return True, {}


@check("homops.hom_expansion")
def _hom_expansion(N, seed, q, corrected=False):
    q = parse_q(q)
    C, E = _pair(N, seed, q.field)
    H = ho.q_hom(C, E, q, validate=False)
    rng = _random.Random(seed)
    for a in sorted(H.slots):
        f = ho.random_graded_map(rng, H.source, H.target, a)
        for k in range(N + 1):
            if H.d(f, k) != ho.hom_power_expand(f, k, q, corrected=corrected):
                return False, {"degree": a, "power": k}
    return True, {}


@check("homops.leibniz_composition")
def _leibniz_composition(N, seed, m=1, n=2):
    q = root_of_unity(N)
    rng = _random.Random(seed)
    prof = _small_profile(N)
    C, D, E = (nc.random_ncomplex(N, prof, rng.randrange(1 << 30), q.field) for _ in range(3))
    f = ho.random_graded_map(rng, C, D, m)
    g = ho.random_graded_map(rng, D, E, n)
    lhs = ho.hom_differential(ho.compose(f, g), q)
    rhs = ho.compose(f, ho.hom_differential(g, q)) + \
        ho.compose(ho.hom_differential(f, q), g).scale(q ** n)
    return lhs == rhs, {}


def _random_chain_morphism(rng, C, E, q):
    H = ho.q_hom(C, E, q)
    if 0 not in H.slots:
        return ho.GradedMap(H.source, H.target, 0)
    d0 = H.complex.diff(0)
    K = kernel_basis(d0)
    F = q.field
    v = [F.zero] * H.complex.dim(0)
    for b in K.vectors:
        c = F(rng.randint(-2, 2))
        v = [x + c * y for x, y in zip(v, b)]
    return H.from_vector(0, v)


@check("homops.null_homotopic_zero")
def _null_homotopic_zero(N, seed):
    q = root_of_unity(N)
    C, E = _pair(N, seed, q.field)
    H = ho.q_hom(C, E, q)
    rng = _random.Random(seed)
    s, f = ho.random_null_homotopic(rng, H)
    if not ho.is_chain_morphism(f):
        return False, {"error": "d^(N-1) s is not a chain morphism"}
    cert = ho.null_homotopy_certificate(H, f)
    if cert is None or H.d(cert, N - 1) != f:
        return False, {"error": "no certificate for a constructed null-homotopic map"}
    for key, m in ho.induced_on_homology(f).items():
        if not m.is_zero():
            return False, {"cell": list(key)}
    return True, {}


@check("homops.ideal")
def _ideal(N, seed):
    q = root_of_unity(N)
    rng = _random.Random(seed)
    prof = _small_profile(N)
    B, C, E, D = (nc.random_ncomplex(N, prof, rng.randrange(1 << 30), q.field) for _ in range(4))
    H = ho.q_hom(C, E, q)
    _, f = ho.random_null_homotopic(rng, H)
    g = _random_chain_morphism(rng, E, D, q)
    h = _random_chain_morphism(rng, B, C, q)
    out = {}
    for label, comp, src, tgt in (("g o f", ho.compose(f, g), C, D), ("f o h", ho.compose(h, f), B, E)):
        cert = ho.null_homotopy_certificate(ho.q_hom(src, tgt, q), comp)
        out[label] = cert is not None
    return all(out.values()), out


# -- q-de Rham ------------------------------------------------------------------------------

def _form_pair(seed, n, field, max_form=3, max_poly=3):
    rng = _random.Random(seed)
    u = dr.random_form(rng, n, rng.randint(0, min(max_form, n)), max_poly, field)
    v = dr.random_form(rng, n, rng.randint(0, min(max_form, n)), max_poly, field)
    return u, v


@check("derham.leibniz")
def _derham_leibniz(seed, n, q):
    q = parse_q(q)
    u, v = _form_pair(seed, n, q.field)
    lhs = dr.exterior_d(dr.mul(u, v, q), q)
    rhs = dr.leibniz_rhs(u, v, q)
    return lhs == rhs, {"u": str(u), "v": str(v), "defect": str(lhs - rhs)}


@check("derham.d_power_product")
def _derham_d_power_product(seed, n, N, q):
    q = parse_q(q)
    u, v = _form_pair(seed, n, q.field, max_poly=N + 1)
    lhs = dr.d_power(dr.mul(u, v, q), q, N)
    rhs = dr.d_power_product_rhs(u, v, N, q)
    return lhs == rhs, {"u": str(u), "v": str(v), "defect": str(lhs - rhs)}


@check("derham.truncation_order")
def _truncation_order(n, N, m):
    try:
        dr.truncate_to_ncomplex(n, root_of_unity(N), m, N)
    except nc.NotNilpotent as e:
        return False, {"window": list(e.window)}
    return True, {}


@check("derham.face_identities")
def _face_identities(n, max_poly_degree=3):
    bad = dr.check_face_identities(n, max_poly_degree)
    return not bad, {"violations": [[list(k[0]), list(k[1]), i, j] for k, i, j in bad[:5]]}


@check("derham.faces_reassemble")
def _faces_reassemble(seed, n, q, twisted=False):
    q = parse_q(q)
    rng = _random.Random(seed)
    w = dr.random_form(rng, n, rng.randint(0, n), 3, q.field)
    target = dr.twisted_exterior_d(w, q) if twisted else dr.exterior_d(w, q)
    got = dr.simplicial_differential(w, q)
    return got == target, {"form": str(w), "faces": str(got), "d": str(target)}


@check("derham.vanishing")
def _vanishing(n, N, max_total_degree):
    rep = dr.vanishing_checker(n, N, max_total_degree)
    return not rep["violations"], {
        "violations": [list(v) for v in rep["violations"]],
        "constants": {"%d,%d" % k: v for k, v in sorted(rep["constants"].items())}}


# -- quantum symmetry -------------------------------------------------------------------------

@check("quantum.span_equality")
def _span_equality(n, q, orientation="literal", column_order="lt"):
    q = parse_q(q)
    derived = qs.relations_from_covariance(n, q, orientation)
    shown = qs.displayed_relations(n, q, column_order)
    return derived == shown, {"derived_dim": derived.dim, "displayed_dim": shown.dim,
                              "derived_in_displayed": shown.contains_subspace(derived),
                              "displayed_in_derived": derived.contains_subspace(shown)}


def _relations(n, q, which):
    if which == "displayed":
        return qs.displayed_relations(n, q)
    return qs.relations_from_covariance(n, q, which)


@check("quantum.comultiplication")
def _comultiplication(n, q, relations="displayed"):
    q = parse_q(q)
    res = qs.comultiplication_degree2_check(n, q, _relations(n, q, relations))
    return res["ok"], {"failing_relations": [qs.format_relation(n, r) for r in res["failures"][:3]]}


@check("quantum.coaction")
def _coaction(n, q, relations="displayed", orientation="mixed"):
    q = parse_q(q)
    res = qs.coaction_checks(n, q, _relations(n, q, relations), orientation)
    return res["b"] and res["c"], {"relations_preserved": res["b"], "commutes_with_d": res["c"]}


@check("quantum.negative_drop")
def _negative_drop(n, q, relations="column"):
    """Passes when every relation set with one vector removed fails the comultiplication check."""
    q = parse_q(q)
    I = _relations(n, q, relations)
    vs = I.vectors
    survivors = 0
    for k in range(len(vs)):
        J = Subspace.span(n ** 4, vs[:k] + vs[k + 1:], q.field)
        if qs.comultiplication_degree2_check(n, q, J)["ok"]:
            survivors += 1
    return survivors == 0, {"still_passing": survivors}


@check("quantum.negative_transposed")
def _negative_transposed(n, q, relations="column"):
    """Passes when the transposed coaction violates the relations."""
    q = parse_q(q)
    res = qs.coaction_checks(n, q, _relations(n, q, relations), "transposed")
    return not res["b"], {"relations_preserved": res["b"]}


# -- connections ------------------------------------------------------------------------------

def _vars_for(N):
    return max(3, N)


@check("gauge.order_zero")
def _order_zero(N, seed, r=2, n=None):
    conn = gg.random_connection(seed, N, r, n or _vars_for(N))
    bad = gg.order_zero_defects(conn)
    if not bad:
        return True, {}
    f, j, lhs, rhs = bad[0]
    return False, {"probe": str(f), "column": j, "defects": len(bad)}


@check("gauge.formula_n3")
def _formula_n3(seed, r=2, n=3):
    conn = gg.random_connection(seed, 3, r, n)
    F = gg.curvature(conn, verify=False)
    G = gg.curvature_formula_n3(conn)
    return F == G, {"difference_degrees": (F - G).form_degrees()}


@check("gauge.covariance")
def _covariance(N, seed, kind, r=2, n=3):
    conn = gg.random_connection(seed, N, r, n)
    rng = _random.Random(seed + 7919)
    if kind == "constant":
        g = gg.random_constant_gauge(rng, r, n, conn.field)
    else:
        g = gg.random_unipotent(rng, r, n, conn.field)
    return gg.covariance_defect(conn, g).is_zero(), {}


@check("gauge.bianchi")
def _bianchi(N, seed, r=2, n=3):
    return gg.bianchi_check(gg.random_connection(seed, N, r, n)), {}


@check("gauge.chern")
def _chern(N, seed, p, r=2, n=3):
    conn = gg.random_connection(seed, N, r, n)
    return gg.chern_closed(conn, p), {}


@check("gauge.divergence")
def _divergence(seed, factor="1"):
    conn = gg.random_connection(seed, 3, 2, 3, max_degree=3)
    q = conn.q
    c = 1 + q if factor == "1+q" else conn.field(Fraction(factor))
    return gg.divergence_identity_check(conn.A, q, c), {}


# -- interchange ------------------------------------------------------------------------------------

def sample_object(kind, seed):
    rng = _random.Random(seed)
    if kind == "complex":
        return nc.random_ncomplex(3 + seed % 3, "small", seed, make_field(3 + seed % 3))
    if kind == "form":
        return dr.random_form(rng, 3, rng.randint(0, 3), 3, make_field(3))
    if kind == "connection":
        return gg.random_connection(seed, 2 + seed % 3)
    if kind == "deltaset":
        return ds.random_delta_set(seed)
    if kind == "scalar":
        F = make_field(rng.choice([1, 3, 4, 5, 12]))
        return F.from_coords([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(F.degree)])
    if kind == "matrix":
        F = make_field(5)
        return ExactMatrix.from_rows([[F.from_coords([Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                                                      for _ in range(F.degree)]) for _ in range(3)]
                                      for _ in range(2)], F, 3)
    raise ValueError(kind)


@check("interchange.roundtrip")
def _roundtrip(kind, seed):
    from . import interchange as io
    x = sample_object(kind, seed)
    text = io.dumps(x)
    y = io.loads(text, kind)
    same = (y.A == x.A and y.N == x.N) if kind == "connection" else y == x
    return same and io.convert_text(text) == text, {}
