"""
q-tensor products, q-Hom sequences, composition and null-homotopies.

For sequences C, E and a base q, Hom(C, E)_n is the product over i of
Hom(C_i, E_(i+n)); a degree-a element f has differential

    (d f)_i = d_E f_i - q^a f_(i-1) d_C .

The factor is q to the degree of f.  Reading the exponent as the position
i instead (weight="position") is kept for comparison: it does not give an
N-complex, and degree-0 cycles are then not chain morphisms.
"""

import random as _random

from .field import q_binomial_row, _as_scalar
from .linalg import ExactMatrix, ShapeMismatch, block_matrix, induced_map, kron
from .ncomplex import NComplex, homology


def _in_field(c, q):
    return c if c.field is q.field else c.to_field(q.field)


# -- graded maps -------------------------------------------------------------

class GradedMap:
    """f = (f_i: C_i -> E_(i+degree)); absent components are zero."""

    def __init__(self, source, target, degree, components=None):
        self.source = source
        self.target = target
        self.degree = degree
        field = target.field
        self.field = field
        self.components = {}
        for i, m in (components or {}).items():
            m = m.to_field(field)
            expect = (target.dim(i + degree), source.dim(i))
            if m.shape != expect:
                raise ShapeMismatch("component %d has shape %s, expected %s"
                                    % (i, m.shape, expect))
            if not m.is_zero():
                self.components[i] = m

    def component(self, i):
        m = self.components.get(i)
        if m is None:
            return ExactMatrix.zeros(self.target.dim(i + self.degree),
                                     self.source.dim(i), self.field)
        return m

    def support(self):
        return sorted(i for i in self.source.dims if self.target.dim(i + self.degree))

    def __add__(self, other):
        if other.degree != self.degree:
            raise ValueError("adding maps of degrees %d and %d" % (self.degree, other.degree))
        keys = set(self.components) | set(other.components)
        return GradedMap(self.source, self.target, self.degree,
                         {i: self.component(i) + other.component(i) for i in keys})

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GradedMap(self.source, self.target, self.degree,
                         {i: m.scale(c) for i, m in self.components.items()})

    def is_zero(self):
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return self.degree == other.degree and self.components == other.components

    def __repr__(self):
        return "GradedMap(degree=%d, components=%s)" % (self.degree, sorted(self.components))


def identity_map(c):
    return GradedMap(c, c, 0, {i: ExactMatrix.identity(c.dim(i), c.field) for i in c.dims})


def zero_map(C, E, degree=0):
    return GradedMap(C, E, degree)


def random_graded_map(rng, C, E, degree, entry=2):
    comps = {}
    for i in C.dims:
        r, c = E.dim(i + degree), C.dim(i)
        if r:
            comps[i] = ExactMatrix.from_rows(
                [[rng.randint(-entry, entry) for _ in range(c)] for _ in range(r)], E.field, c)
    return GradedMap(C, E, degree, comps)


def hom_differential(f, q, weight="degree"):
    """d f per the q-Hom rule; weight selects q^deg(f) or q^i."""
    q = _as_scalar(q)
    C, E, a = f.source, f.target, f.degree
    qa = q ** a
    comps = {}
    for i in C.dims:
        if not E.dim(i + a - 1):
            continue
        g = E.diff(i + a) @ f.component(i)
        prev = f.component(i - 1)
        if prev.rows and prev.cols:
            w = qa if weight == "degree" else q ** i
            g = g - (prev @ C.diff(i)).scale(w)
        comps[i] = g
    return GradedMap(C, E, a - 1, comps)


def is_chain_morphism(f):
    """Degree 0 and d_E f_i = f_(i-1) d_C for every i."""
    if f.degree != 0:
        return False
    C, E = f.source, f.target
    for i in set(C.dims) | set(E.dims):
        if E.diff(i) @ f.component(i) != f.component(i - 1) @ C.diff(i):
            return False
    return True


def compose(f, g, q=None, twist=False):
    """g o f for f: C -> D of degree m and g: D -> E of degree n.

    With twist=True the result is scaled by q^(mn); the plain composite is
    the one satisfying d(g o f) = (dg) o f + q^n g o (df).
    """
    if f.target is not g.source and f.target != g.source:
        raise ValueError("g's source is not f's target")
    m, n = f.degree, g.degree
    comps = {}
    for p in f.source.dims:
        h = g.component(p + m) @ f.component(p)
        if not h.is_zero():
            comps[p] = h
    out = GradedMap(f.source, g.target, m + n, comps)
    if twist and m * n:
        out = out.scale(_as_scalar(q) ** (m * n))
    return out


# -- the q-Hom complex ------------------------------------------------------

class HomComplex:
    """Coordinates on Hom(C, E): degree n is the concatenation over i (ascending)
    of the row-major entries of f_i: C_i -> E_(i+n)."""

    def __init__(self, C, E, q, weight="degree", validate=True):
        q = _as_scalar(q)
        C, E = _in_field(C, q), _in_field(E, q)
        self.source, self.target, self.q, self.weight = C, E, q, weight
        self.slots = {}
        dims = {}
        if C.dims and E.dims:
            for n in range(min(E.dims) - max(C.dims), max(E.dims) - min(C.dims) + 1):
                slots, off = [], 0
                for i in sorted(C.dims):
                    r = E.dim(i + n)
                    if r:
                        slots.append((i, off, r, C.dim(i)))
                        off += r * C.dim(i)
                if off:
                    self.slots[n] = slots
                    dims[n] = off
        diffs = {}
        for n in dims:
            if n - 1 not in dims:
                continue
            cols = []
            for i, off, r, c in self.slots[n]:
                for a in range(r):
                    for b in range(c):
                        unit = ExactMatrix.zeros(r, c, q.field).data
                        unit = [list(row) for row in unit]
                        unit[a][b] = q.field.one
                        f = GradedMap(C, E, n, {i: ExactMatrix.from_rows(unit, q.field, c)})
                        cols.append(self.to_vector(hom_differential(f, q, weight)))
            diffs[n] = ExactMatrix.from_columns(cols, dims[n - 1], q.field)
        self.complex = NComplex(C.N, dims, diffs, q.field, validate=validate)

    def to_vector(self, f):
        z = self.q.field.zero
        if f.degree not in self.slots:
            if not f.is_zero():
                raise ValueError("degree %d is empty in this Hom complex" % f.degree)
            return ()
        out = []
        for i, off, r, c in self.slots[f.degree]:
            m = f.component(i)
            out.extend(m.data[a][b] if m.rows else z for a in range(r) for b in range(c))
        return tuple(out)

    def from_vector(self, n, v):
        comps = {}
        for i, off, r, c in self.slots.get(n, []):
            rows = [[v[off + a * c + b] for b in range(c)] for a in range(r)]
            comps[i] = ExactMatrix.from_rows(rows, self.q.field, c)
        return GradedMap(self.source, self.target, n, comps)

    def d(self, f, k=1):
        for _ in range(k):
            f = hom_differential(f, self.q, self.weight)
        return f


def q_hom(C, E, q, weight="degree", validate=True):
    return HomComplex(C, E, q, weight, validate)


def hom_power_expand(f, n, q, corrected=False):
    """sum_k (-1)^(n-k) q^((n-k)a) [n, k]_(1/q) d_E^k o f o d_C^(n-k).

    Each pass of d through f o d_C lowers the degree by one, so the iterated
    differential actually carries q^((n-k)a - (n-k)(n-k-1)/2) on the k-th
    term; corrected=True uses that exponent.  The two agree when n - k <= 1.
    """
    q = _as_scalar(q)
    C, E, a = f.source, f.target, f.degree
    gauss = q_binomial_row(n, q.inverse())
    acc = GradedMap(C, E, a - n)
    for k in range(n + 1):
        e = (n - k) * a
        if corrected:
            e -= (n - k) * (n - k - 1) // 2
        coeff = gauss[k] * q ** e
        if (n - k) % 2:
            coeff = -coeff
        comps = {}
        for i in C.dims:
            j = i - (n - k)  # d_C^(n-k): C_i -> C_j, then f_j, then d_E^k
            if not E.dim(j + a - k):
                continue
            comps[i] = (E.power_map(j + a, k) @ f.component(j) @ C.power_map(i, n - k)).scale(coeff)
        acc = acc + GradedMap(C, E, a - n, comps)
    return acc


# -- the q-tensor product -----------------------------------------------------

class QTensor:
    """(V (x) W)_n = sum over i + j = n of V_i (x) W_j, blocks ordered by i,
    each block in Kronecker order (V index major)."""

    def __init__(self, V, W, q, validate=True):
        q = _as_scalar(q)
        V, W = _in_field(V, q), _in_field(W, q)
        self.left, self.right, self.q = V, W, q
        F = q.field
        self.offsets = {}
        dims = {}
        for i in sorted(V.dims):
            for j in sorted(W.dims):
                n = i + j
                off = dims.get(n, 0)
                self.offsets.setdefault(n, {})[(i, j)] = off
                dims[n] = off + V.dim(i) * W.dim(j)
        diffs = {}
        for n in dims:
            if n - 1 not in dims:
                continue
            src = self.offsets[n]
            tgt = self.offsets[n - 1]
            src_keys = sorted(src)
            tgt_keys = sorted(tgt)
            pieces = {}
            for bj, (i, j) in enumerate(src_keys):
                for bi, key in enumerate(tgt_keys):
                    if key == (i - 1, j):
                        pieces[(bi, bj)] = kron(V.diff(i), ExactMatrix.identity(W.dim(j), F))
                    elif key == (i, j - 1):
                        pieces[(bi, bj)] = kron(ExactMatrix.identity(V.dim(i), F),
                                                W.diff(j)).scale(q ** i)
            diffs[n] = block_matrix(pieces, [V.dim(i) * W.dim(j) for i, j in tgt_keys],
                                    [V.dim(i) * W.dim(j) for i, j in src_keys], F)
        self.complex = NComplex(V.N, dims, diffs, F, validate=validate)

    def embed(self, i, j, v, w):
        """Coordinates of v (x) w in degree i + j."""
        F = self.q.field
        n = i + j
        out = [F.zero] * self.complex.dim(n)
        if not v or not w:
            return tuple(out)
        off = self.offsets[n][(i, j)]
        for a, x in enumerate(v):
            if x:
                for b, y in enumerate(w):
                    if y:
                        out[off + a * len(w) + b] = x * y
        return tuple(out)


def q_tensor(V, W, q, validate=True):
    return QTensor(V, W, q, validate)


def tensor_power_expand(T, i, j, v, w, n):
    """sum_k q^((n-k)i) [n, k]_(1/q) d^k v (x) d^(n-k) w, as a vector in degree i+j-n."""
    q = T.q
    V, W = T.left, T.right
    gauss = q_binomial_row(n, q.inverse())
    F = q.field
    acc = [F.zero] * T.complex.dim(i + j - n)
    for k in range(n + 1):
        dv = V.power_map(i, k).apply(v) if v else ()
        dw = W.power_map(j, n - k).apply(w) if w else ()
        if not (V.dim(i - k) and W.dim(j - n + k)):
            continue
        piece = T.embed(i - k, j - n + k, dv, dw)
        c = gauss[k] * q ** ((n - k) * i)
        acc = [a + c * b if b else a for a, b in zip(acc, piece)]
    return tuple(acc)


# -- homotopies ---------------------------------------------------------------

class NotAChainMorphism(ValueError):
    pass


def null_homotopy_certificate(H, f):
    """s of degree N-1 with d^(N-1) s = f, or None when f is not null-homotopic."""
    if not is_chain_morphism(f):
        raise NotAChainMorphism("f does not commute with the differentials")
    N = H.complex.N
    target = H.to_vector(f)
    if not target:
        return GradedMap(H.source, H.target, N - 1)
    if not any(target):
        return GradedMap(H.source, H.target, N - 1)
    if not H.complex.dim(N - 1):
        return None
    from .linalg import Echelon
    s = Echelon(H.complex.power_map(N - 1, N - 1)).solve(target)
    if s is None:
        return None
    return H.from_vector(N - 1, s)


def induced_on_homology(f, p_range=None):
    """{(p, i): matrix of f_* on pH_i} for a chain morphism f."""
    C, E = f.source, f.target
    N = C.N
    ps = p_range or range(1, N)
    degs = sorted(set(C.dims) | set(E.dims))
    out = {}
    for p in ps:
        for i in degs:
            out[(p, i)] = induced_map(f.component(i), homology(C, p, i), homology(E, p, i))
    return out


def random_null_homotopic(rng, H, entry=2):
    """(s, f) with f = d^(N-1) s for a random s of degree N-1."""
    N = H.complex.N
    s = random_graded_map(rng, H.source, H.target, N - 1, entry)
    return s, H.d(s, N - 1)


def random_pair(N, seed, q, profile=None, exact=False):
    """Two small seeded N-complexes over q's field."""
    from .ncomplex import random_exact, random_ncomplex
    prof = profile or {"degrees": (0, N), "max_chains": 2, "max_dim": 1, "entry": 2}
    gen = random_exact if exact else random_ncomplex
    rng = _random.Random(seed)
    a = gen(N, prof, rng.randrange(1 << 30), q.field)
    b = gen(N, prof, rng.randrange(1 << 30), q.field)
    return a, b
