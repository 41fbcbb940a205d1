"""
N-complexes of finite-dimensional vector spaces over Q(zeta_M).

Degrees are homological: d_i maps C_i to C_{i-1}, and d^p: C_i -> C_{i-p}
is d_{i-p+1} o ... o d_i.  The amplitude-p homology at degree i is

    pH_i = Ker(d^p: C_i -> C_{i-p}) / Im(d^(N-p): C_{i+N-p} -> C_i).
"""

import random as _random
from dataclasses import dataclass, field as _dc_field

from .field import QQ, eval_poincare, root_of_unity
from .linalg import (
    ExactMatrix, ShapeMismatch, Subspace, block_diag, block_matrix, image_basis,
    induced_map, inverse, kernel_basis, subquotient,
)


class NotNilpotent(ValueError):
    """Some composite of N consecutive differentials is nonzero."""

    def __init__(self, N, top):
        self.N = N
        self.window = (top, top - N)
        super().__init__("d^%d: C_%d -> C_%d is nonzero" % (N, top, top - N))


class NComplex:
    """An N-complex with finitely many nonzero terms.

    dims maps degree -> dimension, diffs maps degree i -> the matrix of
    d_i: C_i -> C_{i-1} (shape dims[i-1] x dims[i]); absent entries are 0.
    """

    def __init__(self, N, dims, diffs=None, field=QQ, validate=True):
        if N < 1:
            raise ValueError("order N must be >= 1")
        self.N = N
        self.field = field
        self.dims = {i: k for i, k in dims.items() if k}
        self.diffs = {}
        for i, m in (diffs or {}).items():
            m = m.to_field(field)
            expect = (self.dim(i - 1), self.dim(i))
            if m.shape != expect:
                raise ShapeMismatch("d_%d has shape %s, expected %s" % (i, m.shape, expect))
            if not m.is_zero():
                self.diffs[i] = m
        self._powers = {}
        if validate:
            self.validate()

    def dim(self, i):
        return self.dims.get(i, 0)

    @property
    def degrees(self):
        return sorted(self.dims)

    @property
    def support(self):
        """(lowest, highest) degree carrying a nonzero space, or None."""
        if not self.dims:
            return None
        return min(self.dims), max(self.dims)

    def diff(self, i):
        m = self.diffs.get(i)
        if m is None:
            return ExactMatrix.zeros(self.dim(i - 1), self.dim(i), self.field)
        return m

    def power_map(self, i, p):
        """d^p: C_i -> C_{i-p}."""
        key = (i, p)
        m = self._powers.get(key)
        if m is None:
            if p == 0:
                m = ExactMatrix.identity(self.dim(i), self.field)
            else:
                m = self.diff(i - p + 1) @ self.power_map(i, p - 1)
            self._powers[key] = m
        return m

    def validate(self):
        for i in self.degrees:
            if not self.power_map(i, self.N).is_zero():
                raise NotNilpotent(self.N, i)
        return self

    def with_order(self, N, validate=True):
        return NComplex(N, self.dims, self.diffs, self.field, validate)

    def to_field(self, field):
        return NComplex(self.N, self.dims,
                        {i: m.to_field(field) for i, m in self.diffs.items()},
                        field, validate=False)

    def __eq__(self, other):
        if not isinstance(other, NComplex):
            return NotImplemented
        return (self.N == other.N and self.dims == other.dims
                and self.diffs == other.diffs and self.field is other.field)

    def __repr__(self):
        return "NComplex(N=%d, dims=%s)" % (self.N, dict(sorted(self.dims.items())))


# -- homology ----------------------------------------------------------------

def homology(c, p, i):
    if not 1 <= p <= c.N:
        raise ValueError("amplitude p must lie in 1..%d" % c.N)
    ker = kernel_basis(c.power_map(i, p))
    im = image_basis(c.power_map(i + c.N - p, c.N - p))
    return subquotient(ker, im)


@dataclass
class HomologyDiagram:
    N: int
    cells: dict
    i_star: dict
    d_star: dict
    degrees: list = _dc_field(default_factory=list)

    def dim(self, p, i):
        cell = self.cells.get((p, i))
        return cell.dim if cell is not None else 0

    def dims_table(self):
        return {(p, i): cell.dim for (p, i), cell in self.cells.items()}

    def nonzero_cells(self):
        return sorted(k for k, cell in self.cells.items() if cell.dim)


def homology_diagram(c):
    """All pH_i with the maps i_*: pH_i -> (p+1)H_i and d_*: pH_i -> (p-1)H_(i-1).

    Cells with p = N are included (they are always zero) but carry no maps.
    """
    N = c.N
    sup = c.support
    degrees = list(range(sup[0], sup[1] + 1)) if sup else []
    cells = {(p, i): homology(c, p, i) for p in range(1, N + 1) for i in degrees}
    ident = {}
    i_star, d_star = {}, {}
    for i in degrees:
        if i not in ident:
            ident[i] = ExactMatrix.identity(c.dim(i), c.field)
        for p in range(1, N - 1):
            i_star[(p, i)] = induced_map(ident[i], cells[(p, i)], cells[(p + 1, i)])
        for p in range(2, N):
            src = cells[(p, i)]
            tgt = cells.get((p - 1, i - 1))
            if tgt is None:
                # C_(i-1) = 0 lies outside the support
                tgt = subquotient(Subspace(0, [], c.field), Subspace(0, [], c.field))
            d_star[(p, i)] = induced_map(c.diff(i), src, tgt)
    return HomologyDiagram(N, cells, i_star, d_star, degrees)


@dataclass
class TotalHomology:
    """The (N-1)-complex H_m = sum over 2i - p = m of pH_i with D = i_* + d_*.

    blocks[m] lists the (p, i) cells in H_m in lexicographic order.
    """
    complex: NComplex
    blocks: dict
    diagram: HomologyDiagram

    def block_dims(self, m):
        return [(key, self.diagram.dim(*key)) for key in self.blocks.get(m, [])]


def total_homology(c, validate=True):
    N = c.N
    if N < 2:
        raise ValueError("total homology needs N >= 2")
    diag = homology_diagram(c)
    blocks = {}
    for (p, i), cell in diag.cells.items():
        if p < N and cell.dim:
            blocks.setdefault(2 * i - p, []).append((p, i))
    for m in blocks:
        blocks[m].sort()
    dims = {m: sum(diag.dim(*k) for k in ks) for m, ks in blocks.items()}
    diffs = {}
    for m, src_keys in blocks.items():
        tgt_keys = blocks.get(m - 1)
        if not tgt_keys:
            continue
        pieces = {}
        for bj, (p, i) in enumerate(src_keys):
            for bi, key in enumerate(tgt_keys):
                if key == (p + 1, i) and (p, i) in diag.i_star:
                    pieces[(bi, bj)] = diag.i_star[(p, i)]
                elif key == (p - 1, i - 1) and (p, i) in diag.d_star:
                    pieces[(bi, bj)] = diag.d_star[(p, i)]
        diffs[m] = block_matrix(pieces, [diag.dim(*k) for k in tgt_keys],
                                [diag.dim(*k) for k in src_keys], c.field)
    H = NComplex(N - 1, dims, diffs, c.field, validate=validate)
    return TotalHomology(H, blocks, diag)


def is_n_exact(c):
    return all(homology(c, p, i).dim == 0
               for p in range(1, c.N) for i in c.degrees)


def homology_dims(c):
    """{(p, i): dim pH_i} over the support, p = 1..N."""
    sup = c.support
    if not sup:
        return {}
    return {(p, i): homology(c, p, i).dim
            for p in range(1, c.N + 1) for i in range(sup[0], sup[1] + 1)}


def two_term(f):
    """The 3-complex X -f-> Y placed in degrees 1, 0."""
    return NComplex(3, {1: f.cols, 0: f.rows}, {1: f}, f.field)


def three_term(f, g):
    """The 3-complex X -f-> Y -g-> Z in degrees 2, 1, 0."""
    if g.cols != f.rows:
        raise ShapeMismatch("g (%s) is not composable with f (%s)" % (g.shape, f.shape))
    return NComplex(3, {2: f.cols, 1: f.rows, 0: g.rows}, {2: f, 1: g}, f.field)


SIX_TERM_CELLS = (
    ("Ker f", (1, 2)), ("Ker gf", (2, 2)), ("Ker g", (1, 1)),
    ("Coker f", (2, 1)), ("Coker gf", (1, 0)), ("Coker g", (2, 0)),
)


def six_term(f, g):
    """Total homology of X -f-> Y -g-> Z: the sequence
    0 -> Ker f -> Ker gf -> Ker g -> Coker f -> Coker gf -> Coker g -> 0."""
    return total_homology(three_term(f, g))


def six_term_dims(T):
    return tuple(T.diagram.dim(*cell) for _, cell in SIX_TERM_CELLS)


def is_exact_2complex(c):
    """Ordinary exactness of a complex with d^2 = 0 (order 2 or less)."""
    from .linalg import rank
    for i in c.degrees:
        ker = c.dim(i) - rank(c.diff(i))
        im = rank(c.diff(i + 1))
        if ker != im:
            return False
    return True


# -- Euler characteristic ----------------------------------------------------

def poincare(c):
    return dict(sorted(c.dims.items()))


def poincare_at_root(c, N=None):
    """P_C evaluated at the primitive N-th root of unity (N defaults to c.N)."""
    return eval_poincare(poincare(c), root_of_unity(N or c.N))


# -- builders ----------------------------------------------------------------

def shift(c, k):
    """Relabel degree i as i + k."""
    return NComplex(c.N, {i + k: v for i, v in c.dims.items()},
                    {i + k: m for i, m in c.diffs.items()}, c.field, validate=False)


def direct_sum(*cs):
    if not cs:
        raise ValueError("direct_sum of nothing")
    N, field = cs[0].N, cs[0].field
    for c in cs:
        if c.N != N or c.field is not field:
            raise ValueError("direct_sum needs a common order and field")
    degs = sorted({i for c in cs for i in c.dims})
    dims = {i: sum(c.dim(i) for c in cs) for i in degs}
    diffs = {}
    for i in degs:
        if any(i in c.diffs for c in cs):
            diffs[i] = block_diag([c.diff(i) for c in cs], field)
    return NComplex(N, dims, diffs, field, validate=False)


def elementary_chain(N, top_degree, length, dim=1, field=QQ):
    """C_top -> ... -> C_(top-length+1), all of dimension `dim`, identity maps."""
    if not 1 <= length <= N:
        raise ValueError("chain length must be in 1..%d, got %d" % (N, length))
    degs = range(top_degree - length + 1, top_degree + 1)
    I = ExactMatrix.identity(dim, field)
    return NComplex(N, {i: dim for i in degs},
                    {i: I for i in degs if i - 1 in degs}, field)


def conjugate(c, mats):
    """Base change C_i -> P_i C_i; mats maps degree -> invertible matrix."""
    field = c.field
    P = {i: mats.get(i, ExactMatrix.identity(c.dim(i), field)) for i in c.dims}
    Pinv = {i: inverse(m) for i, m in P.items()}
    diffs = {i: P[i - 1] @ m @ Pinv[i] for i, m in c.diffs.items()}
    return NComplex(c.N, c.dims, diffs, field, validate=False)


PROFILES = {
    "small": {"degrees": (0, 4), "max_chains": 3, "max_dim": 2, "entry": 2},
    "medium": {"degrees": (-2, 6), "max_chains": 5, "max_dim": 2, "entry": 3},
}


def _profile(profile):
    return PROFILES[profile] if isinstance(profile, str) else profile


def random_invertible(rng, n, field=QQ, entry=2):
    """L @ U with unit-triangular integer factors."""
    z, o = 0, 1
    L = [[o if i == j else (rng.randint(-entry, entry) if i > j else z)
          for j in range(n)] for i in range(n)]
    U = [[o if i == j else (rng.randint(-entry, entry) if i < j else z)
          for j in range(n)] for i in range(n)]
    return ExactMatrix.from_rows(L, field, n) @ ExactMatrix.from_rows(U, field, n)


def random_chains(N, profile, seed, exact):
    """The list of (top_degree, length, dim) summands used by the generators."""
    prof = _profile(profile)
    rng = _random.Random(seed)
    lo, hi = prof["degrees"]
    chains = []
    for _ in range(rng.randint(1, prof["max_chains"])):
        chains.append((rng.randint(min(lo + N - 1, hi), hi), N, rng.randint(1, prof["max_dim"])))
    if not exact:
        for _ in range(rng.randint(1, prof["max_chains"])):
            length = rng.randint(1, N - 1) if N > 1 else 1
            chains.append((rng.randint(min(lo + length - 1, hi), hi), length,
                           rng.randint(1, prof["max_dim"])))
    return chains, rng


def from_chains(N, chains, field=QQ):
    return direct_sum(*(elementary_chain(N, t, l, r, field) for t, l, r in chains)).validate()


def _scramble(c, rng, entry):
    mats = {i: random_invertible(rng, c.dim(i), c.field, entry) for i in c.degrees}
    return conjugate(c, mats).validate()


def random_exact(N, profile="small", seed=0, field=QQ):
    """Direct sum of full-length chains, conjugated degreewise: N-exact by construction."""
    chains, rng = random_chains(N, profile, seed, exact=True)
    return _scramble(from_chains(N, chains, field), rng, _profile(profile)["entry"])


def random_ncomplex(N, profile="small", seed=0, field=QQ):
    """Like random_exact plus truncated chains, so homology is nonzero."""
    chains, rng = random_chains(N, profile, seed, exact=False)
    return _scramble(from_chains(N, chains, field), rng, _profile(profile)["entry"])
