"""
Dense exact linear algebra over Q(zeta_M).

Vectors are tuples of CycloScalar.  Elimination pivots on the first
nonzero entry, so every result (echelon form, kernel basis, coset
representatives) is deterministic.
"""

from .field import QQ, CycloScalar


class ShapeMismatch(ValueError):
    pass


class ContainmentError(ValueError):
    """A subspace that should sit inside another does not."""


class WellDefinednessError(ValueError):
    """A map does not respect the filtrations it is asked to descend along."""


class ExactMatrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            z = field.zero
            data = tuple((z,) * cols for _ in range(rows))
        else:
            data = tuple(tuple(field(x) for x in row) for row in data)
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ShapeMismatch("data does not have shape %dx%d" % (rows, cols))
        self.data = data

    @classmethod
    def _raw(cls, field, rows, cols, data):
        m = cls.__new__(cls)
        m.field, m.rows, m.cols, m.data = field, rows, cols, data
        return m

    @classmethod
    def from_rows(cls, rows, field=QQ, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns, nrows, field=QQ):
        columns = list(columns)
        data = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(field, nrows, len(columns), data)

    @classmethod
    def zeros(cls, rows, cols, field=QQ):
        return cls(field, rows, cols)

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field.zero, field.one
        return cls._raw(field, n, n,
                        tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def entries(self):
        return [x for row in self.data for x in row]

    def to_field(self, field):
        if field is self.field:
            return self
        return ExactMatrix._raw(field, self.rows, self.cols,
                                tuple(tuple(field(x) for x in row) for row in self.data))

    def is_zero(self):
        return not any(x for row in self.data for x in row)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return "ExactMatrix(%dx%d [%s])" % (self.rows, self.cols, body)

    # -- arithmetic ------------------------------------------------------
    def _same(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch("%s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        self._same(other)
        return ExactMatrix._raw(self.field, self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other):
        self._same(other)
        return ExactMatrix._raw(self.field, self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self):
        return ExactMatrix._raw(self.field, self.rows, self.cols,
                                tuple(tuple(-a for a in r) for r in self.data))

    def scale(self, c):
        c = self.field(c)
        return ExactMatrix._raw(self.field, self.rows, self.cols,
                                tuple(tuple(a * c for a in r) for r in self.data))

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ShapeMismatch("cannot multiply %s by %s" % (self.shape, other.shape))
            z = self.field.zero
            ocols = other.cols
            odata = other.data
            out = []
            for row in self.data:
                acc = [z] * ocols
                for k, a in enumerate(row):
                    if a:
                        orow = odata[k]
                        for j in range(ocols):
                            b = orow[j]
                            if b:
                                acc[j] = acc[j] + a * b
                out.append(tuple(acc))
            return ExactMatrix._raw(self.field, self.rows, ocols, tuple(out))
        return self.apply(other)

    def apply(self, v):
        if len(v) != self.cols:
            raise ShapeMismatch("vector of length %d for %s matrix" % (len(v), self.shape))
        z = self.field.zero
        out = []
        for row in self.data:
            acc = z
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return ExactMatrix._raw(self.field, self.cols, self.rows,
                                tuple(zip(*self.data)) if self.rows else
                                tuple(() for _ in range(self.cols)))

    def hstack(self, other):
        if self.rows != other.rows:
            raise ShapeMismatch("hstack of %s and %s" % (self.shape, other.shape))
        return ExactMatrix._raw(self.field, self.rows, self.cols + other.cols,
                                tuple(a + b for a, b in zip(self.data, other.data)))

    def vstack(self, other):
        if self.cols != other.cols:
            raise ShapeMismatch("vstack of %s and %s" % (self.shape, other.shape))
        return ExactMatrix._raw(self.field, self.rows + other.rows, self.cols,
                                self.data + other.data)

    def submatrix(self, rows, cols):
        return ExactMatrix._raw(self.field, len(rows), len(cols),
                                tuple(tuple(self.data[i][j] for j in cols) for i in rows))


def block_matrix(blocks, row_sizes, col_sizes, field=QQ):
    """Assemble {(bi, bj): ExactMatrix} into one matrix; missing blocks are 0."""
    z = field.zero
    R, C = sum(row_sizes), sum(col_sizes)
    data = [[z] * C for _ in range(R)]
    roff = [sum(row_sizes[:k]) for k in range(len(row_sizes))]
    coff = [sum(col_sizes[:k]) for k in range(len(col_sizes))]
    for (bi, bj), m in blocks.items():
        if m.shape != (row_sizes[bi], col_sizes[bj]):
            raise ShapeMismatch("block %s has shape %s, expected %s"
                                % ((bi, bj), m.shape, (row_sizes[bi], col_sizes[bj])))
        for i, row in enumerate(m.data):
            dst = data[roff[bi] + i]
            for j, x in enumerate(row):
                if x:
                    dst[coff[bj] + j] = dst[coff[bj] + j] + x
    return ExactMatrix._raw(field, R, C, tuple(tuple(r) for r in data))


def block_diag(mats, field=QQ):
    blocks = {(k, k): m for k, m in enumerate(mats)}
    return block_matrix(blocks, [m.rows for m in mats], [m.cols for m in mats], field)


def kron(a, b):
    field = a.field
    data = []
    for ra in a.data:
        for rb in b.data:
            data.append(tuple(x * y if x and y else field.zero for x in ra for y in rb))
    return ExactMatrix._raw(field, a.rows * b.rows, a.cols * b.cols, tuple(data))


# -- elimination ---------------------------------------------------------

class Echelon:
    """Reduced row echelon form of m together with the row operations.

    transform @ m == reduced, pivots[k] is the pivot column of row k.
    """

    __slots__ = ("matrix", "reduced", "pivots", "transform")

    def __init__(self, m):
        field = m.field
        R, C = m.rows, m.cols
        A = [list(r) for r in m.data]
        T = [[field.one if i == j else field.zero for j in range(R)] for i in range(R)]
        pivots = []
        r = 0
        for c in range(C):
            if r == R:
                break
            p = next((i for i in range(r, R) if A[i][c]), None)
            if p is None:
                continue
            if p != r:
                A[p], A[r] = A[r], A[p]
                T[p], T[r] = T[r], T[p]
            inv = A[r][c].inverse()
            if inv != 1:
                A[r] = [x * inv if x else x for x in A[r]]
                T[r] = [x * inv if x else x for x in T[r]]
            for i in range(R):
                if i != r:
                    f = A[i][c]
                    if f:
                        Ar, Tr = A[r], T[r]
                        A[i] = [x - f * y if y else x for x, y in zip(A[i], Ar)]
                        T[i] = [x - f * y if y else x for x, y in zip(T[i], Tr)]
            pivots.append(c)
            r += 1
        self.matrix = m
        self.reduced = ExactMatrix._raw(field, R, C, tuple(tuple(x) for x in A))
        self.pivots = tuple(pivots)
        self.transform = ExactMatrix._raw(field, R, R, tuple(tuple(x) for x in T))

    @property
    def rank(self):
        return len(self.pivots)

    def solve(self, target):
        """A solution x of m x = target, or None."""
        m = self.matrix
        if len(target) != m.rows:
            raise ShapeMismatch("target of length %d for %s matrix" % (len(target), m.shape))
        y = self.transform.apply(target)
        r = self.rank
        if any(y[r:]):
            return None
        x = [m.field.zero] * m.cols
        for k, c in enumerate(self.pivots):
            x[c] = y[k]
        return tuple(x)

    def kernel(self):
        m = self.matrix
        field = m.field
        piv = set(self.pivots)
        vecs = []
        for f in range(m.cols):
            if f in piv:
                continue
            v = [field.zero] * m.cols
            v[f] = field.one
            for k, c in enumerate(self.pivots):
                a = self.reduced.data[k][f]
                if a:
                    v[c] = -a
            vecs.append(tuple(v))
        return vecs


def rank(m):
    return Echelon(m).rank


def solve(m, target):
    """Any exact solution of m x = target, or None when target is not in the image."""
    x = Echelon(m).solve(tuple(target))
    if x is not None:
        assert m.apply(x) == tuple(target)
    return x


def inverse(m):
    if m.rows != m.cols:
        raise ShapeMismatch("inverse of non-square %s matrix" % (m.shape,))
    e = Echelon(m)
    if e.rank != m.rows:
        raise ZeroDivisionError("matrix is singular")
    return e.transform


class Subspace:
    """Span of independent column vectors in field^ambient_dim."""

    __slots__ = ("ambient_dim", "basis", "field", "_echelon")

    def __init__(self, ambient_dim, vectors, field=QQ, _checked=False):
        vectors = [tuple(field(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ShapeMismatch("vector of length %d in ambient dim %d"
                                    % (len(v), ambient_dim))
        self.ambient_dim = ambient_dim
        self.field = field
        self.basis = ExactMatrix.from_columns(vectors, ambient_dim, field)
        self._echelon = None
        if not _checked and rank(self.basis) != len(vectors):
            raise ValueError("basis vectors are linearly dependent")

    @classmethod
    def span(cls, ambient_dim, vectors, field=QQ):
        """Subspace spanned by possibly dependent vectors (greedy choice)."""
        vectors = list(vectors)
        if not vectors:
            return cls(ambient_dim, [], field, _checked=True)
        m = ExactMatrix.from_columns(vectors, ambient_dim, field)
        piv = Echelon(m).pivots
        return cls(ambient_dim, [vectors[j] for j in piv], field, _checked=True)

    @property
    def dim(self):
        return self.basis.cols

    @property
    def vectors(self):
        return self.basis.columns()

    def echelon(self):
        if self._echelon is None:
            self._echelon = Echelon(self.basis)
        return self._echelon

    def coordinates(self, v):
        """Coefficients of v in the basis, or None if v is not in the span."""
        return self.echelon().solve(tuple(v))

    def contains(self, v):
        return self.coordinates(v) is not None

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.vectors)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.dim == other.dim
                and self.contains_subspace(other))

    def __repr__(self):
        return "Subspace(dim %d in %d)" % (self.dim, self.ambient_dim)


def kernel_basis(m):
    return Subspace(m.cols, Echelon(m).kernel(), m.field, _checked=True)


def image_basis(m):
    e = Echelon(m)
    return Subspace(m.rows, [m.column(c) for c in e.pivots], m.field, _checked=True)


class Subquotient:
    """numerator / denominator with chosen coset representatives `lift`."""

    __slots__ = ("ambient_dim", "numerator", "denominator", "lift", "field", "_combined")

    def __init__(self, numerator, denominator):
        if numerator.ambient_dim != denominator.ambient_dim:
            raise ShapeMismatch("ambient dims %d and %d"
                                % (numerator.ambient_dim, denominator.ambient_dim))
        for v in denominator.vectors:
            if not numerator.contains(v):
                raise ContainmentError("denominator is not contained in numerator")
        field = numerator.field
        n = numerator.ambient_dim
        current = list(denominator.vectors)
        r = len(current)
        reps = []
        for v in numerator.vectors:
            trial = current + [v]
            if rank(ExactMatrix.from_columns(trial, n, field)) > r:
                current = trial
                r += 1
                reps.append(v)
        self.ambient_dim = n
        self.numerator = numerator
        self.denominator = denominator
        self.field = field
        self.lift = ExactMatrix.from_columns(reps, n, field)
        self._combined = None

    @property
    def dim(self):
        return self.lift.cols

    def combined(self):
        # columns: lift representatives, then denominator basis
        if self._combined is None:
            cols = self.lift.columns() + self.denominator.vectors
            self._combined = Echelon(ExactMatrix.from_columns(cols, self.ambient_dim, self.field))
        return self._combined

    def class_of(self, v):
        """Coordinates of v mod denominator in the lift basis; None if v is
        not in the numerator."""
        x = self.combined().solve(tuple(v))
        if x is None:
            return None
        return x[:self.dim]

    def __repr__(self):
        return "Subquotient(%d = %d - %d)" % (self.dim, self.numerator.dim,
                                              self.denominator.dim)


def subquotient(numerator, denominator):
    return Subquotient(numerator, denominator)


def induced_map(f, source, target, check=True):
    """Matrix (in the lift bases) of the map source -> target induced by f."""
    if f.cols != source.ambient_dim or f.rows != target.ambient_dim:
        raise ShapeMismatch("map %s between ambient dims %d -> %d"
                            % (f.shape, source.ambient_dim, target.ambient_dim))
    if check:
        for v in source.denominator.vectors:
            if not target.denominator.contains(f.apply(v)):
                raise WellDefinednessError("f does not map denominator into denominator")
    cols = []
    for v in source.lift.columns():
        c = target.class_of(f.apply(v))
        if c is None:
            raise WellDefinednessError("f does not map numerator into numerator")
        cols.append(c)
    return ExactMatrix.from_columns(cols, target.dim, f.field)
