"""
Finite semi-simplicial sets (face maps only) and the q-differential
d_q = sum_i q^i d_i on their chains.
"""

import random as _random
from itertools import combinations

from .field import QQ, _as_scalar, multiplicative_order, q_factorial
from .linalg import ExactMatrix
from .ncomplex import NComplex


class SimplicialIdentityViolation(ValueError):
    def __init__(self, n, i, j, cell, left, right):
        self.n, self.i, self.j, self.cell = n, i, j, cell
        super().__init__("d_%d d_%d (%s) = %s but d_%d d_%d (%s) = %s in dimension %d"
                         % (i, j, cell, left, j - 1, i, cell, right, n))


class RootOfUnityError(ValueError):
    pass


class DeltaSet:
    """cells: {n: [cell id, ...]}, faces: {(n, i): {cell: face}} for 0 <= i <= n."""

    def __init__(self, cells, faces, validate=True):
        self.cells = {int(n): list(cs) for n, cs in cells.items() if cs}
        self.faces = {(int(n), int(i)): dict(m) for (n, i), m in faces.items()}
        self._index = {n: {c: k for k, c in enumerate(cs)} for n, cs in self.cells.items()}
        for n, cs in self.cells.items():
            if len(self._index[n]) != len(cs):
                raise ValueError("repeated cell id in dimension %d" % n)
        if validate:
            self.validate()

    @property
    def dimension(self):
        return max(self.cells) if self.cells else -1

    def face(self, n, i, cell):
        return self.faces[(n, i)][cell]

    def validate(self):
        for n, cs in self.cells.items():
            if n == 0:
                continue
            lower = self._index.get(n - 1, {})
            for i in range(n + 1):
                m = self.faces.get((n, i))
                if m is None:
                    raise ValueError("face map d_%d missing in dimension %d" % (i, n))
                for c in cs:
                    if m.get(c) not in lower:
                        raise ValueError("d_%d(%s) is not a cell of dimension %d" % (i, c, n - 1))
        for n, cs in self.cells.items():
            if n < 2:
                continue
            for j in range(1, n + 1):
                for i in range(j):
                    for c in cs:
                        left = self.face(n - 1, i, self.face(n, j, c))
                        right = self.face(n - 1, j - 1, self.face(n, i, c))
                        if left != right:
                            raise SimplicialIdentityViolation(n, i, j, c, left, right)
        return self

    def iterated_face(self, indices, cell, n):
        """d_(i_1) ... d_(i_k) (cell): the rightmost index is applied first."""
        for i in reversed(indices):
            cell = self.face(n, i, cell)
            n -= 1
        return cell

    def to_dict(self):
        return {
            "cells": {str(n): list(cs) for n, cs in sorted(self.cells.items())},
            "faces": [{"n": n, "i": i, "map": dict(sorted(m.items()))}
                      for (n, i), m in sorted(self.faces.items())],
        }

    @classmethod
    def from_dict(cls, data, validate=True):
        faces = {(f["n"], f["i"]): f["map"] for f in data["faces"]}
        return cls(data["cells"], faces, validate)

    def __eq__(self, other):
        if not isinstance(other, DeltaSet):
            return NotImplemented
        return self.cells == other.cells and self.faces == other.faces

    def __repr__(self):
        return "DeltaSet(%s)" % {n: len(cs) for n, cs in sorted(self.cells.items())}


def build_delta_set(cells, faces):
    return DeltaSet(cells, faces, validate=True)


# -- ordered simplicial complexes ----------------------------------------------

def _name(vertices):
    if all(v < 10 for v in vertices):
        return "".join(str(v) for v in vertices)
    return ",".join(str(v) for v in vertices)


def from_simplices(simplices):
    """Close a family of vertex sets under faces; d_i drops the i-th smallest vertex."""
    closed = set()
    for s in simplices:
        s = tuple(sorted(set(s)))
        for k in range(1, len(s) + 1):
            closed.update(combinations(s, k))
    cells, faces = {}, {}
    for s in sorted(closed, key=lambda t: (len(t), t)):
        n = len(s) - 1
        cells.setdefault(n, []).append(_name(s))
        if n:
            for i in range(n + 1):
                faces.setdefault((n, i), {})[_name(s)] = _name(s[:i] + s[i + 1:])
    return DeltaSet(cells, faces)


def standard_simplex(m):
    return from_simplices([range(m + 1)])


def simplex_boundary(m):
    if m < 1:
        raise ValueError("the boundary of a point is empty")
    return from_simplices(list(combinations(range(m + 1), m)))


def circle():
    """One vertex and one edge whose two ends coincide."""
    return DeltaSet({0: ["v"], 1: ["e"]}, {(1, 0): {"e": "v"}, (1, 1): {"e": "v"}})


def point():
    return DeltaSet({0: ["p"]}, {})


BUILTINS = {"point": point, "circle": circle}
for _m in range(5):
    BUILTINS["delta%d" % _m] = (lambda m: lambda: standard_simplex(m))(_m)
for _m in range(1, 5):
    BUILTINS["boundary%d" % _m] = (lambda m: lambda: simplex_boundary(m))(_m)


def builtin(name):
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValueError("unknown built-in Delta-set %r (known: %s)"
                         % (name, ", ".join(sorted(BUILTINS)))) from None


def random_delta_set(seed, vertices=6, max_dim=3, count=4):
    """Union of random simplices on a fixed vertex set, closed under faces."""
    rng = _random.Random(seed)
    tops = []
    for _ in range(rng.randint(1, count)):
        k = rng.randint(1, min(max_dim, vertices - 1) + 1)
        tops.append(rng.sample(range(vertices), k))
    return from_simplices(tops)


# -- the q-differential ----------------------------------------------------------

def _check_root(q, N):
    if q ** N != 1 or q == 1:
        raise RootOfUnityError("q must satisfy q^%d = 1 and q != 1" % N)


def chain_ncomplex(x, q, N=None):
    """Chains on x with d_q = sum_i q^i d_i.  With N given, q must be a
    nontrivial N-th root of unity and the result is validated as an N-complex."""
    q = _as_scalar(q)
    F = q.field
    if N is not None:
        _check_root(q, N)
        validate = True
    else:
        order = multiplicative_order(q, bound=64)
        if order and order > 1:
            N, validate = order, True
        else:
            N, validate = x.dimension + 1 if x.dimension >= 0 else 1, False
    qpow = [q ** i for i in range(x.dimension + 2)]
    dims = {n: len(cs) for n, cs in x.cells.items()}
    diffs = {}
    for n, cs in x.cells.items():
        if n == 0 or n - 1 not in x.cells:
            continue
        lower = x._index[n - 1]
        rows = [[F.zero] * len(cs) for _ in range(len(lower))]
        for col, c in enumerate(cs):
            for i in range(n + 1):
                r = lower[x.face(n, i, c)]
                rows[r][col] = rows[r][col] + qpow[i]
        diffs[n] = ExactMatrix.from_rows(rows, F, len(cs))
    return NComplex(N, dims, diffs, F, validate=validate)


def cell_vector(x, n, cell, field=QQ):
    v = [field.zero] * len(x.cells[n])
    v[x._index[n][cell]] = field.one
    return tuple(v)


def formal_sum(x, n, v):
    """{cell: coefficient} for a coordinate vector in dimension n."""
    return {c: a for c, a in zip(x.cells.get(n, []), v) if a}


def dq_power(x, cell, n_power, q):
    """d_q^n_power (cell) by iterating the chain differential."""
    q = _as_scalar(q)
    m = next(n for n, cs in x.cells.items() if cell in x._index[n])
    out = {cell: q.field.one}
    for step in range(n_power):
        nxt = {}
        dim = m - step
        for c, a in out.items():
            for i in range(dim + 1):
                f = x.face(dim, i, c)
                nxt[f] = nxt.get(f, q.field.zero) + a * q ** i
        out = {c: a for c, a in nxt.items() if a}
    return out


def dq_power_oracle(x, cell, n_power, q):
    """[n!]_q sum over m-n+1 >= i_1 >= ... >= i_n >= 0 of
    q^(i_1+...+i_n) d_(i_1)...d_(i_n)(cell), for a cell of dimension m."""
    q = _as_scalar(q)
    m = next(n for n, cs in x.cells.items() if cell in x._index[n])
    if n_power > m:
        raise ValueError("power %d exceeds the cell dimension %d" % (n_power, m))
    F = q.field
    if n_power == 0:
        return {cell: F.one}
    fac = q_factorial(n_power, q)
    if not fac:
        return {}
    out = {}
    top = m - n_power + 1

    def walk(prefix, bound):
        if len(prefix) == n_power:
            f = x.iterated_face(prefix, cell, m)
            out[f] = out.get(f, F.zero) + q ** sum(prefix)
            return
        for i in range(bound + 1):
            walk(prefix + (i,), i)

    for i1 in range(top + 1):
        walk((i1,), i1)
    return {c: a * fac for c, a in out.items() if a * fac}
