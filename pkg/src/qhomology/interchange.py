"""
Canonical JSON for scalars, matrices, N-complexes, graded maps, forms,
connections and Delta-sets.

Scalars inside a container are lists of coordinate strings ("p" or "p/q",
lowest terms) over the container's field Q(zeta_M).  Standalone scalars
carry their own "M".  Dumps use sorted keys and a trailing newline, so
converting an already canonical file is a no-op.
"""

import json
from fractions import Fraction

from .deltaset import DeltaSet
from .derham import QForm
from .field import make_field
from .gauge import MatrixForm, QConnection
from .linalg import ExactMatrix
from .ncomplex import NComplex

SCHEMA = "qhomology/1"
KINDS = ("scalar", "matrix", "complex", "graded_map", "form", "connection", "deltaset")


class SchemaError(ValueError):
    """Malformed input; `path` locates the offending field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__("%s: %s" % (path or "<root>", message))


# -- scalars -----------------------------------------------------------------

def _coord_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def _parse_coord(s, path):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(path, "coordinate must be a string 'p' or 'p/q'")
    try:
        if isinstance(s, str) and "/" in s:
            num, den = (int(p) for p in s.split("/"))
        else:
            num, den = int(s), 1
    except ValueError:
        raise SchemaError(path, "not a rational number: %r" % (s,)) from None
    if den == 0:
        raise SchemaError(path, "zero denominator in %r" % (s,))
    return Fraction(num, den)


def coords_out(x):
    return [_coord_str(c) for c in x.coords]


def coords_in(field, data, path):
    if not isinstance(data, list):
        raise SchemaError(path, "scalar must be a list of coordinates")
    if len(data) != field.degree:
        raise SchemaError(path, "expected %d coordinates for Q(zeta_%d), got %d"
                          % (field.degree, field.M, len(data)))
    return field.from_coords([_parse_coord(s, "%s[%d]" % (path, k)) for k, s in enumerate(data)])


def scalar_to_obj(x):
    return {"kind": "scalar", "M": x.field.M, "coords": coords_out(x)}


def scalar_from_obj(obj, path=""):
    field = _field(obj, path)
    return coords_in(field, _get(obj, "coords", path), path + ".coords")


# -- helpers -------------------------------------------------------------------------

def _get(obj, key, path, kind=None):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError(path, "missing field %r" % key)
    v = obj[key]
    if kind is not None and (not isinstance(v, kind) or isinstance(v, bool)):
        raise SchemaError("%s.%s" % (path, key), "expected %s" % getattr(kind, "__name__", kind))
    return v


def _field(obj, path):
    M = _get(obj, "M", path, int)
    if M < 1:
        raise SchemaError(path + ".M", "M must be positive")
    return make_field(M)


def _int_key(k, path):
    try:
        return int(k)
    except (TypeError, ValueError):
        raise SchemaError(path, "degree key %r is not an integer" % (k,)) from None


# -- matrices and complexes -----------------------------------------------------------

def matrix_body(m):
    return {"rows": m.rows, "cols": m.cols,
            "data": [[coords_out(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]}


def matrix_from_body(field, obj, path):
    rows = _get(obj, "rows", path, int)
    cols = _get(obj, "cols", path, int)
    data = _get(obj, "data", path, list)
    if len(data) != rows or any(not isinstance(r, list) or len(r) != cols for r in data):
        raise SchemaError(path + ".data", "shape does not match %dx%d" % (rows, cols))
    return ExactMatrix.from_rows(
        [[coords_in(field, c, "%s.data[%d][%d]" % (path, i, j)) for j, c in enumerate(r)]
         for i, r in enumerate(data)], field, cols)


def matrix_to_obj(m):
    out = {"kind": "matrix", "M": m.field.M}
    out.update(matrix_body(m))
    return out


def matrix_from_obj(obj, path=""):
    return matrix_from_body(_field(obj, path), obj, path)


def complex_to_obj(c):
    return {"kind": "complex", "M": c.field.M, "N": c.N,
            "degrees": [{"i": i, "dim": k} for i, k in sorted(c.dims.items())],
            "diffs": [{"i": i, "matrix": matrix_body(m)} for i, m in sorted(c.diffs.items())]}


def complex_from_obj(obj, path="", validate=True):
    field = _field(obj, path)
    N = _get(obj, "N", path, int)
    dims = {}
    for k, entry in enumerate(_get(obj, "degrees", path, list)):
        p = "%s.degrees[%d]" % (path, k)
        i = _get(entry, "i", p, int)
        d = _get(entry, "dim", p, int)
        if d < 0:
            raise SchemaError(p + ".dim", "dimension must be non-negative")
        if i in dims:
            raise SchemaError(p + ".i", "degree %d listed twice" % i)
        dims[i] = d
    diffs = {}
    for k, entry in enumerate(_get(obj, "diffs", path, list)):
        p = "%s.diffs[%d]" % (path, k)
        i = _get(entry, "i", p, int)
        m = matrix_from_body(field, _get(entry, "matrix", p, dict), p + ".matrix")
        if m.shape != (dims.get(i - 1, 0), dims.get(i, 0)):
            raise SchemaError(p, "shape %s does not match the dimensions of degrees %d, %d"
                              % (m.shape, i - 1, i))
        diffs[i] = m
    return NComplex(N, dims, diffs, field, validate=validate)


def graded_map_to_obj(f):
    return {"kind": "graded_map", "M": f.field.M, "degree": f.degree,
            "components": {str(i): matrix_body(m) for i, m in sorted(f.components.items())}}


def graded_map_from_obj(obj, source, target, path=""):
    from .homops import GradedMap
    field = _field(obj, path)
    comps = {_int_key(k, path): matrix_from_body(field, body, "%s.components.%s" % (path, k))
             for k, body in _get(obj, "components", path, dict).items()}
    return GradedMap(source, target, _get(obj, "degree", path, int), comps)


# -- forms and connections --------------------------------------------------------------

def form_terms(w):
    return [{"x": list(a), "xi": list(J), "c": coords_out(c)}
            for (a, J), c in sorted(w.terms.items(), key=lambda t: (t[0][1], t[0][0]))]


def form_from_terms(n, field, terms, path):
    if not isinstance(terms, list):
        raise SchemaError(path, "terms must be a list")
    out = {}
    for k, t in enumerate(terms):
        p = "%s[%d]" % (path, k)
        x = _get(t, "x", p, list)
        xi = _get(t, "xi", p, list)
        if len(x) != n or any(not isinstance(e, int) or e < 0 for e in x):
            raise SchemaError(p + ".x", "need %d non-negative exponents" % n)
        if list(xi) != sorted(set(xi)) or any(not isinstance(j, int) or not 0 <= j < n for j in xi):
            raise SchemaError(p + ".xi", "indices must be strictly increasing in 0..%d" % (n - 1))
        key = (tuple(x), tuple(xi))
        c = coords_in(field, _get(t, "c", p), p + ".c")
        out[key] = out[key] + c if key in out else c
    return QForm(n, field, out)


def form_to_obj(w):
    return {"kind": "form", "M": w.field.M, "n": w.n, "terms": form_terms(w)}


def form_from_obj(obj, path=""):
    field = _field(obj, path)
    n = _get(obj, "n", path, int)
    return form_from_terms(n, field, _get(obj, "terms", path), path + ".terms")


def matrix_form_body(A):
    return [[form_terms(e) for e in row] for row in A.entries]


def matrix_form_from_body(n, field, rows, path):
    if not isinstance(rows, list) or not rows:
        raise SchemaError(path, "expected a non-empty square array of forms")
    return MatrixForm([[form_from_terms(n, field, e, "%s[%d][%d]" % (path, i, j))
                        for j, e in enumerate(row)] for i, row in enumerate(rows)])


def connection_to_obj(conn):
    return {"kind": "connection", "M": conn.field.M, "r": conn.r, "n": conn.n,
            "N": conn.N, "A": matrix_form_body(conn.A)}


def connection_from_obj(obj, path=""):
    from .field import root_of_unity
    field = _field(obj, path)
    n = _get(obj, "n", path, int)
    N = _get(obj, "N", path, int)
    r = _get(obj, "r", path, int)
    A = matrix_form_from_body(n, field, _get(obj, "A", path), path + ".A")
    if A.r != r:
        raise SchemaError(path + ".A", "rank %d does not match r = %d" % (A.r, r))
    q = field.embed(root_of_unity(N)) if field.M % N == 0 else None
    if q is None:
        raise SchemaError(path + ".N", "Q(zeta_%d) has no primitive %d-th root" % (field.M, N))
    try:
        return QConnection(A, q, N)
    except ValueError as e:
        raise SchemaError(path, str(e)) from None


# -- Delta-sets -------------------------------------------------------------------------------

def deltaset_to_obj(x):
    out = {"kind": "deltaset"}
    out.update(x.to_dict())
    return out


def deltaset_from_obj(obj, path=""):
    cells = _get(obj, "cells", path, dict)
    faces = _get(obj, "faces", path, list)
    for k, f in enumerate(faces):
        p = "%s.faces[%d]" % (path, k)
        _get(f, "n", p, int)
        _get(f, "i", p, int)
        _get(f, "map", p, dict)
    try:
        return DeltaSet.from_dict({"cells": cells, "faces": faces})
    except (KeyError, TypeError) as e:
        raise SchemaError(path, "bad Delta-set: %s" % e) from None


# -- dispatch -------------------------------------------------------------------------------

_TO = {
    "complex": complex_to_obj, "form": form_to_obj, "connection": connection_to_obj,
    "deltaset": deltaset_to_obj, "matrix": matrix_to_obj, "scalar": scalar_to_obj,
    "graded_map": graded_map_to_obj,
}
_FROM = {
    "complex": complex_from_obj, "form": form_from_obj, "connection": connection_from_obj,
    "deltaset": deltaset_from_obj, "matrix": matrix_from_obj, "scalar": scalar_from_obj,
}


def kind_of(obj):
    for kind, typ in (("complex", NComplex), ("form", QForm), ("connection", QConnection),
                      ("deltaset", DeltaSet), ("matrix", ExactMatrix)):
        if isinstance(obj, typ):
            return kind
    from .field import CycloScalar
    from .homops import GradedMap
    if isinstance(obj, CycloScalar):
        return "scalar"
    if isinstance(obj, GradedMap):
        return "graded_map"
    raise TypeError("cannot serialize %r" % type(obj).__name__)


def to_obj(x):
    out = _TO[kind_of(x)](x)
    out["schema"] = SCHEMA
    return out


def from_obj(obj, expect=None):
    if not isinstance(obj, dict):
        raise SchemaError("", "top level must be an object")
    kind = obj.get("kind")
    if kind not in _FROM:
        raise SchemaError("kind", "unknown kind %r" % (kind,))
    if expect is not None and kind != expect:
        raise SchemaError("kind", "expected %r, found %r" % (expect, kind))
    schema = obj.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise SchemaError("schema", "unsupported schema %r" % (schema,))
    return _FROM[kind](obj)


def dumps(x):
    obj = x if isinstance(x, dict) else to_obj(x)
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text, expect=None):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("line %d column %d" % (e.lineno, e.colno), e.msg) from None
    return from_obj(obj, expect)


def load(path, expect=None):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), expect)


def dump(x, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(x))


def convert_text(text, target=None):
    """Parse and re-emit canonically; idempotent."""
    return dumps(loads(text, target))
