import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhomology import interchange as io
from qhomology.checks import sample_object
from qhomology.deltaset import builtin
from qhomology.derham import QForm
from qhomology.field import QQ, make_field, root_of_unity
from qhomology.ncomplex import NComplex, elementary_chain

KINDS = ["complex", "form", "connection", "deltaset", "scalar", "matrix"]

# Written by hand in a different key order and with the faces shuffled.
DELTA2_HANDWRITTEN = """
{"schema": "qhomology/1", "kind": "deltaset",
 "faces": [
   {"n": 2, "i": 2, "map": {"012": "01"}},
   {"n": 2, "i": 0, "map": {"012": "12"}},
   {"n": 2, "i": 1, "map": {"012": "02"}},
   {"n": 1, "i": 1, "map": {"12": "1", "01": "0", "02": "0"}},
   {"n": 1, "i": 0, "map": {"01": "1", "02": "2", "12": "2"}}],
 "cells": {"2": ["012"], "1": ["01", "02", "12"], "0": ["0", "1", "2"]}}
"""


def _same(kind, x, y):
    if kind == "connection":
        return y.A == x.A and y.N == x.N and y.q == x.q
    return y == x


@given(st.sampled_from(KINDS), st.integers(0, 10 ** 4))
def test_round_trip(kind, seed):
    x = sample_object(kind, seed)
    text = io.dumps(x)
    assert _same(kind, x, io.loads(text, kind))
    assert io.convert_text(text) == text


def test_handwritten_delta_set_converts_to_canonical_bytes():
    assert io.convert_text(DELTA2_HANDWRITTEN) == io.dumps(builtin("delta2"))


def test_canonical_scalar_layout():
    z = root_of_unity(3)
    assert json.loads(io.dumps(Fraction(1, 2) * z + 3)) == \
        {"kind": "scalar", "M": 3, "coords": ["3", "1/2"], "schema": "qhomology/1"}
    assert io.loads(io.dumps(QQ(Fraction(-7, 4)))) == QQ(Fraction(-7, 4))


def test_form_terms_layout():
    F = make_field(3)
    w = QForm.monomial(2, (1, 0), (1,), 2, F)
    obj = io.to_obj(w)
    assert obj["terms"] == [{"x": [1, 0], "xi": [1], "c": ["2", "0"]}]


def test_complex_round_trip_keeps_differentials():
    c = elementary_chain(3, 2, 3, 1, make_field(3))
    assert io.loads(io.dumps(c)) == c


def _errors(text, expect=None):
    with pytest.raises(io.SchemaError) as e:
        io.loads(text, expect)
    return e.value


def test_zero_denominator_rejected():
    e = _errors('{"kind": "scalar", "M": 1, "coords": ["1/0"]}')
    assert e.path == ".coords[0]" and "zero denominator" in str(e)


def test_bad_json_reports_position():
    e = _errors('{"kind": ')
    assert e.path.startswith("line 1 column")


@pytest.mark.parametrize("text, path", [
    ('[]', ""),
    ('{"kind": "teapot"}', "kind"),
    ('{"kind": "scalar", "coords": ["1"]}', ""),
    ('{"kind": "scalar", "M": 0, "coords": ["1"]}', ".M"),
    ('{"kind": "scalar", "M": 3, "coords": ["1"]}', ".coords"),
    ('{"kind": "scalar", "M": 1, "coords": ["x"]}', ".coords[0]"),
    ('{"kind": "scalar", "M": 1, "coords": ["1"], "schema": "other/2"}', "schema"),
    ('{"kind": "matrix", "M": 1, "rows": 1, "cols": 2, "data": [["1"]]}', ".data"),
    ('{"kind": "form", "M": 1, "n": 2, "terms": [{"x": [1], "xi": [], "c": ["1"]}]}',
     ".terms[0].x"),
    ('{"kind": "form", "M": 1, "n": 2, "terms": [{"x": [0, 0], "xi": [1, 0], "c": ["1"]}]}',
     ".terms[0].xi"),
])
def test_schema_errors_carry_paths(text, path):
    assert _errors(text).path == path


def test_expected_kind_enforced():
    text = io.dumps(QQ(1))
    e = _errors(text, "complex")
    assert e.path == "kind"


def test_invalid_complex_rejected():
    obj = io.to_obj(NComplex(2, {0: 1, 1: 1}, {}, QQ))
    obj["N"] = 2
    obj["degrees"].append({"i": 2, "dim": 1})
    one = {"rows": 1, "cols": 1, "data": [[["1"]]]}
    obj["diffs"] = [{"i": 1, "matrix": one}, {"i": 2, "matrix": one}]
    with pytest.raises(ValueError):
        io.from_obj(obj)


def test_unserializable_type():
    with pytest.raises(TypeError):
        io.to_obj(object())
