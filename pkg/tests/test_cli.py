import json

import pytest

from qhomology import interchange as io
from qhomology.cli import main
from qhomology.deltaset import builtin
from qhomology.derham import QForm
from qhomology.field import make_field, root_of_unity
from qhomology.gauge import MatrixForm, QConnection
from qhomology.linalg import ExactMatrix
from qhomology.ncomplex import NComplex, elementary_chain


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else io.dumps(obj))
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


# -- usage errors ----------------------------------------------------------------

def test_no_command_is_usage_error(capsys):
    assert run(capsys)[0] == 2


def test_unknown_command(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope.json"))
    assert code == 2 and err.startswith("error:")


def test_bad_scalar_is_usage_error(capsys, write):
    path = write("s.json", '{"kind": "scalar", "M": 1, "coords": ["1/0"]}')
    code, _, err = run(capsys, "verify", path)
    assert code == 2 and "zero denominator" in err


def test_bad_json_reports_position(capsys, write):
    code, _, err = run(capsys, "describe", write("b.json", '{"kind": "complex",\n  "N": }'))
    assert code == 2 and "line 2 column" in err


def test_run_needs_suite(capsys):
    assert run(capsys, "run")[0] == 2


def test_global_flags_before_or_after_command(capsys):
    a = run(capsys, "--seed", "3", "run", "q-combinatorics", "--list")
    b = run(capsys, "run", "q-combinatorics", "--list", "--seed", "3")
    assert a[0] == b[0] == 0 and a[1] == b[1]


# -- complexes --------------------------------------------------------------------

def test_verify_valid_and_invalid(capsys, write):
    good = write("good.json", elementary_chain(3, 2, 3, 1))
    assert run(capsys, "verify", good)[:2] == (0, "ok: valid complex\n")
    obj = io.to_obj(NComplex(2, {0: 1, 1: 1}, {}))
    obj["degrees"].append({"i": 2, "dim": 1})
    one = {"rows": 1, "cols": 1, "data": [[["1"]]]}
    obj["diffs"] = [{"i": 1, "matrix": one}, {"i": 2, "matrix": one}]
    code, out, _ = run(capsys, "verify", write("bad.json", json.dumps(obj)))
    assert code == 1 and out.startswith("FAIL")


def test_describe_elementary_chain_has_no_homology(capsys, write):
    code, info = run_json(capsys, "describe", write("c.json", elementary_chain(3, 2, 3, 1)))
    assert code == 0
    assert info["dims"] == {"0": 1, "1": 1, "2": 1}
    assert all(cell["dim"] == 0 for cell in info["homology"])


def test_describe_zero_differential(capsys, write):
    c = NComplex(3, {0: 2, 1: 1})
    code, info = run_json(capsys, "describe", write("z.json", c))
    dims = {(h["p"], h["i"]): h["dim"] for h in info["homology"]}
    assert dims[(1, 0)] == 2 and dims[(2, 1)] == 1


def test_homology_filter(capsys, write):
    code, info = run_json(capsys, "homology", write("z.json", NComplex(3, {0: 2})), "--p", "1")
    assert code == 0 and {c["p"] for c in info["cells"]} == {1}


def test_total_homology_is_exact_for_order_three(capsys, write):
    code, info = run_json(capsys, "total", write("z.json", NComplex(3, {0: 1})))
    assert code == 0 and info["exact"] is True and info["dims"] == {"-2": 1, "-1": 1}


def test_poincare(capsys, write):
    code, info = run_json(capsys, "poincare", write("c.json", elementary_chain(3, 2, 3, 1)))
    assert code == 0 and info["value"] == "0" and info["exact"] is True


def test_simplicial_builtin_and_emit(capsys, tmp_path):
    out = str(tmp_path / "chain.json")
    code, info = run_json(capsys, "simplicial", "--builtin", "delta2", "--q-order", "3",
                          "--emit", out)
    assert code == 0 and info["dims"] == {"0": 3, "1": 3, "2": 1}
    assert io.load(out).N == 3


def test_simplicial_from_file(capsys, write):
    code, info = run_json(capsys, "simplicial", "--in", write("d.json", builtin("delta2")),
                          "--q-order", "2")
    assert code == 0 and info["N"] == 2


@pytest.mark.parametrize("op", ["tensor", "hom", "nullhomotopy"])
def test_homtest(capsys, write, op):
    F = make_field(3)
    a = write("a.json", elementary_chain(3, 1, 2, 1, F))
    b = write("b.json", NComplex(3, {0: 1, 1: 1}, {1: ExactMatrix.identity(1, F)}, F))
    assert run(capsys, "homtest", "--op", op, "--in", a, b)[0] == 0


def test_homtest_rejects_mixed_orders(capsys, write):
    a = write("a.json", elementary_chain(3, 1, 2, 1))
    b = write("b.json", elementary_chain(4, 1, 2, 1))
    assert run(capsys, "homtest", "--op", "tensor", "--in", a, b)[0] == 2


# -- forms, quantum, connections --------------------------------------------------

def test_derham_checks(capsys):
    assert run(capsys, "derham", "--check", "truncation", "--vars", "2", "--max-degree", "2")[0] == 0
    assert run(capsys, "derham", "--check", "vanishing", "--vars", "2", "--q-order", "2",
               "--max-degree", "3")[0] == 0
    assert run(capsys, "derham", "--check", "vanishing", "--vars", "3", "--q-order", "3",
               "--max-degree", "2")[0] == 1


def test_quantum_checks(capsys):
    assert run(capsys, "quantum", "--check", "comul", "--relations", "column", "--q-order", "3")[0] == 0
    assert run(capsys, "quantum", "--check", "comul", "--q-order", "3")[0] == 1


def _flat_connection():
    z = root_of_unity(3)
    return QConnection(MatrixForm([[QForm.monomial(3, (0, 1, 0), (0,), 1, z.field)]]), z)


def test_connection_commands(capsys, write):
    path = write("A.json", _flat_connection())
    code, out, _ = run(capsys, "curvature", path)
    assert code == 0 and "F[0][0] = 0" in out
    assert run(capsys, "chern", path, "--p", "1")[0] == 0
    assert run(capsys, "gauge-check", path, "--g", "constant-seed 1")[0] == 0
    assert run(capsys, "cs", path)[0] == 0
    assert run(capsys, "gauge-check", path, "--g", "sideways 1")[0] == 2


def test_curvature_reports_order_zero_failure(capsys, write):
    from qhomology.gauge import random_connection
    code, out, _ = run(capsys, "curvature", write("A.json", random_connection(0, 3)))
    assert code == 1 and out.startswith("FAIL")


# -- random, convert, run ---------------------------------------------------------

@pytest.mark.parametrize("kind", ["complex", "form", "connection", "deltaset"])
def test_random_objects_are_seeded_and_loadable(capsys, kind):
    a = run(capsys, "random", "--kind", kind, "--seed", "5")
    b = run(capsys, "random", "--kind", kind, "--seed", "5")
    assert a[0] == 0 and a[1] == b[1]
    io.loads(a[1], kind)


def test_convert_is_idempotent(capsys, write):
    path = write("d.json", json.dumps(io.to_obj(builtin("delta2"))))
    code, once, _ = run(capsys, "convert", path)
    code2, twice, _ = run(capsys, "convert", write("d2.json", once))
    assert code == code2 == 0 and once == twice == io.dumps(builtin("delta2"))


def test_run_report_is_deterministic(capsys, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert run(capsys, "run", "simplicial", "--seed", "4", "--out", a)[0] == 0
    assert run(capsys, "run", "simplicial", "--seed", "4", "--out", b)[0] == 0
    with open(a) as fa, open(b) as fb:
        assert fa.read() == fb.read()


def test_failure_witness_replays(capsys, tmp_path):
    code, report = run_json(capsys, "run", "homops")
    assert code == 1 and report["summary"]["failed"] > 0
    failed = [r for r in report["records"] if not r["passed"]][0]
    path = tmp_path / "w.json"
    path.write_text(json.dumps(failed))
    code, out, _ = run(capsys, "run", "--replay", str(path))
    assert code == 1 and out.startswith("FAIL " + failed["check"])


def test_replay_of_unknown_check_is_usage_error(capsys, tmp_path):
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"check": "no.such.check", "params": {}}))
    code, _, err = run(capsys, "run", "--replay", str(path))
    assert code == 2 and "unknown check" in err
