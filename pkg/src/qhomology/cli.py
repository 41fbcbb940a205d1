"""
Command-line entry point: ``python3 -m qhomology COMMAND ...``.

Exit status: 0 when every check passes, 1 when a check fails, 2 for usage
or parse errors.
"""

import argparse
import json
import random
import sys

from . import deltaset as ds
from . import derham as dr
from . import gauge as gg
from . import homops as ho
from . import interchange as io
from . import ncomplex as nc
from . import quantum as qs
from .checks import replay
from .field import root_of_unity
from .suites import SUITES, run_suite, suite_instances

OK, FAILED, USAGE = 0, 1, 2

_DEFAULTS = {"seed": 0, "profile": "small", "json": False, "q_order": None}


class UsageError(Exception):
    pass


def _common():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    # SUPPRESS lets the flags appear before or after the command name
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    g.add_argument("--profile", choices=("small", "medium"), default=argparse.SUPPRESS)
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="structured output")
    g.add_argument("--q-order", type=int, dest="q_order", default=argparse.SUPPRESS,
                   help="order N of the root of unity q")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="python3 -m qhomology", parents=[common],
                                     description="Exact N-complex homological algebra at roots of unity.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def cmd(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    cmd("verify", "load a file and validate it").add_argument("file")
    p = cmd("homology", "amplitude homology table of a complex")
    p.add_argument("file")
    p.add_argument("--p", type=int)
    cmd("total", "total homology of a complex").add_argument("file")
    cmd("poincare", "Poincare polynomial and its value at zeta_N").add_argument("file")

    p = cmd("simplicial", "chain N-complex of a Delta-set")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=sorted(ds.BUILTINS))
    src.add_argument("--in", dest="infile")
    p.add_argument("--emit", help="write the chain complex to this file")

    p = cmd("homtest", "q-tensor, q-Hom and null-homotopy tests on two complexes")
    p.add_argument("--op", choices=("tensor", "hom", "nullhomotopy"), required=True)
    p.add_argument("--in", dest="infiles", nargs=2, required=True, metavar="FILE")

    p = cmd("derham", "q-de Rham checks")
    p.add_argument("--vars", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--check", choices=("leibniz", "dpower", "vanishing", "truncation"), required=True)

    p = cmd("quantum", "quadratic relations of the coacting matrix")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--check", choices=("relations", "comul", "coaction"), required=True)
    p.add_argument("--relations", default="displayed",
                   choices=("displayed", "literal", "column", "mixed"))

    cmd("curvature", "N-curvature of a connection").add_argument("file")
    p = cmd("gauge-check", "gauge covariance of the curvature")
    p.add_argument("file")
    p.add_argument("--g", default="unipotent-seed 0",
                   help="'unipotent-seed S' or 'constant-seed S'")
    p = cmd("chern", "tr(F^p) and whether it is closed")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=1)
    cmd("cs", "Chern-Simons density tr(dA A + q A dA + A A A)").add_argument("file")

    p = cmd("random", "emit a seeded random object")
    p.add_argument("--kind", default="complex", choices=("complex", "form", "connection", "deltaset"))
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--out")

    p = cmd("run", "run a verification suite or replay a witness")
    p.add_argument("suite", nargs="?", choices=SUITES)
    p.add_argument("--N", type=int)
    p.add_argument("--replay", metavar="WITNESS", help="re-run a stored failure witness")
    p.add_argument("--out", help="also write the structured report here")
    p.add_argument("--list", action="store_true", help="list instances without running them")

    p = cmd("convert", "re-serialize a file canonically")
    p.add_argument("file")
    p.add_argument("--to", choices=("complex", "form", "connection", "deltaset", "matrix",
                                    "scalar"))
    p.add_argument("--out")
    cmd("describe", "summary of a file").add_argument("file")
    return parser


# -- output helpers -----------------------------------------------------------------

def _emit(args, obj, text):
    if args.json:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _table(rows, header):
    widths = [max(len(str(r[k])) for r in [header] + rows) for k in range(len(header))]
    fmt = "  ".join("%%%ds" % w for w in widths)
    return "\n".join(fmt % tuple(r) for r in [header] + rows) + "\n"


def _load(path, expect=None):
    try:
        return io.load(path, expect)
    except OSError as e:
        raise UsageError("%s: %s" % (path, e.strerror or e)) from None
    except io.SchemaError as e:
        raise UsageError("%s: %s" % (path, e)) from None
    except nc.NotNilpotent as e:
        raise UsageError("%s: d^N is nonzero on degrees %s..%s" % (path, *e.window)) from None
    except (ds.SimplicialIdentityViolation, ValueError) as e:
        raise UsageError("%s: %s" % (path, e)) from None


def _q(args, default=3):
    N = args.q_order or default
    if N < 1:
        raise UsageError("--q-order must be positive")
    return root_of_unity(N), N


# -- commands ---------------------------------------------------------------------------

def cmd_verify(args):
    try:
        obj = io.load(args.file)
    except OSError as e:
        raise UsageError("%s: %s" % (args.file, e.strerror or e)) from None
    except io.SchemaError as e:
        raise UsageError("%s: %s" % (args.file, e)) from None
    except nc.NotNilpotent as e:
        _emit(args, {"valid": False, "window": list(e.window)},
              "FAIL: d^N != 0 starting at degree %d" % e.window[1])
        return FAILED
    except ds.SimplicialIdentityViolation as e:
        _emit(args, {"valid": False, "error": str(e)}, "FAIL: %s" % e)
        return FAILED
    except ValueError as e:
        _emit(args, {"valid": False, "error": str(e)}, "FAIL: %s" % e)
        return FAILED
    kind = io.kind_of(obj)
    _emit(args, {"valid": True, "kind": kind}, "ok: valid %s" % kind)
    return OK


def cmd_homology(args):
    c = _load(args.file, "complex")
    D = nc.homology_diagram(c)
    rows = sorted((p, i, d) for (p, i), d in D.dims_table().items()
                  if args.p is None or p == args.p)
    _emit(args, {"N": c.N, "cells": [{"p": p, "i": i, "dim": d} for p, i, d in rows]},
          _table(rows, ("p", "i", "dim")))
    return OK


def cmd_total(args):
    c = _load(args.file, "complex")
    T = nc.total_homology(c)
    dims = sorted(T.complex.dims.items())
    exact = nc.is_exact_2complex(T.complex) if c.N == 3 else None
    text = _table(dims, ("m", "dim H_m"))
    text += "order %d validated%s\n" % (c.N - 1, "" if exact is None else
                                        "; exact: %s" % ("yes" if exact else "no"))
    _emit(args, {"order": c.N - 1, "dims": {str(m): k for m, k in dims}, "exact": exact}, text)
    return OK if exact in (None, True) else FAILED


def cmd_poincare(args):
    c = _load(args.file, "complex")
    N = args.q_order or c.N
    coeffs = nc.poincare(c)
    value = nc.poincare_at_root(c, N)
    poly = " + ".join("%d*t^%d" % (k, i) for i, k in coeffs.items() if k) or "0"
    _emit(args, {"coefficients": {str(i): k for i, k in coeffs.items()}, "N": N,
                 "value": str(value), "exact": nc.is_n_exact(c)},
          "P(t) = %s\nP(zeta_%d) = %s\n" % (poly, N, value))
    return OK


def cmd_simplicial(args):
    x = ds.builtin(args.builtin) if args.builtin else _load(args.infile, "deltaset")
    q, N = _q(args)
    try:
        c = ds.chain_ncomplex(x, q, N)
    except nc.NotNilpotent as e:
        _emit(args, {"ok": False, "window": list(e.window)}, "FAIL: d_q^%d != 0" % N)
        return FAILED
    if args.emit:
        io.dump(c, args.emit)
    dims = sorted(c.dims.items())
    _emit(args, {"ok": True, "N": N, "dims": {str(i): k for i, k in dims}},
          "d_q^%d = 0 verified\n" % N + _table(dims, ("degree", "cells")))
    return OK


def cmd_homtest(args):
    C, E = (_load(f, "complex") for f in args.infiles)
    N = C.N
    if E.N != N:
        raise UsageError("both complexes must have the same N")
    if args.q_order and args.q_order != N:
        raise UsageError("--q-order %d does not match the complexes' N = %d" % (args.q_order, N))
    q = root_of_unity(N)
    C, E = C.to_field(q.field), E.to_field(q.field)
    try:
        if args.op == "tensor":
            out = ho.q_tensor(C, E, q).complex
        else:
            H = ho.q_hom(C, E, q)
            out = H.complex
    except nc.NotNilpotent as e:
        _emit(args, {"ok": False, "window": list(e.window)}, "FAIL: d^%d != 0" % N)
        return FAILED
    if args.op in ("tensor", "hom"):
        dims = sorted(out.dims.items())
        _emit(args, {"ok": True, "op": args.op, "dims": {str(i): k for i, k in dims}},
              "%s: order %d validated\n" % (args.op, N) + _table(dims, ("degree", "dim")))
        return OK
    rng = random.Random(args.seed)
    s, f = ho.random_null_homotopic(rng, H)
    cert = ho.null_homotopy_certificate(H, f)
    zero = all(m.is_zero() for m in ho.induced_on_homology(f).values())
    ok = cert is not None and zero
    _emit(args, {"ok": ok, "certificate": cert is not None, "induces_zero": zero},
          "null-homotopic map: certificate %s, induced maps zero: %s"
          % ("found" if cert is not None else "missing", "yes" if zero else "no"))
    return OK if ok else FAILED


def _seed_list(args):
    k = {"small": 5, "medium": 20}[args.profile]
    return [args.seed * 1000 + j for j in range(k)]


def cmd_derham(args):
    q, N = _q(args)
    n, D = args.vars, args.max_degree
    if args.check == "vanishing":
        rep = dr.vanishing_checker(n, N, D)
        rows = [c for c in rep["cells"] if c[3]]
        text = _table(rows, ("m", "p", "i", "dim")) if rows else "all cells vanish\n"
        text += "constants cell: %s\n" % {"%d,%d" % k: v for k, v in sorted(rep["constants"].items()) if v}
        text += "claimed zero: %d cells, violations: %d\n" % (len(rep["claimed_zero"]),
                                                            len(rep["violations"]))
        _emit(args, {"violations": [list(v) for v in rep["violations"]],
                     "nonzero": [list(c) for c in rows],
                     "constants": {"%d,%d" % k: v for k, v in sorted(rep["constants"].items())}}, text)
        return OK if not rep["violations"] else FAILED
    if args.check == "truncation":
        inst = [("derham.truncation_order", {"n": n, "N": N, "m": m}) for m in range(D + 1)]
    elif args.check == "leibniz":
        inst = [("derham.leibniz", {"seed": s, "n": n, "q": "zeta%d" % N}) for s in _seed_list(args)]
    else:
        inst = [("derham.d_power_product", {"seed": s, "n": n, "N": N, "q": "zeta%d" % N})
                for s in _seed_list(args)]
    return _run_list(args, "derham-" + args.check, inst)


def cmd_quantum(args):
    q, N = _q(args)
    n = args.n
    if args.relations == "displayed":
        I = qs.displayed_relations(n, q)
    else:
        I = qs.relations_from_covariance(n, q, args.relations)
    out = {"n": n, "N": N, "relations": args.relations, "span_dim": I.dim}
    if args.check == "relations":
        shown = qs.displayed_relations(n, q)
        derived = qs.relations_from_covariance(n, q, "literal")
        ok = derived == shown
        out.update({"displayed_dim": shown.dim, "derived_dim": derived.dim, "equal": ok})
        text = "displayed span: %d\nderived span: %d\nequal: %s\n" % (shown.dim, derived.dim, ok)
    elif args.check == "comul":
        res = qs.comultiplication_degree2_check(n, q, I)
        ok = res["ok"]
        out["failing"] = [qs.format_relation(n, r) for r in res["failures"]]
        text = "relation span: %d\ncomultiplication: %s\n" % (I.dim, "PASS" if ok else "FAIL")
        text += "".join("  not preserved: %s\n" % r for r in out["failing"][:5])
    else:
        orient = "mixed" if args.relations in ("displayed", "literal") else args.relations
        res = qs.coaction_checks(n, q, I, orient)
        ok = res["b"] and res["c"]
        out.update({"relations_preserved": res["b"], "commutes_with_d": res["c"]})
        text = "relation span: %d\nrelations preserved: %s\ncommutes with d: %s\n" % (
            I.dim, "PASS" if res["b"] else "FAIL", "PASS" if res["c"] else "FAIL")
    out["ok"] = ok
    _emit(args, out, text)
    return OK if ok else FAILED


def _matrix_text(M):
    return "".join("F[%d][%d] = %s\n" % (i, j, M[i, j]) for i in range(M.r) for j in range(M.r))


def _matrix_obj(M):
    return [[io.form_terms(e) for e in row] for row in M.entries]


def cmd_curvature(args):
    conn = _load(args.file, "connection")
    try:
        F = gg.curvature(conn)
    except gg.NotOrderZero as e:
        _emit(args, {"order_zero": False, "error": str(e)},
              "FAIL: %s" % e)
        return FAILED
    _emit(args, {"order_zero": True, "F": _matrix_obj(F)}, _matrix_text(F))
    return OK


def cmd_gauge_check(args):
    conn = _load(args.file, "connection")
    parts = args.g.replace("=", " ").split()
    if len(parts) != 2 or parts[0] not in ("unipotent-seed", "constant-seed"):
        raise UsageError("--g must be 'unipotent-seed S' or 'constant-seed S'")
    try:
        rng = random.Random(int(parts[1]))
    except ValueError:
        raise UsageError("--g seed must be an integer") from None
    if parts[0] == "unipotent-seed":
        g = gg.random_unipotent(rng, conn.r, conn.n, conn.field)
    else:
        g = gg.random_constant_gauge(rng, conn.r, conn.n, conn.field)
    defect = gg.covariance_defect(conn, g)
    ok = defect.is_zero()
    _emit(args, {"covariant": ok, "defect": _matrix_obj(defect)},
          "gauge covariance: %s\n" % ("PASS" if ok else "FAIL") + ("" if ok else _matrix_text(defect)))
    return OK if ok else FAILED


def cmd_chern(args):
    conn = _load(args.file, "connection")
    w = gg.chern_form(conn, args.p)
    closed = gg.chern_closed(conn, args.p)
    _emit(args, {"p": args.p, "form": io.form_terms(w), "closed": closed},
          "tr(F^%d) = %s\nclosed: %s\n" % (args.p, w, "yes" if closed else "no"))
    return OK if closed else FAILED


def cmd_cs(args):
    conn = _load(args.file, "connection")
    try:
        w = gg.cs_density(conn.A, conn.q)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(args, {"form": io.form_terms(w)}, "CS = %s\n" % w)
    return OK


def cmd_random(args):
    N = args.N
    if args.kind == "complex":
        F = root_of_unity(N).field
        gen = nc.random_exact if args.exact else nc.random_ncomplex
        obj = gen(N, args.profile, args.seed, F)
    elif args.kind == "connection":
        obj = gg.random_connection(args.seed, N)
    elif args.kind == "form":
        rng = random.Random(args.seed)
        obj = dr.random_form(rng, 3, rng.randint(0, 3), 3, root_of_unity(N).field)
    else:
        obj = ds.random_delta_set(args.seed)
    text = io.dumps(obj)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def _finish_report(args, report):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.dumps())
    sys.stdout.write(report.dumps() if args.json else report.text())
    return OK if report.passed else FAILED


def _run_list(args, name, inst):
    from .suites import run_instances
    manifest = {"suite": name, "seed": args.seed, "profile": args.profile, "N": args.q_order}
    args.out = getattr(args, "out", None)
    return _finish_report(args, run_instances(name, manifest, inst))


def cmd_run(args):
    if args.replay:
        try:
            with open(args.replay, encoding="utf-8") as fh:
                w = json.load(fh)
        except OSError as e:
            raise UsageError("%s: %s" % (args.replay, e.strerror or e)) from None
        except json.JSONDecodeError as e:
            raise UsageError("%s: line %d column %d: %s" % (args.replay, e.lineno, e.colno, e.msg)) from None
        w = w.get("witness", w)
        if not isinstance(w, dict) or "check" not in w or "params" not in w:
            raise UsageError("a witness needs 'check' and 'params'")
        try:
            passed, detail = replay(w)
        except KeyError as e:
            raise UsageError(e.args[0]) from None
        _emit(args, {"check": w["check"], "params": w["params"], "passed": passed, "detail": detail},
              "%s %s %s\n" % ("PASS" if passed else "FAIL", w["check"], json.dumps(w["params"], sort_keys=True)))
        return OK if passed else FAILED
    if not args.suite:
        raise UsageError("run needs a suite name or --replay")
    if args.list:
        for name, params in suite_instances(args.suite, args.seed, args.profile, args.N):
            sys.stdout.write("%s %s\n" % (name, json.dumps(params, sort_keys=True)))
        return OK
    return _finish_report(args, run_suite(args.suite, args.seed, args.profile, args.N))


def cmd_convert(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError("%s: %s" % (args.file, e.strerror or e)) from None
    try:
        out = io.convert_text(text, args.to)
    except (io.SchemaError, nc.NotNilpotent, ValueError) as e:
        raise UsageError("%s: %s" % (args.file, e)) from None
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return OK


def describe(obj):
    """(structured summary, text) for any loadable object."""
    kind = io.kind_of(obj)
    if kind == "complex":
        D = nc.homology_diagram(obj)
        rows = sorted((p, i, d) for (p, i), d in D.dims_table().items())
        dims = sorted(obj.dims.items())
        info = {"kind": kind, "N": obj.N, "M": obj.field.M,
                "dims": {str(i): k for i, k in dims},
                "support": list(obj.support) if obj.dims else [],
                "homology": [{"p": p, "i": i, "dim": d} for p, i, d in rows]}
        text = "%d-complex over Q(zeta_%d)\n" % (obj.N, obj.field.M)
        text += _table(dims, ("degree", "dim")) + "homology pH_i:\n" + _table(rows, ("p", "i", "dim"))
    elif kind == "form":
        grading = {}
        for (a, J) in obj.terms:
            key = (len(J), sum(a))
            grading[key] = grading.get(key, 0) + 1
        rows = sorted((k, m, c) for (k, m), c in grading.items())
        info = {"kind": kind, "n": obj.n, "M": obj.field.M,
                "grading": [{"form_degree": k, "poly_degree": m, "terms": c} for k, m, c in rows]}
        text = "form in %d variables over Q(zeta_%d)\n" % (obj.n, obj.field.M)
        text += _table(rows, ("form deg", "poly deg", "terms"))
    elif kind == "connection":
        info = {"kind": kind, "r": obj.r, "n": obj.n, "N": obj.N, "M": obj.field.M}
        text = "rank-%d q-connection in %d variables, N = %d\n" % (obj.r, obj.n, obj.N)
    elif kind == "deltaset":
        counts = sorted((n, len(c)) for n, c in obj.cells.items())
        info = {"kind": kind, "dimension": obj.dimension, "cells": {str(n): k for n, k in counts}}
        text = "Delta-set of dimension %d\n" % obj.dimension + _table(counts, ("n", "cells"))
    elif kind == "matrix":
        info = {"kind": kind, "rows": obj.rows, "cols": obj.cols, "M": obj.field.M}
        text = "%dx%d matrix over Q(zeta_%d)\n" % (obj.rows, obj.cols, obj.field.M)
    else:
        info = {"kind": kind, "M": obj.field.M, "value": str(obj)}
        text = "scalar %s in Q(zeta_%d)\n" % (obj, obj.field.M)
    return info, text


def cmd_describe(args):
    info, text = describe(_load(args.file))
    _emit(args, info, text)
    return OK


COMMANDS = {
    "verify": cmd_verify, "homology": cmd_homology, "total": cmd_total, "poincare": cmd_poincare,
    "simplicial": cmd_simplicial, "homtest": cmd_homtest, "derham": cmd_derham,
    "quantum": cmd_quantum, "curvature": cmd_curvature, "gauge-check": cmd_gauge_check,
    "chern": cmd_chern, "cs": cmd_cs, "random": cmd_random, "run": cmd_run,
    "convert": cmd_convert, "describe": cmd_describe,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK
    for k, v in _DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        sys.stderr.write("error: %s\n" % e)
        return USAGE
