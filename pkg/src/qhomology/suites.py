"""
Randomized verification suites and their reports.

A suite expands a manifest (seed, profile, optional N) into a list of
(check id, params) instances; the report holds one record per instance,
sorted canonically so that identical manifests give byte-identical output.
"""

import json
from dataclasses import dataclass, field

from .checks import run_check

CLAIMS = {
    "qcomb.root_vanishing": "[N!] and the inner Gaussian binomials vanish at a primitive N-th root",
    "qcomb.factorial_inversions": "[n!]_q is the inversion generating function of S_n",
    "simplicial.n_complex": "d_q^N = 0 on chains of a Delta-set at q = zeta_N",
    "simplicial.power_formula": "d_q^k equals [k!]_q times the ordered sum of iterated faces",
    "ncomplex.total_order": "total homology is an (N-1)-complex",
    "ncomplex.total_exact": "for N = 3 the total homology is exact",
    "ncomplex.diagram_commutes": "i_* and d_* commute on the homology diagram",
    "ncomplex.two_term": "X -> Y gives 0 -> Ker f -> X -> Y -> Coker f -> 0 exactly",
    "ncomplex.six_term": "X -> Y -> Z gives the exact kernel-cokernel sequence",
    "ncomplex.levels_nonzero": "a non-exact N-complex has homology at every level p < N",
    "ncomplex.poincare_exact": "an exact N-complex has P(zeta_N) = 0",
    "ncomplex.poincare_truncated": "a truncated chain has P(zeta_N) != 0",
    "homops.tensor_order": "the q-tensor product of N-complexes is an N-complex",
    "homops.hom_order": "the q-Hom of N-complexes is an N-complex",
    "homops.tensor_expansion": "d^n(v (x) w) expands with q-binomials at 1/q",
    "homops.hom_expansion": "d^n(f) expands with q-binomials at 1/q",
    "homops.leibniz_composition": "d(g o f) = (dg) o f + q^deg(g) g o (df)",
    "homops.null_homotopic_zero": "null-homotopic morphisms induce zero on homology",
    "homops.ideal": "null-homotopic morphisms form an ideal",
    "derham.leibniz": "d(uv) = d(u) v + q^deg(u) u d(v)",
    "derham.d_power_product": "d^N(uv) = sum_p q^(ip) [N, p]_q d^p(u) d^(N-p)(v)",
    "derham.truncation_order": "d^N = 0 on each total-degree truncation",
    "derham.face_identities": "the form faces satisfy d_i d_j = d_(j-1) d_i",
    "derham.faces_reassemble": "sum_nu q^nu d_nu is the exterior differential",
    "derham.vanishing": "pH^i = 0 for i + p + 1 <= N in positive total degree",
    "quantum.span_equality": "covariance relations span the displayed quadratic relations",
    "quantum.comultiplication": "the matrix comultiplication preserves the relations",
    "quantum.coaction": "the coaction preserves the form relations and commutes with d",
    "quantum.negative_drop": "dropping any relation breaks the comultiplication check",
    "quantum.negative_transposed": "the transposed coaction breaks the relations",
    "gauge.order_zero": "nabla^N is multiplication by a matrix of N-forms",
    "gauge.formula_n3": "the N = 3 curvature equals d^2A + dA.A + q A.dA + A.A.A",
    "gauge.covariance": "curvature is gauge covariant",
    "gauge.bianchi": "dF + AF - FA = 0",
    "gauge.chern": "tr(F^p) is closed",
    "gauge.divergence": "tr(d^2 A) is the displayed sum of second partials",
    "interchange.roundtrip": "parse o serialize is the identity and convert is idempotent",
}

SUITES = ("q-combinatorics", "simplicial", "ncomplex-theorems", "homops", "derham",
          "quantum", "gauge", "all")

_COUNTS = {"small": 3, "medium": 10}


@dataclass
class Record:
    check: str
    params: dict
    passed: bool
    detail: dict = field(default_factory=dict)

    def key(self):
        return (self.check, json.dumps(self.params, sort_keys=True))

    def to_obj(self):
        out = {"check": self.check, "claim": CLAIMS.get(self.check, ""),
               "instance": self.params, "passed": self.passed}
        if not self.passed:
            out["witness"] = {"check": self.check, "params": self.params, "detail": self.detail}
        return out


@dataclass
class Report:
    suite: str
    manifest: dict
    records: list

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    def failures(self):
        return [r for r in self.records if not r.passed]

    def to_obj(self):
        return {"suite": self.suite, "manifest": self.manifest,
                "passed": self.passed,
                "summary": {"total": len(self.records),
                            "failed": len(self.failures())},
                "records": [r.to_obj() for r in self.records]}

    def dumps(self):
        return json.dumps(self.to_obj(), sort_keys=True, indent=2) + "\n"

    def text(self):
        lines = []
        for r in self.records:
            lines.append("%s  %-28s %s" % ("PASS" if r.passed else "FAIL", r.check,
                                            json.dumps(r.params, sort_keys=True)))
        lines.append("%d checks, %d failed" % (len(self.records), len(self.failures())))
        return "\n".join(lines) + "\n"


def run_instances(suite, manifest, instances):
    records = [Record(name, params, *run_check(name, params)) for name, params in instances]
    records.sort(key=Record.key)
    return Report(suite, manifest, records)


def _Ns(N, default):
    return [N] if N else default


def suite_instances(suite, seed=0, profile="small", N=None):
    k = _COUNTS.get(profile, 3)
    base = seed * 1000
    seeds = [base + j for j in range(k)]
    out = []
    if suite in ("q-combinatorics", "all"):
        out += [("qcomb.root_vanishing", {"N": n}) for n in _Ns(N, range(2, 9))]
        out += [("qcomb.factorial_inversions", {"n": n, "q": q})
                for n in range(1, 6) for q in ("2", "-1/3", "zeta5")]
    if suite in ("simplicial", "all"):
        specs = ["builtin:delta%d" % m for m in range(5)] + \
                ["builtin:boundary%d" % m for m in range(1, 5)] + \
                ["random:%d" % s for s in seeds]
        out += [("simplicial.n_complex", {"deltaset": s, "N": n})
                for s in specs for n in _Ns(N, range(2, 7))]
        out += [("simplicial.power_formula", {"deltaset": s, "q": q})
                for s in specs[:5] for q in ("zeta2", "zeta3", "zeta4", "2")]
    if suite in ("ncomplex-theorems", "all"):
        for n in _Ns(N, [3, 4, 5]):
            out += [("ncomplex.total_order", {"N": n, "seed": s, "profile": profile}) for s in seeds]
            out += [("ncomplex.diagram_commutes", {"N": n, "seed": s, "profile": profile}) for s in seeds]
            out += [("ncomplex.levels_nonzero", {"N": n, "seed": s, "profile": profile}) for s in seeds]
            out += [("ncomplex.poincare_exact", {"N": n, "seed": s, "profile": profile}) for s in seeds]
            out += [("ncomplex.poincare_truncated", {"N": n, "length": l}) for l in range(1, n)]
            if n == 3:
                out += [("ncomplex.total_exact", {"seed": s, "profile": profile}) for s in seeds]
        out += [("ncomplex.two_term", {"seed": s}) for s in seeds]
        out += [("ncomplex.six_term", {"seed": s}) for s in seeds]
    if suite in ("homops", "all"):
        for n in _Ns(N, [2, 3, 4]):
            for s in seeds:
                out += [("homops.tensor_order", {"N": n, "seed": s}),
                        ("homops.hom_order", {"N": n, "seed": s}),
                        ("homops.tensor_expansion", {"N": n, "seed": s, "q": "zeta%d" % n}),
                        ("homops.hom_expansion", {"N": n, "seed": s, "q": "zeta%d" % n}),
                        ("homops.leibniz_composition", {"N": n, "seed": s}),
                        ("homops.null_homotopic_zero", {"N": n, "seed": s}),
                        ("homops.ideal", {"N": n, "seed": s})]
    if suite in ("derham", "all"):
        for n in _Ns(N, [2, 3, 4]):
            out += [("derham.truncation_order", {"n": v, "N": n, "m": m})
                    for v in (1, 2, 3) for m in range(6)]
            out += [("derham.leibniz", {"seed": s, "n": 3, "q": "zeta%d" % n}) for s in seeds]
            out += [("derham.d_power_product", {"seed": s, "n": 2, "N": n, "q": "zeta%d" % n})
                    for s in seeds]
            if n <= 4:
                out.append(("derham.vanishing", {"n": 3, "N": n, "max_total_degree": 4}))
        out += [("derham.face_identities", {"n": v}) for v in (2, 3)]
        out += [("derham.faces_reassemble", {"seed": s, "n": 3, "q": "zeta3"}) for s in seeds]
    if suite in ("quantum", "all"):
        for n in (2, 3):
            for q in ("zeta3", "zeta4", "2"):
                out += [("quantum.span_equality", {"n": n, "q": q}),
                        ("quantum.comultiplication", {"n": n, "q": q}),
                        ("quantum.coaction", {"n": n, "q": q}),
                        ("quantum.negative_transposed", {"n": n, "q": q})]
            out.append(("quantum.negative_drop", {"n": n, "q": "zeta3"}))
    if suite in ("gauge", "all"):
        for n in _Ns(N, [2, 3, 4]):
            for s in seeds:
                out += [("gauge.order_zero", {"N": n, "seed": s}),
                        ("gauge.covariance", {"N": n, "seed": s, "kind": "constant"}),
                        ("gauge.covariance", {"N": n, "seed": s, "kind": "unipotent"}),
                        ("gauge.bianchi", {"N": n, "seed": s}),
                        ("gauge.chern", {"N": n, "seed": s, "p": 1}),
                        ("gauge.chern", {"N": n, "seed": s, "p": 2})]
        if not N or N == 3:
            out += [("gauge.formula_n3", {"seed": s}) for s in seeds]
            out += [("gauge.divergence", {"seed": s}) for s in seeds]
    if suite not in SUITES:
        raise ValueError("unknown suite %r (choose from %s)" % (suite, ", ".join(SUITES)))
    return out


def run_suite(suite, seed=0, profile="small", N=None):
    manifest = {"suite": suite, "seed": seed, "profile": profile, "N": N}
    return run_instances(suite, manifest, suite_instances(suite, seed, profile, N))
