"""
The twelve acceptance criteria, each a list of sub-claims over fixed
instance families.  A criterion passes when every required sub-claim passes
on every instance; sub-claims marked informational are reported alongside
(for example a corrected variant of a failing identity) and never decide the
outcome.
"""

import time
from dataclasses import dataclass, field

from .checks import run_check
from .suites import run_suite


@dataclass
class SubClaim:
    label: str
    instances: list
    informational: bool = False


@dataclass
class SubResult:
    label: str
    total: int
    failed: int
    informational: bool
    witness: dict = None

    @property
    def passed(self):
        return self.failed == 0

    def line(self):
        tag = "info" if self.informational else ("PASS" if self.passed else "FAIL")
        s = "    [%s] %s: %d/%d" % (tag, self.label, self.total - self.failed, self.total)
        if self.witness is not None:
            s += "  first failure %s %s" % (self.witness["check"], self.witness["params"])
        return s


@dataclass
class CriterionResult:
    number: int
    title: str
    subs: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(s.passed for s in self.subs if not s.informational)

    def lines(self):
        head = "criterion %2d %s  %s  (%.1f s)" % (self.number, "PASS" if self.passed else "FAIL",
                                                   self.title, self.seconds)
        return [head] + [s.line() for s in self.subs]


def _seeds(n, base=0):
    return range(base, base + n)


def _subclaims_1():
    return [
        SubClaim("[N!] and inner binomials vanish at zeta_N, N = 2..8",
                 [("qcomb.root_vanishing", {"N": N}) for N in range(2, 9)]),
        SubClaim("[n!]_q is the inversion sum over S_n, n <= 5",
                 [("qcomb.factorial_inversions", {"n": n, "q": q})
                  for n in range(1, 6) for q in ("2", "-1/3", "zeta5")]),
    ]


def _subclaims_2():
    specs = ["builtin:delta%d" % m for m in range(5)] + \
            ["builtin:boundary%d" % m for m in range(1, 5)] + \
            ["random:%d" % s for s in _seeds(20)]
    return [
        SubClaim("d_q^N = 0 on simplices, boundaries and 20 glued Delta-sets, N = 2..6",
                 [("simplicial.n_complex", {"deltaset": s, "N": N})
                  for s in specs for N in range(2, 7)]),
        SubClaim("powers of d_q match the ordered face-sum formula, k <= 4",
                 [("simplicial.power_formula", {"deltaset": s, "q": q})
                  for s in specs for q in ("zeta2", "zeta3", "zeta4", "2")]),
    ]


def _subclaims_3():
    return [
        SubClaim("total homology is an (N-1)-complex, 100 seeds per N = 3, 4, 5",
                 [("ncomplex.total_order", {"N": N, "seed": s}) for N in (3, 4, 5) for s in _seeds(100)]),
        SubClaim("total homology is exact for N = 3, 100 seeds",
                 [("ncomplex.total_exact", {"seed": s}) for s in _seeds(100)]),
    ]


def _subclaims_4():
    return [
        SubClaim("two-term sequence terms and exactness, 50 maps",
                 [("ncomplex.two_term", {"seed": s}) for s in _seeds(50)]),
        SubClaim("six-term sequence terms and exactness, 50 pairs",
                 [("ncomplex.six_term", {"seed": s}) for s in _seeds(50)]),
    ]


def _subclaims_5():
    inst = [("ncomplex.levels_nonzero", {"N": N, "seed": s, "exact": ex})
            for N in (2, 3, 4, 5) for s in _seeds(100) for ex in (False, True)]
    return [SubClaim("nonzero homology forces a nonzero cell at every level", inst)]


def _subclaims_6():
    Ns = (2, 3, 4)
    seeds = _seeds(10)
    return [
        SubClaim("q-tensor product is an N-complex",
                 [("homops.tensor_order", {"N": N, "seed": s}) for N in Ns for s in seeds]),
        SubClaim("q-Hom with weight q^deg(f) is an N-complex",
                 [("homops.hom_order", {"N": N, "seed": s}) for N in Ns for s in seeds]),
        SubClaim("q-Hom with weight q^i (position) is an N-complex",
                 [("homops.hom_order", {"N": N, "seed": s, "weight": "position"})
                  for N in Ns for s in seeds]),
        SubClaim("tensor power expansion matches iterated d",
                 [("homops.tensor_expansion", {"N": N, "seed": s, "q": "zeta%d" % N})
                  for N in Ns for s in seeds]),
        SubClaim("Hom power expansion as displayed matches iterated d",
                 [("homops.hom_expansion", {"N": N, "seed": s, "q": "zeta%d" % N})
                  for N in Ns for s in seeds]),
        SubClaim("Hom power expansion with the quadratic exponent matches iterated d",
                 [("homops.hom_expansion", {"N": N, "seed": s, "q": "zeta%d" % N, "corrected": True})
                  for N in Ns for s in seeds], informational=True),
        SubClaim("composition obeys the q-Leibniz rule",
                 [("homops.leibniz_composition", {"N": N, "seed": s, "m": m, "n": n})
                  for N in Ns for s in seeds for m, n in ((0, 1), (1, 2), (2, 1))]),
    ]


def _subclaims_7():
    return [
        SubClaim("null-homotopic morphisms induce zero on homology, 25 per N = 2, 3, 4",
                 [("homops.null_homotopic_zero", {"N": N, "seed": s}) for N in (2, 3, 4) for s in _seeds(25)]),
        SubClaim("null-homotopic certificates for both composites",
                 [("homops.ideal", {"N": N, "seed": s}) for N in (2, 3, 4) for s in _seeds(25)]),
    ]


def _subclaims_8():
    return [
        SubClaim("P(zeta_N) = 0 on 100 exact complexes per N = 2..5",
                 [("ncomplex.poincare_exact", {"N": N, "seed": s}) for N in (2, 3, 4, 5) for s in _seeds(100)]),
        SubClaim("P(zeta_N) != 0 on truncated chains of length < N",
                 [("ncomplex.poincare_truncated", {"N": N, "length": l, "dim": d})
                  for N in (2, 3, 4, 5) for l in range(1, N) for d in (1, 2)]),
    ]


def _subclaims_9():
    seeds = _seeds(20)
    return [
        SubClaim("q-Leibniz for products of forms, q in {zeta2, zeta3, zeta4, 2}",
                 [("derham.leibniz", {"seed": s, "n": n, "q": q})
                  for n in (1, 2, 3) for q in ("zeta2", "zeta3", "zeta4", "2") for s in _seeds(8)]),
        SubClaim("d^N of a product as the q-binomial sum, generic and root-of-unity q",
                 [("derham.d_power_product", {"seed": s, "n": n, "N": N, "q": q})
                  for n in (2, 3) for N in (1, 2, 3, 4) for q in ("zeta%d" % N, "2", "zeta5")
                  for s in _seeds(5)]),
        SubClaim("d^N = 0 on truncations, n <= 3, total degree <= 5, N = 2..4",
                 [("derham.truncation_order", {"n": n, "N": N, "m": m})
                  for n in (1, 2, 3) for N in (2, 3, 4) for m in range(6)]),
        SubClaim("form face operators satisfy the simplicial identities",
                 [("derham.face_identities", {"n": n}) for n in (1, 2, 3)]),
        SubClaim("sum of q^nu times faces equals d",
                 [("derham.faces_reassemble", {"seed": s, "n": 3, "q": "zeta3"}) for s in seeds]),
        SubClaim("sum of q^nu times faces equals the index-twisted d at 1/q",
                 [("derham.faces_reassemble", {"seed": s, "n": 3, "q": "zeta3", "twisted": True})
                  for s in seeds], informational=True),
        SubClaim("pH^i = 0 for i + p + 1 <= N in total degrees 1..4",
                 [("derham.vanishing", {"n": 3, "N": N, "max_total_degree": 4}) for N in (2, 3, 4)]),
    ]


def _subclaims_10():
    qs = ("zeta3", "zeta4", "2")
    grid = [(n, q) for n in (2, 3) for q in qs]
    return [
        SubClaim("covariance relations span the displayed relations",
                 [("quantum.span_equality", {"n": n, "q": q}) for n, q in grid]),
        SubClaim("comultiplication preserves the displayed relations",
                 [("quantum.comultiplication", {"n": n, "q": q}) for n, q in grid]),
        SubClaim("coaction preserves the form relations and commutes with d",
                 [("quantum.coaction", {"n": n, "q": q}) for n, q in grid]),
        SubClaim("negative control: dropping a relation breaks comultiplication",
                 [("quantum.negative_drop", {"n": n, "q": "zeta3"}) for n in (2, 3)]),
        SubClaim("negative control: the transposed coaction breaks the relations",
                 [("quantum.negative_transposed", {"n": n, "q": q}) for n, q in grid]),
        SubClaim("column-oriented relations: comultiplication and coaction",
                 [(c, dict({"n": n, "q": q, "relations": "column"},
                           **({"orientation": "column"} if c == "quantum.coaction" else {})))
                  for n, q in grid for c in ("quantum.comultiplication", "quantum.coaction")],
                 informational=True),
    ]


def _subclaims_11():
    seeds = _seeds(25)
    return [
        SubClaim("nabla^N is multiplication by a matrix of forms, 25 per N = 2, 3, 4",
                 [("gauge.order_zero", {"N": N, "seed": s}) for N in (2, 3, 4) for s in seeds]),
        SubClaim("displayed N = 3 curvature formula equals nabla^3",
                 [("gauge.formula_n3", {"seed": s}) for s in seeds]),
        SubClaim("curvature covariance under constant gauge",
                 [("gauge.covariance", {"N": N, "seed": s, "kind": "constant"})
                  for N in (2, 3, 4) for s in _seeds(8)]),
        SubClaim("curvature covariance under unipotent gauge",
                 [("gauge.covariance", {"N": N, "seed": s, "kind": "unipotent"})
                  for N in (2, 3, 4) for s in _seeds(8)]),
        SubClaim("Bianchi identity",
                 [("gauge.bianchi", {"N": N, "seed": s}) for N in (2, 3, 4) for s in _seeds(8)]),
        SubClaim("tr(F^p) closed for p <= 2",
                 [("gauge.chern", {"N": N, "seed": s, "p": p})
                  for N in (2, 3, 4) for s in _seeds(8) for p in (1, 2)]),
        SubClaim("divergence identity with the displayed factor",
                 [("gauge.divergence", {"seed": s}) for s in _seeds(10)]),
        SubClaim("divergence identity with factor 1 + q",
                 [("gauge.divergence", {"seed": s, "factor": "1+q"}) for s in _seeds(10)],
                 informational=True),
    ]


def _determinism_check():
    a = run_suite("q-combinatorics", seed=11).dumps()
    b = run_suite("q-combinatorics", seed=11).dumps()
    c = run_suite("simplicial", seed=11).dumps()
    d = run_suite("simplicial", seed=11).dumps()
    return a == b and c == d


def _subclaims_12():
    kinds = ("scalar", "matrix", "complex", "form", "connection", "deltaset")
    return [
        SubClaim("serialize / parse / convert round trips",
                 [("interchange.roundtrip", {"kind": k, "seed": s}) for k in kinds for s in _seeds(5)]),
        SubClaim("two runs with one seed give byte-identical reports", [_determinism_check]),
    ]


CRITERIA = [
    (1, "q-combinatorics at roots of unity", _subclaims_1),
    (2, "Delta-set chains are N-complexes", _subclaims_2),
    (3, "total homology", _subclaims_3),
    (4, "kernel/cokernel sequences", _subclaims_4),
    (5, "homology at every level", _subclaims_5),
    (6, "q-tensor and q-Hom", _subclaims_6),
    (7, "null-homotopic morphisms", _subclaims_7),
    (8, "Poincare polynomial at a root of unity", _subclaims_8),
    (9, "q-de Rham complex", _subclaims_9),
    (10, "quantum symmetry relations", _subclaims_10),
    (11, "q-connections and curvature", _subclaims_11),
    (12, "interchange and determinism", _subclaims_12),
]


def run_subclaim(sc):
    failed = 0
    witness = None
    for inst in sc.instances:
        if callable(inst):
            ok = inst()
            w = {"check": inst.__name__.lstrip("_"), "params": {}}
        else:
            name, params = inst
            ok, _ = run_check(name, params)
            w = {"check": name, "params": params}
        if not ok:
            failed += 1
            witness = witness or w
    return SubResult(sc.label, len(sc.instances), failed, sc.informational, witness)


def run_criterion(number):
    for k, title, build in CRITERIA:
        if k == number:
            t0 = time.perf_counter()
            res = CriterionResult(k, title, [run_subclaim(sc) for sc in build()])
            res.seconds = time.perf_counter() - t0
            return res
    raise ValueError("no criterion %d" % number)


def run_all():
    return [run_criterion(k) for k, _, _ in CRITERIA]
