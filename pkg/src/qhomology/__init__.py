"""Exact homological algebra of N-complexes at roots of unity.

Arithmetic is exact in cyclotomic fields Q(zeta_M).  The modules cover
N-complexes and their amplitude and total homology, q-tensor and q-Hom,
Delta-set chains, the polynomial q-de Rham algebra, quadratic relations of
its quantum symmetries, and N-curvature of q-connections.
"""

from .field import (QQ, CycloField, CycloScalar, make_field, q_binomial, q_factorial,
                    q_int, root_of_unity)
from .linalg import ExactMatrix, Subspace, image_basis, kernel_basis, rank, solve
from .ncomplex import (NComplex, NotNilpotent, homology, homology_diagram, is_n_exact,
                       poincare, poincare_at_root, random_exact, random_ncomplex,
                       total_homology)
from .homops import GradedMap, compose, hom_differential, q_hom, q_tensor
from .deltaset import DeltaSet, builtin, chain_ncomplex, from_simplices
from .derham import QForm, d_power, exterior_d, mul, truncate_to_ncomplex
from .gauge import MatrixForm, QConnection, chern_form, curvature, gauge_transform
from .interchange import SchemaError, dumps, loads

__version__ = "0.1.0"

__all__ = [
    "QQ", "CycloField", "CycloScalar", "make_field", "q_binomial", "q_factorial", "q_int",
    "root_of_unity", "ExactMatrix", "Subspace", "image_basis", "kernel_basis", "rank",
    "solve", "NComplex", "NotNilpotent", "homology", "homology_diagram", "is_n_exact",
    "poincare", "poincare_at_root", "random_exact", "random_ncomplex", "total_homology",
    "GradedMap", "compose", "hom_differential", "q_hom", "q_tensor", "DeltaSet", "builtin",
    "chain_ncomplex", "from_simplices", "QForm", "d_power", "exterior_d", "mul",
    "truncate_to_ncomplex", "MatrixForm", "QConnection", "chern_form", "curvature",
    "gauge_transform", "SchemaError", "dumps", "loads",
]
