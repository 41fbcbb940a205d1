"""
q-tensor products and q-Hom of N-complexes.

The tensor differential d(v w) = dv w + q^i v dw gives another N-complex.
For Hom the sign weight has to be q^(deg f): weighting by the source
position instead produces a map whose N-th power is not zero.  Null-homotopic
maps d^(N-1)(s) act as zero on amplitude homology.
"""

import random

from qhomology.field import make_field, root_of_unity
from qhomology.homops import (identity_map, induced_on_homology, null_homotopy_certificate,
                              q_hom, q_tensor, random_null_homotopic)
from qhomology.ncomplex import NComplex, NotNilpotent, elementary_chain

N = 3
q = root_of_unity(N)
F = make_field(N)
a = elementary_chain(N, 2, 3, 1, F)   # C_2 -> C_1 -> C_0, identity maps
b = NComplex(N, {0: 1}, {}, F)         # a single point

T = q_tensor(a, a, q)
print("tensor dims:", dict(sorted(T.complex.dims.items())))

H = q_hom(a, a, q)
print("Hom dims:   ", dict(sorted(H.complex.dims.items())))

try:
    q_hom(a, a, q, weight="position")
except NotNilpotent as e:
    print("position weight fails:", e)

# A null-homotopic endomorphism kills homology, the identity of a point does not.
H = q_hom(b, b, q)
print("certificate for id on a point:", null_homotopy_certificate(H, identity_map(b)))
s, f = random_null_homotopic(random.Random(1), q_hom(a, b, q))
print("induced by d^%d(s):" % (N - 1),
      {k: m.is_zero() for k, m in induced_on_homology(f).items()})
