"""
N-complexes from a Delta-set.

At q = zeta_N the q-integer [N]_q vanishes, so the weighted face sum
d_q = sum_i q^i d_i satisfies d_q^N = 0 on any Delta-set.  This script
builds that complex on the boundary of a tetrahedron, prints its amplitude
homology pH_i = Ker d^p / Im d^(N-p), and assembles the total homology,
which is an (N-1)-complex.
"""

from qhomology import deltaset as ds
from qhomology.field import q_int, root_of_unity
from qhomology.ncomplex import homology_diagram, poincare, poincare_at_root, total_homology

N = 3
q = root_of_unity(N)
print("[k]_q at q = zeta_%d:" % N, [str(q_int(k, q)) for k in range(1, N + 1)])

sphere = ds.simplex_boundary(3)
C = ds.chain_ncomplex(sphere, q, N)
print("cells per degree:", dict(sorted(C.dims.items())))

table = homology_diagram(C).dims_table()
print("\n p  i  dim pH_i")
for (p, i), d in sorted(table.items()):
    print("%2d %2d  %d" % (p, i, d))

T = total_homology(C)
print("\ntotal homology (order %d):" % T.complex.N, dict(sorted(T.complex.dims.items())))

# The Euler-type invariant: P(zeta_N) vanishes on exact complexes.
print("P(t) =", poincare(C), " P(zeta_%d) =" % N, poincare_at_root(C))
