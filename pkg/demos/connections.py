"""
q-connections nabla = d + A and their curvature nabla^N.

For N = 2 (q = -1) this is the usual curvature dA + A A.  For N = 3 on three
variables, nabla^3 generally fails to be multiplication by a matrix of forms;
the script shows one defect and a case where it does work.
"""

from qhomology.derham import QForm, mul
from qhomology.field import QQ, root_of_unity
from qhomology.gauge import (MatrixForm, QConnection, curvature, mat_d, mat_mul,
                             order_zero_defects, random_connection)

q = QQ(-1)
c = random_connection(4, 2, r=2, n=3, q=q)
F = curvature(c)
print("N = 2: F == dA + A A:", F == mat_d(c.A, q) + mat_mul(c.A, c.A, q))

z = root_of_unity(3)
c = random_connection(0, 3)
bad = order_zero_defects(c)
probe, col, lhs, rhs = bad[0]
print("\nN = 3, random A: %d probe defects; probe %s on column %d" % (len(bad), probe, col))

flat = QConnection(MatrixForm([[QForm.monomial(3, (0, 1, 0), (0,), 1, z.field)]]), z)
print("A = x1 xi0 (rank 1): curvature", curvature(flat))
