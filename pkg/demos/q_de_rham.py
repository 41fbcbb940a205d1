"""
q-differential forms.

The xi_i = dx_i q-anticommute (xi_i xi_j = q xi_j xi_i for i > j) and
d = sum xi_i d/dx_i.  At q = zeta_3 we get d^3 = 0 while d^2 need not vanish.
The script also prints a pair where the graded Leibniz rule fails, and the
faces reassembling to a twisted version of d.
"""

from qhomology.derham import (QForm, d_power, exterior_d, leibniz_rhs, mul,
                              simplicial_differential, twisted_exterior_d, vanishing_checker)
from qhomology.field import root_of_unity

q = root_of_unity(3)
F = q.field
x0, x1 = QForm.x(2, 0, F), QForm.x(2, 1, F)
w = mul(x0, x1, q)
print("d(x0 x1)   =", exterior_d(w, q))
print("d^2(x0 x1) =", d_power(w, q, 2))
print("d^3(x0 x1) =", d_power(w, q, 3))

u, v = QForm.xi(2, 1, F), x0
print("\nd(xi1 x0)               =", exterior_d(mul(u, v, q), q))
print("d(xi1) x0 + q xi1 d(x0) =", leibniz_rhs(u, v, q))

m = QForm.monomial(2, (0, 1), (0,), 1, F)
print("\nsum q^nu d_nu (x1 xi0) =", simplicial_differential(m, q))
print("twisted d (x1 xi0)     =", twisted_exterior_d(m, q))
print("d (x1 xi0)             =", exterior_d(m, q))

for n, N in ((2, 2), (3, 3)):
    rep = vanishing_checker(n, N, 3)
    print("\nn = %d, N = %d: %d nonzero cells where vanishing is expected"
          % (n, N, len(rep["violations"])))
