"""Reading a character value off a small polynomial determinant.

For mu = (3,2,2) we build f_i from prod(t^mu_k - u_k), place the f's in a
dual Jacobi-Trudi matrix for lambda = (2,2,2,1) and read the coefficient
of u1 u2 u3.
"""
from charforge import Partition, Permutation, build_f, chi_gj, chi_mn, chi_oracle
from charforge.polyring import GenericMatrix, Monomial, det, u

mu = Partition((3, 2, 2))
lam = Partition((2, 2, 2, 1))
fs = build_f(mu)
for i in range(fs.m + 1):
    print(f"f_{i} = {fs[i]}")

conj = lam.conjugate()
size = len(conj)
m = GenericMatrix([[fs[conj[i] - i + j] for j in range(size)] for i in range(size)])
d = det(m)
print("det =", d)
print("[u1 u2 u3] det =", d.coeff(Monomial([u(1), u(2), u(3)])))

# %% the other two routes
pi = Permutation((2, 3, 1, 5, 4, 7, 6))
print("cycles of pi:", pi.cycles())
print("gj", chi_gj(lam, mu), "mn", chi_mn(lam, mu), "oracle", chi_oracle(lam, pi))
