"""A coefficient of s_322 on a generic 4x4 matrix, two ways.

The monomial a11 a12 a21 a22^2 a34 a43 splits into a part living on
rows/columns {1,2} and a part on {3,4}. Full expansion and the block
recursion must agree.
"""
import time

from charforge import GenericMatrix, Monomial, Partition, SkewShape, a, schur_dual_jt, schur_jt, skew_schur
from charforge.partitions import subpartitions

lam = Partition((3, 2, 2))
c = Monomial({a(1, 1): 1, a(1, 2): 1, a(2, 1): 1, a(2, 2): 2})
d = Monomial([a(3, 4), a(4, 3)])

# %% full expansion
start = time.perf_counter()
s = schur_jt(GenericMatrix.generic(4), lam)
print(f"s_{lam} has {len(s)} terms ({time.perf_counter() - start:.2f}s)")
print("coefficient:", s.coeff(c * d))

# %% block recursion, term by term
top = GenericMatrix.generic(2)
bottom = GenericMatrix.generic(2, offset=2)
total = 0
for nu in subpartitions(lam):
    if nu.n != c.degree:
        continue
    left = schur_dual_jt(top, nu).coeff(c)
    right = skew_schur(bottom, SkewShape(lam, nu)).coeff(d)
    if left and right:
        print(f"  nu = {nu}: {left} * {right}")
    total += left * right
print("block sum:", total)
