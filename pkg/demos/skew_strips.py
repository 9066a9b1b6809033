"""Skew Schur functions of a cyclic matrix pick out border strips.

On the l x l matrix with b_r = a[r, r+1] on the cycle and zeros elsewhere,
s_{lam/nu} is +-b_1...b_l when lam/nu is a border strip of size l and 0
otherwise.
"""
from charforge import Partition, SkewShape, companion_matrix, height, is_border_strip, skew_schur
from charforge.partitions import subpartitions

lam = Partition((4, 3, 1))
for nu in subpartitions(lam):
    shape = SkewShape(lam, nu)
    l = shape.size
    if l < 1:
        continue
    value = skew_schur(companion_matrix(l), shape)
    tag = f"strip, height {height(shape)}" if is_border_strip(shape) else "not a strip"
    print(f"{str(shape):>16}  {tag:<18} {value}")

# %% rows + columns - 1 alone does not force connectivity
odd = SkewShape(Partition((3, 3, 1)), Partition((1, 1)))
rows = {i for i, _ in odd.cells()}
cols = {j for _, j in odd.cells()}
print(odd, sorted(odd.cells()))
print("size", odd.size, "rows + cols - 1 =", len(rows) + len(cols) - 1, "border strip:", is_border_strip(odd))
