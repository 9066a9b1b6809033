"""Immanants interpolate between the determinant and the permanent."""
import random

from charforge import GenericMatrix, Partition, immanant, partitions

# %% symbolic, 3x3
g = GenericMatrix.generic(3)
for lam in partitions(3):
    print(f"Imm_{lam} = {immanant(g, lam)}")

# %% numeric, every shape of a random 5x5
rng = random.Random(7)
rows = [[rng.randint(-5, 5) for _ in range(5)] for _ in range(5)]
for r in rows:
    print(r)
for lam in partitions(5):
    print(f"{str(lam):>10}  {immanant(rows, lam)}")

# %% big entries stay exact
huge = [[10**30 + i * 3 + j for j in range(3)] for i in range(3)]
print("det of a near-rank-one matrix:", immanant(huge, Partition((1, 1, 1))))
print("permanent:", immanant(huge, Partition((3,))))
