"""Character tables of S_n and the identities they satisfy."""
from math import factorial

from charforge import Partition, character_table, chi_gj, chi_mn, partitions, z_of

# %% the table of S_4
tab = character_table(4)
labels = [str(p) for p in tab.labels]
print("\t" + "\t".join(labels))
for label, row in zip(labels, tab.matrix()):
    print(label + "\t" + "\t".join(map(str, row)))

# %% column orthogonality, up to S_6
for n in range(1, 7):
    labels = list(partitions(n))
    ok = all(
        sum(chi_mn(r, lam) * chi_mn(r, mu) for r in labels) == (z_of(lam) if lam == mu else 0)
        for lam in labels
        for mu in labels
    )
    print(f"n={n}: {len(labels)} classes, orthogonality {'holds' if ok else 'FAILS'}")

# %% degrees square-sum to n!
for n in range(1, 9):
    ones = Partition((1,) * n)
    dims = [chi_mn(lam, ones) for lam in partitions(n)]
    print(n, dims[:6], "..." if len(dims) > 6 else "", sum(d * d for d in dims) == factorial(n))

# %% a single value through the determinant route
print("chi^(2,2,2,1)((3,2,2)) =", chi_gj(Partition((2, 2, 2, 1)), Partition((3, 2, 2))))
