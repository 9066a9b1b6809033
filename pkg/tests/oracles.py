"""Independent reference implementations used only by the tests.

None of these call into the code paths they check.
"""
from itertools import permutations

from charforge.partitions import Partition, SkewShape, subpartitions


def cells_connected_no_square(shape: SkewShape) -> bool:
    """Border strip test straight from the definition, on the cell set."""
    cells = shape.cells()
    if not cells:
        return False
    for i, j in cells:
        if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        i, j = todo.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen == cells


def size_is_rows_plus_cols_minus_one(shape: SkewShape) -> bool:
    """The strip-size characterization, read on the occupied rows and columns."""
    cells = shape.cells()
    if not cells:
        return False
    rows = {i for i, _ in cells}
    cols = {j for _, j in cells}
    return len(cells) == len(rows) + len(cols) - 1


def removals_by_filter(lam: Partition, l: int):
    """Every nu inside lam with lam/nu a border strip of l cells, with heights."""
    out = []
    for nu in subpartitions(lam):
        s = SkewShape(lam, nu)
        if s.size == l and cells_connected_no_square(s):
            out.append((nu, len({i for i, _ in s.cells()}) - 1))
    return out


def cycle_lengths(images):
    n = len(images)
    seen = [False] * n
    lengths = []
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        i = s
        while not seen[i]:
            seen[i] = True
            i = images[i] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def inversion_sign(images) -> int:
    inv = sum(1 for x in range(len(images)) for y in range(x + 1, len(images)) if images[x] > images[y])
    return -1 if inv % 2 else 1


def int_det(rows) -> int:
    """Integer determinant by cofactor expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * rows[0][j] * int_det(minor)
    return total


def ryser_permanent(rows) -> int:
    """Ryser's inclusion-exclusion formula."""
    n = len(rows)
    total = 0
    for mask in range(1, 1 << n):
        cols = [j for j in range(n) if mask >> j & 1]
        prod = 1
        for row in rows:
            prod *= sum(row[j] for j in cols)
        total += (-1) ** len(cols) * prod
    return (-1) ** n * total


def leibniz_immanant(rows, char_of_cycle_type) -> int:
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += char_of_cycle_type(cycle_lengths([p + 1 for p in perm])) * prod
    return total
