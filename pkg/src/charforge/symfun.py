"""Symmetric functions of a matrix's eigenvalues, written in its entries.

The eigenvalues are never computed. e_i is a sum of principal minors,
h_i is the MacMahon sum over index words, p_k is a trace of a power, and
Schur functions come from Jacobi-Trudi determinants in those.

Every function that returns a Polynomial accepts ``within``: when given,
only monomials dividing it are kept along the way. This leaves the
coefficient of ``within`` (and of each of its divisors) unchanged and is
much cheaper when just one coefficient is wanted.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .partitions import (
    PartitionLike,
    SkewShape,
    as_partition,
    conjugate,
    partitions,
)
from .polyring import (
    ENTRY,
    ONE,
    ZERO,
    GenericMatrix,
    Monomial,
    Polynomial,
    Scalar,
    a as entry,
    det,
    poly,
)


def elementary_sym(a: GenericMatrix, i: int, within: Monomial | None = None) -> Polynomial:
    """e_i of the eigenvalues: the sum of all principal i x i minors."""
    if i < 0:
        raise ValueError("index must be non-negative")
    if i == 0:
        return ONE
    acc = ZERO
    for rows in combinations(range(a.size), i):
        acc = acc + det(a.principal(rows), within)
    return acc


def homogeneous_sym(a: GenericMatrix, i: int, within: Monomial | None = None) -> Polynomial:
    """h_i of the eigenvalues by MacMahon's expansion.

    Sums a[w'_1, w_1] a[w'_2, w_2] ... over all words w of length i on the
    row indices, where w' is w sorted. Words are grouped by their sorted
    form, and each distinct rearrangement is visited once.
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    if i == 0:
        return ONE
    n = a.size
    rows = a.entries
    acc = ZERO

    for sorted_word in combinations_with_replacement(range(n), i):
        counts = [0] * n
        for x in sorted_word:
            counts[x] += 1

        def arrange(pos, prefix):
            nonlocal acc
            if pos == i:
                acc = acc + prefix
                return
            row = rows[sorted_word[pos]]
            for col in range(n):
                if counts[col] and row[col]._terms:
                    nxt = prefix.mul(row[col], within)
                    if nxt._terms:
                        counts[col] -= 1
                        arrange(pos + 1, nxt)
                        counts[col] += 1

        arrange(0, ONE)
    return acc


def power_sum(a: GenericMatrix, k: int, within: Monomial | None = None) -> Polynomial:
    """p_k of the eigenvalues, as trace(A^k)."""
    if k < 1:
        raise ValueError("power must be positive")
    power = a
    for _ in range(k - 1):
        power = power.matmul(a, within)
    tr = power.trace()
    return tr if within is None else tr.truncate(within)


def _jt_det(kernel, size, index, within):
    cache = {}

    def entry_at(idx):
        if idx < 0:
            return ZERO
        if idx not in cache:
            cache[idx] = kernel(idx)
        return cache[idx]

    rows = [[entry_at(index(i, j)) for j in range(1, size + 1)] for i in range(1, size + 1)]
    return det(GenericMatrix(rows), within)


def schur_jt(a: GenericMatrix, lam: PartitionLike, within: Monomial | None = None) -> Polynomial:
    """s_lam = det(h_{lam_i - i + j}) over p x p, p the number of parts."""
    lam = as_partition(lam)
    return _jt_det(
        lambda idx: homogeneous_sym(a, idx, within),
        len(lam),
        lambda i, j: lam.part(i) - i + j,
        within,
    )


def schur_dual_jt(a: GenericMatrix, lam: PartitionLike, within: Monomial | None = None) -> Polynomial:
    """s_lam = det(e_{lam'_i - i + j}) over lam_1 x lam_1."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    return _jt_det(
        lambda idx: elementary_sym(a, idx, within),
        len(conj),
        lambda i, j: conj.part(i) - i + j,
        within,
    )


def skew_schur(a: GenericMatrix, s: SkewShape, within: Monomial | None = None) -> Polynomial:
    """s_{lam/nu} = det(e_{lam'_i - nu'_j - i + j}) over lam_1 x lam_1."""
    if not isinstance(s, SkewShape):
        s = SkewShape(*s)
    outer, inner = conjugate(s.outer), conjugate(s.inner)
    return _jt_det(
        lambda idx: elementary_sym(a, idx, within),
        len(outer),
        lambda i, j: outer.part(i) - inner.part(j) - i + j,
        within,
    )


def companion_matrix(b: int | Sequence[Scalar], offset: int = 0) -> GenericMatrix:
    """The cyclic l x l matrix with b_1..b_{l-1} above the diagonal and b_l
    in the bottom-left corner.

    Passing an int l uses the entries of the l-cycle on labels
    offset+1..offset+l: b = a[o+1,o+2], a[o+2,o+3], ..., a[o+l,o+1].
    """
    if isinstance(b, int):
        l = b
        if l < 1:
            raise ValueError("companion matrix needs at least one entry")
        b = [entry(offset + r, offset + r % l + 1) for r in range(1, l + 1)]
    b = [poly(x) for x in b]
    l = len(b)
    if l == 0:
        raise ValueError("companion matrix needs at least one entry")
    rows = [[ZERO] * l for _ in range(l)]
    for r in range(l - 1):
        rows[r][r + 1] = b[r]
    rows[l - 1][0] = b[l - 1]
    return GenericMatrix(rows, offset)


def is_balanced(m: Monomial) -> bool:
    """Each index occurs as often as a row index as it does as a column index."""
    net: dict[int, int] = {}
    for v, e in m.items():
        if v.kind != ENTRY:
            raise ValueError(f"{v} is not a matrix entry")
        net[v.i] = net.get(v.i, 0) + e
        net[v.j] = net.get(v.j, 0) - e
    return not any(net.values())


def _check_block(mono: Monomial, lo: int, hi: int, name: str):
    for v in mono.variables():
        if v.kind != ENTRY or not (lo <= v.i <= hi and lo <= v.j <= hi):
            raise ValueError(f"{name} uses {v}, outside rows/columns {lo}..{hi}")


def coeff_via_blocks(
    lam: PartitionLike, mono_c: Monomial, mono_d: Monomial, k: int, m: int
) -> int:
    """[mono_c * mono_d] s_lam(A) for the split {1..k} | {k+1..m}.

    Sums [mono_c] s_nu(top-left block) * [mono_d] s_{lam/nu}(bottom-right
    block) over nu contained in lam with |nu| = deg(mono_c).
    """
    lam = as_partition(lam)
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    _check_block(mono_c, 1, k, "mono_c")
    _check_block(mono_d, k + 1, m, "mono_d")
    if not (is_balanced(mono_c) and is_balanced(mono_d)):
        raise ValueError("block monomials must be balanced")
    top = GenericMatrix.generic(k)
    bottom = GenericMatrix.generic(m - k, offset=k)
    total = 0
    for nu in partitions(mono_c.degree):
        if not lam.contains(nu):
            continue
        left = schur_dual_jt(top, nu, within=mono_c).coeff(mono_c)
        if not left:
            continue
        right = skew_schur(bottom, SkewShape(lam, nu), within=mono_d).coeff(mono_d)
        total += left * right
    return total
