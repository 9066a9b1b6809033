"""Irreducible characters of S_n, three ways, plus immanants.

* ``chi_mn``: Murnaghan-Nakayama recursion over border-strip removals.
* ``chi_gj``: the [u_1...u_q] coefficient of a dual Jacobi-Trudi
  determinant in the coefficients f_i of prod_k (t^{mu_k} - u_k).
* ``chi_oracle``: the coefficient of a_{1 pi(1)} ... a_{n pi(n)} in
  det(h_{lam_i - i + j}) for a generic n x n matrix. Slow and literal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence, Union

from .partitions import (
    Partition,
    PartitionLike,
    Permutation,
    as_partition,
    border_strip_removals,
    conjugate,
    count_r,
    cycle_type,
    epsilon_of,
    partitions,
)
from .polyring import (
    ONE,
    ZERO,
    GenericMatrix,
    Monomial,
    Polynomial,
    a,
    collect,
    det,
    multilinear_coeff,
    poly,
    t,
    u,
)
from .symfun import elementary_sym, power_sum, schur_jt

MAX_N = 8


def _same_size(lam: Partition, mu: Partition):
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |{lam}| = {lam.n} but |{mu}| = {mu.n}")


def murnaghan_nakayama(lam: PartitionLike, parts: Sequence[int]) -> int:
    """Plain MN recursion, removing strips of sizes ``parts`` in the given order.

    Not memoized; ``chi_mn`` is the fast entry point.
    """
    lam = as_partition(lam)
    if sum(parts) != lam.n:
        raise ValueError("size mismatch")
    if not parts:
        return 1
    first, rest = parts[0], parts[1:]
    return sum((-1) ** ht * murnaghan_nakayama(nu, rest) for nu, ht in border_strip_removals(lam, first))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    total = 0
    for nu, ht in border_strip_removals(Partition(lam), mu[0]):
        value = _mn(nu.parts, mu[1:])
        total += -value if ht % 2 else value
    return total


def chi_mn(lam: PartitionLike, mu: PartitionLike) -> int:
    """chi^lam(mu) by Murnaghan-Nakayama, memoized on (lam, remaining mu)."""
    lam, mu = as_partition(lam), as_partition(mu)
    _same_size(lam, mu)
    return _mn(lam.parts, mu.parts)


@dataclass(frozen=True)
class FSequence:
    """f_0..f_m with prod_k (t^{mu_k} - u_k) = f_0 t^m - f_1 t^{m-1} + ... +- f_m."""

    mu: Partition
    f: tuple[Polynomial, ...]

    @property
    def m(self) -> int:
        return self.mu.n

    def __getitem__(self, i: int) -> Polynomial:
        """f_i, zero outside 0..m."""
        return self.f[i] if 0 <= i < len(self.f) else ZERO


def build_f(mu: PartitionLike) -> FSequence:
    mu = as_partition(mu)
    if not mu.parts:
        raise ValueError("mu must be nonempty")
    tv = poly(t())
    product = ONE
    for k, part in enumerate(mu, 1):
        product = product * (tv**part - u(k))
    by_power = collect(product, t())
    m = mu.n
    f = tuple((-1) ** i * by_power.get(m - i, ZERO) for i in range(m + 1))
    return FSequence(mu, f)


def chi_gj(lam: PartitionLike, mu: PartitionLike) -> int:
    """chi^lam(mu) = [u_1...u_q] det(f_{lam'_i - i + j})."""
    lam, mu = as_partition(lam), as_partition(mu)
    _same_size(lam, mu)
    if not lam.parts:
        return 1
    fs = build_f(mu)
    conj = conjugate(lam)
    size = len(conj)
    rows = [[fs[conj.part(i) - i + j] for j in range(1, size + 1)] for i in range(1, size + 1)]
    us = [u(k) for k in range(1, len(mu) + 1)]
    d = det(GenericMatrix(rows), within=Monomial(us))
    return multilinear_coeff(d, us).constant_term()


def permutation_monomial(perm: Permutation) -> Monomial:
    """a_{1 pi(1)} a_{2 pi(2)} ... a_{n pi(n)}"""
    return Monomial([a(i, perm(i)) for i in range(1, perm.n + 1)])


def chi_oracle(lam: PartitionLike, perm: Permutation) -> int:
    """[a_pi] det(h_{lam_i - i + j}) on the generic n x n matrix.

    The expansion is truncated to divisors of a_pi, which leaves that
    coefficient exact.
    """
    lam = as_partition(lam)
    if lam.n != perm.n:
        raise ValueError(f"size mismatch: |{lam}| = {lam.n} but pi is in S_{perm.n}")
    target = permutation_monomial(perm)
    return schur_jt(GenericMatrix.generic(perm.n), lam, within=target).coeff(target)


def _product_coeff(kernel, lam: Partition, perm: Permutation) -> int:
    if lam.n != perm.n:
        raise ValueError(f"size mismatch: |{lam}| = {lam.n} but pi is in S_{perm.n}")
    target = permutation_monomial(perm)
    g = GenericMatrix.generic(perm.n)
    acc = ONE
    for part in lam:
        acc = acc.mul(kernel(g, part, within=target), within=target)
    return acc.coeff(target)


def coeff_p(lam: PartitionLike, perm: Permutation) -> int:
    """[a_pi] p_lam(eigenvalues), p_k taken as trace(A^k)."""
    return _product_coeff(power_sum, as_partition(lam), perm)


def coeff_e(lam: PartitionLike, perm: Permutation) -> int:
    """[a_pi] e_lam(eigenvalues), e_k taken as a sum of principal minors."""
    return _product_coeff(elementary_sym, as_partition(lam), perm)


def inner_e_p(lam: PartitionLike, mu: PartitionLike) -> int:
    """<e_lam, p_mu> = eps_mu * R_{mu lam}."""
    return epsilon_of(mu) * count_r(mu, lam)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    labels: tuple[Partition, ...]
    rows: dict[Partition, dict[Partition, int]]

    def __getitem__(self, key: tuple[PartitionLike, PartitionLike]) -> int:
        lam, mu = key
        return self.rows[as_partition(lam)][as_partition(mu)]

    def matrix(self) -> list[list[int]]:
        return [[self.rows[lam][mu] for mu in self.labels] for lam in self.labels]


def character_table(n: int, max_n: int = MAX_N) -> CharacterTable:
    """Rows lam and columns mu both in reverse lexicographic order."""
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n}")
    labels = tuple(partitions(n))
    rows = {lam: {mu: chi_mn(lam, mu) for mu in labels} for lam in labels}
    return CharacterTable(n, labels, rows)


Matrix = Union[GenericMatrix, Sequence[Sequence[int]]]


def immanant(A: Matrix, lam: PartitionLike, max_n: int = MAX_N) -> Polynomial | int:
    """sum over pi of chi^lam(pi) a_{1 pi(1)} ... a_{n pi(n)}.

    A GenericMatrix gives a Polynomial, a nested list of ints gives an int.
    """
    lam = as_partition(lam)
    symbolic = isinstance(A, GenericMatrix)
    rows = A.entries if symbolic else [[int(x) for x in row] for row in A]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    if lam.n != n:
        raise ValueError(f"size mismatch: |{lam}| = {lam.n} but matrix is {n} x {n}")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the bound {max_n}")
    chars: dict[Partition, int] = {}
    acc = ZERO if symbolic else 0
    for images in permutations(range(n)):
        ct = cycle_type(Permutation(tuple(x + 1 for x in images))).partition
        if ct not in chars:
            chars[ct] = chi_mn(lam, ct)
        c = chars[ct]
        if not c:
            continue
        term = ONE if symbolic else 1
        for i, j in enumerate(images):
            term = term * rows[i][j]
        acc = acc + c * term
    return acc
