"""Batch identity checks behind ``charforge verify``.

Each suite takes n and yields (label, ok, detail) per identity instance.
"""
from __future__ import annotations

from typing import Callable, Iterator

from .characters import chi_gj, chi_mn, chi_oracle, coeff_e, coeff_p, inner_e_p
from .partitions import (
    Permutation,
    SkewShape,
    height,
    is_border_strip,
    partitions,
    subpartitions,
    z_of,
)
from .polyring import ONE, GenericMatrix, Polynomial, a
from .symfun import companion_matrix, schur_dual_jt, schur_jt, skew_schur

Instance = tuple[str, bool, str]


def jt(n: int) -> Iterator[Instance]:
    """h-form and e-form Jacobi-Trudi agree for lam |- n on generic m x m, m <= 3."""
    for m in range(1, 4):
        g = GenericMatrix.generic(m)
        for lam in partitions(n):
            ok = schur_jt(g, lam) == schur_dual_jt(g, lam)
            yield f"s_{lam} on {m}x{m}", ok, "" if ok else "determinants differ"


def mn_gj(n: int) -> Iterator[Instance]:
    """chi_mn == chi_gj on every pair, and == chi_oracle when n <= 4."""
    for lam in partitions(n):
        for mu in partitions(n):
            x, y = chi_mn(lam, mu), chi_gj(lam, mu)
            values = [x, y]
            if n <= 4:
                values.append(chi_oracle(lam, Permutation.from_cycle_type(mu)))
            ok = len(set(values)) == 1
            yield f"chi^{lam}({mu}) = {x}", ok, "" if ok else f"methods gave {values}"


def orthogonality(n: int) -> Iterator[Instance]:
    """sum_rho chi^rho(lam) chi^rho(mu) == z_lam [lam == mu]."""
    labels = list(partitions(n))
    for lam in labels:
        for mu in labels:
            got = sum(chi_mn(rho, lam) * chi_mn(rho, mu) for rho in labels)
            want = z_of(lam) if lam == mu else 0
            yield f"<{lam}|{mu}> = {got}", got == want, "" if got == want else f"expected {want}"


def prop2(n: int) -> Iterator[Instance]:
    """Skew Schur functions of a cycle matrix: +-b_1...b_l on border strips, else 0."""
    cycle_cache: dict[int, tuple[GenericMatrix, Polynomial]] = {}
    for size in range(1, n + 1):
        for lam in partitions(size):
            for nu in subpartitions(lam):
                l = size - nu.n
                if l < 1:
                    continue
                if l not in cycle_cache:
                    b = ONE
                    for r in range(1, l + 1):
                        b = b * a(r, r % l + 1)
                    cycle_cache[l] = (companion_matrix(l), b)
                matrix, product = cycle_cache[l]
                shape = SkewShape(lam, nu)
                got = skew_schur(matrix, shape)
                want = (-1) ** height(shape) * product if is_border_strip(shape) else Polynomial()
                ok = got == want
                yield f"s_{shape}", ok, "" if ok else f"got {got}, expected {want}"


def prop3(n: int) -> Iterator[Instance]:
    """[a_pi] e_lam == eps_mu R_{mu lam} for pi of cycle type mu."""
    for lam in partitions(n):
        for mu in partitions(n):
            got = coeff_e(lam, Permutation.from_cycle_type(mu))
            want = inner_e_p(lam, mu)
            yield f"[a_pi({mu})] e_{lam} = {got}", got == want, "" if got == want else f"expected {want}"


def psum(n: int) -> Iterator[Instance]:
    """[a_pi] p_lam == z_lam [type(pi) == lam]."""
    for lam in partitions(n):
        for mu in partitions(n):
            got = coeff_p(lam, Permutation.from_cycle_type(mu))
            want = z_of(lam) if lam == mu else 0
            yield f"[a_pi({mu})] p_{lam} = {got}", got == want, "" if got == want else f"expected {want}"


SUITES: dict[str, tuple[Callable[[int], Iterator[Instance]], int]] = {
    "jt": (jt, 5),
    "mn-gj": (mn_gj, 8),
    "orthogonality": (orthogonality, 8),
    "prop2": (prop2, 7),
    "prop3": (prop3, 5),
    "psum": (psum, 5),
}
