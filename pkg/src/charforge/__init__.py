"""Exact characters of the symmetric group, Schur functions of generic
matrices, and immanants."""

from .characters import (
    CharacterTable,
    FSequence,
    build_f,
    character_table,
    chi_gj,
    chi_mn,
    chi_oracle,
    coeff_e,
    coeff_p,
    immanant,
    inner_e_p,
    murnaghan_nakayama,
    permutation_monomial,
)
from .partitions import (
    CycleType,
    Partition,
    Permutation,
    SkewShape,
    border_strip_removals,
    conjugate,
    count_r,
    cycle_type,
    epsilon_of,
    height,
    is_border_strip,
    partitions,
    subpartitions,
    z_of,
)
from .polyring import (
    GenericMatrix,
    Monomial,
    Polynomial,
    VarId,
    a,
    add,
    block_diag,
    coeff_of,
    collect,
    det,
    det_by_permutations,
    mul,
    multilinear_coeff,
    poly,
    t,
    u,
)
from .symfun import (
    coeff_via_blocks,
    companion_matrix,
    elementary_sym,
    homogeneous_sym,
    is_balanced,
    power_sum,
    schur_dual_jt,
    schur_jt,
    skew_schur,
)

__version__ = "0.1.0"
