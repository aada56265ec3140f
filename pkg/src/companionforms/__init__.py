"""Exact construction and recognition of second companion matrices.

Works over the rationals and prime fields GF(p), with scalar and block
companion matrices, Krylov (reachability) matrices, and the bilinear
identities that characterize companion form.
"""

from .bilinear import (
    ExtendedCoeffVector,
    L_matrix,
    Q_matrix,
    TheoremId,
    TheoremVerdict,
    check_crossover,
    check_crossover_universal,
    check_h_symmetry,
    check_jmtrs,
    check_u_symmetry,
    crossover_tail,
    h_map,
    recognize,
    u_map,
)
from .block import (
    BlockColumn,
    block_reachability,
    block_unit,
    blockwise_commuting,
    check_block_crg,
    make_block_companion,
    operator_subst,
    recognize_block,
)
from .companion import (
    CoeffVector,
    CompanionReport,
    is_companion_krylov,
    is_companion_structural,
    krylov_full_test,
    make_companion,
    reachability,
)
from .errors import CompanionError
from .field import GF, FieldElement, FieldSpec, Q
from .matrix import Matrix, Polynomial, char_poly, kron, mat_mul, mat_pow, poly_eval_matrix, unit_vector

__version__ = "0.1.0"
