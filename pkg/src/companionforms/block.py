"""Block companion matrices and the block reachability criteria.

The block companion matrix of ``P = [P_0; ...; P_{n-1}]`` (each ``t x t``)
linearizes the monic matrix polynomial
``z^n I_t - (z^(n-1) P_{n-1} + ... + P_0)``: identity blocks on the block
subdiagonal, ``P`` as the last block column, zeros elsewhere.

The block size ``t`` is always supplied by the caller; the same ``nt x nt``
matrix can be examined under several block sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .companion import CompanionReport
from .errors import (
    BadBlockSize,
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotBlockwiseCommuting,
    NotSquare,
)
from .field import FieldSpec
from .matrix import Matrix, hstack, kron, mat_mul, powers, unit_vector, vstack
from .rng import LCG64


class BlockColumn:
    """``n`` stacked blocks ``B_0, ..., B_{n-1}``, each ``t x m`` (usually ``m = t``)."""

    __slots__ = ("field", "blocks")

    def __init__(self, blocks: Sequence[Matrix]) -> None:
        blocks = tuple(blocks)
        if not blocks:
            raise DimensionMismatch("a block column needs at least one block")
        f = blocks[0].field
        shape = blocks[0].shape
        for b in blocks:
            if b.field != f:
                raise FieldMismatch(f"{f!r} vs {b.field!r}")
            if b.shape != shape:
                raise DimensionMismatch(f"blocks of shape {shape} and {b.shape}")
        self.field = f
        self.blocks = blocks

    @classmethod
    def from_matrix(cls, M: Matrix, t: int) -> BlockColumn:
        if t < 1 or M.rows % t:
            raise BadBlockSize(f"{M.rows} rows do not split into blocks of {t}")
        return cls([M.submatrix(i * t, (i + 1) * t, 0, M.cols) for i in range(M.rows // t)])

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def t(self) -> int:
        return self.blocks[0].rows

    @property
    def m(self) -> int:
        return self.blocks[0].cols

    def to_matrix(self) -> Matrix:
        return vstack(self.blocks)

    def __getitem__(self, i: int) -> Matrix:
        return self.blocks[i]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockColumn):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"BlockColumn(n={self.n}, t={self.t}, m={self.m}, {self.field!r})"


@dataclass(frozen=True)
class BlockMatrixView:
    """A matrix read as a grid of blocks with ``t`` rows each."""

    base: Matrix
    t: int

    def __post_init__(self) -> None:
        if self.t < 1 or self.base.rows % self.t:
            raise BadBlockSize(f"{self.base.rows} rows not divisible by t={self.t}")

    @property
    def n(self) -> int:
        return self.base.rows // self.t

    def block(self, i: int, j: int, width: int | None = None) -> Matrix:
        w = self.t if width is None else width
        if self.base.cols % w:
            raise BadBlockSize(f"{self.base.cols} columns not divisible by {w}")
        return self.base.submatrix(i * self.t, (i + 1) * self.t, j * w, (j + 1) * w)


def _as_block_column(B, t: int | None = None) -> BlockColumn:
    if isinstance(B, BlockColumn):
        return B
    if t is None:
        raise BadBlockSize("a plain matrix needs an explicit block size")
    return BlockColumn.from_matrix(B, t)


def _block_count(A: Matrix, t: int) -> int:
    if not A.is_square:
        raise NotSquare(f"expected a square matrix, got {A.shape}")
    if t < 1 or A.rows % t:
        raise BadBlockSize(f"dimension {A.rows} is not a multiple of t={t}")
    return A.rows // t


def make_block_companion(P) -> Matrix:
    P = _as_block_column(P, P.cols if isinstance(P, Matrix) else None)
    n, t = P.n, P.t
    if P.m != t:
        raise DimensionMismatch(f"blocks of P must be square, got {t}x{P.m}")
    f = P.field
    z, o = f.canon(0), f.canon(1)
    rows = [[z] * (n * t) for _ in range(n * t)]
    for i in range(n - 1):
        for k in range(t):
            rows[(i + 1) * t + k][i * t + k] = o
    for i, Pi in enumerate(P.blocks):
        for r, prow in enumerate(Pi.raw_rows()):
            rows[i * t + r][(n - 1) * t :] = list(prow)
    return Matrix._raw(f, rows)


def block_unit(i: int, n: int, t: int, field: FieldSpec) -> BlockColumn:
    """``E_i = e_i (x) I_t``."""
    if not 0 <= i < n:
        raise IndexOutOfRange(f"block index {i} outside 0..{n - 1}")
    return BlockColumn.from_matrix(kron(unit_vector(i, n, field), Matrix.identity(t, field)), t)


def operator_subst(B, A: Matrix, t: int | None = None) -> Matrix:
    """``B(A) = sum_j A^j (I_n (x) B_j)``, an ``nt x nm`` matrix."""
    Bc = _as_block_column(B, t)
    n = Bc.n
    if _block_count(A, Bc.t) != n:
        raise DimensionMismatch(f"{A.shape} matrix vs {n} blocks of height {Bc.t}")
    eye = Matrix.identity(n, A.field)
    pw = powers(A, n)
    acc = None
    for j, Bj in enumerate(Bc.blocks):
        term = mat_mul(pw[j], kron(eye, Bj))
        acc = term if acc is None else acc + term
    return acc


def block_reachability(A: Matrix, B, t: int | None = None) -> Matrix:
    """``[B, AB, ..., A^(n-1) B]`` with ``n = dim(A) / t``."""
    if isinstance(B, BlockColumn):
        t = B.t if t is None else t
        B = B.to_matrix()
    if t is None:
        raise BadBlockSize("block size t is required")
    n = _block_count(A, t)
    if B.rows != A.rows:
        raise DimensionMismatch(f"{A.shape} matrix vs {B.shape} input")
    cols = [B]
    for _ in range(n - 1):
        cols.append(mat_mul(A, cols[-1]))
    return hstack(cols)


def blockwise_commuting(B: BlockColumn, G: BlockColumn) -> bool:
    if (B.n, B.t, B.m) != (G.n, G.t, G.m) or B.t != B.m:
        raise DimensionMismatch(f"{B!r} vs {G!r}")
    if B.field != G.field:
        raise FieldMismatch(f"{B.field!r} vs {G.field!r}")
    return all(mat_mul(Bi, Gj) == mat_mul(Gj, Bi) for Bi in B.blocks for Gj in G.blocks)


def block_crg_sides(A: Matrix, B: BlockColumn, G: BlockColumn) -> tuple[Matrix, Matrix]:
    """``R(A, B) G`` and ``R(A, G) B`` (no commutation check)."""
    return (
        mat_mul(block_reachability(A, B), G.to_matrix()),
        mat_mul(block_reachability(A, G), B.to_matrix()),
    )


def check_block_crg(A: Matrix, B, G, t: int | None = None) -> bool:
    """``[B, AB, ...] G == [G, AG, ...] B`` for a blockwise commuting pair."""
    Bc, Gc = _as_block_column(B, t), _as_block_column(G, t)
    if not blockwise_commuting(Bc, Gc):
        raise NotBlockwiseCommuting("B and G must be blockwise commuting")
    if _block_count(A, Bc.t) != Bc.n:
        raise DimensionMismatch(f"{A.shape} matrix vs {Bc.n} blocks of size {Bc.t}")
    lhs, rhs = block_crg_sides(A, Bc, Gc)
    return lhs == rhs


def polynomial_in(M: Matrix, coeffs: Iterable) -> Matrix:
    acc = Matrix.zeros(M.rows, M.cols, M.field)
    for c, Mk in zip(coeffs, powers(M, M.rows)):
        acc = acc + Mk.scale(c)
    return acc


def commuting_pair(n: int, t: int, field: FieldSpec, rng: LCG64) -> tuple[BlockColumn, BlockColumn]:
    """Random blockwise commuting ``(B, G)``: every block is a polynomial of
    degree ``< t`` in one random ``t x t`` matrix ``M``."""
    M = rng.matrix(field, t, t)
    B = BlockColumn([polynomial_in(M, rng.elements(field, t)) for _ in range(n)])
    G = BlockColumn([polynomial_in(M, rng.elements(field, t)) for _ in range(n)])
    return B, G


@dataclass(frozen=True)
class BlockStructure:
    is_companion: bool
    extracted_P: BlockColumn | None
    witness: int | None  # first block column that breaks the shape


def is_block_companion_structural(A: Matrix, t: int) -> BlockStructure:
    n = _block_count(A, t)
    view = BlockMatrixView(A, t)
    zero = Matrix.zeros(t, t, A.field)
    eye = Matrix.identity(t, A.field)
    for j in range(n - 1):
        for i in range(n):
            if view.block(i, j) != (eye if i == j + 1 else zero):
                return BlockStructure(False, None, j)
    return BlockStructure(True, BlockColumn([view.block(i, n - 1) for i in range(n)]), None)


def _unit_tall(r: int, c: int, rows: int, cols: int, field: FieldSpec) -> Matrix:
    z, o = field.canon(0), field.canon(1)
    return Matrix._raw(field, [[o if (i, j) == (r, c) else z for j in range(cols)] for i in range(rows)])


def block_criteria(A: Matrix, t: int, seed: int = 0, samples: int = 5) -> tuple[BlockStructure, dict[str, bool]]:
    """Evaluate every block criterion without asserting agreement.

    * ``structural``: the block companion shape;
    * ``krylov``: ``R(A, E_0) = I``;
    * ``subst``: ``R(A, E_i) = E_i(A)`` for every ``i`` (certifies
      ``R(A, G) = G(A)`` for all ``G``), plus ``samples`` random ``G``;
    * ``crg``: the block identity ``R(A, B) G = R(A, G) B`` with ``G = E_0`` against
      every unit ``nt x t`` matrix ``B`` (certified), plus ``samples``
      random commuting pairs.
    """
    n = _block_count(A, t)
    f = A.field
    rng = LCG64(seed)
    s = is_block_companion_structural(A, t)
    E = [block_unit(i, n, t, f) for i in range(n)]
    krylov = block_reachability(A, E[0]) == Matrix.identity(n * t, f)

    subst = all(block_reachability(A, Ei) == operator_subst(Ei, A) for Ei in E)
    for _ in range(samples):
        G = BlockColumn.from_matrix(rng.matrix(f, n * t, t), t)
        subst = subst and block_reachability(A, G) == operator_subst(G, A)

    crg = all(
        check_block_crg(A, BlockColumn.from_matrix(_unit_tall(r, c, n * t, t, f), t), E[0])
        for r in range(n * t)
        for c in range(t)
    )
    for _ in range(samples):
        B, G = commuting_pair(n, t, f, rng)
        crg = crg and check_block_crg(A, B, G)

    verdicts = {"structural": s.is_companion, "krylov": krylov, "subst": subst, "crg": crg}
    return s, verdicts


def recognize_block(A: Matrix, t: int, seed: int = 0, samples: int = 5) -> CompanionReport:
    """Block analogue of :func:`~companionforms.bilinear.recognize`.

    ``extracted_p`` holds the :class:`BlockColumn` ``P`` when ``A`` is a
    block companion matrix. Disagreeing criteria raise
    :class:`~companionforms.errors.InternalInconsistency`.
    """
    s, verdicts = block_criteria(A, t, seed, samples)
    return CompanionReport(
        structural=s.is_companion,
        krylov=verdicts["krylov"],
        extracted_p=s.extracted_P,
        witness=s.witness,
        verdicts=verdicts,
    )
