"""Second companion matrices, reachability matrices and the basic recognizers.

A second companion matrix has ones on the subdiagonal, zeros elsewhere in
its first ``n - 1`` columns, and an arbitrary last column ``p``::

    [0 0 ... 0 p_0    ]
    [1 0 ... 0 p_1    ]
    [0 1 ... 0 p_2    ]
    [      ...        ]
    [0 0 ... 1 p_{n-1}]

Three equivalent tests decide whether a square ``A`` has this shape: the
column shift ``A e_j = e_{j+1}`` for ``j < n - 1``, the Krylov condition
``R(A, e_0) = I``, and ``R(A, g) = g(A)`` for every ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, InternalInconsistency, NotSquare
from .field import FieldElement, FieldSpec
from .matrix import Matrix, coeff_values, hstack, mat_mul, poly_eval_matrix, unit_vector


class CoeffVector:
    """A vector ``b`` in ``K^n``, read as the polynomial ``b_0 + b_1 z + ...``."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries: Iterable) -> None:
        vals = tuple(FieldElement(field, field.coerce(x)) for x in entries)
        if not vals:
            raise DimensionMismatch("a coefficient vector needs length >= 1")
        self.field = field
        self.entries: tuple[FieldElement, ...] = vals

    @classmethod
    def from_column(cls, v: Matrix) -> CoeffVector:
        if v.cols != 1:
            raise DimensionMismatch(f"expected a column vector, got {v.shape}")
        return cls(v.field, [v[i, 0] for i in range(v.rows)])

    @classmethod
    def unit(cls, i: int, n: int, field: FieldSpec) -> CoeffVector:
        return cls.from_column(unit_vector(i, n, field))

    @classmethod
    def zeros(cls, n: int, field: FieldSpec) -> CoeffVector:
        return cls(field, [0] * n)

    def column(self) -> Matrix:
        return Matrix(self.field, [[x] for x in self.entries])

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> FieldElement:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffVector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.field, self.entries))

    def __repr__(self) -> str:
        return f"CoeffVector({self.field!r}, [{', '.join(str(x) for x in self.entries)}])"


def as_column(v, field: FieldSpec, n: int | None = None) -> Matrix:
    """Coerce a CoeffVector, sequence or column matrix to an ``n x 1`` Matrix."""
    if isinstance(v, Matrix):
        if v.field != field:
            raise FieldMismatch(f"{v.field!r} vs {field!r}")
        col = v
    else:
        if isinstance(v, CoeffVector) and v.field != field:
            raise FieldMismatch(f"{v.field!r} vs {field!r}")
        col = Matrix._raw(field, [(x,) for x in coeff_values(v, field)])
    if col.cols != 1 or (n is not None and col.rows != n):
        raise DimensionMismatch(f"expected a length-{n} column, got {col.shape}")
    return col


def _require_square(A: Matrix) -> int:
    if not A.is_square:
        raise NotSquare(f"expected a square matrix, got {A.shape}")
    return A.rows


def make_companion(p, field: FieldSpec | None = None) -> Matrix:
    """The second companion matrix whose last column is ``p``.

    ``p`` is a :class:`CoeffVector`, or a sequence of scalars together with
    ``field`` (which may be omitted if the scalars are FieldElements).
    """
    if isinstance(p, CoeffVector):
        pv = p
    elif isinstance(p, Matrix):
        pv = CoeffVector.from_column(p)
    else:
        pv = CoeffVector(field or _infer_field(p), p)
    n = len(pv)
    f = pv.field
    z, o = f.canon(0), f.canon(1)
    rows = []
    for i in range(n):
        row = [o if i == j + 1 else z for j in range(n - 1)]
        row.append(pv[i].value)
        rows.append(row)
    return Matrix._raw(f, rows)


def _infer_field(p: Sequence) -> FieldSpec:
    for x in p:
        if isinstance(x, FieldElement):
            return x.field
    raise TypeError("pass a CoeffVector or FieldElements so the field is known")


def reachability(A: Matrix, g) -> Matrix:
    """Krylov matrix ``[g, Ag, ..., A^(n-1) g]``."""
    n = _require_square(A)
    col = as_column(g, A.field, n)
    cols = [col]
    for _ in range(n - 1):
        cols.append(mat_mul(A, cols[-1]))
    return hstack(cols)


@dataclass(frozen=True)
class StructuralResult:
    is_companion: bool
    extracted_p: CoeffVector | None
    witness: int | None  # first column j with A e_j != e_{j+1}


def is_companion_structural(A: Matrix) -> StructuralResult:
    """Check ``A [e_0 .. e_{n-2}] = [e_1 .. e_{n-1}]`` column by column.

    Every 1x1 matrix passes (the condition is vacuous).
    """
    n = _require_square(A)
    v = A.raw_rows()
    for j in range(n - 1):
        if any(v[i][j] != (1 if i == j + 1 else 0) for i in range(n)):
            return StructuralResult(False, None, j)
    return StructuralResult(True, CoeffVector.from_column(A.col(n - 1)), None)


def has_companion_lower_rows(A: Matrix) -> bool:
    """Rows ``1..n-1`` of ``A`` match a companion matrix; row 0 is ignored.

    That is, ``e_i^T A = e_{i-1}^T + a_{i,n-1} e_{n-1}^T`` for ``i >= 1``.
    This is exactly what the ``u``-symmetry and moment-matrix tests in
    :mod:`companionforms.bilinear` detect: they only involve
    ``e_{n-1}^T A^k`` for ``k < n``, which never depends on row 0.
    """
    n = _require_square(A)
    v = A.raw_rows()
    return all(
        v[i][j] == (1 if j == i - 1 else 0) for i in range(1, n) for j in range(n - 1)
    )


def is_companion_krylov(A: Matrix) -> bool:
    """``R(A, e_0) == I``."""
    n = _require_square(A)
    return reachability(A, unit_vector(0, n, A.field)) == Matrix.identity(n, A.field)


def krylov_full_test(A: Matrix, samples: Sequence) -> bool:
    """``R(A, g) == g(A)`` for each sampled ``g``.

    Both sides are linear in ``g``, so passing on ``e_0, ..., e_{n-1}``
    certifies the identity for every ``g``; see :func:`basis_samples`.
    """
    n = _require_square(A)
    if not samples:
        raise ValueError("samples must be nonempty")
    for g in samples:
        col = as_column(g, A.field, n)
        if reachability(A, col) != poly_eval_matrix(col, A):
            return False
    return True


def basis_samples(n: int, field: FieldSpec) -> list[Matrix]:
    return [unit_vector(i, n, field) for i in range(n)]


@dataclass(frozen=True)
class CompanionReport:
    """Verdicts of the companion tests on one matrix.

    ``structural`` and ``krylov`` must agree; ``extracted_p`` is present
    exactly when the matrix is companion, ``witness`` exactly when it is not.
    ``verdicts`` maps each criterion equivalent to companion-ness to its
    outcome; all must equal ``structural``.

    ``row_verdicts`` holds criteria that only see rows ``1..n-1`` (see
    :func:`has_companion_lower_rows`); they must all equal ``lower_rows``.
    """

    structural: bool
    krylov: bool
    extracted_p: Any = None
    witness: int | None = None
    verdicts: dict[str, bool] = dc_field(default_factory=dict)
    lower_rows: bool | None = None
    row_verdicts: dict[str, bool] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.structural != self.krylov:
            raise InternalInconsistency(
                f"structural={self.structural} but krylov={self.krylov}"
            )
        if (self.extracted_p is not None) != self.structural:
            raise InternalInconsistency("extracted_p must be present iff companion")
        if self.structural and self.witness is not None:
            raise InternalInconsistency("a companion matrix has no witness")
        disagree = {k: v for k, v in self.verdicts.items() if v != self.structural}
        if disagree:
            raise InternalInconsistency(
                f"criteria disagree with structural={self.structural}: {disagree}"
            )
        if self.row_verdicts:
            if self.lower_rows is None:
                raise InternalInconsistency("row_verdicts need the lower_rows reference")
            off = {k: v for k, v in self.row_verdicts.items() if v != self.lower_rows}
            if off:
                raise InternalInconsistency(
                    f"row criteria disagree with lower_rows={self.lower_rows}: {off}"
                )

    @property
    def is_companion(self) -> bool:
        return self.structural


def reachability_report(A: Matrix) -> CompanionReport:
    """Run the three equivalent reachability criteria and cross-check them."""
    s = is_companion_structural(A)
    k = is_companion_krylov(A)
    full = krylov_full_test(A, basis_samples(A.rows, A.field))
    return CompanionReport(
        structural=s.is_companion,
        krylov=k,
        extracted_p=s.extracted_p,
        witness=s.witness,
        verdicts={"structural": s.is_companion, "krylov": k, "krylov_full": full},
    )
