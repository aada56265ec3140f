"""The bilinear maps ``h`` and ``u`` and the recognizers built on them.

For a square ``A`` of size ``n`` and vectors ``b, g``:

* ``h(A; b, g) = R(A, b) g``, the Krylov matrix of ``b`` applied to ``g``;
* ``u(A; b, g)`` has row ``k`` equal to ``e_{n-1}^T (sum_{j>=k} b_j A^(j-k)) g``.

``h`` is symmetric in ``(b, g)`` exactly when ``A`` is a second companion
matrix, and so is the crossover identity, which extends ``b`` and ``g`` by
one scalar each and brings in the tail ``p`` of ``chi_A(z) = z^n - p(z)``.
``u`` is symmetric for every companion matrix, but the converse fails: ``u``
only reads ``e_{n-1}^T A^k`` for ``k < n``, which is blind to row 0 of ``A``.
Its symmetry (and the equivalent moment-matrix identity) holds exactly when
rows ``1..n-1`` of ``A`` have companion shape.

All universal statements are decided on unit-vector bases, which is sound
because every map involved is (bi)linear.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .companion import (
    CoeffVector,
    CompanionReport,
    _require_square,
    as_column,
    basis_samples,
    has_companion_lower_rows,
    is_companion_krylov,
    is_companion_structural,
    krylov_full_test,
    reachability,
)
from .errors import DimensionMismatch, FieldMismatch, InternalInconsistency
from .field import FieldElement, FieldSpec
from .matrix import Matrix, char_poly, mat_mul, powers, unit_vector


class TheoremId(enum.Enum):
    KRYLOV = "krylov"
    H_SYMMETRY = "bca"
    JMTRS = "jmtrs"
    U_SYMMETRY = "usym"
    CROSSOVER = "crossover"
    BLOCK_CRG = "crg"


@dataclass(frozen=True)
class Counterexample:
    inputs: dict[str, Any]
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: TheoremId
    holds: bool
    counterexample: Counterexample | None = None

    def __post_init__(self) -> None:
        if (self.counterexample is None) != self.holds:
            raise InternalInconsistency("counterexample must be present iff the check fails")
        if self.counterexample is not None and self.counterexample.lhs == self.counterexample.rhs:
            raise InternalInconsistency("counterexample sides are equal")

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ExtendedCoeffVector:
    """``(head, tail)``: a vector in ``K^n`` plus one extra scalar."""

    head: CoeffVector
    tail: FieldElement

    def __post_init__(self) -> None:
        if self.head.field != self.tail.field:
            raise FieldMismatch(f"{self.head.field!r} vs {self.tail.field!r}")

    @classmethod
    def of(cls, field: FieldSpec, head, tail) -> ExtendedCoeffVector:
        return cls(CoeffVector(field, head), field(tail))

    @property
    def field(self) -> FieldSpec:
        return self.head.field

    def coeffs(self) -> list[FieldElement]:
        """``[x_0, ..., x_{n-1}, x_n]``."""
        return [*self.head.entries, self.tail]


# ---------------------------------------------------------------- maps


def h_map(A: Matrix, b, g) -> Matrix:
    n = _require_square(A)
    return mat_mul(reachability(A, b), as_column(g, A.field, n))


def _last_row_powers(A: Matrix) -> list[tuple]:
    # raw rows e_{n-1}^T A^k, k = 0..n-1
    n = A.rows
    row = unit_vector(n - 1, n, A.field).T
    out = [row]
    for _ in range(n - 1):
        out.append(mat_mul(out[-1], A))
    return [r.raw_rows()[0] for r in out]


def _moments(A: Matrix, g: Matrix) -> list:
    # raw scalars e_{n-1}^T A^k g, k = 0..n-1
    n = A.rows
    out = []
    x = g
    for _ in range(n):
        out.append(x.raw_rows()[n - 1][0])
        x = mat_mul(A, x)
    return out


def L_matrix(A: Matrix, g) -> Matrix:
    """Upper-triangular Toeplitz matrix with entry ``(i, j) = e_{n-1}^T A^(j-i) g``."""
    n = _require_square(A)
    m = _moments(A, as_column(g, A.field, n))
    z = A.field.canon(0)
    return Matrix._raw(A.field, [[m[j - i] if j >= i else z for j in range(n)] for i in range(n)])


def Q_matrix(A: Matrix, g) -> Matrix:
    """Row ``k`` is ``e_{n-1}^T (g_k I + g_{k+1} A + ... + g_{n-1} A^(n-1-k))``."""
    n = _require_square(A)
    gv = [r[0] for r in as_column(g, A.field, n).raw_rows()]
    last = _last_row_powers(A)
    c = A.field.canon
    rows = []
    for k in range(n):
        rows.append(
            [c(sum(gv[j] * last[j - k][col] for j in range(k, n))) for col in range(n)]
        )
    return Matrix._raw(A.field, rows)


def u_direct(A: Matrix, b, g) -> Matrix:
    """Row-by-row evaluation of ``u(A; b, g)`` exactly as defined.

    Builds each ``S_k = sum_{j>=k} b_j A^(j-k)`` (by the recurrence
    ``S_k = b_k I + A S_{k+1}``) and contracts its last row with ``g``.
    """
    n = _require_square(A)
    f = A.field
    bv = [r[0] for r in as_column(b, f, n).raw_rows()]
    gcol = as_column(g, f, n)
    eye = Matrix.identity(n, f)
    out = [None] * n
    S = Matrix.zeros(n, n, f)
    for k in range(n - 1, -1, -1):
        S = eye.scale(bv[k]) + mat_mul(A, S)
        out[k] = mat_mul(S, gcol).raw_rows()[n - 1]
    return Matrix._raw(f, out)


def u_map(A: Matrix, b, g) -> Matrix:
    """``u(A; b, g)``, computed as ``L(A, g) b`` and cross-checked.

    For every ``A`` the definition agrees with both ``L(A, g) b`` and
    ``Q(A, b) g``; a disagreement raises :class:`InternalInconsistency`.
    """
    n = _require_square(A)
    bcol = as_column(b, A.field, n)
    gcol = as_column(g, A.field, n)
    via_l = mat_mul(L_matrix(A, gcol), bcol)
    direct = u_direct(A, bcol, gcol)
    if via_l != direct or mat_mul(Q_matrix(A, bcol), gcol) != direct:
        raise InternalInconsistency("u(A; b, g) formulations disagree")
    return via_l


# ----------------------------------------------------------- recognizers


def check_h_symmetry(A: Matrix) -> TheoremVerdict:
    """``h(A; b, g) = h(A; g, b)`` for all ``b, g``, via basis pairs ``i < j``."""
    n = _require_square(A)
    f = A.field
    basis = basis_samples(n, f)
    reach = [reachability(A, e) for e in basis]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = mat_mul(reach[i], basis[j])
            rhs = mat_mul(reach[j], basis[i])
            if lhs != rhs:
                return TheoremVerdict(
                    TheoremId.H_SYMMETRY,
                    False,
                    Counterexample({"b": basis[i], "g": basis[j]}, lhs, rhs),
                )
    return TheoremVerdict(TheoremId.H_SYMMETRY, True)


def jmtrs_sides(A: Matrix) -> tuple[Matrix, Matrix]:
    """The stacked rows ``e^T A^(n-1); ...; e^T A; e^T`` and the unit-diagonal
    moment matrix they must equal for a companion ``A`` (``e = e_{n-1}``)."""
    n = _require_square(A)
    last = _last_row_powers(A)
    lhs = Matrix._raw(A.field, [last[n - 1 - k] for k in range(n)])
    m = _moments(A, unit_vector(n - 1, n, A.field))
    z, o = A.field.canon(0), A.field.canon(1)
    rhs = Matrix._raw(
        A.field,
        [[o if j == i else (m[j - i] if j > i else z) for j in range(n)] for i in range(n)],
    )
    return lhs, rhs


def check_jmtrs(A: Matrix) -> TheoremVerdict:
    """Compare the two sides of :func:`jmtrs_sides` row by row.

    Like :func:`check_u_symmetry`, this is blind to row 0 of ``A``.
    """
    lhs, rhs = jmtrs_sides(A)
    for k in range(A.rows):
        if lhs.raw_rows()[k] != rhs.raw_rows()[k]:
            return TheoremVerdict(
                TheoremId.JMTRS,
                False,
                Counterexample({"row": k}, lhs.submatrix(k, k + 1, 0, A.cols),
                               rhs.submatrix(k, k + 1, 0, A.cols)),
            )
    return TheoremVerdict(TheoremId.JMTRS, True)


def check_u_symmetry(A: Matrix) -> TheoremVerdict:
    """``u(A; b, g) = u(A; g, b)`` for all ``b, g``.

    Symmetry means ``L(A, g) = Q(A, g)`` for every ``g``; both sides are
    linear in ``g`` so the unit vectors suffice.

    Holds for every companion matrix, but also whenever rows ``1..n-1``
    alone have companion shape: ``u`` never reads row 0 of ``A``.
    """
    n = _require_square(A)
    for i, e in enumerate(basis_samples(n, A.field)):
        lhs, rhs = L_matrix(A, e), Q_matrix(A, e)
        if lhs != rhs:
            return TheoremVerdict(
                TheoremId.U_SYMMETRY, False, Counterexample({"g": e}, lhs, rhs)
            )
    return TheoremVerdict(TheoremId.U_SYMMETRY, True)


def crossover_tail(A: Matrix) -> CoeffVector:
    """``p`` with ``chi_A(z) = z^n - p(z)``."""
    chi = char_poly(A)
    return CoeffVector(A.field, [-chi.coeff(i) for i in range(A.rows)])


def _ext(x, field: FieldSpec, n: int) -> ExtendedCoeffVector:
    if isinstance(x, ExtendedCoeffVector):
        if x.field != field:
            raise FieldMismatch(f"{x.field!r} vs {field!r}")
        if len(x.head) != n:
            raise DimensionMismatch(f"expected head of length {n}, got {len(x.head)}")
        return x
    vals = list(x)
    if len(vals) != n + 1:
        raise DimensionMismatch(f"expected {n + 1} extended coefficients, got {len(vals)}")
    return ExtendedCoeffVector.of(field, vals[:n], vals[n])


def crossover_sides(A: Matrix, B, G, p=None, _powers=None) -> tuple[Matrix, Matrix]:
    """Both sides of the crossover identity

        sum_{k=0}^n A^k g_k (b + b_n p) = sum_{k=0}^n A^k b_k (g + g_n p)

    with ``p`` taken from the characteristic polynomial unless supplied.
    """
    n = _require_square(A)
    f = A.field
    Bx, Gx = _ext(B, f, n), _ext(G, f, n)
    pcol = as_column(crossover_tail(A) if p is None else p, f, n)
    pw = _powers or powers(A, n + 1)
    b, g = Bx.head.column(), Gx.head.column()

    def side(coeffs, vec, tail):
        w = vec + pcol.scale(tail)
        acc = Matrix.zeros(n, 1, f)
        for k, c in enumerate(coeffs):
            if not c.is_zero():
                acc = acc + mat_mul(pw[k], w).scale(c)
        return acc

    return side(Gx.coeffs(), b, Bx.tail), side(Bx.coeffs(), g, Gx.tail)


def crossover_reach_sides(A: Matrix, B, G, p=None) -> tuple[Matrix, Matrix]:
    """The rearranged form

        R(A, b) g + b_n R(A, p) g + g_n A^n b = R(A, g) b + g_n R(A, p) b + b_n A^n g,

    which differs from :func:`crossover_sides` by the symmetric term
    ``b_n g_n A^n p`` on both sides.
    """
    n = _require_square(A)
    f = A.field
    Bx, Gx = _ext(B, f, n), _ext(G, f, n)
    pcol = as_column(crossover_tail(A) if p is None else p, f, n)
    An = powers(A, n + 1)[n]
    b, g = Bx.head.column(), Gx.head.column()
    Rp = reachability(A, pcol)
    lhs = mat_mul(reachability(A, b), g) + mat_mul(Rp, g).scale(Bx.tail) + mat_mul(An, b).scale(Gx.tail)
    rhs = mat_mul(reachability(A, g), b) + mat_mul(Rp, b).scale(Gx.tail) + mat_mul(An, g).scale(Bx.tail)
    return lhs, rhs


def check_crossover(A: Matrix, B, G, p=None) -> bool:
    """Does the crossover identity hold for this one pair ``(B, G)``?

    ``p`` defaults to the tail of ``chi_A``; pass it explicitly to test a
    claimed characteristic polynomial instead.
    """
    lhs, rhs = crossover_sides(A, B, G, p)
    return lhs == rhs


def check_crossover_universal(A: Matrix, p=None) -> TheoremVerdict:
    """Crossover identity for all extended pairs, via basis pairs of ``K^(n+1)``."""
    n = _require_square(A)
    f = A.field
    pv = crossover_tail(A) if p is None else p
    pw = powers(A, n + 1)
    basis = [[f.one if k == i else f.zero for k in range(n + 1)] for i in range(n + 1)]
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            B = ExtendedCoeffVector.of(f, basis[i][:n], basis[i][n])
            G = ExtendedCoeffVector.of(f, basis[j][:n], basis[j][n])
            lhs, rhs = crossover_sides(A, B, G, pv, _powers=pw)
            if lhs != rhs:
                return TheoremVerdict(
                    TheoremId.CROSSOVER, False, Counterexample({"B": B, "G": G, "p": pv}, lhs, rhs)
                )
    return TheoremVerdict(TheoremId.CROSSOVER, True)


def recognize(A: Matrix) -> CompanionReport:
    """Run every scalar criterion and cross-check the results.

    The Krylov, ``h``-symmetry and crossover criteria are equivalent to
    companion form and must agree with the structural test. The moment-matrix
    and ``u``-symmetry tests ignore row 0 of ``A``, so they are checked against
    :func:`has_companion_lower_rows` instead. Any disagreement raises
    :class:`InternalInconsistency`.
    """
    s = is_companion_structural(A)
    krylov = is_companion_krylov(A)
    verdicts = {
        "structural": s.is_companion,
        "krylov": krylov,
        "krylov_full": krylov_full_test(A, basis_samples(A.rows, A.field)),
        "h_symmetry": check_h_symmetry(A).holds,
        "crossover": check_crossover_universal(A).holds,
    }
    row_verdicts = {
        "jmtrs": check_jmtrs(A).holds,
        "u_symmetry": check_u_symmetry(A).holds,
    }
    return CompanionReport(
        structural=s.is_companion,
        krylov=krylov,
        extracted_p=s.extracted_p,
        witness=s.witness,
        verdicts=verdicts,
        lower_rows=has_companion_lower_rows(A),
        row_verdicts=row_verdicts,
    )
