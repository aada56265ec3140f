"""Dense exact matrices and polynomials over a :class:`~companionforms.field.FieldSpec`.

Matrices are immutable. Entries are kept as raw canonical values (``int``
residues or ``Fraction``) and handed out as :class:`FieldElement` on access.
Column vectors are plain ``n x 1`` matrices. All indexing is 0-based.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, NotSquare
from .field import FieldElement, FieldSpec


class Matrix:
    __slots__ = ("field", "rows", "cols", "_v", "_hash")

    def __init__(self, field: FieldSpec, data: Sequence[Sequence]) -> None:
        rows = [tuple(field.coerce(x) for x in row) for row in data]
        if not rows or not rows[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        self._init(field, tuple(rows))

    def _init(self, field: FieldSpec, v: tuple[tuple, ...]) -> None:
        self.field = field
        self.rows = len(v)
        self.cols = len(v[0])
        self._v = v
        self._hash = None

    @classmethod
    def _raw(cls, field: FieldSpec, v) -> Matrix:
        # v must already hold canonical raw values
        m = cls.__new__(cls)
        m._init(field, tuple(tuple(r) for r in v))
        return m

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> Matrix:
        z = field.canon(0)
        return cls._raw(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> Matrix:
        z, o = field.canon(0), field.canon(1)
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries: Iterable, field: FieldSpec) -> Matrix:
        return cls(field, [[x] for x in entries])

    @classmethod
    def from_columns(cls, columns: Sequence[Matrix]) -> Matrix:
        return hstack(columns)

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self._v[i][j])

    def row(self, i: int) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, x) for x in self._v[i])

    def col(self, j: int) -> Matrix:
        return Matrix._raw(self.field, [(r[j],) for r in self._v])

    def entries(self) -> list[FieldElement]:
        """Row-major flattening."""
        return [FieldElement(self.field, x) for r in self._v for x in r]

    def to_lists(self) -> list[list[FieldElement]]:
        return [[FieldElement(self.field, x) for x in r] for r in self._v]

    def raw_rows(self) -> tuple[tuple, ...]:
        return self._v

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        """Rows ``r0:r1`` and columns ``c0:c1``."""
        if not (0 <= r0 < r1 <= self.rows and 0 <= c0 < c1 <= self.cols):
            raise IndexOutOfRange(f"bad slice [{r0}:{r1}, {c0}:{c1}] of {self.shape}")
        return Matrix._raw(self.field, [r[c0:c1] for r in self._v[r0:r1]])

    @property
    def T(self) -> Matrix:
        return Matrix._raw(self.field, list(zip(*self._v)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._v for x in r)

    # -- arithmetic ---------------------------------------------------
    def _check_field(self, other: Matrix) -> None:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        c = self.field.canon
        return Matrix._raw(
            self.field, [[c(a + b) for a, b in zip(r, s)] for r, s in zip(self._v, other._v)]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Matrix:
        c = self.field.canon
        return Matrix._raw(self.field, [[c(-a) for a in r] for r in self._v])

    def scale(self, s) -> Matrix:
        k = self.field.coerce(s)
        c = self.field.canon
        return Matrix._raw(self.field, [[c(k * a) for a in r] for r in self._v])

    def __mul__(self, s):
        if isinstance(s, Matrix):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self._v == other._v

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self._v))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._v)
        return f"Matrix({self.field!r}, [{body}])"

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self._v]
        w = max(len(s) for r in cells for s in r)
        return "\n".join("[" + " ".join(s.rjust(w) for s in r) + "]" for r in cells)


def _check_same_field(*ms: Matrix) -> FieldSpec:
    f = ms[0].field
    for m in ms[1:]:
        if m.field != f:
            raise FieldMismatch(f"{f!r} vs {m.field!r}")
    return f


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    f = _check_same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    bt = list(zip(*B._v))
    if f.is_finite:
        m = f.modulus
        return Matrix._raw(f, [[sum(a * b for a, b in zip(r, col)) % m for col in bt] for r in A._v])
    return Matrix._raw(f, [[_dot_q(r, col) for col in bt] for r in A._v])


def _dot_q(r, col) -> Fraction:
    # one normalization per entry instead of one per term
    num, den = 0, 1
    for a, b in zip(r, col):
        if a and b:
            d = a.denominator * b.denominator
            num = num * d + a.numerator * b.numerator * den
            den *= d
    return Fraction(num, den)


def hstack(ms: Sequence[Matrix]) -> Matrix:
    f = _check_same_field(*ms)
    if len({m.rows for m in ms}) != 1:
        raise DimensionMismatch("hstack needs equal row counts")
    return Matrix._raw(f, [sum((m._v[i] for m in ms), ()) for i in range(ms[0].rows)])


def vstack(ms: Sequence[Matrix]) -> Matrix:
    f = _check_same_field(*ms)
    if len({m.cols for m in ms}) != 1:
        raise DimensionMismatch("vstack needs equal column counts")
    return Matrix._raw(f, [r for m in ms for r in m._v])


def unit_vector(i: int, n: int, field: FieldSpec) -> Matrix:
    """The column ``e_i`` of length ``n``."""
    if not 0 <= i < n:
        raise IndexOutOfRange(f"unit vector index {i} outside 0..{n - 1}")
    z, o = field.canon(0), field.canon(1)
    return Matrix._raw(field, [(o if k == i else z,) for k in range(n)])


def kron(S: Matrix, T: Matrix) -> Matrix:
    """Kronecker product: block ``(i, j)`` of the result is ``S[i, j] * T``."""
    f = _check_same_field(S, T)
    c = f.canon
    out = []
    for srow in S._v:
        for trow in T._v:
            out.append([c(s * t) for s in srow for t in trow])
    return Matrix._raw(f, out)


def mat_pow(A: Matrix, k: int) -> Matrix:
    if not A.is_square:
        raise NotSquare(f"power of non-square {A.shape} matrix")
    if k < 0:
        raise ValueError("negative exponent")
    result = Matrix.identity(A.rows, A.field)
    for _ in range(k):
        result = mat_mul(result, A)
    return result


def powers(A: Matrix, count: int) -> list[Matrix]:
    """``[A^0, A^1, ..., A^(count-1)]``."""
    if not A.is_square:
        raise NotSquare(f"powers of non-square {A.shape} matrix")
    out = [Matrix.identity(A.rows, A.field)]
    for _ in range(count - 1):
        out.append(mat_mul(out[-1], A))
    return out


class Polynomial:
    """Univariate polynomial, coefficients indexed from degree 0, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable) -> None:
        raw = [field.coerce(c) for c in coeffs]
        while raw and raw[-1] == 0:
            raw.pop()
        self.field = field
        self.coeffs: tuple[FieldElement, ...] = tuple(FieldElement(field, c) for c in raw)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __add__(self, other: Polynomial) -> Polynomial:
        _same_poly_field(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            _same_poly_field(self, other)
            if not self.coeffs or not other.coeffs:
                return Polynomial(self.field, [])
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Polynomial(self.field, out)
        return Polynomial(self.field, [c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, A: Matrix) -> Matrix:
        """Horner evaluation at a square matrix, any degree."""
        if not A.is_square:
            raise NotSquare(f"cannot evaluate at {A.shape} matrix")
        if A.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {A.field!r}")
        n = A.rows
        acc = Matrix.zeros(n, n, A.field)
        eye = Matrix.identity(n, A.field)
        for c in reversed(self.coeffs):
            acc = mat_mul(acc, A) + eye.scale(c)
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []  # (sign, body), highest degree first
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            s = str(c)
            sign, mag = ("-", s[1:]) if s.startswith("-") else ("+", s)
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        return out + "".join(f" {sg} {b}" for sg, b in terms[1:])


def _same_poly_field(a: Polynomial, b: Polynomial) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def char_poly(A: Matrix) -> Polynomial:
    """``det(zI - A)`` by Berkowitz's division-free recursion.

    Only ring operations are used, so the result is exact over GF(p) even
    when ``p <= n``.

    Write ``A = [[a, r], [c, M]]`` with ``M`` the trailing principal block.
    The coefficient vector of ``chi_A`` (highest degree first) is ``T @ q``
    where ``q`` is that of ``chi_M`` and ``T`` is lower-triangular Toeplitz
    with first column ``[1, -a, -r c, -r M c, ..., -r M^(k-2) c]``.
    """
    if not A.is_square:
        raise NotSquare(f"characteristic polynomial of {A.shape} matrix")
    f = A.field
    c = f.canon
    v = A._v
    n = A.rows
    # q: coefficients of chi of the trailing block, highest degree first
    q = [c(1), c(-v[n - 1][n - 1])]
    for s in range(n - 2, -1, -1):
        a = v[s][s]
        r = v[s][s + 1 :]
        col = [v[i][s] for i in range(s + 1, n)]
        M = [row[s + 1 :] for row in v[s + 1 :]]
        k = n - s  # size of the current leading block
        first = [c(1), c(-a)]
        x = col
        for _ in range(k - 1):
            first.append(c(-sum(ri * xi for ri, xi in zip(r, x))))
            x = [c(sum(mij * xj for mij, xj in zip(mrow, x))) for mrow in M]
        # first has length k + 1; q has length k
        q = [c(sum(first[i - j] * q[j] for j in range(min(i, k - 1) + 1))) for i in range(k + 1)]
    return Polynomial(f, list(reversed(q)))


def poly_eval_matrix(b, A: Matrix) -> Matrix:
    """``b(A) = sum_i b_i A^i`` for a coefficient vector ``b``.

    ``b`` may be a sequence of scalars, a :class:`CoeffVector`, an ``n x 1``
    matrix or a :class:`Polynomial`.
    """
    if not A.is_square:
        raise NotSquare(f"cannot evaluate at {A.shape} matrix")
    if isinstance(b, Polynomial):
        return b.eval_matrix(A)
    coeffs = coeff_values(b, A.field)
    if len(coeffs) > A.rows:
        raise DimensionMismatch(f"{len(coeffs)} coefficients for a {A.rows}x{A.rows} matrix")
    return Polynomial(A.field, [FieldElement(A.field, x) for x in coeffs]).eval_matrix(A)


def coeff_values(b, field: FieldSpec) -> list[int | Fraction]:
    """Raw canonical entries of anything vector-like."""
    if isinstance(b, Matrix):
        if b.field != field:
            raise FieldMismatch(f"{b.field!r} vs {field!r}")
        if b.cols != 1:
            raise DimensionMismatch(f"expected a column vector, got {b.shape}")
        return [r[0] for r in b._v]
    entries = getattr(b, "entries", b)
    return [field.coerce(x) for x in entries]
