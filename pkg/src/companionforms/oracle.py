"""Brute-force ground truth over small prime fields.

Every matrix of a given size over GF(p) is enumerated, and each
characterization is evaluated by *full* enumeration of its universally
quantified vectors (all ``b, g`` in ``GF(p)^n``, plus the extra scalars for
the crossover identity). Nothing here uses the basis reductions the library
relies on, and arithmetic is done on plain residues with its own helpers;
the characteristic polynomial comes from cofactor expansion, not Berkowitz.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator

from .bilinear import (
    TheoremId,
    check_crossover_universal,
    check_h_symmetry,
    check_jmtrs,
    check_u_symmetry,
)
from .block import block_criteria, is_block_companion_structural
from .companion import (
    basis_samples,
    has_companion_lower_rows,
    is_companion_krylov,
    is_companion_structural,
    krylov_full_test,
)
from .errors import BudgetExceeded
from .field import FieldSpec
from .matrix import Matrix, Polynomial

DEFAULT_BUDGET = 10**6

ALL_MATRICES = "all"
COMPANION_ONLY = "companion"

# what the predicate is compared against
STRUCTURAL = "structural"
LOWER_ROWS = "lower_rows"


def _check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise BudgetExceeded(f"{what}: {count} exceeds budget {budget}")


def enumerate_matrices(field: FieldSpec, n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    """Every ``n x n`` matrix over GF(p) once, odometer order over row-major entries."""
    if not field.is_finite:
        raise ValueError("enumeration needs a prime field")
    p = field.modulus
    _check_budget(p ** (n * n), budget, f"GF({p}) {n}x{n} matrices")
    for flat in itertools.product(range(p), repeat=n * n):
        yield Matrix._raw(field, [flat[i * n : (i + 1) * n] for i in range(n)])


# --------------------------------------------------- residue arithmetic


def _mm(X, Y, p):
    cols = list(zip(*Y))
    return [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in X]


def _mv(X, v, p):
    return [sum(a * b for a, b in zip(r, v)) % p for r in X]


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _pows(A, k, p):
    out = [_eye(len(A))]
    for _ in range(k - 1):
        out.append(_mm(out[-1], A, p))
    return out


def _krylov(pw, v, p):
    # columns A^j v, returned as a list of columns
    return [_mv(P, v, p) for P in pw]


def _apply_cols(cols, w, p):
    n = len(cols[0])
    return [sum(cols[j][i] * w[j] for j in range(len(w))) % p for i in range(n)]


def _vectors(p, n):
    return [list(v) for v in itertools.product(range(p), repeat=n)]


# ----------------------------------------------- char poly by cofactors


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [(x + y) % p for x, y in zip(a, b)]


def _det_poly(M, p):
    # Laplace expansion along row 0; entries are coefficient lists
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = [0]
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = _poly_mul(M[0][j], _det_poly(minor, p), p)
        if j % 2:
            term = [(-c) % p for c in term]
        acc = _poly_add(acc, term, p)
    return acc


def _char_coeffs_mod(A, p):
    n = len(A)
    zI_minus_A = [
        [[(-A[i][j]) % p, 1] if i == j else [(-A[i][j]) % p] for j in range(n)] for i in range(n)
    ]
    c = _det_poly(zI_minus_A, p)
    return c + [0] * (n + 1 - len(c))


def cofactor_char_poly(A: Matrix) -> Polynomial:
    """``det(zI - A)`` by cofactor expansion, over any field.

    Exponential in ``n``; meant as an oracle for ``n <= 4`` or so.
    """
    f = A.field
    n = A.rows
    x = Polynomial(f, [0, 1])
    M = [
        [(x if i == j else Polynomial(f, [])) - Polynomial(f, [A[i, j]]) for j in range(n)]
        for i in range(n)
    ]

    def det(M):
        if len(M) == 1:
            return M[0][0]
        acc = Polynomial(f, [])
        for j in range(len(M)):
            minor = [row[:j] + row[j + 1 :] for row in M[1:]]
            term = M[0][j] * det(minor)
            acc = acc - term if j % 2 else acc + term
        return acc

    return det(M)


# ------------------------------------------------ brute-force predicates


def _oracle_krylov(A, p):
    # R(A, g) == g(A) for every g
    n = len(A)
    pw = _pows(A, n, p)
    for g in _vectors(p, n):
        R = [list(r) for r in zip(*_krylov(pw, g, p))]
        gA = [[sum(g[k] * pw[k][i][j] for k in range(n)) % p for j in range(n)] for i in range(n)]
        if R != gA:
            return False
    return True


def _oracle_h(A, p):
    n = len(A)
    pw = _pows(A, n, p)
    vecs = _vectors(p, n)
    kry = [_krylov(pw, v, p) for v in vecs]
    for bi, b in enumerate(vecs):
        for gi, g in enumerate(vecs):
            if _apply_cols(kry[bi], g, p) != _apply_cols(kry[gi], b, p):
                return False
    return True


def _u_eval(pw, b, g, p):
    n = len(b)
    out = []
    for k in range(n):
        last = [sum(b[j] * pw[j - k][n - 1][c] for j in range(k, n)) % p for c in range(n)]
        out.append(sum(x * y for x, y in zip(last, g)) % p)
    return out


def _oracle_u(A, p):
    n = len(A)
    pw = _pows(A, n, p)
    vecs = _vectors(p, n)
    for b in vecs:
        for g in vecs:
            if _u_eval(pw, b, g, p) != _u_eval(pw, g, b, p):
                return False
    return True


def _oracle_jmtrs(A, p):
    n = len(A)
    pw = _pows(A, n, p)
    lhs = [pw[n - 1 - k][n - 1] for k in range(n)]
    rhs = [
        [1 if j == i else (pw[j - i][n - 1][n - 1] if j > i else 0) for j in range(n)]
        for i in range(n)
    ]
    return lhs == rhs


def _oracle_crossover(A, p):
    n = len(A)
    chi = _char_coeffs_mod(A, p)
    tail = [(-c) % p for c in chi[:n]]
    pw = _pows(A, n + 1, p)
    ext = _vectors(p, n + 1)

    def side(coef, vec, t):
        w = [(vec[i] + t * tail[i]) % p for i in range(n)]
        return [sum(coef[k] * _mv(pw[k], w, p)[i] for k in range(n + 1)) % p for i in range(n)]

    for B in ext:
        for G in ext:
            if side(G, B[:n], B[n]) != side(B, G[:n], G[n]):
                return False
    return True


def _blocks(M, n, t):
    return [[row[:] for row in M[i * t : (i + 1) * t]] for i in range(n)]


def _oracle_block_crg(A, p, t):
    # R(A,B)G = R(A,G)B for every blockwise commuting B, G in GF(p)^{nt x t}
    N = len(A)
    n = N // t
    pw = _pows(A, n, p)
    talls = [
        [list(flat[r * t : (r + 1) * t]) for r in range(N)]
        for flat in itertools.product(range(p), repeat=N * t)
    ]
    split = [_blocks(T, n, t) for T in talls]

    def commuting(Bs, Gs):
        return all(_mm(X, Y, p) == _mm(Y, X, p) for X in Bs for Y in Gs)

    def reach_times(B, G):
        # sum_j A^j B G_j
        acc = [[0] * t for _ in range(N)]
        Gs = _blocks(G, n, t)
        for j in range(n):
            term = _mm(_mm(pw[j], B, p), Gs[j], p)
            acc = [[(a + b) % p for a, b in zip(r, s)] for r, s in zip(acc, term)]
        return acc

    for bi, B in enumerate(talls):
        for gi in range(bi + 1, len(talls)):
            G = talls[gi]
            if not commuting(split[bi], split[gi]):
                continue
            if reach_times(B, G) != reach_times(G, B):
                return False
    return True


# ------------------------------------------------------------- driver


@dataclass(frozen=True)
class EnumerationTask:
    field: FieldSpec
    n: int
    theorem_id: TheoremId
    mode: str = ALL_MATRICES
    limit: int | None = None
    budget: int = DEFAULT_BUDGET
    t: int = 1  # block size, BLOCK_CRG only
    reference: str = STRUCTURAL

    def __post_init__(self) -> None:
        if not self.field.is_finite:
            raise ValueError("enumeration tasks need a prime field")
        if self.mode not in (ALL_MATRICES, COMPANION_ONLY):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.reference not in (STRUCTURAL, LOWER_ROWS):
            raise ValueError(f"unknown reference {self.reference!r}")
        if self.reference == LOWER_ROWS and self.theorem_id is TheoremId.BLOCK_CRG:
            raise ValueError("the lower-rows reference is scalar only")
        if self.limit is None:
            _check_budget(self.matrix_count(), self.budget, "matrix enumeration")

    @property
    def size(self) -> int:
        return self.n * self.t if self.theorem_id is TheoremId.BLOCK_CRG else self.n

    def matrix_count(self) -> int:
        p = self.field.modulus
        if self.mode == COMPANION_ONLY:
            return p ** (self.size * self.t)
        return p ** (self.size**2)


@dataclass
class Mismatch:
    index: int
    matrix: Matrix
    structural: bool  # the reference verdict
    oracle: bool
    library: bool


@dataclass
class EnumerationResult:
    total: int = 0
    companion_count: int = 0
    predicate_pass_count: int = 0
    mismatches: list[Mismatch] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _library_verdict(theorem: TheoremId, A: Matrix, t: int) -> bool:
    if theorem is TheoremId.KRYLOV:
        return is_companion_krylov(A) and krylov_full_test(A, basis_samples(A.rows, A.field))
    if theorem is TheoremId.H_SYMMETRY:
        return check_h_symmetry(A).holds
    if theorem is TheoremId.JMTRS:
        return check_jmtrs(A).holds
    if theorem is TheoremId.U_SYMMETRY:
        return check_u_symmetry(A).holds
    if theorem is TheoremId.CROSSOVER:
        return check_crossover_universal(A).holds
    _, verdicts = block_criteria(A, t, samples=0)
    return verdicts["crg"]


def oracle_verdict(theorem: TheoremId, A: Matrix, t: int = 1) -> bool:
    """Brute-force truth value of a characterization for one matrix over GF(p)."""
    p = A.field.modulus
    raw = [list(r) for r in A.raw_rows()]
    if theorem is TheoremId.KRYLOV:
        return _oracle_krylov(raw, p)
    if theorem is TheoremId.H_SYMMETRY:
        return _oracle_h(raw, p)
    if theorem is TheoremId.JMTRS:
        return _oracle_jmtrs(raw, p)
    if theorem is TheoremId.U_SYMMETRY:
        return _oracle_u(raw, p)
    if theorem is TheoremId.CROSSOVER:
        return _oracle_crossover(raw, p)
    return _oracle_block_crg(raw, p, t)


def _companions(field: FieldSpec, n: int, t: int) -> Iterator[Matrix]:
    # every block companion matrix (t = 1: scalar companions)
    p = field.modulus
    N = n * t
    for flat in itertools.product(range(p), repeat=N * t):
        rows = [[0] * N for _ in range(N)]
        for i in range(N - t):
            rows[i + t][i] = 1
        for r in range(N):
            rows[r][N - t :] = flat[r * t : (r + 1) * t]
        yield Matrix._raw(field, rows)


def run_equivalence(task: EnumerationTask) -> EnumerationResult:
    """Compare the reference verdict, the brute-force predicate and the
    library's own checker on every enumerated matrix.

    The reference is structural companion-ness unless the task asks for
    ``lower_rows`` (rows ``1..n-1`` companion-shaped). ``companion_count``
    always counts structural companions.
    """
    thm = task.theorem_id
    t = task.t if thm is TheoremId.BLOCK_CRG else 1
    if thm is TheoremId.BLOCK_CRG:
        p = task.field.modulus
        _check_budget(p ** (2 * task.size * t), task.budget, "block pair enumeration")
    if task.mode == COMPANION_ONLY:
        stream = _companions(task.field, task.n, t)
    else:
        stream = enumerate_matrices(task.field, task.size, budget=task.budget if task.limit is None else 10**18)
    result = EnumerationResult()
    for idx, A in enumerate(stream):
        if task.limit is not None and idx >= task.limit:
            break
        if t == 1:
            structural = is_companion_structural(A).is_companion
        else:
            structural = is_block_companion_structural(A, t).is_companion
        ref = has_companion_lower_rows(A) if task.reference == LOWER_ROWS else structural
        truth = oracle_verdict(thm, A, t)
        lib = _library_verdict(thm, A, t)
        result.total += 1
        result.companion_count += structural
        result.predicate_pass_count += truth
        if not (ref == truth == lib):
            result.mismatches.append(Mismatch(idx, A, ref, truth, lib))
    return result
