import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from companionforms import (
    GF,
    Q,
    BlockColumn,
    Matrix,
    block_reachability,
    block_unit,
    blockwise_commuting,
    check_block_crg,
    make_block_companion,
    make_companion,
    mat_mul,
    mat_pow,
    operator_subst,
    reachability,
    recognize,
    recognize_block,
)
from companionforms.block import (
    BlockMatrixView,
    block_criteria,
    commuting_pair,
    is_block_companion_structural,
    polynomial_in,
)
from companionforms.errors import BadBlockSize, DimensionMismatch, InternalInconsistency, NotBlockwiseCommuting
from companionforms.matrix import poly_eval_matrix
from companionforms.rng import LCG64

from .conftest import fields, matrices


def test_block_companion_example():
    P = BlockColumn([Matrix(Q, [[1, 2], [3, 4]]), Matrix(Q, [[5, 6], [7, 8]])])
    F = make_block_companion(P)
    assert F == Matrix(
        Q,
        [[0, 0, 1, 2], [0, 0, 3, 4], [1, 0, 5, 6], [0, 1, 7, 8]],
    )
    s = is_block_companion_structural(F, 2)
    assert s.is_companion and s.extracted_P == P


def test_block_companion_from_tall_matrix():
    P = Matrix(GF(3), [[1, 2], [0, 1], [2, 2], [1, 0]])
    assert make_block_companion(P) == make_block_companion(BlockColumn.from_matrix(P, 2))


def test_bad_block_sizes():
    with pytest.raises(BadBlockSize):
        BlockColumn.from_matrix(Matrix.zeros(3, 2, Q), 2)
    with pytest.raises(BadBlockSize):
        is_block_companion_structural(Matrix.zeros(3, 3, Q), 2)
    with pytest.raises(BadBlockSize):
        BlockMatrixView(Matrix.zeros(3, 3, Q), 2)
    with pytest.raises(DimensionMismatch):
        BlockColumn([Matrix.zeros(2, 2, Q), Matrix.zeros(1, 2, Q)])
    with pytest.raises(DimensionMismatch):
        make_block_companion(BlockColumn([Matrix.zeros(2, 1, Q)]))


def test_block_unit():
    E1 = block_unit(1, 3, 2, Q)
    assert E1.to_matrix() == Matrix(Q, [[0, 0], [0, 0], [1, 0], [0, 1], [0, 0], [0, 0]])


def test_crg_requires_commuting():
    B = BlockColumn([Matrix(Q, [[0, 1], [0, 0]])])
    G = BlockColumn([Matrix(Q, [[0, 0], [1, 0]])])
    assert not blockwise_commuting(B, G)
    with pytest.raises(NotBlockwiseCommuting):
        check_block_crg(Matrix.zeros(2, 2, Q), B, G)


def block_setup(data):
    f = data.draw(fields)
    n = data.draw(st.integers(1, 3))
    t = data.draw(st.integers(1, 3))
    P = BlockColumn.from_matrix(data.draw(matrices(f, n * t, t)), t)
    return f, n, t, P, make_block_companion(P)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_block_reachability_identities(data):
    f, n, t, P, F = block_setup(data)
    E = [block_unit(i, n, t, f) for i in range(n)]
    assert block_reachability(F, E[0]) == Matrix.identity(n * t, f)
    for i in range(n):
        assert block_reachability(F, E[i]) == mat_pow(F, i)
    G = BlockColumn.from_matrix(data.draw(matrices(f, n * t, t)), t)
    assert block_reachability(F, G) == operator_subst(G, F)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_block_crg_on_commuting_pairs(data):
    f, n, t, P, F = block_setup(data)
    rng = LCG64(data.draw(st.integers(0, 2**32)))
    B, G = commuting_pair(n, t, f, rng)
    assert blockwise_commuting(B, G)
    assert check_block_crg(F, B, G)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_block_criteria_agree(data):
    f = data.draw(fields)
    n = data.draw(st.integers(1, 2))
    t = data.draw(st.integers(1, 2))
    A = data.draw(matrices(f, n * t))
    _, verdicts = block_criteria(A, t, samples=2)
    assert len(set(verdicts.values())) == 1


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_t1_matches_scalar(data):
    f = data.draw(fields)
    n = data.draw(st.integers(1, 4))
    pcol = data.draw(matrices(f, n, 1))
    F = make_companion(pcol)
    assert make_block_companion(BlockColumn.from_matrix(pcol, 1)) == F
    g = data.draw(matrices(f, n, 1))
    assert block_reachability(F, g, 1) == reachability(F, g)
    assert operator_subst(g, F, 1) == poly_eval_matrix(g, F)
    A = data.draw(matrices(f, n))
    assert recognize_block(A, 1).is_companion == recognize(A).is_companion


def test_recognize_block_reports_P():
    P = Matrix(GF(3), [[1, 2], [0, 1], [2, 2], [1, 0]])
    r = recognize_block(make_block_companion(P), 2)
    assert r.is_companion and r.extracted_p.to_matrix() == P
    bad = Matrix(GF(3), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    r = recognize_block(bad, 2)
    assert not r.is_companion and r.witness == 0


def test_same_matrix_different_block_size():
    # a scalar companion of size 4 is not a 2-block companion in general
    F = make_companion([1, 2, 0, 1], GF(3))
    assert recognize_block(F, 1).is_companion
    assert not recognize_block(F, 2).is_companion
    # the identity-subdiagonal shape at t=2 is also a t=1 companion only if rows line up
    F2 = make_block_companion(Matrix(GF(3), [[1, 2], [0, 1], [2, 2], [1, 0]]))
    assert not recognize(F2).is_companion


def test_polynomial_in_commutes():
    M = Matrix(Q, [[1, 2], [3, 4]])
    X = polynomial_in(M, [Q(1), Q(-1)])
    assert mat_mul(X, M) == mat_mul(M, X)


def test_operator_subst_rectangular():
    # B with t x m blocks, m != t
    F = make_companion([1, 1], Q)
    B = Matrix(Q, [[1, 0, 2], [0, 1, 1]])
    assert operator_subst(B, F, 1).shape == (2, 6)


def test_recognize_block_raises_on_fabricated_disagreement(monkeypatch):
    import companionforms.block as block

    real = block.block_criteria

    def lying(A, t, seed=0, samples=5):
        s, v = real(A, t, seed, samples)
        return s, {**v, "crg": not v["crg"]}

    monkeypatch.setattr(block, "block_criteria", lying)
    with pytest.raises(InternalInconsistency):
        block.recognize_block(Matrix.identity(2, Q), 1)
