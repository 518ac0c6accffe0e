import random

from fractions import Fraction

import pytest

from hopfcoh.linalg import (
    GF,
    QQ,
    FieldMismatchError,
    Matrix,
    Subspace,
    column_space,
    invert,
    kernel,
    kronecker,
    quotient,
    rank,
    solve,
    solve_matrix,
    swap_matrix,
)


def test_field_basics():
    assert QQ.coerce("3/2") == Fraction(3, 2)
    assert QQ.coerce(-4) == Fraction(-4)
    f5 = GF(5)
    assert f5.coerce(7) == 2
    assert f5.coerce("-1") == 4
    assert f5.coerce("3/2") == (3 * f5.inv(2)) % 5
    assert f5.inv(3) == 2
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(0)


def test_kernel_examples():
    assert kernel(Matrix.identity(QQ, 3)).dim == 0
    k = kernel(Matrix.zeros(QQ, 2, 3))
    assert k.dim == 3 and k == Subspace.full(QQ, 3)
    f2 = GF(2)
    m = Matrix.from_rows(f2, [[1, 1], [0, 0]])
    k = kernel(m)
    assert k.dim == 1
    assert k.basis.col(0) == [1, 1]


def test_solve_examples():
    assert solve(Matrix.identity(QQ, 2), [1, 2]) == [Fraction(1), Fraction(2)]
    assert solve(Matrix.zeros(QQ, 1, 1), [1]) is None
    assert solve(Matrix.from_rows(QQ, [[2]]), [1]) == [Fraction(1, 2)]


def test_solve_underdetermined_deterministic():
    m = Matrix.from_rows(QQ, [[1, 1]])
    # free variable pinned to 0
    assert solve(m, [5]) == [Fraction(5), Fraction(0)]
    assert solve(m, [5]) == solve(m, [5])


def test_quotient_examples():
    sub = Subspace.from_spanning(QQ, 2, [[1, 0]])
    reps, proj = quotient(2, sub)
    assert reps.cols == 1 and proj.rows == 1
    assert proj.apply([1, 0]) == [Fraction(0)]
    assert proj.apply(reps.col(0)) == [Fraction(1)]

    reps, proj = quotient(2, Subspace.full(QQ, 2))
    assert reps.cols == 0 and proj.rows == 0

    reps, proj = quotient(3, Subspace.zero(QQ, 3))
    assert proj == Matrix.identity(QQ, 3)


def test_quotient_kernel_is_sub():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randrange(1, 5)
        vecs = [[rng.randrange(-2, 3) for _ in range(n)] for _ in range(rng.randrange(0, n + 1))]
        sub = Subspace.from_spanning(QQ, n, vecs)
        reps, proj = quotient(n, sub)
        assert kernel(proj) == sub
        if reps.cols:
            assert proj @ reps == Matrix.identity(QQ, reps.cols)


def test_kronecker_examples():
    assert kronecker(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    assert kronecker(a, Matrix.zeros(QQ, 2, 2)).is_zero()
    assert kronecker(Matrix.from_rows(QQ, [[2]]), Matrix.from_rows(QQ, [[3]])) == Matrix.from_rows(QQ, [[6]])
    with pytest.raises(FieldMismatchError):
        kronecker(Matrix.identity(QQ, 2), Matrix.identity(GF(2), 2))


def test_kronecker_associative_and_functorial():
    rng = random.Random(11)
    for _ in range(5):
        dims = [rng.randrange(1, 3) for _ in range(6)]
        a = Matrix.from_rows(QQ, [[rng.randrange(-2, 3) for _ in range(dims[1])] for _ in range(dims[0])])
        b = Matrix.from_rows(QQ, [[rng.randrange(-2, 3) for _ in range(dims[3])] for _ in range(dims[2])])
        c = Matrix.from_rows(QQ, [[rng.randrange(-2, 3) for _ in range(dims[5])] for _ in range(dims[4])])
        assert kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c))
        # (a@a')(x)(b@b') = (a x b)(a' x b') on composable squares
        a2 = Matrix.from_rows(QQ, [[rng.randrange(-2, 3) for _ in range(dims[1])] for _ in range(dims[1])])
        b2 = Matrix.from_rows(QQ, [[rng.randrange(-2, 3) for _ in range(dims[3])] for _ in range(dims[3])])
        assert kronecker(a @ a2, b @ b2) == kronecker(a, b) @ kronecker(a2, b2)


def test_rank_nullity():
    rng = random.Random(3)
    for field in (QQ, GF(2), GF(5)):
        for _ in range(15):
            r = rng.randrange(0, 5)
            c = rng.randrange(0, 5)
            m = Matrix.from_flat(field, r, c, [rng.randrange(0, 7) for _ in range(r * c)])
            assert rank(m) + kernel(m).dim == c


def test_subspace_canonical_equality():
    s1 = Subspace.from_spanning(QQ, 3, [[1, 1, 0], [0, 0, 1]])
    s2 = Subspace.from_spanning(QQ, 3, [[2, 2, 5], [0, 0, -1], [1, 1, 7]])
    assert s1 == s2
    assert s1.contains([3, 3, 4])
    assert not s1.contains([1, 0, 0])


def test_subspace_sum_intersect():
    a = Subspace.from_spanning(QQ, 3, [[1, 0, 0]])
    b = Subspace.from_spanning(QQ, 3, [[1, 1, 0]])
    assert a.sum_with(b).dim == 2
    assert a.intersect(b).dim == 0
    c = Subspace.from_spanning(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    assert c.intersect(b) == b


def test_solve_matrix_and_invert():
    m = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    inv = invert(m)
    assert inv is not None and m @ inv == Matrix.identity(QQ, 2)
    assert invert(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) is None
    x = solve_matrix(Matrix.from_rows(QQ, [[2, 0], [0, 4]]), Matrix.identity(QQ, 2))
    assert x == Matrix.from_rows(QQ, [["1/2", 0], [0, "1/4"]])


def test_swap_matrix():
    tau = swap_matrix(QQ, 2, 3)
    # e_{i*3+j} -> e_{j*2+i}
    v = [QQ.zero] * 6
    v[1 * 3 + 2] = QQ.one
    w = tau.apply(v)
    assert w[2 * 2 + 1] == 1 and sum(1 for x in w if x) == 1
    assert tau.transpose() @ tau == Matrix.identity(QQ, 6)


def test_column_space():
    m = Matrix.from_rows(QQ, [[1, 2], [2, 4], [0, 0]])
    cs = column_space(m)
    assert cs.dim == 1 and cs.contains([1, 2, 0])
