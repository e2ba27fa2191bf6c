import random
from fractions import Fraction as F

import pytest

from csneighborly import Matrix, build, kron, mat_mul, rank, sylvester


def random_matrix(rng, rows, cols, den=6):
    return Matrix(
        [
            [F(rng.randint(-8, 8), rng.randint(1, den)) for _ in range(cols)]
            for _ in range(rows)
        ]
    )


def gauss_rank(m):
    """Independent oracle: plain Fraction row reduction."""
    work = [list(row) for row in m.data]
    rows, cols = m.rows, m.cols
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
    return r


def naive_product(a, b):
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = F(0)
            for t in range(a.cols):
                acc += a.entry(i, t) * b.entry(t, j)
            row.append(acc)
        out.append(row)
    return Matrix(out)


class TestScalars:
    def test_canonical_closure(self):
        rng = random.Random(7)
        for _ in range(200):
            a = F(rng.randint(-50, 50), rng.randint(1, 20))
            b = F(rng.randint(-50, 50), rng.randint(1, 20))
            for value in (a + b, a - b, a * b):
                assert value.denominator > 0
            if b != 0:
                q = a / b
                assert q.denominator > 0
            assert a + (-a) == 0


class TestMatMul:
    def test_identity(self):
        m = Matrix([[F(1, 2), 3], [-2, F(5, 7)]])
        assert mat_mul(Matrix.identity(2), m) == m

    def test_hadamard_gram_order_two(self):
        h2 = Matrix([[1, 1], [1, -1]])
        assert mat_mul(h2, h2.transpose()) == Matrix([[2, 0], [0, 2]])

    def test_cancellation(self):
        a = Matrix([[F(1, 2), F(1, 2)]])
        b = Matrix([[1], [-1]])
        assert mat_mul(a, b) == Matrix([[0]])

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            mat_mul(Matrix.identity(2), Matrix.identity(3))

    def test_against_naive_oracle(self):
        rng = random.Random(11)
        for _ in range(20):
            a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            b = random_matrix(rng, a.cols, rng.randint(1, 4))
            assert a @ b == naive_product(a, b)

    def test_associative_and_distributive(self):
        rng = random.Random(13)
        for _ in range(15):
            a = random_matrix(rng, 3, 2)
            b = random_matrix(rng, 2, 4)
            c = random_matrix(rng, 4, 3)
            assert (a @ b) @ c == a @ (b @ c)
            b2 = random_matrix(rng, 2, 4)
            assert a @ (b + b2) == a @ b + a @ b2


class TestKron:
    def test_scalar_one(self):
        m = random_matrix(random.Random(3), 2, 3)
        assert kron(Matrix([[1]]), m) == m

    def test_column_replication(self):
        assert kron(Matrix([[1], [1]]), Matrix([[1, -1]])) == Matrix(
            [[1, -1], [1, -1]]
        )

    def test_transpose_identity(self):
        rng = random.Random(17)
        for _ in range(10):
            a = random_matrix(rng, 2, 2)
            b = random_matrix(rng, 2, 2)
            assert kron(a, b).transpose() == kron(a.transpose(), b.transpose())

    def test_mixed_product_identity(self):
        rng = random.Random(19)
        for _ in range(10):
            a = random_matrix(rng, 2, 2)
            b = random_matrix(rng, 2, 2)
            c = random_matrix(rng, 2, 2)
            d = random_matrix(rng, 2, 2)
            assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    def test_shape(self):
        a = random_matrix(random.Random(23), 2, 3)
        b = random_matrix(random.Random(29), 4, 5)
        assert kron(a, b).shape() == (8, 15)


class TestRank:
    def test_identity(self):
        assert rank(Matrix.identity(4)) == 4

    def test_zero(self):
        assert rank(Matrix.zero(3, 3)) == 0

    def test_construction_stack_full_rank(self):
        con = build(sylvester(2))
        stacked = con.X.hstack(con.T)
        assert rank(stacked) == 8
        assert gauss_rank(stacked) == 8

    def test_against_gauss_oracle(self):
        rng = random.Random(31)
        for _ in range(25):
            m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            assert rank(m) == gauss_rank(m)

    def test_rank_deficient(self):
        m = Matrix([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
        assert rank(m) == 2 == gauss_rank(m)


class TestMatrixBasics:
    def test_transpose_involution(self):
        m = random_matrix(random.Random(37), 3, 5)
        assert m.transpose().transpose() == m

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3]])

    def test_stacking(self):
        a = Matrix([[1, 2]])
        b = Matrix([[3, 4]])
        assert a.vstack(b) == Matrix([[1, 2], [3, 4]])
        assert a.hstack(b) == Matrix([[1, 2, 3, 4]])
