from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hvnssd.linalg import (IntPolynomial, char_poly, delete_index, determinant, eval_at_zero,
                           nullity, poly_mul, poly_sub, principal_minor, rank, trailing_zero_count)

from graphs import WORKED_EXAMPLE_M, complete_graph, cycle_graph, path_graph, random_graph


def leibniz(M):
    n = len(M)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= M[i][p[i]]
            if not term:
                break
        total += term
    return total


def sympy_charpoly(M):
    x = sympy.Symbol("x")
    coeffs = sympy.Matrix(M).charpoly(x).all_coeffs()
    return IntPolynomial([int(c) for c in reversed(coeffs)])


int_matrix = st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


def symmetric01(rng, n):
    return random_graph(rng, n, rng.random()).matrix()


def test_determinant_examples():
    assert determinant(complete_graph(2).matrix()) == -1
    assert determinant(WORKED_EXAMPLE_M) == leibniz(WORKED_EXAMPLE_M) == 1
    assert determinant(cycle_graph(4).matrix()) == leibniz(cycle_graph(4).matrix()) == 0
    assert determinant([]) == 1


@settings(max_examples=300)
@given(int_matrix)
def test_determinant_matches_leibniz(M):
    assert determinant(M) == leibniz(M)


def test_determinant_needs_pivoting():
    M = [[0, 1, 2], [0, 3, 4], [5, 6, 7]]
    assert determinant(M) == leibniz(M) == -10


def test_determinant_large_entries():
    M = [[10**30 + i * j for j in range(4)] for i in range(4)]
    assert determinant(M) == leibniz(M)


def test_non_square_rejected():
    for f in (determinant, rank, char_poly):
        with pytest.raises(ValueError):
            f([[1, 2], [3]])


def test_nullity_examples():
    assert nullity(complete_graph(2).matrix()) == 0
    assert nullity(cycle_graph(4).matrix()) == 2
    assert nullity([[0]]) == 1


@settings(max_examples=200)
@given(int_matrix)
def test_rank_matches_sympy(M):
    expected = sympy.Matrix(M).rank() if M else 0
    assert rank(M) == expected


def test_rank_permutation_invariant(rng):
    for _ in range(200):
        n = rng.randint(1, 9)
        M = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        p = list(range(n))
        q = list(range(n))
        rng.shuffle(p)
        rng.shuffle(q)
        PM = [[M[p[i]][q[j]] for j in range(n)] for i in range(n)]
        assert rank(PM) == rank(M)


def test_rank_skips_empty_columns():
    M = [[0, 1, 1], [0, 2, 2], [0, 0, 3]]
    assert rank(M) == 2


def test_principal_minor_examples():
    # first vertex of the worked-example matrix removed
    assert delete_index(WORKED_EXAMPLE_M, 0) == [[0, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert principal_minor(WORKED_EXAMPLE_M, 0) == 0
    I3 = [[int(i == j) for j in range(3)] for i in range(3)]
    assert all(principal_minor(I3, i) == 1 for i in range(3))
    assert principal_minor(complete_graph(2).matrix(), 0) == 0


def test_principal_minor_errors():
    with pytest.raises(ValueError):
        principal_minor([[0]], 0)
    with pytest.raises(IndexError):
        principal_minor(WORKED_EXAMPLE_M, 4)


def test_char_poly_examples():
    assert char_poly(complete_graph(2).matrix()) == IntPolynomial([-1, 0, 1])
    assert char_poly([[0]]) == IntPolynomial([0, 1])
    assert char_poly(WORKED_EXAMPLE_M) == IntPolynomial([1, 0, -3, 0, 1])
    assert char_poly([]) == IntPolynomial([1])


def test_char_poly_matches_sympy(rng):
    for _ in range(60):
        n = rng.randint(1, 8)
        M = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert char_poly(M) == sympy_charpoly(M)


def test_poly_ops():
    p = IntPolynomial([-1, 0, 1])
    x = IntPolynomial([0, 1])
    assert poly_mul(p, x) == IntPolynomial([0, -1, 0, 1])
    assert p * x == poly_mul(p, x)
    assert poly_sub(p, p).is_zero()
    assert eval_at_zero(IntPolynomial([1, 0, -3, 0, 1])) == 1
    assert trailing_zero_count(char_poly(cycle_graph(4).matrix())) == 2
    assert str(IntPolynomial([1, 0, -3, 0, 1])) == "x^4 - 3x^2 + 1"
    assert IntPolynomial([1, 0, -3, 0, 1])(2) == 5
    with pytest.raises(ValueError):
        trailing_zero_count(IntPolynomial())


def test_det_is_signed_constant_term(rng):
    for _ in range(300):
        n = rng.randint(1, 8)
        M = symmetric01(rng, n)
        assert determinant(M) == (-1) ** n * eval_at_zero(char_poly(M))


def test_nullity_is_root_multiplicity(rng):
    for _ in range(300):
        n = rng.randint(1, 8)
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                M[i][j] = M[j][i] = rng.choice((0, 0, 1, -1, 2))
        assert nullity(M) == trailing_zero_count(char_poly(M))


def test_interlacing_corollary(rng):
    checked = 0
    while checked < 200:
        n = rng.randint(2, 10)
        M = symmetric01(rng, n)
        if determinant(M) == 0:
            continue
        checked += 1
        for i in range(n):
            assert nullity(delete_index(M, i)) <= 1


def test_path_char_poly():
    # P_n satisfies P(P_n) = x P(P_{n-1}) - P(P_{n-2})
    x = IntPolynomial([0, 1])
    prev, cur = IntPolynomial([1]), x
    for n in range(2, 10):
        prev, cur = cur, poly_sub(poly_mul(x, cur), prev)
        assert char_poly(path_graph(n).matrix()) == cur
