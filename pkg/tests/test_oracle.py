import math
from collections import Counter

import numpy as np
import pytest
import sympy

from dihedral_integral.census import sample_sets
from dihedral_integral.group import validate_connection_set
from dihedral_integral.oracle import (
    bareiss_det,
    build_adjacency,
    char_poly,
    deflate,
    is_integral,
    numeric_eigenvalues,
    poly_eval,
    to_dot,
    vertices,
)


def K6():
    return validate_connection_set(3, [1, 2], [0, 1, 2])


def expand(roots):
    x = sympy.Symbol("x")
    expr = sympy.Integer(1)
    for r, m in roots.items():
        expr *= (x - r) ** m
    return [int(c) for c in sympy.Poly(expr, x).all_coeffs()]


class TestAdjacency:
    def test_complete(self):
        A = build_adjacency(K6())
        assert (A == np.ones((6, 6), dtype=int) - np.eye(6, dtype=int)).all()

    def test_bipartite_fano(self):
        A = build_adjacency(validate_connection_set(7, [], [1, 2, 4]))
        assert A.shape == (14, 14)
        assert not A[:7, :7].any() and not A[7:, 7:].any()
        assert (A.sum(axis=1) == 3).all()

    def test_empty(self):
        assert not build_adjacency(validate_connection_set(5, [], [])).any()

    def test_structure(self, rng):
        for n in range(1, 11):
            for S in sample_sets(n, 3, rng) if n >= 3 else [validate_connection_set(n, [], [0], min_n=1)]:
                A = build_adjacency(S)
                assert (A == A.T).all()
                assert not np.diag(A).any()
                assert (A.sum(axis=1) == S.size).all()

    def test_vertex_order(self):
        assert [str(v) for v in vertices(3)] == ["1", "a^1", "a^2", "b", "ba^1", "ba^2"]


class TestCharPoly:
    def test_examples(self):
        assert char_poly(build_adjacency(K6())) == expand({5: 1, -1: 5})
        assert char_poly(np.zeros((8, 8), dtype=int)) == [1] + [0] * 8
        S = validate_connection_set(3, [1, 2], [0, 1])
        assert char_poly(build_adjacency(S)) == expand({4: 1, 0: 3, -2: 2})
        assert char_poly(np.zeros((0, 0))) == [1]

    def test_matches_sympy(self, rng):
        for n in (3, 4, 5, 6, 7):
            for S in sample_sets(n, 2, rng):
                A = build_adjacency(S)
                expected = [int(c) for c in sympy.Matrix(A.tolist()).charpoly().all_coeffs()]
                assert char_poly(A) == expected

    def test_general_integer_matrix(self, rng):
        for N in range(1, 7):
            M = [[rng.randint(-5, 5) for _ in range(N)] for _ in range(N)]
            expected = [int(c) for c in sympy.Matrix(M).charpoly().all_coeffs()]
            assert char_poly(M) == expected

    def test_matches_bareiss(self, rng):
        for n in range(3, 11):
            for S in sample_sets(n, 2, rng):
                A = build_adjacency(S)
                p = char_poly(A)
                for _ in range(3):
                    r = rng.randint(-20, 20)
                    assert poly_eval(p, r) == bareiss_det(r * np.eye(2 * n, dtype=np.int64) - A)

    def test_bareiss_against_sympy(self, rng):
        for N in range(1, 7):
            M = [[rng.randint(-3, 3) for _ in range(N)] for _ in range(N)]
            assert bareiss_det(M) == int(sympy.Matrix(M).det())
        assert bareiss_det([[0, 1], [1, 0]]) == -1
        assert bareiss_det([[0, 0], [0, 1]]) == 0

    def test_coefficient_identities(self, rng):
        for n in range(3, 11):
            for S in sample_sets(n, 3, rng):
                p = char_poly(build_adjacency(S))
                assert p[0] == 1 and p[1] == 0
                assert p[2] == -n * S.size

    def test_big_coefficients_stay_exact(self, rng):
        M = [[rng.randint(-1000, 1000) for _ in range(10)] for _ in range(10)]
        p = char_poly(M)
        assert abs(p[-1]) > 2**63
        assert p == [int(c) for c in sympy.Matrix(M).charpoly().all_coeffs()]

    def test_complete_graph_32(self):
        S = validate_connection_set(16, range(1, 16), range(16))
        assert char_poly(build_adjacency(S)) == expand({31: 1, -1: 31})


class TestDeflation:
    def test_fano_surviving_factor(self):
        v = is_integral(validate_connection_set(7, [], [1, 2, 4]))
        assert not v.integral
        x = sympy.Symbol("x")
        assert sympy.factor_list(sympy.Poly(v.residual, x))[1] == [(sympy.Poly(x**2 - 2, x), 6)]
        assert v.roots == Counter({3: 1, -3: 1})

    def test_k6(self):
        v = is_integral(K6())
        assert v.integral and v.roots == Counter({5: 1, -1: 5}) and v.residual == [1]

    def test_cor_example(self):
        assert is_integral(validate_connection_set(6, [3], [0, 2, 4])).integral

    def test_deflate_multiplicities(self):
        roots, rest = deflate(expand({2: 3, -1: 2, 0: 1}), 3)
        assert roots == Counter({2: 3, -1: 2, 0: 1}) and rest == [1]
        roots, rest = deflate([1, 0, -2], 5)
        assert not roots and rest == [1, 0, -2]

    def test_small_n(self):
        v = is_integral(validate_connection_set(1, [], [0], min_n=1))
        assert v.integral and v.roots == Counter({1: 1, -1: 1})


class TestNumeric:
    def test_cycle(self):
        for n in range(3, 13):
            S = validate_connection_set(n, [], [0, 1])
            ev = numeric_eigenvalues(build_adjacency(S))
            expected = sorted((2 * math.cos(math.pi * k / n) for k in range(2 * n)), reverse=True)
            assert np.max(np.abs(ev - expected)) < 1e-10

    def test_k6_and_zero(self):
        assert np.allclose(numeric_eigenvalues(build_adjacency(K6())), [5, -1, -1, -1, -1, -1], atol=1e-12)
        assert not numeric_eigenvalues(np.zeros((4, 4))).any()


def test_dot_export():
    dot = to_dot(validate_connection_set(3, [], [0]))
    assert dot.startswith("graph")
    assert '"a^0" -- "ba^0";' in dot
    assert dot.count("--") == 3
