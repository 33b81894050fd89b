import random
from fractions import Fraction

import numpy as np
import pytest

from zetawalk.algebra import Poly, QQ
from zetawalk.linalg import (
    Matrix,
    allones_inverse_check,
    block_woodbury_check,
    char_poly_exact,
    det_bareiss,
    det_cofactor,
    det_exact,
    eigenvalues_numeric,
)


def P(*coeffs):
    return Poly(QQ, coeffs)


def frac_matrix(rows):
    return Matrix([[Fraction(x) for x in row] for row in rows])


def random_frac_matrix(rng, rows, cols):
    return Matrix(
        [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(cols)]
            for _ in range(rows)
        ]
    )


def test_det_swap_matrix_poly():
    m = Matrix([[P(1), P(0, -1)], [P(0, -1), P(1)]])
    assert det_exact(m) == P(1, 0, -1)


def test_det_one_by_one():
    assert det_exact(Matrix([[P(1, 2)]])) == P(1, 2)


def test_det_empty_needs_one():
    empty = Matrix([])
    assert det_exact(empty, one=P(1)) == P(1)
    with pytest.raises(ValueError):
        det_exact(empty)


def test_det_non_square_errors():
    with pytest.raises(ValueError, match="square"):
        det_exact(frac_matrix([[1, 2, 3], [4, 5, 6]]))


def test_bareiss_equals_cofactor_small(rng):
    for n in range(1, 6):
        for _ in range(6):
            m = random_frac_matrix(rng, n, n)
            assert det_bareiss(m) == det_cofactor(m)
        mp = Matrix(
            [
                [Poly(QQ, [rng.randint(-3, 3), rng.randint(-3, 3)]) for _ in range(n)]
                for _ in range(n)
            ]
        )
        assert det_bareiss(mp) == det_cofactor(mp)


def test_det_singular_is_zero():
    m = frac_matrix([[1, 2], [2, 4]])
    assert det_exact(m) == 0
    mp = Matrix([[P(1, 1), P(1, 1)], [P(2), P(2)]])
    assert det_bareiss(mp).is_zero()


def test_det_commutation_identity(rng):
    # det(I - XY) == det(I - YX) for conformable rectangular matrices
    for k in range(1, 6):
        for ell in range(1, 6):
            x = random_frac_matrix(rng, k, ell)
            y = random_frac_matrix(rng, ell, k)
            ik = Matrix.identity(k, Fraction(1), Fraction(0))
            il = Matrix.identity(ell, Fraction(1), Fraction(0))
            assert det_exact(ik - x * y) == det_exact(il - y * x)


def test_char_poly_identity_matrix():
    m = Matrix.identity(3, Fraction(1), Fraction(0))
    assert char_poly_exact(m) == P(-1, 3, -3, 1)


def test_char_poly_swap():
    assert char_poly_exact(frac_matrix([[0, 1], [1, 0]])) == P(-1, 0, 1)


def test_char_poly_zero_matrix():
    for n in (1, 2, 4):
        m = Matrix.zeros(n, n, Fraction(0))
        assert char_poly_exact(m) == Poly.monomial(QQ, n, 1)


def test_char_poly_constant_term_is_signed_det(rng):
    for n in (2, 3, 4):
        m = random_frac_matrix(rng, n, n)
        chi = char_poly_exact(m)
        assert chi.lead() == 1 and chi.degree == n
        assert chi.coefficient(0) == (-1) ** n * det_exact(m)


def test_char_poly_agrees_with_resolvent_determinant(rng):
    for n in (2, 3, 4):
        m = random_frac_matrix(rng, n, n)
        lam = Poly.variable(QQ)
        resolvent = Matrix(
            [
                [(lam if i == j else Poly.zero(QQ)) - Poly.constant(QQ, m[i, j]) for j in range(n)]
                for i in range(n)
            ]
        )
        assert char_poly_exact(m) == det_bareiss(resolvent)


def test_char_poly_vanishes_on_triangular_eigenvalues():
    m = frac_matrix([[2, 5, 1], [0, 3, 7], [0, 0, -4]])
    chi = char_poly_exact(m)
    for lam in (2, 3, -4):
        assert chi.evaluate(Fraction(lam)) == 0


def test_eigenvalues_swap():
    vals = sorted(eigenvalues_numeric([[0, 1], [1, 0]]), key=lambda z: z.real)
    assert abs(vals[0] + 1) < 1e-12 and abs(vals[1] - 1) < 1e-12


def test_eigenvalues_diagonal():
    vals = sorted(v.real for v in eigenvalues_numeric([[2, 0, 0], [0, 3, 0], [0, 0, 5]]))
    assert np.allclose(vals, [2, 3, 5], atol=1e-12)


def test_eigenvalues_match_char_poly_roots(rng):
    m = random_frac_matrix(rng, 5, 5)
    chi = char_poly_exact(m)
    roots = np.roots([float(c) for c in reversed(chi.coeffs)])
    direct = eigenvalues_numeric(m)
    roots = sorted(roots, key=lambda z: (z.real, z.imag))
    direct = sorted(direct, key=lambda z: (z.real, z.imag))
    assert max(abs(a - b) for a, b in zip(roots, direct)) < 1e-8


def test_eigenvalues_requires_square():
    with pytest.raises(ValueError, match="square"):
        eigenvalues_numeric([[1, 2, 3], [4, 5, 6]])


def test_allones_inverse_examples():
    assert allones_inverse_check(1, 2)
    assert allones_inverse_check(3, 1)
    assert allones_inverse_check(5, 7)


def test_allones_inverse_rational_scalar():
    assert allones_inverse_check(4, Fraction(3, 7))


def test_block_woodbury_scalar_case():
    m1 = frac_matrix([[1]])
    m2 = frac_matrix([[1]])
    assert block_woodbury_check(m1, m2)
    # the determinant itself: det(I + tM) for M = [[0,1],[1,0]] is 1 - t^2
    big = Matrix([[P(1), P(0, 1)], [P(0, 1), P(1)]])
    assert det_bareiss(big) == P(1, 0, -1)


def test_block_woodbury_column_case():
    m1 = frac_matrix([[1], [1]])
    m2 = frac_matrix([[1, 1]])
    assert block_woodbury_check(m1, m2)
    big = Matrix(
        [
            [P(1), P(), P(0, 1)],
            [P(), P(1), P(0, 1)],
            [P(0, 1), P(0, 1), P(1)],
        ]
    )
    assert det_bareiss(big) == P(1, 0, -2)


def test_block_woodbury_random(rng):
    for k, ell in [(2, 3), (3, 2), (3, 3), (1, 4), (4, 1)]:
        m1 = random_frac_matrix(rng, k, ell)
        m2 = random_frac_matrix(rng, ell, k)
        assert block_woodbury_check(m1, m2)


def test_block_woodbury_shape_mismatch():
    with pytest.raises(ValueError, match="M2 must be"):
        block_woodbury_check(frac_matrix([[1, 2]]), frac_matrix([[1, 2]]))
