"""Exact linear algebra building blocks."""

from fractions import Fraction
from random import Random

import pytest

from gitstab import linalg
from helpers import random_invertible, random_matrix


def test_rref_and_nullspace():
    rows = [(1, 1, 1, 1), (1, 2, 0, 0)]
    basis = linalg.nullspace(rows)
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0
        assert v[0] + 2 * v[1] == 0


def test_nullspace_empty_system_is_full_space():
    basis = linalg.nullspace([], 3)
    assert basis == [tuple(linalg.identity(3)[i]) for i in range(3)]


def test_mat_inv_roundtrip():
    rng = Random(5)
    for _ in range(50):
        n = rng.randint(1, 5)
        m = random_invertible(rng, n)
        assert linalg.mat_mul(m, linalg.mat_inv(m)) == linalg.identity(n)


def test_mat_inv_singular():
    with pytest.raises(ValueError):
        linalg.mat_inv(((1, 2), (2, 4)))


def test_charpoly_known_values():
    assert linalg.charpoly(((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))) == (
        Fraction(-1),
        Fraction(0),
        Fraction(1),
    )
    # identity: (x-1)^2 = 1 - 2x + x^2
    assert linalg.charpoly(linalg.identity(2)) == (Fraction(1), Fraction(-2), Fraction(1))
    # nilpotent Jordan block: x^2
    assert linalg.charpoly(((0, 1), (0, 0))) == (Fraction(0), Fraction(0), Fraction(1))


def test_charpoly_annihilates_matrix():
    rng = Random(11)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n)
        p = linalg.charpoly(m)
        assert linalg.is_zero_matrix(linalg.poly_eval_matrix(p, m))


def test_poly_division_and_gcd():
    # (x-1)^2 (x+2) and (x-1)(x-3)
    p = linalg.poly_trim((Fraction(2), Fraction(-3), Fraction(0), Fraction(1)))
    q, r = linalg.poly_divmod(p, (Fraction(-1), Fraction(1)))
    assert r == ()
    assert linalg.poly_gcd(p, (Fraction(-1), Fraction(1))) == (Fraction(-1), Fraction(1))


def test_squarefree_part():
    # p = (x-1)^2 * (x+1) = x^3 - x^2 - x + 1
    p = (Fraction(1), Fraction(-1), Fraction(-1), Fraction(1))
    sf = linalg.poly_squarefree_part(p)
    # (x-1)(x+1) = x^2 - 1
    assert sf == (Fraction(-1), Fraction(0), Fraction(1))


def test_primitive_integer_vector():
    assert linalg.primitive_integer_vector([Fraction(-21), 15, 3, 3]) == (-7, 5, 1, 1)
    assert linalg.primitive_integer_vector([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
    assert linalg.primitive_integer_vector([0, 0]) == (0, 0)


def test_clear_denominators():
    ints, mult = linalg.clear_denominators([Fraction(1, 2), Fraction(2, 3)])
    assert mult == 6 and ints == [3, 4]
