"""Exact dense linear algebra over the rationals.

Everything here works with Fraction entries, so results are exact and
deterministic; there are no tolerances anywhere.  Matrices are small (the
ambient dimension is the number of coordinates, rarely above 8), so the
quadratic and cubic algorithms below are perfectly adequate.

Matrices are represented as tuples of row tuples, vectors as tuples.  The
module also carries the little univariate polynomial arithmetic needed for
characteristic polynomials; coefficient sequences are ascending, so p[i] is
the coefficient of x**i.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def frac(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vec(values) -> tuple:
    return tuple(frac(x) for x in values)


def mat(rows) -> tuple:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> tuple:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zero_matrix(n: int, m: int | None = None) -> tuple:
    m = n if m is None else m
    zero = Fraction(0)
    return tuple(tuple(zero for _ in range(m)) for _ in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c):
    c = frac(c)
    return tuple(tuple(c * x for x in r) for r in a)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(ra, cb)) for cb in bt) for ra in a)


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(r, v)) for r in a)


def transpose(a):
    return tuple(zip(*a))


def trace(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def is_zero_matrix(a) -> bool:
    return all(not x for r in a for x in r)


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [list(map(frac, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m], pivots


def nullspace(rows, n_cols: int | None = None):
    """Deterministic basis of the right kernel of the row system.

    Each basis vector carries a 1 in one free column; vectors are ordered by
    increasing free column index.
    """
    rows = [tuple(map(frac, r)) for r in rows]
    if rows:
        n_cols = len(rows[0])
    if n_cols is None:
        raise ValueError("n_cols required for an empty system")
    if not rows:
        return [tuple(identity(n_cols)[i]) for i in range(n_cols)]
    red, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def mat_inv(a):
    n = len(a)
    aug = [list(map(frac, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


def mat_rank(a) -> int:
    return len(rref(a)[1])


def charpoly(a):
    """Characteristic polynomial via the Faddeev-LeVerrier recurrence.

    Returns ascending coefficients (c0, ..., c_{n-1}, 1) of det(xI - A),
    computed entirely in exact rational arithmetic.
    """
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = a
    c = -trace(a)
    if n >= 1:
        coeffs[n - 1] = c
    for k in range(2, n + 1):
        m = mat_mul(a, mat_add(m, mat_scale(identity(n), c)))
        c = -trace(m) / k
        coeffs[n - k] = c
    return tuple(coeffs)


# -- univariate polynomial helpers (ascending coefficient tuples) --


def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def poly_is_zero(p) -> bool:
    return not poly_trim(p)


def poly_derivative(p):
    return poly_trim(tuple(i * c for i, c in enumerate(p) if i))


def poly_monic(p):
    p = poly_trim(p)
    if not p:
        raise ValueError("zero polynomial has no monic form")
    lead = p[-1]
    return tuple(c / lead for c in p)


def poly_divmod(a, b):
    a = list(poly_trim(a))
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b):
        f = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        while a and not a[-1]:
            a.pop()
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    return poly_monic(a)


def poly_squarefree_part(p):
    """p / gcd(p, p'), monic: the product of distinct irreducible factors."""
    p = poly_trim(p)
    g = poly_gcd(p, poly_derivative(p))
    if not g:
        raise ValueError("zero polynomial")
    q, r = poly_divmod(p, g)
    assert not r, "gcd failed to divide exactly"
    return poly_monic(q)


def poly_eval_scalar(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly_trim(p)):
        acc = acc * x + c
    return acc


def poly_eval_matrix(p, a):
    n = len(a)
    p = poly_trim(p)
    if not p:
        return zero_matrix(n)
    acc = mat_scale(identity(n), p[-1])
    for c in reversed(p[:-1]):
        acc = mat_add(mat_mul(acc, a), mat_scale(identity(n), c))
    return acc


# -- integerization --


def clear_denominators(values):
    """Scale a rational vector by the positive lcm of denominators; return ints."""
    values = [frac(x) for x in values]
    mult = lcm(*(x.denominator for x in values)) if values else 1
    return [int(x * mult) for x in values], mult


def primitive_integer_vector(values):
    """Positive rescaling of a rational vector to coprime integers.

    The zero vector maps to itself.  The scaling factor is always positive,
    so sign patterns survive.
    """
    ints, _ = clear_denominators(values)
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)
