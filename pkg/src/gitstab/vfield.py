"""Linear vector fields acting on polynomials by derivation.

A field v = sum_ij a_ij z_j d/dz_i is stored as its rational matrix (rows
indexed by i, columns by j), so v sends the monomial z^gamma to
sum_ij a_ij gamma_i z_j z^(gamma - e_i).  Diagonal fields act on monomials
with eigenvalue <lambda, gamma>; the rest of the module is about reducing a
general field to that case: the additive semisimple/nilpotent splitting over
the rationals, exact diagonalization when the eigenvalues are rational, the
truncated exponential of a nilpotent field, and linear changes of coordinates
on polynomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import frac
from .poly import HPoly, _mul_maps
from .weights import WeightVector

# Newton iteration doubles the nilpotency order it has corrected for, so even
# with every safety margin this cap is far beyond what dimension <= 16 needs.
_NEWTON_CAP = 24


@dataclass(frozen=True)
class LinearVectorField:
    """v = sum a_ij z_j d/dz_i with rational a_ij, as an n x n matrix."""

    rows: tuple

    def __post_init__(self):
        rows = linalg.mat(self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("vector field matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows) -> "LinearVectorField":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def diagonal(cls, values) -> "LinearVectorField":
        vals = [frac(x) for x in values]
        n = len(vals)
        return cls(
            tuple(
                tuple(vals[i] if i == j else Fraction(0) for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def zero(cls, n: int) -> "LinearVectorField":
        return cls(linalg.zero_matrix(n))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def trace(self) -> Fraction:
        return linalg.trace(self.rows)

    @property
    def is_diagonal(self) -> bool:
        return all(
            not x for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j
        )

    @property
    def is_zero(self) -> bool:
        return linalg.is_zero_matrix(self.rows)

    def diagonal_entries(self) -> WeightVector:
        if not self.is_diagonal:
            raise ValueError("field is not diagonal")
        return WeightVector(tuple(self.rows[i][i] for i in range(self.n)))

    def is_nilpotent(self) -> bool:
        b = self.rows
        for _ in range(self.n - 1):
            if linalg.is_zero_matrix(b):
                return True
            b = linalg.mat_mul(b, self.rows)
        return linalg.is_zero_matrix(b)

    def nonzero_entries(self):
        return [
            (i, j, x) for i, row in enumerate(self.rows) for j, x in enumerate(row) if x
        ]

    def __add__(self, other: "LinearVectorField") -> "LinearVectorField":
        return LinearVectorField(linalg.mat_add(self.rows, other.rows))

    def __sub__(self, other: "LinearVectorField") -> "LinearVectorField":
        return LinearVectorField(linalg.mat_sub(self.rows, other.rows))


@dataclass(frozen=True)
class InvarianceResult:
    invariant: bool
    kappa: Fraction | None


def parse_field(text: str, n_vars: int | None = None) -> LinearVectorField:
    """Parse 'diag:w0,w1,...' or a JSON array of rows of rationals."""
    text = text.strip()
    if text.startswith("diag:"):
        v = LinearVectorField.diagonal(WeightVector.parse(text[5:]).values)
    else:
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed field matrix: {exc}") from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError("field matrix must be a JSON array of arrays")
        v = LinearVectorField.from_rows(rows)
    if n_vars is not None and v.n != n_vars:
        raise ValueError(f"field acts on {v.n} variables, expected {n_vars}")
    return v


def apply_derivation(v: LinearVectorField, f: HPoly) -> HPoly | None:
    """v(f) as a polynomial of the same degree; None when v(f) = 0."""
    if v.n != f.n_vars:
        raise ValueError(f"field on {v.n} variables applied to {f.n_vars}-variable polynomial")
    out: dict = {}
    entries = v.nonzero_entries()
    for mono, c in f.terms.items():
        for i, j, a in entries:
            gi = mono[i]
            if not gi:
                continue
            m = list(mono)
            m[i] -= 1
            m[j] += 1
            key = tuple(m)
            s = out.get(key, Fraction(0)) + c * a * gi
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    if not out:
        return None
    return HPoly(f.n_vars, out)


def invariance(v: LinearVectorField, f: HPoly) -> InvarianceResult:
    """Decide whether v(f) = kappa * f for some rational kappa.

    kappa is the eigenvalue when it exists (0 for v(f) = 0); otherwise None.
    """
    g = apply_derivation(v, f)
    if g is None:
        return InvarianceResult(True, Fraction(0))
    if set(g.terms) != set(f.terms):
        return InvarianceResult(False, None)
    items = iter(f.terms.items())
    mono, c = next(items)
    kappa = g.terms[mono] / c
    for mono, c in items:
        if g.terms[mono] / c != kappa:
            return InvarianceResult(False, None)
    return InvarianceResult(True, kappa)


def chevalley_split(v: LinearVectorField) -> tuple:
    """Additive decomposition v = s + n over the rationals.

    s is semisimple (its minimal polynomial is squarefree), n is nilpotent,
    and the two commute; both are polynomials in v, which is what the Newton
    iteration below computes.  Let p* be the squarefree part of the
    characteristic polynomial.  Starting from v itself, the update
    x <- x - p*(x) * p*'(x)^{-1} stays inside the commutative algebra Q[v]
    and converges quadratically to the unique root of p* congruent to v
    modulo nilpotents.  Everything is exact, so convergence is detected by
    p*(x) vanishing identically.
    """
    a = v.rows
    p = linalg.charpoly(a)
    psf = linalg.poly_squarefree_part(p)
    dpsf = linalg.poly_derivative(psf)
    s = a
    for _ in range(_NEWTON_CAP):
        e = linalg.poly_eval_matrix(psf, s)
        if linalg.is_zero_matrix(e):
            break
        d = linalg.poly_eval_matrix(dpsf, s)
        s = linalg.mat_sub(s, linalg.mat_mul(e, linalg.mat_inv(d)))
    else:
        raise AssertionError("Newton iteration for the semisimple part did not converge")
    n = linalg.mat_sub(a, s)
    semi = LinearVectorField(s)
    nil = LinearVectorField(n)
    assert linalg.mat_mul(s, n) == linalg.mat_mul(n, s), "parts must commute"
    assert nil.is_nilpotent(), "nilpotent part must be nilpotent"
    assert linalg.is_zero_matrix(
        linalg.poly_eval_matrix(psf, s)
    ), "semisimple part must kill the squarefree characteristic factor"
    return semi, nil


def _rational_roots(psf):
    """Roots of a squarefree rational polynomial, or None if it does not
    split into linear factors over Q.  Factorization is delegated to sympy."""
    import sympy

    ints, _ = linalg.clear_denominators(psf)
    x = sympy.Symbol("x")
    spoly = sympy.Poly(list(reversed(ints)), x, domain="QQ")
    _, factors = spoly.factor_list()
    roots = []
    for fac, mult in factors:
        assert mult == 1, "squarefree input cannot have repeated factors"
        if fac.degree() != 1:
            return None
        lead, const = (Fraction(int(c.p), int(c.q)) for c in fac.all_coeffs())
        roots.append(-const / lead)
    return sorted(roots, reverse=True)


def rational_diagonalize(v: LinearVectorField):
    """Diagonalize a semisimple field over Q, if its eigenvalues are rational.

    Returns (weights, basis_matrix) with basis_matrix columns an eigenbasis
    ordered by decreasing eigenvalue, or None when the characteristic
    polynomial has an irrational factor (the field is then unsupported here,
    not an error).  Raises ValueError when v is not semisimple.
    """
    a = v.rows
    n = v.n
    psf = linalg.poly_squarefree_part(linalg.charpoly(a))
    if not linalg.is_zero_matrix(linalg.poly_eval_matrix(psf, a)):
        raise ValueError("field is not semisimple; split off the nilpotent part first")
    roots = _rational_roots(psf)
    if roots is None:
        return None
    cols = []
    weights = []
    for r in roots:
        shifted = linalg.mat_sub(a, linalg.mat_scale(linalg.identity(n), r))
        for b in linalg.nullspace(shifted):
            cols.append(b)
            weights.append(r)
    assert len(weights) == n, "eigenspace dimensions must sum to the ambient dimension"
    basis = linalg.transpose(tuple(cols))
    conjugated = linalg.mat_mul(linalg.mat_inv(basis), linalg.mat_mul(a, basis))
    assert conjugated == LinearVectorField.diagonal(weights).rows, "eigenbasis must diagonalize"
    return WeightVector(tuple(weights)), basis


def exp_nilpotent_action(v: LinearVectorField, f: HPoly) -> tuple:
    """Coefficients of the curve t -> exp(-tv) . f for a nilpotent field.

    Returns (f_0, f_1, ..., f_N) with f_k = (-1)^k v^k(f) / k!; the sequence
    is finite exactly because v is nilpotent.  f_0 is f itself.
    """
    if not v.is_nilpotent():
        raise ValueError("field is not nilpotent")
    seq = [f]
    g: HPoly | None = f
    k = 1
    while True:
        g = apply_derivation(v, seq[-1])
        if g is None:
            break
        seq.append(HPoly(f.n_vars, {m: -c / k for m, c in g.terms.items()}))
        k += 1
        assert k <= v.n * f.degree + 2, "nilpotent action failed to terminate"
    return tuple(seq)


def substitute_linear(f: HPoly, basis) -> HPoly:
    """Pull f back along the invertible substitution z_i -> sum_j P[i][j] z_j."""
    p = linalg.mat(basis)
    n = f.n_vars
    if len(p) != n:
        raise ValueError(f"basis matrix is {len(p)}x{len(p[0]) if p else 0}, expected {n}x{n}")
    linalg.mat_inv(p)  # raises ValueError when singular
    zero_mono = tuple([0] * n)
    forms = []
    for i in range(n):
        row = {
            tuple(int(k == j) for k in range(n)): p[i][j]
            for j in range(n)
            if p[i][j]
        }
        forms.append(row)
    max_exp = [max((m[i] for m in f.terms), default=0) for i in range(n)]
    powers = []
    for i in range(n):
        pw = [{zero_mono: Fraction(1)}]
        for _ in range(max_exp[i]):
            pw.append(_mul_maps(pw[-1], forms[i], n))
        powers.append(pw)
    out: dict = {}
    for mono, c in f.terms.items():
        term = {zero_mono: c}
        for i, e in enumerate(mono):
            if e:
                term = _mul_maps(term, powers[i][e], n)
        for m, v in term.items():
            s = out.get(m, Fraction(0)) + v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    assert out, "invertible substitution cannot annihilate a nonzero polynomial"
    return HPoly(n, out)
