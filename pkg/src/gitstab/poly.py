"""Sparse homogeneous polynomials over the rationals.

A polynomial in variables z0..z{n-1} is stored as a map from exponent
multi-indices (tuples of non-negative ints) to nonzero Fraction coefficients.
Only homogeneous nonzero polynomials are representable; both constraints are
enforced at construction time, which lets every downstream computation assume
a single total degree.

The text format is deliberately small:

    poly   := term (('+'|'-') term)*
    term   := [coeff '*'] factor ('*' factor)*
    factor := var ['^' posint]
    var    := 'z' index
    coeff  := ['-'] int ['/' posint]

Whitespace is insignificant.  `parse_poly` and `print_poly` are mutually
inverse on canonical output: printing orders terms by descending lexicographic
exponent (z0 heaviest), writes signs as separators, and omits coefficients of
magnitude one.

>>> print_poly(parse_poly("z2*z3^2 + z0*z1^2 - z2^2*z3", 4))
'z0*z1^2 - z2^2*z3 + z2*z3^2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .linalg import frac

Monomial = tuple  # tuple[int, ...]


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class HPoly:
    """Immutable-by-convention homogeneous polynomial.

    Attributes:
        n_vars: number of ambient variables.
        degree: common total degree of every monomial.
        terms:  dict mapping Monomial -> nonzero Fraction.  Treat as
                read-only; all operations return fresh objects.
    """

    __slots__ = ("n_vars", "degree", "terms")

    def __init__(self, n_vars: int, terms: Mapping[Monomial, Fraction]):
        if n_vars < 1:
            raise ValueError(f"need at least one variable, got n_vars={n_vars}")
        clean = {}
        degree = None
        for mono, coeff in terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n_vars:
                raise ValueError(f"monomial {mono} has {len(mono)} exponents, expected {n_vars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in monomial {mono}")
            coeff = frac(coeff)
            if not coeff:
                continue
            d = sum(mono)
            if degree is None:
                degree = d
            elif d != degree:
                raise ValueError(f"inhomogeneous terms: degree {degree} vs {d}")
            clean[mono] = coeff
        if not clean:
            raise ValueError("the zero polynomial is not representable")
        self.n_vars = n_vars
        self.degree = degree
        self.terms = clean

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HPoly)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __str__(self) -> str:
        return print_poly(self)

    def __repr__(self) -> str:
        return f"HPoly({print_poly(self)!r}, n_vars={self.n_vars})"

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))


def support(f: HPoly) -> set:
    """The set of exponent multi-indices with nonzero coefficient."""
    return set(f.terms)


def add(f: HPoly, g: HPoly) -> HPoly | None:
    """Sum of two polynomials of matching degree; None when everything cancels."""
    if f.n_vars != g.n_vars:
        raise ValueError("variable count mismatch")
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    out = dict(f.terms)
    for mono, c in g.terms.items():
        s = out.get(mono, Fraction(0)) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    if not out:
        return None
    return HPoly(f.n_vars, out)


def scale(f: HPoly, c) -> HPoly:
    c = frac(c)
    if not c:
        raise ValueError("scaling by zero would produce the zero polynomial")
    return HPoly(f.n_vars, {m: c * v for m, v in f.terms.items()})


def negate(f: HPoly) -> HPoly:
    return scale(f, -1)


def _mul_maps(a: Mapping, b: Mapping, n_vars: int) -> dict:
    """Convolution of two raw term maps (not necessarily homogeneous)."""
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, Fraction(0)) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def multiply(f: HPoly, g: HPoly) -> HPoly:
    """Product; never zero because the coefficient ring is a domain."""
    if f.n_vars != g.n_vars:
        raise ValueError("variable count mismatch")
    return HPoly(f.n_vars, _mul_maps(f.terms, g.terms, f.n_vars))


def euler_check(f: HPoly) -> int:
    """Recompute sum(gamma)*f_gamma per term and compare against degree*f.

    The constructor already enforces homogeneity, so a mismatch here means
    internal state was corrupted; that is an assertion failure, not a user
    error.  Returns the degree.
    """
    applied = {m: c * sum(m) for m, c in f.terms.items()}
    scaled = {m: c * f.degree for m, c in f.terms.items()}
    assert applied == scaled, "Euler derivation disagrees with stored degree"
    return f.degree


_TOKEN = re.compile(r"z(\d+)|(\d+)|([-+*/^])|(\S)")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        pos = m.start()
        if m.group(1) is not None:
            tokens.append(("var", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append(("int", int(m.group(2)), pos))
        elif m.group(3) is not None:
            tokens.append(("op", m.group(3), pos))
        else:
            raise PolyParseError(f"unexpected character {m.group(4)!r}", pos)
    return tokens


def parse_poly(text: str, n_vars: int) -> HPoly:
    """Parse the text format into a canonical HPoly.

    Raises PolyParseError (with position) on syntax errors, out-of-range
    variable indices, inhomogeneous input, or input that cancels to zero.
    Requires n_vars >= 2: a projective hypersurface needs at least two
    coordinates.
    """
    if n_vars < 2:
        raise ValueError(f"n_vars must be at least 2, got {n_vars}")
    tokens = _tokenize(text)
    end = len(text)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, end)

    terms: dict = {}
    degrees = set()
    first = True
    while True:
        kind, val, pos = peek()
        if kind is None:
            if first:
                raise PolyParseError("empty input", pos)
            break
        # sign separator (optional leading sign on the first term)
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            kind, val, pos = peek()
        elif not first:
            raise PolyParseError(f"expected '+' or '-' between terms", pos)
        first = False
        # optional coefficient
        coeff = Fraction(1)
        if kind == "int":
            num = val
            i += 1
            kind, val, pos = peek()
            den = 1
            if kind == "op" and val == "/":
                i += 1
                kind, val, pos = peek()
                if kind != "int":
                    raise PolyParseError("expected denominator after '/'", pos)
                if val == 0:
                    raise PolyParseError("denominator must be positive", pos)
                den = val
                i += 1
                kind, val, pos = peek()
            coeff = Fraction(num, den)
            if kind != "op" or val != "*":
                raise PolyParseError("expected '*' between coefficient and variables", pos)
            i += 1
            kind, val, pos = peek()
        # one or more '*'-separated factors
        mono = [0] * n_vars
        while True:
            if kind != "var":
                raise PolyParseError("expected a variable like z0", pos)
            idx = val
            if idx >= n_vars:
                raise PolyParseError(f"variable z{idx} out of range for n_vars={n_vars}", pos)
            i += 1
            kind, val, pos = peek()
            exp = 1
            if kind == "op" and val == "^":
                i += 1
                kind, val, pos = peek()
                if kind != "int":
                    raise PolyParseError("expected an integer exponent after '^'", pos)
                if val == 0:
                    raise PolyParseError("exponent must be positive", pos)
                exp = val
                i += 1
                kind, val, pos = peek()
            mono[idx] += exp
            if kind == "op" and val == "*":
                i += 1
                kind, val, pos = peek()
                continue
            break
        key = tuple(mono)
        degrees.add(sum(key))
        c = terms.get(key, Fraction(0)) + sign * coeff
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)

    if len(degrees) > 1:
        raise PolyParseError(f"inhomogeneous polynomial: degrees {sorted(degrees)}", 0)
    if not terms:
        raise PolyParseError("polynomial cancels to zero", 0)
    return HPoly(n_vars, terms)


def _mono_str(mono: Monomial) -> str:
    return "*".join(
        f"z{i}" if e == 1 else f"z{i}^{e}" for i, e in enumerate(mono) if e
    )


def print_poly(f: HPoly) -> str:
    """Canonical text form: terms in descending lex order on exponents."""
    parts = []
    for mono in sorted(f.terms, reverse=True):
        c = f.terms[mono]
        mag = abs(c)
        body = _mono_str(mono) if mag == 1 else f"{mag}*{_mono_str(mono)}"
        parts.append(("-" if c < 0 else "+", body))
    head_sign, head = parts[0]
    out = ("- " if head_sign == "-" else "") + head
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out
