"""One-parameter degenerations of a hypersurface, realized as hypersurfaces.

A linear field v with rational semisimple part generates a curve of
hypersurfaces G(s) degenerating f to its minimum-weight limit as s -> 0.
After diagonalizing the semisimple part and dropping the weight floor to
zero, every exponent of s is a non-negative integer once cleared by a single
rescaling s -> s^M, so the total space is again a hypersurface:

    G(s) = sum_gamma f_gamma s^(M * <lambda~, gamma>) z^gamma,

with lambda~ the floor-normalized generator.  The family is trivial exactly
when a single stratum remains, i.e. the generator fixes f projectively.

`theorem_crosscheck` compares the two available answers to "is f weakly
stable": the exact LP classification on one side, and on the other the sign
behaviour of the Futaki invariant over every integer generator in an
enumeration box (non-negative everywhere, vanishing only on trivial
families).  Disagreements are reported with explicit witnesses.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import boxscan, poly, stability
from .futaki import FutakiValue, futaki_of_limit
from .poly import HPoly
from .vfield import (
    LinearVectorField,
    apply_derivation,
    chevalley_split,
    rational_diagonalize,
    substitute_linear,
)
from .weights import WeightVector, mu, weight_spectrum

log = logging.getLogger(__name__)


class DegenerationError(ValueError):
    """The field cannot degenerate f within this representation."""


@dataclass(frozen=True)
class DegenerationFamily:
    """G(s) = sum over strata of s^exponent * stratum, with G(1) = base_poly."""

    base_poly: HPoly
    generator: WeightVector  # floor-normalized diagonal generator lambda~
    s_rescale: int  # M, the exponent clearing factor
    strata: dict  # int exponent -> HPoly

    def fiber(self, s) -> HPoly:
        """Evaluate the family at a rational parameter value."""
        s = Fraction(s)
        if s == 0:
            return self.strata[0]
        acc = None
        for e, part in sorted(self.strata.items()):
            piece = poly.scale(part, s**e)
            acc = piece if acc is None else poly.add(acc, piece)
        assert acc is not None, "a fiber of a nonzero family cannot vanish"
        return acc

    @property
    def trivial(self) -> bool:
        return len(self.strata) == 1


@dataclass(frozen=True)
class DegenerationReport:
    family: DegenerationFamily
    special_fiber: HPoly
    trivial: bool
    futaki: FutakiValue | None
    normalized_trace_zero_generator: WeightVector
    basis_change: tuple | None  # eigenbasis columns, None when already diagonal

    def to_json(self) -> dict:
        from .poly import print_poly

        return {
            "f": print_poly(self.family.base_poly),
            "generator": [str(x) for x in self.family.generator],
            "s_rescale": self.family.s_rescale,
            "strata": {str(e): print_poly(p) for e, p in sorted(self.family.strata.items())},
            "special_fiber": print_poly(self.special_fiber),
            "trivial": self.trivial,
            "futaki": str(self.futaki.value) if self.futaki is not None else None,
            "normalized_generator": [int(x) for x in self.normalized_trace_zero_generator],
            "basis": None
            if self.basis_change is None
            else [[str(x) for x in row] for row in self.basis_change],
        }


def build_degeneration(f: HPoly, v: LinearVectorField) -> DegenerationReport:
    """Degenerate f along v, reporting the family and its invariant.

    Raises DegenerationError when the nilpotent part of v moves f (the limit
    is then not a limit of this hypersurface under a diagonal subgroup) or
    when the semisimple part has irrational eigenvalues (unsupported here).
    In the non-diagonal case f is first rewritten in the eigenbasis, recorded
    in basis_change.
    """
    if v.n != f.n_vars:
        raise ValueError(f"field on {v.n} variables cannot act on {f.n_vars}-variable polynomial")

    if v.is_diagonal:
        weights = v.diagonal_entries()
        f_work = f
        basis = None
    else:
        semi, nil = chevalley_split(v)
        if not nil.is_zero and apply_derivation(nil, f) is not None:
            raise DegenerationError(
                "the nilpotent part of the field acts nontrivially on the polynomial"
            )
        diag = rational_diagonalize(semi)
        if diag is None:
            raise DegenerationError(
                "the semisimple part has irrational eigenvalues; "
                "its limit is not reachable in rational coordinates"
            )
        eigvals, basis = diag
        f_work = substitute_linear(f, basis)
        weights = eigvals
        log.debug("rewrote polynomial in an eigenbasis; weights %s", weights)

    d = f.degree
    floor = mu(weights, f_work)
    lam_tilde = weights.shifted(-Fraction(floor, d))

    spectrum = weight_spectrum(lam_tilde, f_work)
    rescale = lcm(*(w.denominator for w in spectrum.entries))
    strata = {}
    for w, part in spectrum.entries.items():
        e = w * rescale
        assert e.denominator == 1 and e >= 0, "cleared exponents must be non-negative integers"
        strata[int(e)] = part
    assert 0 in strata, "the floor normalization must leave a weight-zero stratum"

    family = DegenerationFamily(f_work, lam_tilde, rescale, strata)
    assert family.fiber(1) == f_work, "the family must pass through the polynomial at s=1"

    tz = lam_tilde.trace_zero().primitive_integer()
    n = f.n_vars - 1
    fut = futaki_of_limit(tz, f_work) if 1 < d < n + 1 else None
    return DegenerationReport(
        family=family,
        special_fiber=strata[0],
        trivial=family.trivial,
        futaki=fut,
        normalized_trace_zero_generator=tz,
        basis_change=basis,
    )


def from_destabilizer(f: HPoly, lmbda: WeightVector) -> DegenerationReport:
    """Degeneration along d*lambda - mu*ones for an integer trace-zero lambda.

    This rescaled generator has integer weights with floor zero, so the
    family needs no further normalization; lambda = 0 gives the trivial
    family over f itself.
    """
    if len(lmbda) != f.n_vars:
        raise ValueError("weight vector length does not match the polynomial")
    if not lmbda.is_integral:
        raise ValueError("destabilizer weights must be integers")
    if lmbda.trace != 0:
        raise ValueError(f"destabilizer must be trace-zero, got trace {lmbda.trace}")
    floor = mu(lmbda, f)
    gen = lmbda.scaled(f.degree).shifted(-floor)
    return build_degeneration(f, LinearVectorField.diagonal(gen.values))


@dataclass(frozen=True)
class CrosscheckViolation:
    generator: tuple  # integer trace-zero lambda
    futaki: Fraction
    trivial: bool
    kind: str  # negative_futaki | zero_futaki_nontrivial | trivial_positive_futaki


@dataclass(frozen=True)
class CrosscheckReport:
    verdict: stability.StabilityVerdict
    weakly_stable: bool  # LP side
    box_consistent: bool  # Futaki-sign side over the box
    agreement: bool
    enumerated: int
    bound: int
    violations: tuple

    def to_json(self) -> dict:
        return {
            "agreement": self.agreement,
            "weakly_stable": self.weakly_stable,
            "class": self.verdict.classification,
            "enumerated": self.enumerated,
            "bound": self.bound,
            "violations": [
                {
                    "lambda": list(v.generator),
                    "futaki": str(v.futaki),
                    "trivial": v.trivial,
                    "kind": v.kind,
                }
                for v in self.violations
            ],
        }


def theorem_crosscheck(f: HPoly, bound: int) -> CrosscheckReport:
    """Compare LP weak stability against Futaki signs over an integer box.

    For every nonzero trace-zero integer generator in the box, the induced
    family must have non-negative invariant, vanishing exactly on trivial
    families, precisely when f is weakly stable; any generator breaking one
    of these conditions is collected as a violation.
    """
    n = f.n_vars - 1
    d = f.degree
    if not 1 < d < n + 1:
        raise ValueError(f"degree d={d} outside the Fano range 1 < d < n+1 for n={n}")
    boxscan.check_box_size(f.n_vars, bound)

    verdict = stability.classify_torus(f)
    weakly = verdict.classification != stability.NOT_WEAKLY_STABLE

    violations = []
    enumerated = 0
    for lam in boxscan.iter_trace_zero_box(f.n_vars, bound):
        enumerated += 1
        rep = from_destabilizer(f, WeightVector.from_values(lam))
        assert rep.futaki is not None, "crosscheck runs inside the Fano range"
        value = rep.futaki.value
        if value < 0:
            kind = "negative_futaki"
        elif value == 0 and not rep.trivial:
            kind = "zero_futaki_nontrivial"
        elif value > 0 and rep.trivial:
            kind = "trivial_positive_futaki"
        else:
            continue
        violations.append(CrosscheckViolation(lam, value, rep.trivial, kind))

    box_ok = not violations
    agreement = weakly == box_ok
    if not agreement:
        log.warning(
            "crosscheck disagreement: LP says weakly_stable=%s, box says %s", weakly, box_ok
        )
    return CrosscheckReport(
        verdict, weakly, box_ok, agreement, enumerated, bound, tuple(violations)
    )
