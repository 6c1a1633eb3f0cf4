"""Torus stability of a hypersurface in the given coordinates.

Everything revolves around the closed cone

    C(f) = { lambda : sum(lambda) = 0, <lambda, gamma> >= 0 for gamma in supp f }

and its lineality part L(f) = { lambda in C : every weight is zero }, the
diagonal fields fixing f.  The classification is

    stable                    <=>  C = {0}
    weakly_stable_not_stable  <=>  C = L != {0}
    not_weakly_stable         <=>  C strictly larger than L

decided by exact linear programming: L comes from a kernel computation, and
C > L holds precisely when the total weight sum(gamma) <lambda, gamma> can be
made positive on C, which a capped LP detects without any search.  A second
LP strengthens the witness to strictly positive weights whenever possible.

`oracle_classify` answers the same question by brute-force enumeration of
integer vectors in a box; it is independent of the LP route and exists to
cross-check it.  Its verdicts are box-relative for the stable and weakly
stable classes (a witness may live outside the box), which is what
`verdicts_consistent` accounts for.

Stable and weakly-stable verdicts are relative to the coordinates in which f
is written; only not_weakly_stable is intrinsic under linear changes of
coordinates restricted to diagonal one-parameter subgroups.  See the CLI's
basis sweep for a way to probe other bases.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from . import boxscan, lp
from .poly import HPoly, support
from .weights import WeightVector, mu

log = logging.getLogger(__name__)

STABLE = "stable"
WEAKLY_STABLE_NOT_STABLE = "weakly_stable_not_stable"
NOT_WEAKLY_STABLE = "not_weakly_stable"


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of a classification.

    destabilizer is a primitive integer trace-zero weight vector witnessing
    non-stability (all support weights zero for the weakly stable class,
    non-negative with a positive one otherwise); certificate_mu is its
    minimum weight.  box_bound is None for exact LP verdicts and the
    enumeration radius for oracle verdicts, whose stable/weakly answers are
    only valid inside that box.
    """

    classification: str
    destabilizer: WeightVector | None
    fixing_subspace_dim: int
    certificate_mu: Fraction | None
    box_bound: int | None = None

    @property
    def exit_code(self) -> int:
        return {STABLE: 0, WEAKLY_STABLE_NOT_STABLE: 3, NOT_WEAKLY_STABLE: 4}[
            self.classification
        ]

    def to_json(self, basis="given") -> dict:
        return {
            "class": self.classification,
            "destabilizer": list(self.destabilizer.as_ints()) if self.destabilizer else None,
            "mu": str(self.certificate_mu) if self.certificate_mu is not None else None,
            "fixing_dim": self.fixing_subspace_dim,
            "basis": basis,
        }


def _sorted_support(f: HPoly) -> list:
    return sorted(support(f), reverse=True)


def _validate_destabilizer(f: HPoly, lam: WeightVector, expect_positive: bool):
    assert lam.trace == 0, "destabilizer must be trace-zero"
    assert lam.is_integral, "destabilizer must be integral"
    assert not lam.is_zero, "destabilizer must be nonzero"
    ws = [lam.dot(g) for g in f.terms]
    assert all(w >= 0 for w in ws), "destabilizer weights must be non-negative"
    if expect_positive:
        assert min(ws) > 0, "strict destabilizer must have positive minimum weight"


def _fixing_certificate(f: HPoly, basis_vec) -> WeightVector:
    lam = WeightVector.from_values(basis_vec).primitive_integer()
    assert lam.trace == 0 and not lam.is_zero
    assert all(lam.dot(g) == 0 for g in f.terms), "fixing vector must annihilate all weights"
    return lam


def classify_torus(f: HPoly) -> StabilityVerdict:
    """Exact classification in the given coordinates via linear programming."""
    gammas = _sorted_support(f)
    n = f.n_vars
    ones = tuple(Fraction(1) for _ in range(n))
    fixing_basis = lp.kernel([ones] + gammas, n)
    fixing_dim = len(fixing_basis)

    total = tuple(sum(Fraction(g[i]) for g in gammas) for i in range(n))
    cone = [(ones, lp.EQ, 0)] + [(g, lp.GE, 0) for g in gammas]
    out = lp.solve(lp.LinearProgram.maximize(total, cone + [(total, lp.LE, 1)]))
    assert out.status == lp.OPTIMAL, "capped cone program is always feasible and bounded"
    assert out.value in (0, 1), "cone programs optimize at 0 or at the cap"

    if out.value == 0:
        # Every lambda in C has all weights zero, so C = L.
        if fixing_dim == 0:
            return StabilityVerdict(STABLE, None, 0, None)
        lam = _fixing_certificate(f, fixing_basis[0])
        return StabilityVerdict(WEAKLY_STABLE_NOT_STABLE, lam, fixing_dim, Fraction(0))

    # C is strictly larger than L; try to strengthen the witness to mu > 0.
    m_col = tuple(Fraction(int(i == n)) for i in range(n + 1))
    strict = [(ones + (Fraction(0),), lp.EQ, 0)]
    strict += [(g + (Fraction(-1),), lp.GE, 0) for g in gammas]
    strict += [(m_col, lp.LE, 1)]
    out2 = lp.solve(lp.LinearProgram.maximize(m_col, strict))
    assert out2.status == lp.OPTIMAL and out2.value in (0, 1)

    witness = out2.witness[:n] if out2.value == 1 else out.witness
    lam = WeightVector.from_values(witness).primitive_integer()
    _validate_destabilizer(f, lam, expect_positive=(out2.value == 1))
    cert = mu(lam, f)
    log.debug("destabilizer %s with mu=%s (strict=%s)", lam, cert, out2.value == 1)
    return StabilityVerdict(NOT_WEAKLY_STABLE, lam, fixing_dim, cert)


def destabilizer(f: HPoly) -> WeightVector | None:
    """A nonzero trace-zero integer vector with all support weights >= 0,
    strengthened to all positive when possible; None when f is stable."""
    return classify_torus(f).destabilizer


def oracle_classify(f: HPoly, box_bound: int, backend: str | None = None) -> StabilityVerdict:
    """Classification by exhaustive enumeration of integer vectors in a box.

    Independent of the LP route.  A not_weakly_stable verdict is definitive;
    stable and weakly-stable verdicts only assert that no witness exists with
    entries bounded by box_bound.
    """
    gammas = _sorted_support(f)
    boxscan.check_box_size(f.n_vars, box_bound)
    res = boxscan.scan_box(gammas, f.n_vars, box_bound, backend=backend)
    if res.strict is not None or res.semi is not None:
        chosen = res.strict if res.strict is not None else res.semi
        lam = WeightVector.from_values(chosen).primitive_integer()
        _validate_destabilizer(f, lam, expect_positive=res.strict is not None)
        return StabilityVerdict(
            NOT_WEAKLY_STABLE, lam, res.fixing_rank, mu(lam, f), box_bound
        )
    if res.fixing_rank > 0:
        lam = _fixing_certificate(f, res.fixing_basis[0])
        return StabilityVerdict(
            WEAKLY_STABLE_NOT_STABLE, lam, res.fixing_rank, Fraction(0), box_bound
        )
    return StabilityVerdict(STABLE, None, 0, None, box_bound)


def verdicts_consistent(exact: StabilityVerdict, boxed: StabilityVerdict, bound: int) -> bool:
    """Whether an LP verdict and a box verdict can both be right.

    The box is sound but incomplete for instability, and its fixing rank can
    undercount when the fixing subspace meets the box only at zero; an LP
    witness with some entry beyond the bound is invisible to the box.
    """
    ec, bc = exact.classification, boxed.classification
    if bc == NOT_WEAKLY_STABLE:
        return ec == NOT_WEAKLY_STABLE
    if bc == WEAKLY_STABLE_NOT_STABLE:
        if ec == STABLE:
            return False
        if ec == NOT_WEAKLY_STABLE:
            return max(abs(int(x)) for x in exact.destabilizer) > bound
        return True
    # box saw stability: any exact witness must live outside the box
    if ec == STABLE:
        return True
    return max(abs(int(x)) for x in exact.destabilizer) > bound
