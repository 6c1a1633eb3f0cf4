"""Exact rational linear programming.

A small two-phase simplex over Fraction entries.  Variables are free (each is
split into a positive and a negative part internally), constraints may be
'<=', '=' or '>=', and the objective is always maximized.  Bland's smallest
index rule makes the pivot sequence, and therefore the reported witness,
deterministic; it also rules out cycling, so termination needs no tolerance
or iteration cap.

Every answer is re-verified by substitution before it is returned: optimal
witnesses must satisfy all constraints exactly, unbounded rays must lie in
the recession cone and strictly improve the objective.  A verification
failure would mean a bug in the pivoting itself and raises RuntimeError.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import frac

log = logging.getLogger(__name__)

LE, EQ, GE = "<=", "=", ">="
_RELATIONS = (LE, EQ, GE)

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """Maximize objective . x subject to row . x <rel> rhs for each constraint."""

    objective: tuple
    constraints: tuple  # of (row, relation, rhs)
    n_vars: int

    @classmethod
    def maximize(cls, objective, constraints) -> "LinearProgram":
        obj = tuple(frac(c) for c in objective)
        n = len(obj)
        rows = []
        for row, rel, rhs in constraints:
            row = tuple(frac(x) for x in row)
            if len(row) != n:
                raise ValueError(f"constraint row has {len(row)} entries, expected {n}")
            if rel not in _RELATIONS:
                raise ValueError(f"unknown relation {rel!r}")
            rows.append((row, rel, frac(rhs)))
        return cls(obj, tuple(rows), n)


@dataclass(frozen=True)
class LPOutcome:
    """status is 'optimal' (value + witness), 'unbounded' (witness is an
    improving ray) or 'infeasible' (no witness)."""

    status: str
    value: Fraction | None
    witness: tuple | None


def _pivot(tab, crow, basis, pr, e):
    prow = tab[pr]
    pv = prow[e]
    prow = [x / pv for x in prow]
    tab[pr] = prow
    for r in range(len(tab)):
        if r != pr and tab[r][e]:
            f = tab[r][e]
            tab[r] = [x - f * y for x, y in zip(tab[r], prow)]
    if crow[e]:
        f = crow[e]
        crow[:] = [x - f * y for x, y in zip(crow, prow)]
    basis[pr] = e


def _iterate(tab, basis, crow, n_enterable, pivot_log=None, phase=0):
    """Run simplex steps until optimal or unbounded.

    Only columns below n_enterable may enter the basis (this is how phase two
    locks out the artificial columns).  Returns ('optimal', None) or
    ('unbounded', entering_column).
    """
    while True:
        e = next((j for j in range(n_enterable) if crow[j] > 0), None)
        if e is None:
            return OPTIMAL, None
        pr = None
        best = None
        for r in range(len(tab)):
            a = tab[r][e]
            if a > 0:
                ratio = tab[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[pr]):
                    best = ratio
                    pr = r
        if pr is None:
            return UNBOUNDED, e
        if pivot_log is not None:
            pivot_log.append(
                {
                    "phase": phase,
                    "entering": e,
                    "leaving": basis[pr],
                    "tableau": [[str(x) for x in row] for row in tab],
                    "reduced_costs": [str(x) for x in crow],
                }
            )
        _pivot(tab, crow, basis, pr, e)


def _canonical_cost(cost, tab, basis):
    """Reduce a cost vector against the current basis; last slot is -value."""
    crow = list(cost) + [Fraction(0)]
    for r, bcol in enumerate(basis):
        c = crow[bcol]
        if c:
            crow = [x - c * y for x, y in zip(crow, tab[r])]
    return crow


def solve(program: LinearProgram, pivot_log: list | None = None) -> LPOutcome:
    """Exact two-phase simplex with Bland's rule.

    pivot_log, when given, collects one snapshot per pivot for debugging.
    """
    n = program.n_vars
    cons = []
    for row, rel, rhs in program.constraints:
        if rhs < 0:
            row = tuple(-x for x in row)
            rhs = -rhs
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
        cons.append((row, rel, rhs))

    n_slack = sum(1 for _, rel, _ in cons if rel != EQ)
    width = 2 * n + n_slack  # x+ | x- | slacks
    rows = []
    si = 0
    for row, rel, rhs in cons:
        full = [Fraction(0)] * width
        for j, x in enumerate(row):
            if x:
                full[j] = x
                full[n + j] = -x
        basic = None
        if rel != EQ:
            col = 2 * n + si
            si += 1
            full[col] = Fraction(1) if rel == LE else Fraction(-1)
            if rel == LE:
                basic = col
        rows.append((full, rhs, basic))

    n_art = sum(1 for _, _, basic in rows if basic is None)
    total = width + n_art
    tab = []
    basis = []
    art_cols = []
    acol = width
    for full, rhs, basic in rows:
        line = full + [Fraction(0)] * n_art + [rhs]
        if basic is None:
            line[acol] = Fraction(1)
            basic = acol
            art_cols.append(acol)
            acol += 1
        tab.append(line)
        basis.append(basic)

    if art_cols:
        cost1 = [Fraction(0)] * total
        for c in art_cols:
            cost1[c] = Fraction(-1)
        crow = _canonical_cost(cost1, tab, basis)
        status, _ = _iterate(tab, basis, crow, total, pivot_log, phase=1)
        assert status == OPTIMAL, "phase one is bounded above by zero"
        if -crow[-1] < 0:
            log.debug("infeasible: phase-one optimum %s", -crow[-1])
            return LPOutcome(INFEASIBLE, None, None)
        # Drive leftover artificials out of the basis; a row with no real
        # entries left is a redundant constraint and is dropped.
        art_set = set(art_cols)
        for r in [r for r in range(len(tab)) if basis[r] in art_set]:
            j = next((j for j in range(width) if tab[r][j]), None)
            if j is None:
                continue
            _pivot(tab, crow, basis, r, j)
        keep = [r for r in range(len(tab)) if basis[r] not in art_set]
        tab = [tab[r] for r in keep]
        basis = [basis[r] for r in keep]

    cost2 = (
        list(program.objective)
        + [-c for c in program.objective]
        + [Fraction(0)] * (n_slack + n_art)
    )
    crow = _canonical_cost(cost2, tab, basis)
    status, e = _iterate(tab, basis, crow, width, pivot_log, phase=2)

    if status == UNBOUNDED:
        d_std = [Fraction(0)] * total
        d_std[e] = Fraction(1)
        for r in range(len(tab)):
            d_std[basis[r]] = -tab[r][e]
        ray = tuple(d_std[i] - d_std[n + i] for i in range(n))
        _verify_ray(program, ray)
        return LPOutcome(UNBOUNDED, None, ray)

    x_std = [Fraction(0)] * total
    for r in range(len(tab)):
        x_std[basis[r]] = tab[r][-1]
    x = tuple(x_std[i] - x_std[n + i] for i in range(n))
    value = sum((c * v for c, v in zip(program.objective, x)), Fraction(0))
    _verify_point(program, x)
    return LPOutcome(OPTIMAL, value, x)


def _verify_point(program: LinearProgram, x):
    for row, rel, rhs in program.constraints:
        lhs = sum((a * v for a, v in zip(row, x)), Fraction(0))
        ok = lhs <= rhs if rel == LE else lhs >= rhs if rel == GE else lhs == rhs
        if not ok:
            raise RuntimeError(f"simplex witness violates {row} {rel} {rhs}: got {lhs}")


def _verify_ray(program: LinearProgram, d):
    gain = sum((c * v for c, v in zip(program.objective, d)), Fraction(0))
    if gain <= 0:
        raise RuntimeError("unbounded ray does not improve the objective")
    for row, rel, rhs in program.constraints:
        lhs = sum((a * v for a, v in zip(row, d)), Fraction(0))
        ok = lhs <= 0 if rel == LE else lhs >= 0 if rel == GE else lhs == 0
        if not ok:
            raise RuntimeError(f"unbounded ray leaves the recession cone at {row} {rel} 0")


def kernel(rows, n_cols: int | None = None):
    """Deterministic rational basis of {x : row . x = 0 for all rows}."""
    return linalg.nullspace([tuple(frac(x) for x in r) for r in rows], n_cols)
