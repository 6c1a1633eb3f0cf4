"""Command line interface.

One subcommand per pipeline stage: parse/print, weight data (mu, limit),
stability classification with optional basis changes, destabilizer search,
Futaki evaluation, degeneration families, the stability/Futaki cross-check,
and a JSONL corpus runner.  Exit codes: 0 success or stable, 2 parse or
validation error, 3 weakly stable but not stable, 4 not weakly stable,
5 cross-check disagreement.

Set GITSTAB_LOG=DEBUG (or INFO, ...) for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from random import Random

from . import lp
from .degeneration import build_degeneration, from_destabilizer, theorem_crosscheck
from .futaki import futaki_of_limit
from .linalg import frac, mat_inv
from .poly import HPoly, PolyParseError, parse_poly, print_poly
from .stability import NOT_WEAKLY_STABLE, STABLE, classify_torus
from .vfield import parse_field, substitute_linear
from .weights import WeightVector, mu, weight_spectrum, limit_poly

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_WEAKLY = 3
EXIT_NOT_WEAKLY = 4
EXIT_DISAGREEMENT = 5

_CLASS_RANK = {STABLE: 0, "weakly_stable_not_stable": 1, NOT_WEAKLY_STABLE: 2}


def _infer_n_vars(text: str) -> int:
    indices = [int(m.group(1)) for m in re.finditer(r"z(\d+)", text)]
    return max(max(indices, default=1) + 1, 2)


def _load_poly(args) -> HPoly:
    if getattr(args, "poly_file", None):
        with open(args.poly_file) as fh:
            text = fh.read().strip()
    else:
        text = args.poly
    if text is None:
        raise ValueError("no polynomial given; use -f or --poly-file")
    n = args.n_vars if args.n_vars is not None else _infer_n_vars(text)
    return parse_poly(text, n)


def _emit(args, payload: dict, human_lines):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in human_lines:
            print(line)


def _parse_basis(text: str, n: int):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed basis matrix: {exc}") from None
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise ValueError(f"basis must be a {n}x{n} JSON array of arrays")
    basis = tuple(tuple(frac(x) for x in r) for r in rows)
    mat_inv(basis)  # raises ValueError when singular
    return basis


def _random_basis(rng: Random, n: int):
    for _ in range(200):
        rows = tuple(tuple(frac(rng.randint(-3, 3)) for _ in range(n)) for _ in range(n))
        try:
            mat_inv(rows)
        except ValueError:
            continue
        return rows
    raise AssertionError("random search failed to produce an invertible matrix")


def _basis_json(basis) -> list:
    return [[str(x) if x.denominator != 1 else int(x) for x in row] for row in basis]


def cmd_parse(args) -> int:
    f = _load_poly(args)
    _emit(
        args,
        {"f": print_poly(f), "n_vars": f.n_vars, "degree": f.degree, "terms": len(f.terms)},
        [f"{print_poly(f)}", f"n_vars = {f.n_vars}, degree = {f.degree}, terms = {len(f.terms)}"],
    )
    return EXIT_OK


def cmd_mu(args) -> int:
    f = _load_poly(args)
    lam = WeightVector.parse(args.weights)
    value = mu(lam, f)
    spec = weight_spectrum(lam, f)
    limit = limit_poly(lam, f)
    payload = {
        "mu": str(value),
        "spectrum": {str(w): print_poly(p) for w, p in spec.strata()},
        "limit": print_poly(limit),
    }
    lines = [f"mu = {value}", "spectrum:"]
    lines += [f"  {w}: {print_poly(p)}" for w, p in spec.strata()]
    lines.append(f"limit = {print_poly(limit)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_limit(args) -> int:
    f = _load_poly(args)
    lam = WeightVector.parse(args.weights)
    limit = limit_poly(lam, f)
    _emit(args, {"limit": print_poly(limit), "mu": str(mu(lam, f))}, [print_poly(limit)])
    return EXIT_OK


def _classify_with_bases(args, f: HPoly):
    """Classify in the given coordinates, then in any requested bases,
    keeping the strongest instability found."""
    best = (classify_torus(f), "given")
    candidates = []
    for text in args.basis or []:
        candidates.append(_parse_basis(text, f.n_vars))
    if args.basis_sweep:
        rng = Random(args.seed)
        candidates += [_random_basis(rng, f.n_vars) for _ in range(args.basis_sweep)]
    for basis in candidates:
        verdict = classify_torus(substitute_linear(f, basis))
        if _CLASS_RANK[verdict.classification] > _CLASS_RANK[best[0].classification]:
            best = (verdict, basis)
            if verdict.classification == NOT_WEAKLY_STABLE:
                break
    return best, len(candidates)


def cmd_stability(args) -> int:
    f = _load_poly(args)
    (verdict, basis), tried = _classify_with_bases(args, f)
    basis_field = "given" if basis == "given" else _basis_json(basis)
    payload = verdict.to_json(basis=basis_field)
    qualifier = ""
    if verdict.classification != NOT_WEAKLY_STABLE:
        qualifier = " (relative to the given coordinates)" if not tried else (
            f" (relative to the given coordinates and {tried} tried bases)"
        )
    lines = [f"class = {verdict.classification}{qualifier}"]
    if verdict.destabilizer is not None:
        lines.append(f"destabilizer = {verdict.destabilizer}")
        lines.append(f"mu = {verdict.certificate_mu}")
    lines.append(f"fixing_dim = {verdict.fixing_subspace_dim}")
    if basis != "given":
        lines.append(f"basis = {json.dumps(_basis_json(basis))}")
    _emit(args, payload, lines)
    return verdict.exit_code


def cmd_destabilize(args) -> int:
    f = _load_poly(args)
    verdict = classify_torus(f)
    if verdict.destabilizer is None:
        _emit(args, verdict.to_json(), ["stable: no destabilizer in these coordinates"])
    else:
        _emit(
            args,
            verdict.to_json(),
            [f"destabilizer = {verdict.destabilizer}", f"mu = {verdict.certificate_mu}"],
        )
    return verdict.exit_code


def cmd_futaki(args) -> int:
    f = _load_poly(args)
    lam = WeightVector.parse(args.weights)
    fut = futaki_of_limit(lam, f)
    _emit(
        args,
        fut.to_json(),
        [f"kappa = {fut.kappa}", f"futaki = {fut.value} (n={fut.n}, d={fut.d})"],
    )
    return EXIT_OK


def cmd_degenerate(args) -> int:
    f = _load_poly(args)
    if args.from_destabilizer:
        if not args.weights:
            raise ValueError("--from-destabilizer needs -w with integer trace-zero weights")
        report = from_destabilizer(f, WeightVector.parse(args.weights))
    elif args.field:
        report = build_degeneration(f, parse_field(args.field, f.n_vars))
    else:
        raise ValueError("degenerate needs --field or --from-destabilizer")
    payload = report.to_json()
    lines = [
        f"generator = {report.family.generator}",
        f"s_rescale = {report.family.s_rescale}",
        "strata:",
    ]
    lines += [f"  s^{e}: {print_poly(p)}" for e, p in sorted(report.family.strata.items())]
    lines.append(f"special_fiber = {print_poly(report.special_fiber)}")
    lines.append(f"trivial = {report.trivial}")
    if report.futaki is not None:
        lines.append(f"futaki = {report.futaki.value}")
    lines.append(f"normalized_generator = {report.normalized_trace_zero_generator}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    f = _load_poly(args)
    report = theorem_crosscheck(f, args.bound)
    lines = [
        f"class = {report.verdict.classification}",
        f"weakly_stable (LP) = {report.weakly_stable}",
        f"box consistent (bound {report.bound}, {report.enumerated} generators) = {report.box_consistent}",
        f"agreement = {report.agreement}",
    ]
    for v in report.violations[:10]:
        lines.append(f"  violation {v.kind}: lambda={list(v.generator)} futaki={v.futaki}")
    if len(report.violations) > 10:
        lines.append(f"  ... {len(report.violations) - 10} more")
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.agreement else EXIT_DISAGREEMENT


def _corpus_worker(line: str) -> str:
    line = line.strip()
    if not line:
        return ""
    try:
        row = json.loads(line)
        f = parse_poly(row["f"], int(row["n_vars"]))
        return json.dumps(classify_torus(f).to_json())
    except (KeyError, ValueError, TypeError) as exc:
        return json.dumps({"error": str(exc), "line": line})


def cmd_corpus(args) -> int:
    if args.path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.path) as fh:
            lines = fh.read().splitlines()
    lines = [l for l in lines if l.strip()]
    if args.workers > 1 and len(lines) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_corpus_worker, lines, chunksize=8))
    else:
        results = [_corpus_worker(l) for l in lines]
    failed = 0
    for out in results:
        if out:
            print(out)
            if '"error"' in out:
                failed += 1
    return EXIT_USAGE if failed else EXIT_OK


def cmd_lp_debug(args) -> int:
    with open(args.program) as fh:
        spec = json.load(fh)
    program = lp.LinearProgram.maximize(
        spec["objective"],
        [(row, rel, rhs) for row, rel, rhs in spec["constraints"]],
    )
    pivots: list = []
    outcome = lp.solve(program, pivot_log=pivots)
    for k, snap in enumerate(pivots):
        print(f"pivot {k}: phase {snap['phase']}, col {snap['entering']} in, col {snap['leaving']} out")
        for row in snap["tableau"]:
            print("   [" + ", ".join(row) + "]")
    print(f"status = {outcome.status}")
    if outcome.value is not None:
        print(f"value = {outcome.value}")
    if outcome.witness is not None:
        print(f"witness = ({', '.join(str(x) for x in outcome.witness)})")
    return EXIT_OK


def _add_poly_args(p):
    p.add_argument("-f", "--poly", help="polynomial text, e.g. 'z0*z1^2 + z2^2*z3'")
    p.add_argument("--poly-file", help="file containing the polynomial text")
    p.add_argument("-n", "--n-vars", type=int, default=None, help="number of variables (default: inferred)")
    p.add_argument("--json", action="store_true", help="emit one JSON object instead of text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gitstab",
        description="Exact torus stability, destabilizing fields and degenerations of hypersurfaces",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and reprint a polynomial canonically")
    _add_poly_args(p)
    p.set_defaults(func=cmd_parse)

    for name, func, help_ in (
        ("mu", cmd_mu, "minimum weight, spectrum and limit under a diagonal field"),
        ("limit", cmd_limit, "the minimum-weight limit polynomial"),
        ("futaki", cmd_futaki, "Futaki invariant of the limit under trace-zero weights"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_poly_args(p)
        p.add_argument("-w", "--weights", required=True, help="comma-separated rational weights")
        p.set_defaults(func=func)

    p = sub.add_parser("stability", help="classify torus stability")
    _add_poly_args(p)
    p.add_argument("--basis", action="append", help="JSON basis matrix to also try (repeatable)")
    p.add_argument("--basis-sweep", type=int, default=0, help="try this many random bases")
    p.add_argument("--seed", type=int, default=0, help="seed for the basis sweep")
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("destabilize", help="search for a destabilizing weight vector")
    _add_poly_args(p)
    p.set_defaults(func=cmd_destabilize)

    p = sub.add_parser("degenerate", help="build the degeneration family along a field")
    _add_poly_args(p)
    p.add_argument("--field", help="'diag:w0,w1,...' or a JSON matrix of rationals")
    p.add_argument("-w", "--weights", help="integer trace-zero weights for --from-destabilizer")
    p.add_argument(
        "--from-destabilizer",
        action="store_true",
        help="degenerate along degree*lambda - mu*ones built from -w",
    )
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("crosscheck", help="compare LP stability against Futaki signs over a box")
    _add_poly_args(p)
    p.add_argument("--bound", type=int, default=4, help="enumeration radius (default 4)")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("corpus", help="classify a JSONL corpus of {'f':..., 'n_vars':...} rows")
    p.add_argument("path", help="JSONL file, or - for stdin")
    p.add_argument("--workers", type=int, default=min(4, os.cpu_count() or 1))
    p.add_argument("--json", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("lp-debug", help="solve a JSON linear program, printing every pivot")
    p.add_argument("program", help="JSON file with 'objective' and 'constraints'")
    p.set_defaults(func=cmd_lp_debug)

    return ap


def main(argv=None) -> int:
    level = os.environ.get("GITSTAB_LOG", "").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
