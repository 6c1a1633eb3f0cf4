#!/usr/bin/env python3
"""Show how stability verdicts depend on the chosen coordinates.

The stable / weakly-stable distinction is a statement about the torus of the
chosen coordinate system, so a linear change of variables can move a
hypersurface between the two classes.  Two classical quadric surfaces make
the point:

  * the diagonal quadric z0^2 + z1^2 + z2^2 + z3^2 sees every coordinate
    torus weight on a square monomial, which pins the cone to the origin:
    stable;
  * the hyperbolic quadric z0*z1 + z2*z3 (the same surface after a complex
    change of basis) is fixed by a 2-dimensional torus: weakly stable but
    not stable.

That pair is only equivalent over the complex numbers.  The second half of
the demonstration stays inside rational coordinates: the indefinite quadric
z0^2 + z1^2 + z2^2 - z3^2 is stable as written, and the rational basis
change z0 -> z0 + z3, z3 -> z0 - z3 rewrites it as 4*z0*z3 + z1^2 + z2^2,
which is again only weakly stable.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from gitstab.poly import parse_poly, print_poly
from gitstab.stability import classify_torus
from gitstab.vfield import substitute_linear

RATIONAL_FLIP = ((1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, -1))


def report(title, f):
    verdict = classify_torus(f)
    print(f"{title}: {print_poly(f)}")
    print(f"  class       = {verdict.classification}")
    print(f"  fixing dim  = {verdict.fixing_subspace_dim}")
    if verdict.destabilizer is not None:
        print(f"  destabilizer = {verdict.destabilizer} (mu = {verdict.certificate_mu})")
    print()
    return verdict


def main():
    diagonal = parse_poly("z0^2 + z1^2 + z2^2 + z3^2", 4)
    hyperbolic = parse_poly("z0*z1 + z2*z3", 4)
    v1 = report("diagonal quadric", diagonal)
    v2 = report("hyperbolic quadric (complex-equivalent)", hyperbolic)

    indefinite = parse_poly("z0^2 + z1^2 + z2^2 - z3^2", 4)
    flipped = substitute_linear(indefinite, RATIONAL_FLIP)
    v3 = report("indefinite quadric", indefinite)
    v4 = report("indefinite quadric after the rational basis change", flipped)

    ok = (
        v1.classification == "stable"
        and v2.classification == "weakly_stable_not_stable"
        and v2.fixing_subspace_dim == 2
        and v3.classification == "stable"
        and v4.classification == "weakly_stable_not_stable"
    )
    print("verdicts moved between classes under a change of basis:", "yes" if ok else "NO")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
