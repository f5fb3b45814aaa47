"""Survey rank-jumping degrees of a toric quotient over an integer grid.

Reads a job file containing a "matrix" section, computes the quasidegree
planes of the local cohomology of R/I_A once, then classifies every integer
point of a box around the origin.  Points on the arrangement are exactly
the degrees where the associated hypergeometric rank exceeds the
normalized volume.

Usage:
    python3 scripts/rank_jump_survey.py [--job jobs/rank_jump_demo.json]
        [--radius 2]
"""

import argparse
import itertools
import json
import pathlib
import time
from fractions import Fraction

from quasidegrees import (
    GradedPresentation,
    IntMatrix,
    normalized_volume,
    qlc_total,
    to_a_graded_ring,
    toric_ideal,
)
from quasidegrees.cli import format_plane

DEFAULT_JOB = pathlib.Path(__file__).resolve().parent.parent / "jobs" / "rank_jump_demo.json"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--job", default=str(DEFAULT_JOB), help="job file with a matrix")
    parser.add_argument("--radius", type=int, default=2, help="half-width of the grid")
    args = parser.parse_args()

    with open(args.job) as fh:
        data = json.load(fh)
    A = IntMatrix(tuple(tuple(row) for row in data["matrix"]))
    ring = to_a_graded_ring(A)
    print(f"matrix: {A.nrows} x {A.ncols}, variables {', '.join(ring.names)}")

    t0 = time.perf_counter()
    P = GradedPresentation.cyclic(ring, toric_ideal(A, ring))
    arrangement = qlc_total(P)
    elapsed = time.perf_counter() - t0
    vol = normalized_volume(A)
    print(f"normalized volume: {vol}")
    print(f"local cohomology arrangement ({elapsed:.2f}s):")
    if arrangement.is_empty:
        print("  empty (the quotient is Cohen-Macaulay; no degree jumps)")
    for plane in arrangement:
        print(f"  {format_plane(plane)}")

    r = args.radius
    grid = itertools.product(range(-r, r + 1), repeat=A.nrows)
    jumps = [
        beta
        for beta in grid
        if arrangement.contains_point(tuple(Fraction(c) for c in beta))
    ]
    total = (2 * r + 1) ** A.nrows
    print(f"grid [-{r}, {r}]^{A.nrows}: {len(jumps)} of {total} points jump")
    for beta in jumps:
        print(f"  RANK-JUMP at {beta}")


if __name__ == "__main__":
    main()
