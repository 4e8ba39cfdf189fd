"""Deterministic random lattice polytopes for property suites."""
from __future__ import annotations

import random

from .polytope import Polytope, build_polytope


def random_corpus(seed: int, count: int, dim: int, max_coord: int) -> list[Polytope]:
    """Seeded random full-dimensional lattice polytopes.

    Draws small vertex sets from the [0, max_coord] box, keeps the hulls
    that are full-dimensional, and skips duplicates.  The same arguments
    always reproduce the same list.
    """
    if dim not in (2, 3):
        raise ValueError("corpus dimension must be 2 or 3")
    if not 1 <= max_coord <= 5:
        raise ValueError("corpus coordinates must stay within 1..5")
    rng = random.Random(seed)
    out: list[Polytope] = []
    seen: set[tuple] = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10000 * count:
            raise RuntimeError("corpus generation did not converge")
        npts = rng.randint(dim + 1, dim + 4)
        pts = [tuple(rng.randint(0, max_coord) for _ in range(dim)) for _ in range(npts)]
        try:
            P = build_polytope(pts)
        except ValueError:
            continue
        key = P.vertices
        if key in seen:
            continue
        seen.add(key)
        out.append(P)
    return out
