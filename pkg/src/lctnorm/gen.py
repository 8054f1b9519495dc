"""Random lattice generation for property tests.

Meet-closing a random family of subsets of a powerset always yields a
lattice: meets are intersections, joins are the intersection of all common
supersets inside the family. The outputs range over distributive and
non-distributive shapes alike.
"""

from __future__ import annotations

import random

from .lattice import Lattice, lattice_from_order


def random_lattice(
    rng: random.Random, k: int | None = None, max_size: int = 14
) -> Lattice:
    """Meet-closure of random subsets of {1..k} (k <= 5), top included."""
    while True:
        kk = k if k is not None else rng.randint(2, 5)
        universe = (1 << kk) - 1
        masks = {universe}
        for _ in range(rng.randint(1, 7)):
            masks.add(rng.randint(0, universe))
        closed = set(masks)
        while True:
            extra = {a & b for a in closed for b in closed} - closed
            if not extra:
                break
            closed |= extra
        if len(closed) <= max_size:
            break
    elements = sorted(closed)
    names = tuple(format(m, f"0{kk}b") for m in elements)
    leq = [[(a & b) == a for b in elements] for a in elements]
    return lattice_from_order(names, leq)
