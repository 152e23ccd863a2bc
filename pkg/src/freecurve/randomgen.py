"""Seeded generation of free numerical semigroups for randomized suites.

Semigroups are built free by construction: fix the tower quotients n_i,
then reconstruct each a_i from a sampled canonical ell-row.  All n_i >= 2,
so the basis-count identity is in force for every emitted semigroup.
"""

from __future__ import annotations

import math
import random

from .semigroup import free_structure

__all__ = ["random_free_semigroup", "random_suite"]


def random_free_semigroup(rng: random.Random, max_gen: int = 500, max_g: int = 5):
    """One free generator tuple with every generator bounded by max_gen."""
    while True:
        g = rng.randint(1, max_g)
        n = [rng.choice((2, 3)) for _ in range(g)]
        a0 = math.prod(n)
        if a0 > max_gen:
            continue
        a = [a0]
        # e_i = prod of the remaining quotients
        e = [math.prod(n[i:]) for i in range(g + 1)]
        ok = True
        for i in range(1, g + 1):
            # first ell entry >= 2 at level 1 and >= 1 beyond, with the
            # scaled sum >= 2: keeps the index sets non-degenerate (E and
            # every D nonempty, no unit generators in scaled prefixes)
            lo = 2 if i == 1 else 1
            for _ in range(40):
                row = [rng.randint(lo, 4)] + [rng.randrange(n[j]) for j in range(i - 1)]
                s = sum(l * (x // e[i - 1]) for l, x in zip(row, a))
                if s >= 2 and math.gcd(s, n[i - 1]) == 1 and e[i] * s <= max_gen:
                    a.append(e[i] * s)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        gens = tuple(a)
        fs = free_structure(gens)  # must never raise by construction
        assert fs.n == tuple(n)
        return gens


def random_suite(seed: int, count: int, max_gen: int = 500, max_g: int = 5):
    """Deterministic list of free generator tuples for a given seed."""
    rng = random.Random(seed)
    return [random_free_semigroup(rng, max_gen, max_g) for _ in range(count)]
