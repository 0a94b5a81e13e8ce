"""Seeded random instances for sweeps and cross-checks.

The generator is the stdlib Mersenne Twister (random.Random), which
produces identical draws for a given seed on every platform, so sweep
results and golden files reproduce bit for bit.  Draw order per generator:
degree first, then the variable choices.
"""

from __future__ import annotations

import random

from .core import DomainError, MonomialIdeal, RingContext, minimalize


def random_ideal(
    seed: int,
    nvars: int,
    ngens: int,
    maxdeg: int,
    squarefree: bool = False,
) -> MonomialIdeal:
    """A reproducible pseudo-random minimalized ideal.

    ``ngens`` generators are drawn and then minimalized, so the resulting
    ideal has at most ``ngens`` minimal generators.
    """
    return _random_ideal(random.Random(seed), nvars, ngens, maxdeg, squarefree)


def _random_ideal(
    rng: random.Random, nvars: int, ngens: int, maxdeg: int, squarefree: bool
) -> MonomialIdeal:
    if nvars < 1 or ngens < 1 or maxdeg < 1:
        raise DomainError("instance bounds must be positive")
    if squarefree and ngens > 2**nvars - 1:
        raise DomainError(
            f"cannot draw {ngens} distinct square-free generators from {nvars} variables"
        )
    ring = RingContext(nvars)
    gens = []
    for _ in range(ngens):
        if squarefree:
            d = rng.randint(1, min(maxdeg, nvars))
            chosen = rng.sample(range(nvars), d)
            exps = [0] * nvars
            for i in chosen:
                exps[i] = 1
        else:
            d = rng.randint(1, maxdeg)
            exps = [0] * nvars
            for _ in range(d):
                exps[rng.randrange(nvars)] += 1
        gens.append(ring.monomial(exps))
    return minimalize(gens, ring=ring)


def random_ideal_in_ring(
    rng: random.Random,
    ring: RingContext,
    ngens: int,
    maxdeg: int,
    squarefree: bool = False,
    variables=None,
) -> MonomialIdeal:
    """Random ideal inside an existing ring, optionally restricted to a
    subset of its variables (for disjoint-support constructions)."""
    pool = sorted(variables) if variables is not None else list(range(1, ring.nvars + 1))
    if not pool or ngens < 1 or maxdeg < 1:
        raise DomainError("instance bounds must be positive")
    gens = []
    for _ in range(ngens):
        if squarefree:
            d = rng.randint(1, min(maxdeg, len(pool)))
            chosen = rng.sample(pool, d)
            exps = [0] * ring.nvars
            for i in chosen:
                exps[i - 1] = 1
        else:
            d = rng.randint(1, maxdeg)
            exps = [0] * ring.nvars
            for _ in range(d):
                exps[rng.choice(pool) - 1] += 1
        gens.append(ring.monomial(exps))
    return minimalize(gens, ring=ring)


def random_disjoint_sets(
    rng: random.Random, nvars: int, parts: int, max_size: int
) -> list[frozenset[int]]:
    """Pairwise disjoint nonempty variable-index sets for prime products."""
    if parts * 1 > nvars:
        raise DomainError("too many parts for the variable count")
    indices = list(range(1, nvars + 1))
    rng.shuffle(indices)
    out = []
    pos = 0
    for k in range(parts):
        remaining = nvars - pos - (parts - k - 1)
        size = rng.randint(1, max(1, min(max_size, remaining)))
        out.append(frozenset(indices[pos : pos + size]))
        pos += size
    return out
