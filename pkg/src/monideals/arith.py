"""Ideal-level algebra: sum, product, power, intersection, colon, radical, deletion.

Everything here is a pure function over immutable values.  The heavy inner
loops run on raw exponent tuples and wrap the result exactly once.
"""

from __future__ import annotations

from .core import (
    ConsistencyError,
    DomainError,
    Monomial,
    MonomialIdeal,
    RingContext,
    _min_tuples,
    _same_ring,
    _tuple_divides,
    _wrap_ideal,
)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I + J, generated by the union of the generator sets."""
    _same_ring(I, J)
    return _wrap_ideal(I.ring, _min_tuples(I.exps_tuple() + J.exps_tuple()))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I*J, generated by all pairwise products of generators."""
    _same_ring(I, J)
    prods = [
        tuple(a + b for a, b in zip(u, v))
        for u in I.exps_tuple()
        for v in J.exps_tuple()
    ]
    return _wrap_ideal(I.ring, _min_tuples(prods))


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """I^t by repeated product, minimalizing after every multiplication.

    t = 0 returns the unit ideal by convention so that checker loops over
    powers stay uniform.
    """
    if not isinstance(t, int) or t < 0:
        raise DomainError("power exponent must be a nonnegative integer")
    if t == 0:
        return I.ring.unit_ideal()
    out = I
    for _ in range(t - 1):
        out = ideal_product(out, I)
    return out


def powers_up_to(I: MonomialIdeal, T: int) -> list[MonomialIdeal]:
    """[I^1, ..., I^T], each power reusing the previous product."""
    if T < 1:
        raise DomainError("power bound must be at least 1")
    out = [I]
    for _ in range(T - 1):
        out.append(ideal_product(out[-1], I))
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J, generated by pairwise lcms of generators."""
    _same_ring(I, J)
    lcms = [
        tuple(max(a, b) for a, b in zip(u, v))
        for u in I.exps_tuple()
        for v in J.exps_tuple()
    ]
    return _wrap_ideal(I.ring, _min_tuples(lcms))


def intersect_many(ideals, ring: RingContext | None = None) -> MonomialIdeal:
    """Intersection of a sequence of ideals; empty sequence gives the unit ideal."""
    ideals = list(ideals)
    if not ideals:
        if ring is None:
            raise DomainError("empty intersection needs an explicit ring context")
        return ring.unit_ideal()
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def colon_monomial(I: MonomialIdeal, h: Monomial) -> MonomialIdeal:
    """(I : h) = {r | r*h in I}, generated by u/gcd(u, h) over u in G(I)."""
    _same_ring(I, h)
    quots = [
        tuple(max(a - b, 0) for a, b in zip(u, h.exps))
        for u in I.exps_tuple()
    ]
    return _wrap_ideal(I.ring, _min_tuples(quots))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of (I : v) over the generators of J."""
    _same_ring(I, J)
    if J.is_zero:
        raise DomainError("colon by the zero ideal")
    if I.is_zero:
        return I
    if J.is_unit:
        return I
    out = colon_monomial(I, J.gens[0])
    for v in J.gens[1:]:
        out = intersect(out, colon_monomial(I, v))
    return out


def radical(I: MonomialIdeal) -> MonomialIdeal:
    """Square-free ideal with every positive exponent clamped to 1."""
    clamped = [tuple(1 if e > 0 else 0 for e in u) for u in I.exps_tuple()]
    return _wrap_ideal(I.ring, _min_tuples(clamped))


def deletion(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Deletion of I at variable i: drop every generator divisible by x_i.

    The ambient ring is unchanged; the variable stays in the context so the
    result can be compared against primes of the original ring.
    """
    I.ring._check_index(i)
    kept = tuple(g for g in I.gens if g.exps[i - 1] == 0)
    return MonomialIdeal(I.ring, kept)


def contraction(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Substitute x_i = 1 in every minimal generator and minimalize.

    Dual to :func:`deletion`: on a cover ideal this realizes deleting the
    vertex from the underlying graph, whereas deletion (x_i = 0) realizes
    it on an edge ideal.
    """
    I.ring._check_index(i)
    dropped = [
        tuple(0 if k == i - 1 else e for k, e in enumerate(u))
        for u in I.exps_tuple()
    ]
    return _wrap_ideal(I.ring, _min_tuples(dropped))


def colon_outside_support(I: MonomialIdeal, h: Monomial) -> MonomialIdeal:
    """(I : h) for h supported entirely off supp(G(I)); always equal to I.

    The equality is recomputed and checked rather than assumed, so a broken
    colon implementation cannot hide behind this shortcut.
    """
    _same_ring(I, h)
    if h.support() & I.support_union():
        raise DomainError("monomial support meets the ideal's support")
    result = colon_monomial(I, h)
    if result != I:
        raise ConsistencyError("colon by an outside-support monomial changed the ideal")
    return I
