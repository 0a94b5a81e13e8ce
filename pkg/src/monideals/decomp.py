"""Irreducible decomposition, associated primes, and the witness-search oracle.

Two independent routes to the associated primes live here.  The primary
route decomposes the ideal into irreducible pure-power components by
recursive generator splitting and reads off the radicals.  The oracle
route enumerates every monomial h in a bounded box and collects the primes
realized as (I^t : h).  The two must always agree; the test suite treats
any disagreement as a hard failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arith import colon_monomial, intersect, power
from .core import (
    BudgetExceededError,
    ConsistencyError,
    DomainError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    _min_tuples,
    _same_ring,
    _tuple_divides,
    _wrap_ideal,
    grlex_key,
    require_proper_nonzero,
    sorted_primes,
)

DEFAULT_BOX_BUDGET = 1_000_000


@dataclass(frozen=True)
class IrreducibleComponent:
    """An irreducible monomial ideal (x_i^a, ...) as a var-to-exponent map."""

    ring: object
    pure_powers: tuple[tuple[int, int], ...]  # sorted (1-based index, exponent) pairs

    def __post_init__(self):
        if not self.pure_powers:
            raise DomainError("irreducible component needs at least one pure power")
        pairs = tuple(sorted(self.pure_powers))
        for i, a in pairs:
            self.ring._check_index(i)
            if a < 1:
                raise DomainError("pure-power exponents must be positive")
        object.__setattr__(self, "pure_powers", pairs)

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ring, frozenset(i for i, _ in self.pure_powers))

    def signature(self) -> tuple[int, ...]:
        sig = [0] * self.ring.nvars
        for i, a in self.pure_powers:
            sig[i - 1] = a
        return tuple(sig)

    def as_ideal(self) -> MonomialIdeal:
        gens = tuple(self.ring.variable(i, a) for i, a in self.pure_powers)
        return MonomialIdeal(self.ring, gens)

    def __str__(self) -> str:
        return str(self.as_ideal())


@dataclass(frozen=True)
class Decomposition:
    """A list of irreducible components whose intersection is the input ideal."""

    components: tuple[IrreducibleComponent, ...]
    irredundant: bool

    def intersection(self) -> MonomialIdeal:
        """Recompute the intersection of all components (the reconstruction check)."""
        if not self.components:
            raise DomainError("empty decomposition")
        ring = self.components[0].ring
        tups = (tuple(c.signature() for c in self.components))
        out = _component_gens(tups[0], ring.nvars)
        for sig in tups[1:]:
            out = _intersect_tuples(out, _component_gens(sig, ring.nvars))
        return _wrap_ideal(ring, out)


@dataclass(frozen=True)
class PrimeWitness:
    """A monomial h certifying p in Ass(R/J) through (J : h) = p."""

    prime: MonomialPrime
    witness: Monomial

    @classmethod
    def checked(cls, J: MonomialIdeal, prime: MonomialPrime, witness: Monomial) -> "PrimeWitness":
        """Construct after re-verifying (J : witness) == prime against J."""
        if colon_monomial(J, witness) != prime.as_ideal():
            raise ConsistencyError(f"({J} : {witness}) is not {prime}")
        return cls(prime, witness)


def _component_gens(sig, nvars):
    out = []
    for i, a in enumerate(sig):
        if a > 0:
            t = [0] * nvars
            t[i] = a
            out.append(tuple(t))
    return tuple(out)


def _intersect_tuples(A, B):
    lcms = [tuple(max(a, b) for a, b in zip(u, v)) for u in A for v in B]
    return _min_tuples(lcms)


def _split_signatures(gens: tuple, nvars: int) -> set:
    """All irreducible component signatures reached by generator splitting.

    A generator u with at least two support variables factors as
    u = x_i^a * w with disjoint supports, and then I = (I + (x_i^a)) ∩
    (I + (w)).  Recursing until every generator is a pure power yields a
    (possibly redundant) irreducible decomposition.  States are canonical
    minimal generator tuples; the visited set memoizes on that form.
    Because a state is an antichain, both children can be minimalized in
    one linear pass instead of a full rescan.
    """
    seen = {gens}
    stack = [gens]
    comps: set = set()
    while stack:
        g = stack.pop()
        pivot = None
        for u in g:
            if sum(1 for e in u if e > 0) >= 2:
                pivot = u
                break
        if pivot is None:
            sig = [0] * nvars
            for u in g:
                for i, e in enumerate(u):
                    if e > 0:
                        sig[i] = e
            comps.add(tuple(sig))
            continue
        i = next(k for k, e in enumerate(pivot) if e > 0)
        a = pivot[i]
        v = tuple(a if k == i else 0 for k in range(nvars))
        w = tuple(0 if k == i else e for k, e in enumerate(pivot))
        child1 = tuple(sorted([u for u in g if u[i] < a] + [v], key=grlex_key))
        child2 = tuple(
            sorted(
                [u for u in g if u != pivot and not _tuple_divides(w, u)] + [w],
                key=grlex_key,
            )
        )
        for child in (child1, child2):
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return comps


def _contains_component(gens, sig) -> bool:
    # ideal(gens) ⊆ component(sig): every generator is a multiple of some pure power
    for u in gens:
        if not any(a > 0 and u[i] >= a for i, a in enumerate(sig)):
            return False
    return True


def _drop_redundant(sigs: list, nvars: int) -> list:
    """Irredundancy pass: drop components containing the intersection of the rest.

    The irredundant irreducible decomposition of a monomial ideal is
    unique, so greedy removal in canonical order converges to it.  A cheap
    pairwise containment prefilter handles chains before the quadratic
    prefix/suffix scan.
    """
    sigs = sorted(sigs, key=grlex_key)

    def comp_contains(a, b):
        # component(a) ⊇ component(b): every pure power of b is a multiple of one in a
        return all(y == 0 or (0 < x <= y) for x, y in zip(a, b))

    kept = []
    for s in sigs:
        if not any(t != s and comp_contains(s, t) for t in sigs):
            kept.append(s)
    sigs = kept

    while len(sigs) > 1:
        gens = [_component_gens(s, nvars) for s in sigs]
        prefix = [None] * len(sigs)
        suffix = [None] * len(sigs)
        acc = gens[0]
        prefix[0] = acc
        for k in range(1, len(sigs)):
            acc = _intersect_tuples(acc, gens[k])
            prefix[k] = acc
        acc = gens[-1]
        suffix[-1] = acc
        for k in range(len(sigs) - 2, -1, -1):
            acc = _intersect_tuples(gens[k], acc)
            suffix[k] = acc
        dropped = None
        for k in range(len(sigs)):
            if k == 0:
                others = suffix[1]
            elif k == len(sigs) - 1:
                others = prefix[len(sigs) - 2]
            else:
                others = _intersect_tuples(prefix[k - 1], suffix[k + 1])
            if _contains_component(others, sigs[k]):
                dropped = k
                break
        if dropped is None:
            break
        del sigs[dropped]
    return sigs


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """The unique irredundant irreducible decomposition of a proper nonzero ideal."""
    require_proper_nonzero(I, "irreducible decomposition")
    nvars = I.ring.nvars
    sigs = _split_signatures(I.exps_tuple(), nvars)
    sigs = _drop_redundant(list(sigs), nvars)
    comps = tuple(
        IrreducibleComponent(
            I.ring, tuple((i + 1, a) for i, a in enumerate(sig) if a > 0)
        )
        for sig in sigs
    )
    return Decomposition(comps, irredundant=True)


def associated_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Ass(R/I): the distinct radicals of the irredundant irreducible components."""
    decomp = irreducible_decomposition(I)
    return frozenset(c.radical() for c in decomp.components)


def minimal_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Inclusion-minimal members of Ass(R/I)."""
    ass = associated_primes(I)
    return frozenset(
        p for p in ass if not any(q.vars < p.vars for q in ass)
    )


def embedded_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Associated primes that are not minimal."""
    ass = associated_primes(I)
    minimal = frozenset(p for p in ass if not any(q.vars < p.vars for q in ass))
    return ass - minimal


def height(I: MonomialIdeal) -> int:
    """Minimum height over the minimal primes."""
    return min(p.height for p in minimal_primes(I))


def is_unmixed(I: MonomialIdeal) -> bool:
    """True when every associated prime has the same height.

    Equivalently: no embedded primes and all minimal primes equicardinal.
    """
    heights = {p.height for p in associated_primes(I)}
    return len(heights) == 1


def witness_box(I: MonomialIdeal, t: int, It: MonomialIdeal | None = None) -> tuple[int, ...]:
    """Per-variable exponent caps for the witness search over I^t.

    For square-free I every divisor-minimal witness h satisfies
    deg_i(h) <= t-1 on the variables of the target prime and <= t
    elsewhere (dividing out stray x_i factors leaves a witness), so a
    uniform cap of t on the support is complete.  For general ideals the
    lcm of G(I^t) is a heuristic bound, validated against the
    decomposition route by the oracle cross-check.
    """
    if It is None:
        It = power(I, t)
    if I.is_squarefree:
        supp = I.support_union()
        return tuple(t if (i + 1) in supp else 0 for i in range(I.ring.nvars))
    caps = [0] * I.ring.nvars
    for u in It.exps_tuple():
        for i, e in enumerate(u):
            if e > caps[i]:
                caps[i] = e
    return tuple(caps)


def _box_cells(caps, budget):
    cells = 1
    for c in caps:
        cells *= c + 1
    if cells > budget:
        raise BudgetExceededError(
            f"witness box has {cells} cells, over the budget of {budget}", cells=cells
        )
    return sorted(itertools.product(*(range(c + 1) for c in caps)), key=grlex_key)


def _colon_prime_vars(gen_tups, h) -> frozenset[int] | None:
    """Variable set F when (J : h) is exactly the prime on F, else None.

    J is given by its minimal generators.  The colon is generated by the
    quotients u/gcd(u, h); it equals a monomial prime p_F iff no quotient
    is 1, every variable of F shows up as a bare quotient, and every
    quotient is divisible by some variable of F.
    """
    quots = [tuple(max(a - b, 0) for a, b in zip(u, h)) for u in gen_tups]
    F = set()
    for q in quots:
        total = sum(q)
        if total == 0:
            return None  # h lies in J, colon is the unit ideal
        if total == 1:
            F.add(q.index(1))
    if not F:
        return None
    for q in quots:
        if not any(q[i] > 0 for i in F):
            return None
    return frozenset(i + 1 for i in F)


def witness_for(
    I: MonomialIdeal,
    t: int,
    p: MonomialPrime,
    budget: int = DEFAULT_BOX_BUDGET,
) -> PrimeWitness | None:
    """Smallest monomial h (canonical order) with (I^t : h) = p, or None.

    Returns None exactly when p is not an associated prime of I^t, up to
    the completeness of the search box (see :func:`witness_box`).
    """
    require_proper_nonzero(I, "witness search")
    if t < 1:
        raise DomainError("power must be positive")
    _same_ring(I, p.as_ideal())
    It = power(I, t)
    caps = witness_box(I, t, It)
    gen_tups = It.exps_tuple()
    target = p.vars
    for h in _box_cells(caps, budget):
        if _colon_prime_vars(gen_tups, h) == target:
            return PrimeWitness.checked(It, p, Monomial(I.ring, h))
    return None


def witness_survey(
    I: MonomialIdeal, t: int, budget: int = DEFAULT_BOX_BUDGET
) -> tuple[PrimeWitness, ...]:
    """Every (prime, witness) pair realized over the whole search box."""
    require_proper_nonzero(I, "witness survey")
    if t < 1:
        raise DomainError("power must be positive")
    It = power(I, t)
    caps = witness_box(I, t, It)
    gen_tups = It.exps_tuple()
    found = []
    for h in _box_cells(caps, budget):
        F = _colon_prime_vars(gen_tups, h)
        if F is not None:
            prime = MonomialPrime(I.ring, F)
            found.append(PrimeWitness(prime, Monomial(I.ring, h)))
    return tuple(found)


def ass_by_witness_enumeration(
    I: MonomialIdeal, t: int, budget: int = DEFAULT_BOX_BUDGET
) -> frozenset[MonomialPrime]:
    """All primes realized as (I^t : h) over the witness box.

    Independent of the decomposition route; the two are cross-checked in
    the acceptance suite.
    """
    return frozenset(w.prime for w in witness_survey(I, t, budget))


def ass_of_disjoint_sum(I1: MonomialIdeal, I2: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Ass(R/(I1 + I2)) for ideals in disjoint variables: all sums p1 + p2.

    Computed from the two factor Ass sets by the product formula, for
    cross-checking against associated_primes(ideal_sum(I1, I2)).
    """
    _same_ring(I1, I2)
    if I1.support_union() & I2.support_union():
        raise DomainError("ideals must use disjoint sets of variables")
    require_proper_nonzero(I1, "disjoint-sum formula")
    require_proper_nonzero(I2, "disjoint-sum formula")
    ass1 = associated_primes(I1)
    ass2 = associated_primes(I2)
    ring = I1.ring
    return frozenset(
        MonomialPrime(ring, p.vars | q.vars) for p in ass1 for q in ass2
    )
