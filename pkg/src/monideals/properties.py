"""Bounded power-by-power property checkers and structural certificates.

Unbounded "for all powers" claims are not decidable by sweep, so every
checker verifies its property up to an explicit bound T and records that
bound.  Where a structural certificate applies (principal ideals, monomial
primes, monomial factors, bipartite edge or cover ideals, products of
disjoint primes) the verdict upgrades from "holds_up_to" to "certified",
which is the only way a report ever claims a property for all powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import (
    colon_ideal,
    colon_monomial,
    contraction,
    deletion,
    ideal_product,
    power,
)
from .core import (
    BudgetExceededError,
    ConsistencyError,
    DomainError,
    HypothesisNotMetError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    RingContext,
    TheoremViolationError,
    grlex_key,
    require_proper_nonzero,
    sorted_primes,
)
from .decomp import (
    DEFAULT_BOX_BUDGET,
    associated_primes,
    minimal_primes,
    witness_box,
)
from .structure import (
    GraphSpec,
    beta1,
    cover_ideal,
    is_konig,
    transversal_polymatroidal,
)

DEFAULT_MAX_POWER = 4
POWER_GENS_BUDGET = 20_000

STATUS_HOLDS = "holds_up_to"
STATUS_FAILS = "fails_at"
STATUS_CERTIFIED = "certified"
STATUS_HYPOTHESIS = "hypothesis_not_met"

NTF = "normally-torsion-free"
PERSISTENCE = "persistence"
STRONG_PERSISTENCE = "strong-persistence"
SYMBOLIC_STRONG_PERSISTENCE = "symbolic-strong-persistence"
NORMALITY = "normal"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one bounded property check."""

    property: str
    status: str
    bound: int
    fail_power: int | None = None
    fail_prime: MonomialPrime | None = None
    fail_monomial: Monomial | None = None
    certificate: str | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (STATUS_HOLDS, STATUS_CERTIFIED)


@dataclass(frozen=True)
class AssSnapshot:
    power: int
    primes: tuple[MonomialPrime, ...]


@dataclass(frozen=True)
class PropertyReport:
    """All property verdicts for one ideal, with per-power Ass snapshots."""

    ideal: MonomialIdeal
    max_power: int
    verdicts: tuple[Verdict, ...]
    snapshots: tuple[AssSnapshot, ...]


@dataclass(frozen=True)
class CornerSet:
    """All corner elements of I^t inside the witness box."""

    power: int
    corners: tuple[Monomial, ...]

    @classmethod
    def checked(cls, It: MonomialIdeal, t: int, corners) -> "CornerSet":
        """Construct after rechecking the corner property for every element."""
        names = It.ring.nvars
        for z in corners:
            if It.contains(z):
                raise ConsistencyError(f"{z} lies in the ideal, not a corner")
            for i in range(1, names + 1):
                if not It.contains(It.ring.variable(i) * z):
                    raise ConsistencyError(f"x{i}*{z} escapes the ideal")
        return cls(t, tuple(corners))


class PowerCache:
    """Shared powers and Ass snapshots of one ideal across checkers."""

    def __init__(self, I: MonomialIdeal, max_gens: int = POWER_GENS_BUDGET):
        require_proper_nonzero(I, "property check")
        self.ideal = I
        self.max_gens = max_gens
        self._powers = [I]
        self._ass: dict[int, frozenset[MonomialPrime]] = {}

    def power(self, k: int) -> MonomialIdeal:
        while len(self._powers) < k:
            nxt = ideal_product(self._powers[-1], self.ideal)
            if len(nxt.gens) > self.max_gens:
                raise BudgetExceededError(
                    f"power {len(self._powers) + 1} has {len(nxt.gens)} generators,"
                    f" over the budget of {self.max_gens}"
                )
            self._powers.append(nxt)
        return self._powers[k - 1]

    def ass(self, k: int) -> frozenset[MonomialPrime]:
        if k not in self._ass:
            self._ass[k] = associated_primes(self.power(k))
        return self._ass[k]

    def snapshots(self, T: int) -> tuple[AssSnapshot, ...]:
        return tuple(AssSnapshot(k, sorted_primes(self.ass(k))) for k in range(1, T + 1))


def ass_or_degenerate(J: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Ass(R/J) extended to the zero ideal ({zero prime}) and unit ideal (empty)."""
    if J.is_zero:
        return frozenset({MonomialPrime(J.ring, frozenset())})
    if J.is_unit:
        return frozenset()
    return associated_primes(J)


def ntf_certificate(I: MonomialIdeal) -> str | None:
    """A structural reason why Ass(R/I^k) stays inside Ass(R/I) for every k.

    Recognized shapes, each a classically normally torsion-free family:
    principal ideals, monomial primes, a monomial times a certified ideal,
    edge ideals of bipartite graphs, and cover ideals of bipartite graphs
    (a square-free unmixed-height-2 ideal is the cover ideal of the graph
    whose edges are its minimal primes).
    """
    if I.is_zero or I.is_unit:
        return None
    if len(I.gens) == 1:
        return "principal"
    if all(g.degree == 1 for g in I.gens):
        return "monomial-prime"
    common = I.gens[0]
    for g in I.gens[1:]:
        common = common.gcd(g)
    if not common.is_unit:
        inner = MonomialIdeal(
            I.ring, tuple(g.div_exact(common) for g in I.gens)
        )
        inner_cert = ntf_certificate(inner)
        if inner_cert:
            return f"monomial-factor({inner_cert})"
        return None
    if not I.is_squarefree:
        return None
    if all(g.degree == 2 for g in I.gens):
        graph = GraphSpec.from_edges([tuple(g.support()) for g in I.gens])
        if graph.is_bipartite:
            return "bipartite-edge-ideal"
    mins = minimal_primes(I)
    if all(p.height == 2 for p in mins):
        graph = GraphSpec.from_edges([tuple(p.vars) for p in mins])
        if graph.is_bipartite:
            return "bipartite-cover-ideal"
    return None


def deletion_hypothesis_status(
    I: MonomialIdeal, i: int, T: int
) -> tuple[str, int | None, str]:
    """Status of "the maximal ideal minus x_i never lies in Ass((I \\ x_i)^t)".

    Returns (status, fail_power, detail).  "certified" means the deletion
    carries a structural NTF certificate and the target prime misses its
    first Ass, so the condition holds for every power; "holds_up_to" means
    it was checked power by power up to T only.
    """
    J = deletion(I, i)
    target = I.ring.maximal_prime().without(i)
    if J.is_zero:
        if not target.vars:
            return (STATUS_FAILS, 1, "deletion is zero and the target is the zero prime")
        return (STATUS_CERTIFIED, None, "deletion is the zero ideal")
    cert = ntf_certificate(J)
    if cert is not None and target not in ass_or_degenerate(J):
        return (STATUS_CERTIFIED, None, cert)
    cache = PowerCache(J)
    for t in range(1, T + 1):
        if target in ass_or_degenerate(cache.power(t)):
            return (STATUS_FAILS, t, f"target prime associated to power {t}")
    return (STATUS_HOLDS, None, "checked power by power")


def is_ntf_up_to(I: MonomialIdeal, T: int, cache: PowerCache | None = None) -> Verdict:
    """Check Ass(R/I^k) ⊆ Ass(R/I) for k = 1..T, upgrading via certificates."""
    if T < 1:
        raise DomainError("power bound must be at least 1")
    cache = cache or PowerCache(I)
    base = cache.ass(1)
    for k in range(2, T + 1):
        extra = sorted_primes(cache.ass(k) - base)
        if extra:
            return Verdict(NTF, STATUS_FAILS, T, fail_power=k, fail_prime=extra[0])
    cert = ntf_certificate(I)
    if cert:
        return Verdict(NTF, STATUS_CERTIFIED, T, certificate=cert)
    return Verdict(NTF, STATUS_HOLDS, T)


def has_persistence_up_to(
    I: MonomialIdeal, T: int, cache: PowerCache | None = None
) -> Verdict:
    """Check Ass(R/I^k) ⊆ Ass(R/I^{k+1}) for k = 1..T."""
    if T < 1:
        raise DomainError("power bound must be at least 1")
    cache = cache or PowerCache(I)
    for k in range(1, T + 1):
        lost = sorted_primes(cache.ass(k) - cache.ass(k + 1))
        if lost:
            return Verdict(PERSISTENCE, STATUS_FAILS, T, fail_power=k, fail_prime=lost[0])
    return Verdict(PERSISTENCE, STATUS_HOLDS, T)


def has_strong_persistence_up_to(
    I: MonomialIdeal, T: int, cache: PowerCache | None = None
) -> Verdict:
    """Check (I^{k+1} : I) = I^k for k = 1..T."""
    if T < 1:
        raise DomainError("power bound must be at least 1")
    cache = cache or PowerCache(I)
    for k in range(1, T + 1):
        quotient = colon_ideal(cache.power(k + 1), I)
        expected = cache.power(k)
        if quotient != expected:
            extra = next(g for g in quotient.gens if not expected.contains(g))
            return Verdict(
                STRONG_PERSISTENCE, STATUS_FAILS, T, fail_power=k, fail_monomial=extra
            )
    return Verdict(STRONG_PERSISTENCE, STATUS_HOLDS, T)


def has_symbolic_strong_persistence_up_to(I: MonomialIdeal, T: int) -> Verdict:
    """Check (I^{(k+1)} : I^{(1)}) = I^{(k)} for k = 1..T."""
    from .structure import symbolic_power

    if T < 1:
        raise DomainError("power bound must be at least 1")
    symbolic = {k: symbolic_power(I, k) for k in range(1, T + 2)}
    for k in range(1, T + 1):
        quotient = colon_ideal(symbolic[k + 1], symbolic[1])
        if quotient != symbolic[k]:
            extra = next(
                (g for g in quotient.gens if not symbolic[k].contains(g)),
                None,
            )
            return Verdict(
                SYMBOLIC_STRONG_PERSISTENCE,
                STATUS_FAILS,
                T,
                fail_power=k,
                fail_monomial=extra,
            )
    return Verdict(SYMBOLIC_STRONG_PERSISTENCE, STATUS_HOLDS, T)


def corner_elements(
    I: MonomialIdeal,
    t: int,
    budget: int = DEFAULT_BOX_BUDGET,
    cache: PowerCache | None = None,
) -> CornerSet:
    """All monomials z in the witness box with z outside I^t but x_i*z inside for all i.

    Cross-asserts against the decomposition route: corners exist exactly
    when the graded maximal ideal is associated to I^t.
    """
    require_proper_nonzero(I, "corner search")
    if t < 1:
        raise DomainError("power must be positive")
    cache = cache or PowerCache(I)
    It = cache.power(t)
    caps = witness_box(I, t, It)
    cells = 1
    for c in caps:
        cells *= c + 1
    if cells > budget:
        raise BudgetExceededError(
            f"corner box has {cells} cells, over the budget of {budget}", cells=cells
        )
    gen_tups = It.exps_tuple()
    nvars = I.ring.nvars
    corners = []
    import itertools

    for z in itertools.product(*(range(c + 1) for c in caps)):
        if any(all(a <= b for a, b in zip(u, z)) for u in gen_tups):
            continue  # z already inside the power
        bumped_in = True
        for i in range(nvars):
            zz = tuple(e + 1 if k == i else e for k, e in enumerate(z))
            if not any(all(a <= b for a, b in zip(u, zz)) for u in gen_tups):
                bumped_in = False
                break
        if bumped_in:
            corners.append(Monomial(I.ring, z))
    corners.sort(key=lambda m: grlex_key(m.exps))
    maximal_associated = I.ring.maximal_prime() in cache.ass(t)
    if bool(corners) != maximal_associated:
        raise ConsistencyError(
            "corner search and decomposition disagree about the maximal ideal"
        )
    return CornerSet.checked(It, t, corners)


def check_deletion_colon_equivalence(
    I: MonomialIdeal, t: int, ys
) -> tuple[bool, bool]:
    """The two maximal-ideal memberships that the deletion-colon rule equates.

    Requires, for each y in ys, that the maximal ideal minus y is not
    associated to (I \\ y)^t; otherwise raises HypothesisNotMetError.
    Returns (m in Ass(R/I^t), m in Ass(R/(I^t : prod ys))); a mismatch is
    an implementation bug and raises TheoremViolationError.
    """
    require_proper_nonzero(I, "deletion-colon check")
    if t < 1:
        raise DomainError("power must be positive")
    ys = list(ys)
    if len(set(ys)) != len(ys):
        raise DomainError("deletion variables must be distinct")
    m = I.ring.maximal_prime()
    for i in ys:
        J = deletion(I, i)
        if m.without(i) in ass_or_degenerate(power(J, t)):
            raise HypothesisNotMetError(
                f"maximal ideal minus x{i} is associated to the deletion's power {t}"
            )
    It = power(I, t)
    lhs = m in ass_or_degenerate(It)
    prod = I.ring.one()
    for i in ys:
        prod = prod * I.ring.variable(i)
    rhs = m in ass_or_degenerate(colon_monomial(It, prod))
    if lhs != rhs:
        raise TheoremViolationError(
            f"deletion-colon equivalence failed on {I} at power {t} with ys={ys}"
        )
    return (lhs, rhs)


@dataclass(frozen=True)
class IndependenceBoundReport:
    """Power-by-power record of the independence lower bound on corner powers."""

    ideal: MonomialIdeal
    independence_number: int
    witness_gens: tuple[Monomial, ...]
    entries: tuple[tuple[int, str, bool], ...]  # (power, hypothesis status, m associated)
    violations: tuple[str, ...]


def check_independence_bound(I: MonomialIdeal, T: int) -> IndependenceBoundReport:
    """Whenever the deletion hypotheses hold at power t and the maximal ideal is
    associated to I^t, assert t >= beta1(I) + 1."""
    if not I.is_squarefree:
        raise DomainError("the independence bound applies to square-free ideals")
    size, witness = beta1(I)
    vars_used = sorted(set().union(*(g.support() for g in witness)))
    m = I.ring.maximal_prime()
    cache = PowerCache(I)
    deletion_caches = {i: PowerCache(deletion(I, i)) if not deletion(I, i).is_zero else None for i in vars_used}
    entries = []
    violations = []
    for t in range(1, T + 1):
        hyp_ok = True
        for i in vars_used:
            dcache = deletion_caches[i]
            dass = (
                frozenset({MonomialPrime(I.ring, frozenset())})
                if dcache is None
                else ass_or_degenerate(dcache.power(t))
            )
            if m.without(i) in dass:
                hyp_ok = False
                break
        m_in = m in cache.ass(t)
        entries.append((t, "met" if hyp_ok else "not_met", m_in))
        if hyp_ok and m_in and t < size + 1:
            violations.append(
                f"maximal ideal associated at power {t} < beta1+1 = {size + 1}"
            )
    return IndependenceBoundReport(I, size, witness, tuple(entries), tuple(violations))


def check_konig_ntf(I: MonomialIdeal, T: int) -> Verdict:
    """Unmixed König ideals with verified deletion hypotheses must be NTF.

    Hypotheses that cannot be established return a distinguished
    hypothesis_not_met verdict; a failed conclusion under established
    hypotheses raises TheoremViolationError.
    """
    if not I.is_squarefree:
        raise DomainError("König checks apply to square-free ideals")
    from .decomp import is_unmixed

    if not is_konig(I):
        return Verdict(NTF, STATUS_HYPOTHESIS, T, note="not a König ideal")
    if not is_unmixed(I):
        return Verdict(NTF, STATUS_HYPOTHESIS, T, note="not unmixed")
    _, witness = beta1(I)
    vars_used = sorted(set().union(*(g.support() for g in witness)))
    statuses = {i: deletion_hypothesis_status(I, i, T) for i in vars_used}
    for i, (status, k, detail) in statuses.items():
        if status == STATUS_FAILS:
            return Verdict(
                NTF,
                STATUS_HYPOTHESIS,
                T,
                note=f"deletion hypothesis fails at x{i}, power {k}",
            )
    ntf = is_ntf_up_to(I, T)
    if ntf.status == STATUS_FAILS:
        raise TheoremViolationError(
            f"König ideal {I} lost torsion-freeness at power {ntf.fail_power}"
        )
    witness_note = "independent set: " + ", ".join(str(g) for g in witness)
    if all(s[0] == STATUS_CERTIFIED for s in statuses.values()):
        return Verdict(NTF, STATUS_CERTIFIED, T, certificate="konig", note=witness_note)
    return Verdict(NTF, STATUS_HOLDS, T, note=witness_note)


def check_transversal_witness_ntf(I: MonomialIdeal, v: Monomial, T: int) -> Verdict:
    """A square-free v in I meeting every minimal prime in exactly one variable,
    with verified deletion hypotheses on supp(v), forces NTF."""
    if not I.is_squarefree:
        raise DomainError("transversal-witness checks apply to square-free ideals")
    if not v.is_squarefree:
        raise DomainError("the witness monomial must be square-free")
    if not I.contains(v):
        raise DomainError("the witness monomial must lie in the ideal")
    for p in sorted_primes(minimal_primes(I)):
        overlap = v.support() & p.vars
        if len(overlap) != 1:
            return Verdict(
                NTF,
                STATUS_HYPOTHESIS,
                T,
                note=f"witness meets {p} in {len(overlap)} variables",
            )
    statuses = {i: deletion_hypothesis_status(I, i, T) for i in sorted(v.support())}
    for i, (status, k, detail) in statuses.items():
        if status == STATUS_FAILS:
            return Verdict(
                NTF,
                STATUS_HYPOTHESIS,
                T,
                note=f"deletion hypothesis fails at x{i}, power {k}",
            )
    ntf = is_ntf_up_to(I, T)
    if ntf.status == STATUS_FAILS:
        raise TheoremViolationError(
            f"transversal witness {v} on {I}: torsion appeared at power {ntf.fail_power}"
        )
    if all(s[0] == STATUS_CERTIFIED for s in statuses.values()):
        return Verdict(
            NTF, STATUS_CERTIFIED, T, certificate="transversal-witness", note=f"witness {v}"
        )
    return Verdict(NTF, STATUS_HOLDS, T, note=f"witness {v}")


def check_disjoint_prime_product_ntf(ring: RingContext, Fs, T: int) -> Verdict:
    """Products of primes on pairwise disjoint variable sets are NTF.

    Also exercises the recursion the certificate rests on: deleting a
    variable keeps the ideal a product of primes, with that variable
    removed from its own factor.
    """
    Fs = [frozenset(F) for F in Fs]
    for a in range(len(Fs)):
        for b in range(a + 1, len(Fs)):
            if Fs[a] & Fs[b]:
                raise DomainError("variable sets overlap; the product is not square-free")
    I = transversal_polymatroidal(ring, Fs)
    for j, F in enumerate(Fs):
        for i in sorted(F):
            reduced = [G if k != j else G - {i} for k, G in enumerate(Fs)]
            if any(not G for G in reduced):
                expected = ring.zero_ideal()
            else:
                expected = transversal_polymatroidal(ring, reduced)
            if deletion(I, i) != expected:
                raise ConsistencyError(
                    f"deletion at x{i} is not the reduced prime product"
                )
    ntf = is_ntf_up_to(I, T)
    if ntf.status == STATUS_FAILS:
        raise TheoremViolationError(
            f"disjoint prime product {I}: torsion appeared at power {ntf.fail_power}"
        )
    return Verdict(NTF, STATUS_CERTIFIED, T, certificate="disjoint-prime-product")


@dataclass(frozen=True)
class CornerDivisibilityReport:
    """Corner elements of I^t against the per-variable deletion hypotheses."""

    ideal: MonomialIdeal
    power: int
    corners: CornerSet
    hypothesis_vars: tuple[int, ...]
    violations: tuple[str, ...]


def check_corner_divisibility(
    I: MonomialIdeal, t: int, budget: int = DEFAULT_BOX_BUDGET
) -> CornerDivisibilityReport:
    """Every corner of I^t is divisible by each variable whose deletion
    hypothesis holds at power t; corners are pairwise non-dividing."""
    corners = corner_elements(I, t, budget=budget)
    m = I.ring.maximal_prime()
    hyp_vars = []
    for i in range(1, I.ring.nvars + 1):
        J = deletion(I, i)
        if m.without(i) not in ass_or_degenerate(power(J, t)):
            hyp_vars.append(i)
    violations = []
    for i in hyp_vars:
        for z in corners.corners:
            if z.exps[i - 1] == 0:
                violations.append(f"corner {z} is not divisible by x{i}")
    cs = corners.corners
    for a in range(len(cs)):
        for b in range(len(cs)):
            if a != b and cs[a].divides(cs[b]):
                violations.append(f"corner {cs[a]} divides corner {cs[b]}")
    return CornerDivisibilityReport(I, t, corners, tuple(hyp_vars), tuple(violations))


@dataclass(frozen=True)
class CounterexampleReport:
    """The fixed 6-vertex cover-ideal counterexample to lifting maximal-ideal
    membership from a vertex deletion back to the full graph."""

    ideal: MonomialIdeal
    min_primes_expected: tuple[MonomialPrime, ...]
    min_primes_ok: bool
    contraction_membership: bool  # (x1..x5) in Ass(R/(J with x6 set to 1)^2)
    full_membership: bool  # (x1..x6) in Ass(R/J^2)
    deletion_membership: bool  # same prime against the x6=0 deletion, for the record
    holds: bool


COUNTEREXAMPLE_EDGES = (
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (5, 6), (4, 6),
)


def deletion_membership_counterexample() -> CounterexampleReport:
    """Build the fixed counterexample instance and evaluate its two claims.

    The vertex removal is realized by substituting x6 = 1 in the cover
    ideal (equivalently, taking the cover ideal of the graph minus the
    vertex); setting x6 = 0 instead drops every cover through vertex 6 and
    provably kills the membership, so that reading is reported alongside.
    """
    ring = RingContext(6)
    g = GraphSpec.from_edges(COUNTEREXAMPLE_EDGES)
    J = cover_ideal(g, ring)
    expected_min = sorted_primes(
        MonomialPrime(ring, frozenset(e)) for e in COUNTEREXAMPLE_EDGES
    )
    min_ok = sorted_primes(minimal_primes(J)) == expected_min
    reduced = contraction(J, 6)
    if reduced != cover_ideal(g.without_vertex(6), ring):
        raise ConsistencyError("contraction disagrees with the vertex-deleted cover ideal")
    m5 = MonomialPrime(ring, frozenset(range(1, 6)))
    m6 = ring.maximal_prime()
    contraction_membership = m5 in associated_primes(power(reduced, 2))
    full_membership = m6 in associated_primes(power(J, 2))
    deletion_membership = m5 in ass_or_degenerate(power(deletion(J, 6), 2))
    return CounterexampleReport(
        ideal=J,
        min_primes_expected=expected_min,
        min_primes_ok=min_ok,
        contraction_membership=contraction_membership,
        full_membership=full_membership,
        deletion_membership=deletion_membership,
        holds=min_ok and contraction_membership and not full_membership,
    )


def property_report(I: MonomialIdeal, T: int = DEFAULT_MAX_POWER) -> PropertyReport:
    """Run every bounded property checker on I and bundle the verdicts."""
    cache = PowerCache(I)
    verdicts = [
        is_ntf_up_to(I, T, cache),
        has_persistence_up_to(I, T, cache),
        has_strong_persistence_up_to(I, T, cache),
        has_symbolic_strong_persistence_up_to(I, T),
    ]
    ntf = verdicts[0]
    if ntf.status == STATUS_CERTIFIED:
        verdicts.append(
            Verdict(
                NORMALITY,
                STATUS_CERTIFIED,
                T,
                certificate="implied-by-ntf-certificate",
                note=f"normally torsion-free via {ntf.certificate}",
            )
        )
    return PropertyReport(I, T, tuple(verdicts), cache.snapshots(T))
