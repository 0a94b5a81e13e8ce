"""Seeded theorem sweeps, the fixed showcase instances, and the one-shot
reproduction suite with embedded golden values.

Each sweep draws ``count`` seeded random instances, skips those whose
hypotheses cannot be established (a non-result, never a refutation), and
collects violations.  A clean sweep is the empty violation tuple.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import (
    colon_monomial,
    deletion,
    ideal_product,
    ideal_sum,
    intersect,
    power,
)
from .core import (
    DomainError,
    HypothesisNotMetError,
    MonomialIdeal,
    MonomialPrime,
    RingContext,
    TheoremViolationError,
    sorted_primes,
)
from .decomp import (
    ass_by_witness_enumeration,
    ass_of_disjoint_sum,
    associated_primes,
    is_unmixed,
    minimal_primes,
    witness_survey,
)
from .instances import random_disjoint_sets, random_ideal_in_ring
from .properties import (
    STATUS_CERTIFIED,
    STATUS_FAILS,
    check_corner_divisibility,
    check_deletion_colon_equivalence,
    check_disjoint_prime_product_ntf,
    check_independence_bound,
    check_konig_ntf,
    check_transversal_witness_ntf,
    corner_elements,
    deletion_membership_counterexample,
    has_strong_persistence_up_to,
    is_ntf_up_to,
    property_report,
)
from .structure import (
    GraphSpec,
    beta1,
    cover_ideal,
    edge_ideal,
    is_konig,
    is_t_spread,
    transversal_polymatroidal,
)

# ---------------------------------------------------------------------------
# Fixed showcase instances with embedded golden values.

SPREAD_DEMO_GENS = (
    "x1*x3*x6", "x1*x3*x7", "x1*x4*x6", "x1*x4*x7",
    "x1*x5*x7", "x2*x4*x7", "x2*x5*x7",
)
SPREAD_DEMO_ASS = (
    (1, 2), (1, 7), (6, 7), (1, 4, 5), (3, 4, 7), (3, 4, 5),
)
SPREAD_DEMO_DELETION3_ASS = ((1, 2), (4, 5), (4, 7), (6, 7), (1, 7))
SPREAD_DEMO_WITNESS = "x1*x3*x6"
SPREAD_DEMO_TREE_EDGES = ((1, 2), (4, 5), (4, 7), (6, 7), (1, 7))
SPREAD_DEMO_BIPARTITE_EDGES = ((1, 3), (1, 4), (1, 5), (2, 4), (2, 5))


def spread_demo() -> tuple[RingContext, MonomialIdeal]:
    """The bundled 7-variable 2-spread demonstration ideal."""
    ring = RingContext(7)
    return ring, ring.ideal(*SPREAD_DEMO_GENS)


def triangle_edge_ideal() -> tuple[RingContext, MonomialIdeal]:
    ring = RingContext(3)
    return ring, ring.ideal("x1*x2", "x2*x3", "x1*x3")


# ---------------------------------------------------------------------------
# Sweeps.


@dataclass(frozen=True)
class SweepResult:
    suite: str
    instances: int
    checked: int
    skipped: int
    violations: tuple[str, ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def _rng(seed: int, k: int) -> random.Random:
    return random.Random(seed * 1_000_003 + k)


def sweep_disjoint_ass(seed: int = 0, count: int = 100, max_power: int = 0) -> SweepResult:
    """Ass of a sum of ideals in disjoint variables is the set of prime sums."""
    violations = []
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(4, 6)
        ring = RingContext(nvars)
        cut = rng.randint(1, nvars - 1)
        A = set(range(1, cut + 1))
        B = set(range(cut + 1, nvars + 1))
        I1 = random_ideal_in_ring(rng, ring, rng.randint(1, 3), 2, variables=A)
        I2 = random_ideal_in_ring(rng, ring, rng.randint(1, 3), 2, variables=B)
        by_formula = ass_of_disjoint_sum(I1, I2)
        by_decomposition = associated_primes(ideal_sum(I1, I2))
        if by_formula != by_decomposition:
            violations.append(f"instance {k}: {I1} + {I2}")
    return SweepResult("thm-disjoint-ass", count, count, 0, tuple(violations))


def sweep_deletion_colon(seed: int = 0, count: int = 100, max_power: int = 3) -> SweepResult:
    """Maximal-ideal membership passes through colon by hypothesis-verified variables."""
    violations = []
    checked = 0
    skipped = 0
    m_powers = max_power or 3
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 5)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 3, squarefree=True)
        for t in range(1, m_powers + 1):
            m = ring.maximal_prime()
            ys = []
            for i in range(1, nvars + 1):
                from .properties import ass_or_degenerate

                if m.without(i) not in ass_or_degenerate(power(deletion(I, i), t)):
                    ys.append(i)
            if not ys:
                skipped += 1
                continue
            try:
                check_deletion_colon_equivalence(I, t, ys)
                checked += 1
            except TheoremViolationError as exc:
                violations.append(f"instance {k}, t={t}: {exc}")
    return SweepResult("thm-deletion-colon", count, checked, skipped, tuple(violations))


def sweep_independence_bound(seed: int = 0, count: int = 100, max_power: int = 4) -> SweepResult:
    """When hypotheses hold and the maximal ideal is associated at power t,
    then t exceeds the independence number."""
    violations = []
    checked = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 5)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 3, squarefree=True)
        report = check_independence_bound(I, max_power or 4)
        checked += 1
        for v in report.violations:
            violations.append(f"instance {k}: {v}")
    return SweepResult("cor-beta1-bound", count, checked, 0, tuple(violations))


def sweep_konig_ntf(seed: int = 0, count: int = 100, max_power: int = 3) -> SweepResult:
    """Unmixed König ideals with verified hypotheses stay torsion-free."""
    violations = []
    checked = 0
    skipped = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 5)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 3, squarefree=True)
        try:
            verdict = check_konig_ntf(I, max_power or 3)
        except TheoremViolationError as exc:
            violations.append(f"instance {k}: {exc}")
            continue
        if verdict.status in (STATUS_CERTIFIED,):
            checked += 1
        elif verdict.status == STATUS_FAILS:
            violations.append(f"instance {k}: unexpected failure verdict")
        elif verdict.status == "holds_up_to":
            checked += 1
        else:
            skipped += 1
    return SweepResult("thm-konig-ntf", count, checked, skipped, tuple(violations))


def sweep_transversal_witness_ntf(seed: int = 0, count: int = 100, max_power: int = 3) -> SweepResult:
    """A generator meeting every minimal prime exactly once forces NTF."""
    violations = []
    checked = 0
    skipped = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 5)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 3, squarefree=True)
        mins = minimal_primes(I)
        candidate = None
        for g in I.gens:
            if all(len(g.support() & p.vars) == 1 for p in mins):
                candidate = g
                break
        if candidate is None:
            skipped += 1
            continue
        try:
            verdict = check_transversal_witness_ntf(I, candidate, max_power or 3)
        except TheoremViolationError as exc:
            violations.append(f"instance {k}: {exc}")
            continue
        if verdict.status in (STATUS_CERTIFIED, "holds_up_to"):
            checked += 1
        else:
            skipped += 1
    return SweepResult("thm-pp2-ntf", count, checked, skipped, tuple(violations))


def sweep_disjoint_prime_product_ntf(seed: int = 0, count: int = 100, max_power: int = 3) -> SweepResult:
    """Products of primes on disjoint variable sets are NTF up to the bound."""
    violations = []
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(4, 6)
        parts = rng.randint(2, 3)
        ring = RingContext(nvars)
        Fs = random_disjoint_sets(rng, nvars, parts, 3)
        try:
            check_disjoint_prime_product_ntf(ring, Fs, max_power or 3)
        except TheoremViolationError as exc:
            violations.append(f"instance {k}: {exc}")
    return SweepResult("thm-transversal-ntf", count, count, 0, tuple(violations))


def sweep_nondivisibility(seed: int = 0, count: int = 100, max_power: int = 2) -> SweepResult:
    """Witnesses of distinct primes never divide each other; neither do corners."""
    violations = []
    checked = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 4)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 2)
        for t in range(1, (max_power or 2) + 1):
            firsts: dict = {}
            for w in witness_survey(I, t):
                firsts.setdefault(w.prime, w.witness)
            items = sorted(firsts.items(), key=lambda kv: kv[0].sort_key())
            for a in range(len(items)):
                for b in range(len(items)):
                    if a != b and items[a][1].divides(items[b][1]):
                        violations.append(
                            f"instance {k}, t={t}: witness of {items[a][0]} divides witness of {items[b][0]}"
                        )
            report = check_corner_divisibility(I, t)
            for v in report.violations:
                if "divides corner" in v:
                    violations.append(f"instance {k}, t={t}: {v}")
            checked += 1
    return SweepResult("prop-corner-nondiv", count, checked, 0, tuple(violations))


def sweep_deletion_witness(seed: int = 0, count: int = 100, max_power: int = 2) -> SweepResult:
    """Witnesses not divisible by x_i restrict to witnesses of the deletion."""
    violations = []
    checked = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 4)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 2)
        for t in range(1, (max_power or 2) + 1):
            firsts: dict = {}
            for w in witness_survey(I, t):
                firsts.setdefault(w.prime, w.witness)
            for prime, h in firsts.items():
                for i in range(1, nvars + 1):
                    if h.exps[i - 1] != 0:
                        continue
                    restricted = colon_monomial(power(deletion(I, i), t), h)
                    if restricted != prime.without(i).as_ideal():
                        violations.append(
                            f"instance {k}, t={t}, x{i}: deletion colon is not {prime.without(i)}"
                        )
                    checked += 1
    return SweepResult("lemma-deletion-witness", count, checked, 0, tuple(violations))


def sweep_corner_divisibility(seed: int = 0, count: int = 100, max_power: int = 2) -> SweepResult:
    """Corners are divisible by every variable whose deletion hypothesis holds."""
    violations = []
    checked = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 4)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 2, squarefree=True)
        for t in range(1, (max_power or 2) + 1):
            report = check_corner_divisibility(I, t)
            checked += 1
            for v in report.violations:
                violations.append(f"instance {k}, t={t}: {v}")
    return SweepResult("cor-corner-div", count, checked, 0, tuple(violations))


def sweep_witness_degree(seed: int = 0, count: int = 100, max_power: int = 2) -> SweepResult:
    """For square-free ideals, witnesses stay below power t in every variable of
    their prime (the proof-supported degree bound)."""
    violations = []
    checked = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 4)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 3, squarefree=True)
        for t in range(1, (max_power or 2) + 1):
            for w in witness_survey(I, t):
                checked += 1
                for i in sorted(w.prime.vars):
                    if w.witness.exps[i - 1] > t - 1:
                        violations.append(
                            f"instance {k}, t={t}: witness {w.witness} of {w.prime}"
                            f" has degree {w.witness.exps[i - 1]} in x{i}"
                        )
    return SweepResult("prop-witness-degree", count, checked, 0, tuple(violations))


def sweep_minprime_witness(seed: int = 0, count: int = 100, max_power: int = 0) -> SweepResult:
    """Minimal primes of square-free ideals are cut out by the complementary
    variable product."""
    violations = []
    checked = 0
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(3, 5)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 4), 3, squarefree=True)
        for p in sorted_primes(minimal_primes(I)):
            h = ring.one()
            for i in range(1, nvars + 1):
                if i not in p.vars:
                    h = h * ring.variable(i)
            checked += 1
            if colon_monomial(I, h) != p.as_ideal():
                violations.append(f"instance {k}: ({I} : {h}) is not {p}")
    return SweepResult("prop-minprime-witness", count, checked, 0, tuple(violations))


def sweep_distributivity(seed: int = 0, count: int = 100, max_power: int = 0) -> SweepResult:
    """Intersection distributes over sum and sum over intersection."""
    violations = []
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(2, 5)
        ring = RingContext(nvars)
        ideals = [
            random_ideal_in_ring(rng, ring, rng.randint(1, 3), 3) for _ in range(3)
        ]
        I, J, L = ideals
        if intersect(I, ideal_sum(J, L)) != ideal_sum(intersect(I, J), intersect(I, L)):
            violations.append(f"instance {k}: intersection over sum")
        if ideal_sum(I, intersect(J, L)) != intersect(ideal_sum(I, J), ideal_sum(I, L)):
            violations.append(f"instance {k}: sum over intersection")
    return SweepResult("fact-distributivity", count, count, 0, tuple(violations))


def sweep_factor_ntf_equivalence(seed: int = 0, count: int = 100, max_power: int = 3) -> SweepResult:
    """Multiplying by a monomial neither creates nor destroys bounded NTF."""
    violations = []
    T = max_power or 3
    for k in range(count):
        rng = _rng(seed, k)
        nvars = rng.randint(2, 4)
        ring = RingContext(nvars)
        I = random_ideal_in_ring(rng, ring, rng.randint(2, 3), 2, squarefree=True)
        h = random_ideal_in_ring(rng, ring, 1, 2).gens[0]
        scaled = ideal_product(ring.ideal(h), I)
        plain_holds = is_ntf_up_to(I, T).status != STATUS_FAILS
        scaled_holds = is_ntf_up_to(scaled, T).status != STATUS_FAILS
        if plain_holds != scaled_holds:
            violations.append(
                f"instance {k}: NTF(I)={plain_holds} but NTF({h}*I)={scaled_holds}"
            )
    return SweepResult("fact-monomial-factor-ntf", count, count, 0, tuple(violations))


def sweep_oracle_agreement(
    seed: int = 0,
    count: int = 100,
    nvars: int = 5,
    ngens: int = 5,
    maxdeg: int = 2,
    powers: tuple[int, ...] = (1, 2),
    budget: int = 1_000_000,
) -> SweepResult:
    """Decomposition-based Ass against the witness-box enumeration."""
    violations = []
    checked = 0
    for k in range(count):
        rng = _rng(seed, k)
        n = rng.randint(2, nvars)
        ring = RingContext(n)
        I = random_ideal_in_ring(rng, ring, rng.randint(1, ngens), maxdeg)
        for t in powers:
            checked += 1
            by_decomposition = associated_primes(power(I, t))
            by_enumeration = ass_by_witness_enumeration(I, t, budget=budget)
            if by_decomposition != by_enumeration:
                only_d = sorted_primes(by_decomposition - by_enumeration)
                only_e = sorted_primes(by_enumeration - by_decomposition)
                violations.append(
                    f"instance {k}, t={t}: decomposition-only={list(map(str, only_d))}"
                    f" enumeration-only={list(map(str, only_e))}"
                )
    return SweepResult("oracle-agreement", count, checked, 0, tuple(violations))


def counterexample_suite(seed: int = 0, count: int = 1, max_power: int = 2) -> SweepResult:
    """The fixed deletion-membership counterexample, as a one-instance suite."""
    report = deletion_membership_counterexample()
    violations = []
    if not report.min_primes_ok:
        violations.append("minimal primes are not the eight edge primes")
    if not report.contraction_membership:
        violations.append("five-variable maximal ideal missing from the reduced square")
    if report.full_membership:
        violations.append("six-variable maximal ideal unexpectedly associated")
    return SweepResult("q413-counterexample", 1, 1, 0, tuple(violations))


SUITES = {
    "thm-disjoint-ass": sweep_disjoint_ass,
    "thm-deletion-colon": sweep_deletion_colon,
    "cor-beta1-bound": sweep_independence_bound,
    "thm-konig-ntf": sweep_konig_ntf,
    "thm-pp2-ntf": sweep_transversal_witness_ntf,
    "thm-transversal-ntf": sweep_disjoint_prime_product_ntf,
    "prop-corner-nondiv": sweep_nondivisibility,
    "lemma-deletion-witness": sweep_deletion_witness,
    "cor-corner-div": sweep_corner_divisibility,
    "prop-witness-degree": sweep_witness_degree,
    "prop-minprime-witness": sweep_minprime_witness,
    "q413-counterexample": counterexample_suite,
}


def run_suite(suite_id: str, seed: int = 0, count: int = 100, max_power: int | None = None) -> SweepResult:
    if suite_id not in SUITES:
        raise DomainError(
            f"unknown suite {suite_id!r}; choose from {', '.join(sorted(SUITES))}"
        )
    fn = SUITES[suite_id]
    kwargs = {"seed": seed, "count": count}
    if max_power is not None:
        kwargs["max_power"] = max_power
    return fn(**kwargs)


# ---------------------------------------------------------------------------
# One-shot reproduction of the fixed examples against embedded goldens.


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    expected: str
    actual: str


def _prime_set_str(ring: RingContext, primes) -> str:
    return "{" + ", ".join(str(p) for p in sorted_primes(primes)) + "}"


def reproduce_fixed_suite() -> list[CheckRecord]:
    """All showcase computations compared against their embedded golden values."""
    ring, I = spread_demo()
    checks: list[CheckRecord] = []

    def record(name, expected, actual):
        checks.append(CheckRecord(name, expected == actual, str(expected), str(actual)))

    golden_ass = frozenset(MonomialPrime(ring, frozenset(v)) for v in SPREAD_DEMO_ASS)
    record(
        "ass-of-demo-ideal",
        _prime_set_str(ring, golden_ass),
        _prime_set_str(ring, associated_primes(I)),
    )

    golden_del3 = frozenset(
        MonomialPrime(ring, frozenset(v)) for v in SPREAD_DEMO_DELETION3_ASS
    )
    record(
        "ass-of-demo-deletion-x3",
        _prime_set_str(ring, golden_del3),
        _prime_set_str(ring, associated_primes(deletion(I, 3))),
    )

    record(
        "deletion-x1-factors-as-monomial-times-prime",
        str(ideal_product(ring.ideal("x2*x7"), ring.ideal("x4", "x5"))),
        str(deletion(I, 1)),
    )

    bip = GraphSpec.from_edges(SPREAD_DEMO_BIPARTITE_EDGES)
    L = edge_ideal(bip, ring)
    record(
        "deletion-x6-factors-as-x7-times-edge-ideal",
        str(ideal_product(ring.ideal("x7"), L)),
        str(deletion(I, 6)),
    )
    record("bipartite-companion-graph", True, bip.is_bipartite)

    tree = GraphSpec.from_edges(SPREAD_DEMO_TREE_EDGES)
    record("deletion-x3-companion-graph-is-tree", True, tree.is_tree)
    record(
        "deletion-x3-is-tree-cover-ideal",
        str(deletion(I, 3)),
        str(cover_ideal(tree, ring)),
    )

    record("demo-is-2-spread", True, is_t_spread(I, 2))
    record("demo-not-unmixed", False, is_unmixed(I))

    v = ring.monomial_from_string(SPREAD_DEMO_WITNESS)
    hits = all(
        len(v.support() & p.vars) == 1 for p in minimal_primes(I)
    )
    record("witness-meets-each-min-prime-once", True, hits)

    size, _ = beta1(I)
    record("demo-independence-number", 2, size)

    verdict = check_transversal_witness_ntf(I, v, 3)
    record("demo-ntf-verdict", STATUS_CERTIFIED, verdict.status)

    strong = has_strong_persistence_up_to(I, 3)
    record("demo-strong-persistence-to-3", True, strong.ok)

    cx = deletion_membership_counterexample()
    record("counterexample-min-primes", True, cx.min_primes_ok)
    record("counterexample-reduced-membership", True, cx.contraction_membership)
    record("counterexample-full-membership", False, cx.full_membership)

    spot = check_disjoint_prime_product_ntf(RingContext(3), [{1, 2}, {3}], 3)
    record("prime-product-spot-check-a", STATUS_CERTIFIED, spot.status)
    spot2 = check_disjoint_prime_product_ntf(
        RingContext(6), [{1, 2}, {3, 4}, {5, 6}], 3
    )
    record("prime-product-spot-check-b", STATUS_CERTIFIED, spot2.status)

    return checks
