"""Monomials, monomial ideals, and monomial primes over a fixed ring context.

All values are immutable after construction and safe to share across
threads.  Exponents are plain Python ints, so powers never overflow.

Generator sets are kept in a single canonical order everywhere: ascending
total degree, ties broken so that earlier variables sort first (graded
lexicographic with x1 > x2 > ...).  Two equal ideals therefore always have
identical representations, which is what the golden-file tests rely on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class ContextMismatchError(ValueError):
    """Operands belong to different ring contexts."""


class DomainError(ValueError):
    """Input lies outside an operation's domain (zero/unit ideal, bad index, ...)."""


class BudgetExceededError(RuntimeError):
    """A bounded search refused to run past its configured budget."""

    def __init__(self, message: str, cells: int | None = None):
        super().__init__(message)
        self.cells = cells


class HypothesisNotMetError(Exception):
    """A checker's hypothesis failed, so its conclusion was not evaluated."""


class TheoremViolationError(AssertionError):
    """A proved implication failed on a concrete instance (implementation bug)."""


class ConsistencyError(AssertionError):
    """Two independent routes to the same value disagreed."""


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingContext:
    """The ambient polynomial ring: a variable count plus variable names.

    The coefficient field carries no computational content here; only the
    variables matter.  Variable indices are 1-based throughout the public
    API, matching the x1..xn naming.
    """

    nvars: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.nvars, int) or self.nvars < 1:
            raise DomainError("ring context needs at least one variable")
        names = tuple(self.names)
        if not names:
            names = tuple(f"x{i}" for i in range(1, self.nvars + 1))
        if len(names) != self.nvars:
            raise DomainError(f"expected {self.nvars} variable names, got {len(names)}")
        if len(set(names)) != len(names):
            raise DomainError("variable names must be distinct")
        for n in names:
            if not _NAME_RE.match(n):
                raise DomainError(f"invalid variable name {n!r}")
        object.__setattr__(self, "names", names)

    def name(self, i: int) -> str:
        """Name of variable i (1-based)."""
        self._check_index(i)
        return self.names[i - 1]

    def index(self, name: str) -> int:
        """1-based index of a variable name."""
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise DomainError(f"unknown variable {name!r}") from None

    def _check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.nvars:
            raise DomainError(f"variable index {i} out of range 1..{self.nvars}")

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.nvars)

    def variable(self, i: int, exp: int = 1) -> "Monomial":
        self._check_index(i)
        exps = [0] * self.nvars
        exps[i - 1] = exp
        return Monomial(self, tuple(exps))

    def monomial(self, exps) -> "Monomial":
        return Monomial(self, tuple(exps))

    def monomial_from_string(self, text: str) -> "Monomial":
        """Parse "x1^2*x3" style monomial text; "1" is the unit monomial."""
        text = text.strip()
        exps = [0] * self.nvars
        if text == "1":
            return Monomial(self, tuple(exps))
        for part in text.split("*"):
            part = part.strip()
            if "^" in part:
                base, _, raw = part.partition("^")
                try:
                    e = int(raw)
                except ValueError:
                    raise DomainError(f"bad exponent in {part!r}") from None
            else:
                base, e = part, 1
            if e < 1:
                raise DomainError(f"exponent must be positive in {part!r}")
            exps[self.index(base.strip()) - 1] += e
        return Monomial(self, tuple(exps))

    def ideal(self, *gens) -> "MonomialIdeal":
        """Build a minimalized ideal from monomials or monomial strings."""
        parsed = [g if isinstance(g, Monomial) else self.monomial_from_string(g) for g in gens]
        return minimalize(parsed, ring=self)

    def zero_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, ())

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, (self.one(),))

    def prime(self, vars_or_names) -> "MonomialPrime":
        idx = frozenset(v if isinstance(v, int) else self.index(v) for v in vars_or_names)
        return MonomialPrime(self, idx)

    def maximal_prime(self) -> "MonomialPrime":
        return MonomialPrime(self, frozenset(range(1, self.nvars + 1)))


def grlex_key(exps) -> tuple:
    """Canonical sort key: ascending degree, then x1-major within a degree."""
    return (sum(exps), tuple(-e for e in exps))


def _tuple_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _min_tuples(tups) -> tuple:
    """Divisibility-minimal subset of exponent tuples, canonically sorted."""
    ordered = sorted(set(tups), key=grlex_key)
    kept: list = []
    for t in ordered:
        if not any(_tuple_divides(k, t) for k in kept):
            kept.append(t)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial as a dense exponent vector over its ring context."""

    ring: RingContext
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != self.ring.nvars:
            raise DomainError(
                f"exponent vector of length {len(self.exps)} in a {self.ring.nvars}-variable ring"
            )
        if any(not isinstance(e, int) or e < 0 for e in self.exps):
            raise DomainError("exponents must be nonnegative integers")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def degree_in(self, i: int) -> int:
        self.ring._check_index(i)
        return self.exps[i - 1]

    def support(self) -> frozenset[int]:
        """Indices of variables with positive exponent (1-based)."""
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e > 0)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        _same_ring(self, other)
        return _tuple_divides(self.exps, other.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_ring(self, other)
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_ring(self, other)
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_ring(self, other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def div_exact(self, other: "Monomial") -> "Monomial":
        """Quotient self/other; other must divide self."""
        _same_ring(self, other)
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def pow(self, k: int) -> "Monomial":
        if k < 0:
            raise DomainError("negative monomial power")
        return Monomial(self.ring, tuple(e * k for e in self.exps))

    def sort_key(self) -> tuple:
        return grlex_key(self.exps)

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(self.ring.names[i])
            elif e > 1:
                parts.append(f"{self.ring.names[i]}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _same_ring(a, b) -> None:
    if a.ring != b.ring:
        raise ContextMismatchError("operands live in different ring contexts")


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as its canonical minimal generating set.

    The zero ideal has an empty generator tuple; the unit ideal is
    generated by 1.  Constructors must pass an already-canonical tuple;
    use :func:`minimalize` or :meth:`RingContext.ideal` to build one from
    arbitrary generators.
    """

    ring: RingContext
    gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def contains(self, u: Monomial) -> bool:
        """Membership u in I: some minimal generator divides u."""
        _same_ring(self, u)
        return any(_tuple_divides(g.exps, u.exps) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        _same_ring(self, other)
        return all(self.contains(g) for g in other.gens)

    def support_union(self) -> frozenset[int]:
        """Union of the supports of all minimal generators."""
        out: set[int] = set()
        for g in self.gens:
            out.update(g.support())
        return frozenset(out)

    def exps_tuple(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exps for g in self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"


def _wrap_ideal(ring: RingContext, tups) -> MonomialIdeal:
    return MonomialIdeal(ring, tuple(Monomial(ring, t) for t in tups))


def minimalize(gens, ring: RingContext | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens`` with its canonical minimal generator set.

    Generators that another generator divides are dropped; the generated
    ideal is unchanged.  An empty generator set yields the zero ideal and
    then requires an explicit ring.
    """
    gens = list(gens)
    if not gens:
        if ring is None:
            raise DomainError("empty generator set needs an explicit ring context")
        return MonomialIdeal(ring, ())
    for g in gens:
        if ring is None:
            ring = g.ring
        elif g.ring != ring:
            raise ContextMismatchError("generators live in different ring contexts")
    return _wrap_ideal(ring, _min_tuples([g.exps for g in gens]))


@dataclass(frozen=True)
class MonomialPrime:
    """The monomial prime ideal generated by a set of variables.

    The empty variable set represents the zero prime, which only shows up
    as Ass(R/0); proper nonzero primes always carry at least one variable.
    """

    ring: RingContext
    vars: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "vars", frozenset(self.vars))
        for i in self.vars:
            self.ring._check_index(i)

    @property
    def height(self) -> int:
        return len(self.vars)

    def as_ideal(self) -> MonomialIdeal:
        gens = tuple(self.ring.variable(i) for i in sorted(self.vars))
        return MonomialIdeal(self.ring, gens)

    def without(self, i: int) -> "MonomialPrime":
        """The prime on the same variables minus variable i."""
        self.ring._check_index(i)
        return MonomialPrime(self.ring, self.vars - {i})

    def contains_monomial(self, u: Monomial) -> bool:
        _same_ring(self, u)
        return bool(u.support() & self.vars)

    def sort_key(self) -> tuple:
        return (len(self.vars), tuple(sorted(self.vars)))

    def __str__(self) -> str:
        if not self.vars:
            return "(0)"
        return "(" + ", ".join(self.ring.names[i - 1] for i in sorted(self.vars)) + ")"

    def __repr__(self) -> str:
        return f"MonomialPrime{self}"


def sorted_primes(primes) -> tuple[MonomialPrime, ...]:
    """Primes in canonical output order: by height, then variable indices."""
    return tuple(sorted(primes, key=lambda p: p.sort_key()))


def require_proper_nonzero(I: MonomialIdeal, what: str = "operation") -> None:
    if I.is_zero:
        raise DomainError(f"{what} is undefined for the zero ideal")
    if I.is_unit:
        raise DomainError(f"{what} is undefined for the unit ideal")
