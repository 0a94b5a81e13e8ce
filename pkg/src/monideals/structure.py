"""Combinatorial structure on generators: independence, König ideals, graph
ideals, transversal prime products, spread recognition, symbolic powers."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ideal_product, intersect_many, power
from .core import (
    BudgetExceededError,
    DomainError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    RingContext,
    minimalize,
    require_proper_nonzero,
    sorted_primes,
)
from .decomp import irreducible_decomposition, minimal_primes

BETA1_MAX_GENS = 30
BETA1_MAX_NODES = 500_000


@dataclass(frozen=True)
class SupportHypergraph:
    """The supports of the minimal generators, in canonical generator order."""

    nvars: int
    edges: tuple[frozenset[int], ...]

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> "SupportHypergraph":
        require_proper_nonzero(I, "support hypergraph")
        return cls(I.ring.nvars, tuple(g.support() for g in I.gens))


@dataclass(frozen=True)
class GraphSpec:
    """A finite simple graph with hashable vertex labels.

    Integer labels map directly to variable indices (vertex k is x_k);
    string labels resolve through the ring's variable names.
    """

    vertices: tuple
    edges: tuple[frozenset, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise DomainError("duplicate vertices")
        seen = set()
        edges = []
        for e in self.edges:
            pair = frozenset(e)
            if len(pair) != 2:
                raise DomainError(f"edge {set(e)} is not a pair of distinct vertices")
            if not pair <= set(verts):
                raise DomainError(f"edge {set(e)} references undeclared vertices")
            if pair in seen:
                raise DomainError(f"duplicate edge {set(e)}")
            seen.add(pair)
            edges.append(pair)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def from_edges(cls, edges, vertices=None) -> "GraphSpec":
        pairs = [frozenset(e) for e in edges]
        if vertices is None:
            verts = sorted({v for e in pairs for v in e})
        else:
            verts = list(vertices)
        return cls(tuple(verts), tuple(pairs))

    def without_vertex(self, v) -> "GraphSpec":
        verts = tuple(u for u in self.vertices if u != v)
        edges = tuple(e for e in self.edges if v not in e)
        return GraphSpec(verts, edges)

    def two_coloring(self) -> dict | None:
        """A proper 2-coloring if the graph is bipartite, else None."""
        adj: dict = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = sorted(e, key=str)
            adj[a].append(b)
            adj[b].append(a)
        color: dict = {}
        for start in self.vertices:
            if start in color:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop(0)
                for w in adj[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    @property
    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    @property
    def is_tree(self) -> bool:
        if len(self.edges) != len(self.vertices) - 1:
            return False
        # connectivity via union-find
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            a, b = tuple(e)
            parent[find(a)] = find(b)
        return len({find(v) for v in self.vertices}) == 1


def vertex_index(ring: RingContext, label) -> int:
    """Variable index for a vertex label: ints map directly, names by lookup."""
    if isinstance(label, int):
        ring._check_index(label)
        return label
    return ring.index(str(label))


def edge_ideal(g: GraphSpec, ring: RingContext) -> MonomialIdeal:
    """The ideal generated by x_u * x_v over the edges of the graph."""
    gens = []
    for e in g.edges:
        a, b = tuple(e)
        gens.append(ring.variable(vertex_index(ring, a)) * ring.variable(vertex_index(ring, b)))
    return minimalize(gens, ring=ring)


def cover_ideal(g: GraphSpec, ring: RingContext) -> MonomialIdeal:
    """The intersection of the edge primes (x_u, x_v); generators are the
    minimal vertex covers."""
    primes = []
    for e in g.edges:
        a, b = tuple(e)
        primes.append(
            MonomialPrime(
                ring, frozenset({vertex_index(ring, a), vertex_index(ring, b)})
            ).as_ideal()
        )
    return intersect_many(primes, ring=ring)


def transversal_polymatroidal(ring: RingContext, Fs) -> MonomialIdeal:
    """The product of the monomial primes on the given variable sets.

    Square-free exactly when the sets are pairwise disjoint.
    """
    Fs = [frozenset(F) for F in Fs]
    if not Fs:
        raise DomainError("need at least one variable set")
    for F in Fs:
        if not F:
            raise DomainError("variable sets must be nonempty")
    out = MonomialPrime(ring, Fs[0]).as_ideal()
    for F in Fs[1:]:
        out = ideal_product(out, MonomialPrime(ring, F).as_ideal())
    return out


def beta1(
    I: MonomialIdeal,
    max_gens: int = BETA1_MAX_GENS,
    max_nodes: int = BETA1_MAX_NODES,
) -> tuple[int, tuple[Monomial, ...]]:
    """Maximum number of pairwise coprime minimal generators, with a witness set.

    Exact branch and bound over the coprimality graph.  Two monomials are
    coprime exactly when their supports are disjoint, so this also computes
    the maximum matching-in-supports size.  Refuses oversized inputs.
    """
    require_proper_nonzero(I, "independence number")
    gens = I.gens
    if len(gens) > max_gens:
        raise BudgetExceededError(
            f"{len(gens)} generators exceed the independence-search budget of {max_gens}"
        )
    supports = [g.support() for g in gens]
    n = len(gens)
    compat = [
        [bool(i != j and not (supports[i] & supports[j])) for j in range(n)]
        for i in range(n)
    ]

    best_size = 0
    best_set: list[int] = []
    nodes = 0

    def extend(start: int, chosen: list[int]) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceededError(
                f"independence search exceeded {max_nodes} nodes"
            )
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_set = list(chosen)
        candidates = [
            j for j in range(start, n) if all(compat[i][j] for i in chosen)
        ]
        for k, j in enumerate(candidates):
            if len(chosen) + len(candidates) - k <= best_size:
                return
            chosen.append(j)
            extend(j + 1, chosen)
            chosen.pop()

    extend(0, [])
    return best_size, tuple(gens[i] for i in best_set)


def max_disjoint_generators(I: MonomialIdeal) -> int:
    """Maximum number of generators with pairwise disjoint supports (square-free only)."""
    if not I.is_squarefree:
        raise DomainError("disjoint-generator count is defined for square-free ideals")
    size, _ = beta1(I)
    return size


def is_konig(I: MonomialIdeal) -> bool:
    """True when the maximum number of disjoint generators equals the height."""
    from .decomp import height

    return max_disjoint_generators(I) == height(I)


def is_t_spread(I: MonomialIdeal, t: int) -> bool:
    """True when every generator's sorted support has consecutive gaps >= t."""
    if t < 0:
        raise DomainError("spread gap must be nonnegative")
    if not I.is_squarefree:
        raise DomainError("spread recognition is defined for square-free ideals")
    for g in I.gens:
        supp = sorted(g.support())
        for a, b in zip(supp, supp[1:]):
            if b - a < t:
                return False
    return True


def symbolic_power(I: MonomialIdeal, k: int, method: str = "auto") -> MonomialIdeal:
    """The k-th symbolic power: intersection of the primary components of I^k
    lying over the minimal primes of I.

    Square-free ideals take the fast path through the minimal primes
    directly; the general path filters the irreducible decomposition of
    I^k.  Both paths agree on square-free inputs (property-tested).
    """
    require_proper_nonzero(I, "symbolic power")
    if k < 1:
        raise DomainError("symbolic power exponent must be positive")
    if method not in ("auto", "minprimes", "decomposition"):
        raise DomainError(f"unknown symbolic power method {method!r}")
    if method == "auto":
        method = "minprimes" if I.is_squarefree else "decomposition"
    minimal = sorted_primes(minimal_primes(I))
    if method == "minprimes":
        if not I.is_squarefree:
            raise DomainError("the minimal-primes path needs a square-free ideal")
        return intersect_many([power(p.as_ideal(), k) for p in minimal], ring=I.ring)
    decomp = irreducible_decomposition(power(I, k))
    min_vars = {p.vars for p in minimal}
    kept = [c.as_ideal() for c in decomp.components if c.radical().vars in min_vars]
    return intersect_many(kept, ring=I.ring)
