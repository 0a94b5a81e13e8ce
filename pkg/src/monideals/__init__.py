"""monideals: exact computations with monomial ideals.

Core layers, bottom up: :mod:`monideals.core` (monomials, ideals, primes),
:mod:`monideals.arith` (ideal algebra), :mod:`monideals.decomp`
(decompositions and associated primes), :mod:`monideals.structure`
(graph ideals, independence, symbolic powers), :mod:`monideals.properties`
(bounded property checkers and certificates), plus the document parser,
verification suites, and CLI on top.
"""

from .arith import (
    colon_ideal,
    colon_monomial,
    colon_outside_support,
    contraction,
    deletion,
    ideal_product,
    ideal_sum,
    intersect,
    intersect_many,
    power,
    radical,
)
from .core import (
    BudgetExceededError,
    ConsistencyError,
    ContextMismatchError,
    DomainError,
    HypothesisNotMetError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    RingContext,
    TheoremViolationError,
    minimalize,
    sorted_primes,
)
from .decomp import (
    Decomposition,
    IrreducibleComponent,
    PrimeWitness,
    ass_by_witness_enumeration,
    ass_of_disjoint_sum,
    associated_primes,
    embedded_primes,
    height,
    irreducible_decomposition,
    is_unmixed,
    minimal_primes,
    witness_for,
    witness_survey,
)
from .docparse import DocumentError, IdealDocument, parse_ideal_document
from .instances import random_ideal
from .properties import (
    CornerSet,
    PropertyReport,
    Verdict,
    corner_elements,
    deletion_membership_counterexample,
    has_persistence_up_to,
    has_strong_persistence_up_to,
    has_symbolic_strong_persistence_up_to,
    is_ntf_up_to,
    ntf_certificate,
    property_report,
)
from .structure import (
    GraphSpec,
    SupportHypergraph,
    beta1,
    cover_ideal,
    edge_ideal,
    is_konig,
    is_t_spread,
    max_disjoint_generators,
    symbolic_power,
    transversal_polymatroidal,
)
from .version import __version__

__all__ = [name for name in dir() if not name.startswith("_")]
