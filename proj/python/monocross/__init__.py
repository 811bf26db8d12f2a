"""Exact classification of monomial crossings.

Linear-subspace families over Q (extremality, loads, adapted bases), square-free
monomial ideal algebra, and the inclusion-exclusion extension / constructive
division operators on unions of coordinate linear varieties. All arithmetic is
exact; rationals cross the boundary as ``"p/q"`` strings.
"""

from ._core import (
    GermDescriptor,
    InputError,
    LinearFamily,
    PreconditionError,
    ResourceError,
    SparsePoly,
    SquareFreeIdeal,
    Subspace,
    TypeLambda,
    __version__,
    adapted_basis,
    apply_linear_map,
    associated_monomials,
    associated_monomials_detailed,
    build_isomorphism,
    check_compatible,
    component_intersection,
    coordinate_family,
    coordinate_model,
    divide_on_crossings,
    extend_inclusion_exclusion,
    extend_to_basis,
    extremality,
    families_equivalent,
    ideal_membership,
    intersect,
    is_adapted,
    is_extremal,
    is_monomial_singularity,
    lemma_easy_split,
    level_space,
    load_of_collection,
    load_signature,
    loss_constant,
    minimal_transversals,
    multiplicity,
    prime_decomposition,
    sperner_bound,
    substitute_zero,
    sum,
    supplement,
    type_invariant,
    types_equivalent,
    variable_quotient,
    zero_set,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
