"""Exact derivation modules of group rings A[G] for finite G.

The module of derivations splits as a free inner part with basis
{ad g} over non-representatives and, per conjugacy class [u], the
abelian group Hom(Z(u), (A,+)).  Everything here is exact integer /
finite-ring arithmetic; the oracle submodule solves the defining
linear system by brute force for independent verification.
"""

from .abhom import HomAb, HomGroup, abelianization, hom_from_values, hom_group
from .derivations import (
    Derivation,
    DerivationDecomposition,
    DerivationReport,
    GroupRingElement,
    ModuleStructure,
    ad,
    ad_element,
    central_derivation,
    character_of,
    class_sum,
    decompose,
    derivation_of,
    derivation_commutator,
    derivation_module_report,
    first_leibniz_violation,
    inner_basis,
    is_inner,
    leibniz_check,
    outer_generator,
    outer_vanishing_check,
)
from .errors import NotADerivationError, NotLoopTrivialError, SizeLimitError, SpecError
from .groupoid import (
    Character,
    Morphism,
    ad_character,
    groupoid_dot,
    identity_morphism,
    is_trivial_on_loops,
    loops_at,
    potential,
    restrict_to_loops,
    section,
    then_compose,
)
from .groups import (
    FiniteGroup,
    centralizer,
    conjugacy_classes,
    construct_group,
    cyclic_group,
    dihedral_group,
    element_order,
    product_group,
    quotient_group,
    subgroup_closure,
    symmetric_group,
    table_group,
)
from .oracle import CompareVerdict, SolutionModule, compare, solve_all_derivations
from .rings import (
    GFRing,
    INTEGERS,
    IntegersRing,
    ProductRing,
    ZmRing,
    additive_decomposition,
    construct_ring,
)

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CompareVerdict",
    "Derivation",
    "DerivationDecomposition",
    "DerivationReport",
    "FiniteGroup",
    "GFRing",
    "GroupRingElement",
    "HomAb",
    "HomGroup",
    "INTEGERS",
    "IntegersRing",
    "ModuleStructure",
    "Morphism",
    "NotADerivationError",
    "NotLoopTrivialError",
    "ProductRing",
    "SizeLimitError",
    "SolutionModule",
    "SpecError",
    "ZmRing",
    "abelianization",
    "ad",
    "ad_character",
    "ad_element",
    "additive_decomposition",
    "central_derivation",
    "centralizer",
    "character_of",
    "class_sum",
    "compare",
    "conjugacy_classes",
    "construct_group",
    "construct_ring",
    "cyclic_group",
    "decompose",
    "derivation_commutator",
    "derivation_module_report",
    "derivation_of",
    "dihedral_group",
    "element_order",
    "first_leibniz_violation",
    "groupoid_dot",
    "hom_from_values",
    "hom_group",
    "identity_morphism",
    "inner_basis",
    "is_inner",
    "is_trivial_on_loops",
    "leibniz_check",
    "loops_at",
    "outer_generator",
    "outer_vanishing_check",
    "potential",
    "product_group",
    "quotient_group",
    "restrict_to_loops",
    "section",
    "solve_all_derivations",
    "subgroup_closure",
    "symmetric_group",
    "table_group",
    "then_compose",
]
