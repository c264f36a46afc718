"""galois-kit: exact-arithmetic Galois theory over the rationals.

Splitting fields, Galois groups as permutation groups, the Galois
correspondence, radical chains with their normalization to nested normal
radical towers, and the necessary condition for solvability by radicals.
"""

__version__ = "0.1.0"

from .errors import (
    ChainFormatError,
    DegreeCapError,
    FieldMismatchError,
    GaloisKitError,
    ParseError,
    PrimitiveSearchError,
    SoundnessError,
)
from .poly import (
    Polynomial,
    poly_compose_power,
    poly_gcd,
    poly_resultant,
    poly_squarefree_decomposition,
    poly_squarefree_part,
    render_poly,
)
from .qfactor import Factorization, factor_mod_p, factor_over_Q, is_irreducible_over_Q
from .scalars import QQ, PrimeField, PrimeFieldElement, Rational
from .numfield import (
    AbsoluteField,
    ExtElement,
    ExtensionField,
    FieldTower,
    element_sort_key,
    factor_over_number_field,
    minimal_polynomial,
    norm_polynomial,
    primitive_element,
    roots_in_field,
)
from .splitting import SplittingField, splitting_degree, splitting_field
from .galois import (
    Automorphism,
    GaloisGroup,
    IntermediateField,
    fixed_field,
    galois_group,
    intermediate_field,
    orbit,
    orbit_min_poly,
    restriction_homomorphism,
    subgroup_fixing,
)
from .permgroup import (
    CyclicGroupZ,
    DirectSumZ,
    PermGroup,
    Permutation,
    UnitGroup,
    aut_cyclic,
    closure,
    derived_subgroup,
    find_embedding,
    is_abelian,
    is_normal,
    is_solvable,
    solvable_via_abelian_chain,
    unit_group,
)
from .radical import (
    NormalRadicalTower,
    RadicalChain,
    abelian_layer_embeddings,
    associated_group_chain,
    necessary_condition_verdict,
    normalize_chain,
    quintic_group_witness,
    realize_chain,
    verify_nested_normal_radical,
)
from .parsing import evaluate_in_field, parse_poly

__all__ = [
    "ChainFormatError",
    "DegreeCapError",
    "FieldMismatchError",
    "GaloisKitError",
    "ParseError",
    "PrimitiveSearchError",
    "SoundnessError",
    "Polynomial",
    "poly_compose_power",
    "poly_gcd",
    "poly_resultant",
    "poly_squarefree_decomposition",
    "poly_squarefree_part",
    "render_poly",
    "Factorization",
    "factor_mod_p",
    "factor_over_Q",
    "is_irreducible_over_Q",
    "QQ",
    "PrimeField",
    "PrimeFieldElement",
    "Rational",
    "AbsoluteField",
    "ExtElement",
    "ExtensionField",
    "FieldTower",
    "element_sort_key",
    "factor_over_number_field",
    "minimal_polynomial",
    "norm_polynomial",
    "primitive_element",
    "roots_in_field",
    "SplittingField",
    "splitting_degree",
    "splitting_field",
    "Automorphism",
    "GaloisGroup",
    "IntermediateField",
    "fixed_field",
    "galois_group",
    "intermediate_field",
    "orbit",
    "orbit_min_poly",
    "restriction_homomorphism",
    "subgroup_fixing",
    "CyclicGroupZ",
    "DirectSumZ",
    "PermGroup",
    "Permutation",
    "UnitGroup",
    "aut_cyclic",
    "closure",
    "derived_subgroup",
    "find_embedding",
    "is_abelian",
    "is_normal",
    "is_solvable",
    "solvable_via_abelian_chain",
    "unit_group",
    "NormalRadicalTower",
    "RadicalChain",
    "abelian_layer_embeddings",
    "associated_group_chain",
    "necessary_condition_verdict",
    "normalize_chain",
    "quintic_group_witness",
    "realize_chain",
    "verify_nested_normal_radical",
    "evaluate_in_field",
    "parse_poly",
    "__version__",
]
