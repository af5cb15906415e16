"""Finitely presented simplicial sets, complexes, nerves, horn filling, and
integral homology."""

from .complexes import (
    AbstractComplex,
    OrientedComplex,
    RealizedComplex,
    complex_from_maximal,
    euler_characteristic_complex,
    oriented_by_total_order,
    oriented_complex,
    product_complex,
    product_oriented,
    read_back,
    realize,
    validate_complex,
    validate_oriented,
)
from .constructions import (
    SubSSet,
    boundary,
    collapse,
    coproduct,
    horn,
    label_inclusion,
    mapping_space_level,
    oriented_to_sset,
    product,
    skeleton,
    standard_simplex,
    sub_sset,
)
from .core import (
    FiniteSSet,
    SimplexKey,
    SimplexRef,
    SimplicialMap,
    apply_degeneracy,
    apply_face,
    apply_operator,
    compose_maps,
    enumerate_simplicial_maps,
    identity_map,
    is_isomorphism,
    is_simplicial_map,
    level_set,
    nondegenerate,
    validate,
)
from .delta import (
    OrdinalMap,
    codegeneracy,
    coface,
    compose,
    count_maps,
    enumerate_maps,
    factorize,
    identity,
    recompose,
)
from .documents import ObjectDocument, parse_document, serialize_document
from .errors import (
    CompositionError,
    DocumentError,
    FrozenError,
    SSetError,
    TruncationError,
)
from .fincat import (
    FinCategory,
    Functor,
    Nerve,
    chain_category,
    cyclic_group_category,
    disjoint_union,
    enumerate_functors,
    indiscrete_category,
    is_equivalence,
    is_groupoid,
    make_category,
    nerve,
    nerve_map,
    validate_category,
)
from .homology import (
    ChainComplex,
    HomologyGroup,
    SNFResult,
    euler_characteristic,
    homology,
    homology_groups,
    induced_chain_map,
    is_homology_equivalence,
    normalized_chains,
    pi0,
    smith_normal_form,
)
from .horns import (
    HornMap,
    RecognitionReport,
    enumerate_horn_maps,
    fillers,
    is_groupoid_nerve_up_to,
    is_kan_up_to,
    is_nerve_up_to,
    is_quasicategory_up_to,
    restrict_to_horn,
)

__version__ = "0.1.0"
