"""Exact algebra of finite quasiorders.

Half-space quasiorders, complementary pairs and box decompositions;
linear-extension machinery; exact half-space and order dimension with
re-verifiable witnesses; direct products and their classification; and
brute-force enumeration oracles replaying every statement the library
implements.
"""

from .catalog import antichain, chain, diamond, separation_instance, standard_example
from .dimension import (
    DimensionLawCheck,
    DimensionReport,
    Realizer,
    TransformSeeds,
    all_halfspaces,
    dimension_relation_check,
    dimension_report,
    enumerate_halfspaces,
    enumerate_halfspaces_above,
    hs_dimension,
    linear_extensions,
    order_dimension,
    realizer_to_linear_extensions,
    realizer_to_linear_extensions_alt,
)
from .errors import (
    InputError,
    PreconditionError,
    QuordError,
    ResourceCapError,
    ValidationError,
)
from .extensions import (
    linearize_halfspace,
    szpilrajn_extension,
    tighten_halfspace,
    two_linear_representation,
)
from .fileio import format_relation, parse_relation
from .halfspaces import (
    BoxDecomposition,
    HalfSpace,
    KernelPresentation,
    box_decomposition,
    check_complementary_pair,
    complement_halfspace,
    halfspace_realizer_from_linear_realizer,
    halfspace_witness,
    is_box,
    is_halfspace,
    reconstruct_from_boxes,
    standard_construction,
)
from .oracles import (
    SuiteReport,
    enumerate_quasiorders,
    find_separating_pair,
    random_quasiorder,
    suite_ids,
    theorem_replay,
    verify_separation_counterexample,
)
from .products import (
    ProductDiagnostics,
    ProductEncoding,
    direct_product,
    lemma_witnesses,
    product_halfspace_predicate,
)
from .relations import (
    Equivalence,
    GroundSet,
    LinearOrder,
    PartialOrder,
    Quasiorder,
    QuotientMap,
    Relation,
    RelationProperties,
    Restriction,
    chain_order,
    classify,
    induced_order,
    inverse,
    make_relation,
    max_ground_size,
    quord_join,
    quord_meet,
    restrict,
    symmetric_part,
    transitive_closure,
)

__version__ = "0.1.0"
