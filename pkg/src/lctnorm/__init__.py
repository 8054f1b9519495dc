"""Finite-lattice toolkit for left-continuous triangular norms.

Build finite bounded lattices from cover relations, verify the axioms of
candidate operators with reproducible witnesses, construct operators from
contractive join-preserving self-maps and from blockwise ordinal sums, and
certify existence or nonexistence of left-continuous t-norms by complete
search.
"""

from .lattice import (
    ChainSpec,
    Check,
    IntervalFamily,
    Lattice,
    SemiLinearReport,
    bound_of,
    build_lattice,
    central_elements,
    chain_spec,
    check_linear_sum,
    check_semi_linear_sum,
    completely_join_irreducibles,
    interval_family,
    interval_sublattice,
    is_completely_join_irreducible,
    is_distributive,
    join_irreducibles,
    lattice_from_order,
)
from .maps import (
    FMapReport,
    ImageLattice,
    MapEnumeration,
    UnaryMap,
    canonical_fmapping,
    check_fmapping,
    check_weak_fmapping,
    constant_map,
    enumerate_weak_fmappings,
    fixed_points,
    identity_map,
    image_lattice,
    image_meet,
    unary_map,
)
from .ops import (
    AxiomReport,
    BinaryOp,
    check_operator,
    closed_on_halfopen,
    constant_op,
    drastic_op,
    idempotents,
    meet_op,
    op_from_function,
    op_from_table,
)
from .construct import (
    ChainDecomposition,
    ChainSumConditions,
    RestrictionReport,
    SemiLinearConditions,
    SemiLinearDecomposition,
    chain_decomposition,
    chain_sum_conditions,
    check_restriction,
    corollary41_construct,
    extract_summands,
    ordinal_sum_chain,
    ordinal_sum_semilinear,
    saminger_sum,
    semilinear_conditions,
    semilinear_decomposition,
    subnorm_from_weak_fmap,
    tnorm_from_fmap,
)
from .search import SearchResult, brute_force_lc_tnorms, search_lc_tnorms
from .gen import random_lattice
from .formats import (
    export_dot,
    parse_artifact,
    parse_lattice,
    parse_map,
    parse_op,
    serialize_lattice,
    serialize_map,
    serialize_op,
)
from .fixtures import (
    FIXTURE_IDS,
    LATTICE_CATALOG,
    FixtureReport,
    bundled_lattice,
    run_fixture,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
