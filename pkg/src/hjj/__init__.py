"""Exact-rational computer algebra for finite-dimensional
Hom-Jacobi-Jordan algebras: axiom verification, second cohomology,
abelian and twofold (metric) extensions, low-dimensional catalogs."""

from .algebra import (
    Algebra,
    Invariants,
    LinearMapBetweenAlgebras,
    SubspaceOfAlgebra,
    center,
    check_hom_jacobi,
    check_homomorphism,
    check_multiplicative,
    derived_series,
    is_abelian_ideal,
    is_ideal,
    is_isomorphism,
    is_regular,
    is_solvable,
    is_subalgebra,
    isomorphism_invariants,
)
from .cohomology import (
    Cochain1,
    Cochain2,
    Cochain3,
    H2Result,
    ScalarForm,
    c2r_space,
    c3r_space,
    cochain1_space,
    cochain2_space,
    compute_H2,
    d1,
    d2,
    dc2,
    dr2,
    dr3,
)
from .errors import (
    ContainmentViolation,
    DegenerateForm,
    HJJError,
    InvalidCocycle,
    InvalidRepresentation,
    MissingParameter,
    NotACochain,
    ParseError,
    PreconditionFailure,
    SchemaError,
    UnknownEntry,
    UnsupportedSystem,
)
from .extensions import (
    EquivalenceResult,
    ExtensionAlgebra,
    ExtensionSpec,
    build_extension,
    equivalence_map_from_cochain,
    extensions_equivalent,
)
from .linalg import (
    Matrix,
    Subspace,
    charpoly,
    determinant,
    image_basis,
    invert,
    kernel_basis,
    minpoly,
    quotient_dim,
    rank,
    rref,
    solve,
)
from .metric import (
    MetricAlgebra,
    center_derived_duality,
    check_metric,
    gamma_form,
    is_isotropic,
    metric_criterion,
    orthogonal,
)
from .quadratic import (
    QuadraticCochain1,
    QuadraticCochain2,
    TwofoldExtension,
    build_twofold,
    compute_H2Q,
    d1Q,
    d2Q,
    twofold_equivalence_map,
    wedge,
    wedge12,
)
from .representations import (
    QuadraticRepresentation,
    Representation,
    a2zero_candidates,
    check_quadratic_representation,
    check_representation,
    coadjoint_condition,
    coadjoint_conditions_extended,
    nilpotent2x2,
    solve_representations_dim1,
)
from .scalars import BACKEND, QQ
from .catalog import (
    CatalogEntry,
    catalog_list,
    classify,
    instantiate,
    match_catalog,
    verify_entry,
)

__version__ = "0.1.0"
