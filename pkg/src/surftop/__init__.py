"""surftop: exact unimodular form classification and surface topology.

Classifies unimodular intersection forms by (rank, signature, parity),
computes the topological invariants of simply-connected projective
surfaces from (c1^2, c2, spin), decides oriented homeomorphism, and
demonstrates by finite-field point counting that equal zeta data does
not determine homeomorphism type.
"""

from .classification import (
    E8,
    HYPERBOLIC,
    ClassificationMode,
    DefiniteDiagonal,
    FormClass,
    IndefiniteEven,
    IndefiniteOdd,
    canonical_gram,
    classify_form,
    classify_gram,
    describe,
    forms_isomorphic,
)
from .errors import DomainError
from .lattice import (
    FormInvariants,
    GramMatrix,
    Parity,
    block_diag,
    brute_force_isometry,
    determinant,
    diag,
    invariants,
    is_unimodular,
    parity,
    random_unimodular_transform,
)
from .surfaces import (
    SurfaceData,
    SurfaceInvariants,
    blow_up,
    catalog,
    catalog_lookup,
    compute_invariants,
    homeomorphic,
    hypersurface,
    intersection_form_class,
)
from .zeta import (
    FiniteField,
    PointCount,
    ZetaData,
    build_field,
    count_blowup_p2,
    count_hypersurface_p3,
    count_p1xp1,
    count_variety,
    counterexample_report,
    fermat_form,
    weil_bound_check,
    zeta_counts,
)

__all__ = [
    "E8",
    "HYPERBOLIC",
    "ClassificationMode",
    "DefiniteDiagonal",
    "DomainError",
    "FiniteField",
    "FormClass",
    "FormInvariants",
    "GramMatrix",
    "IndefiniteEven",
    "IndefiniteOdd",
    "Parity",
    "PointCount",
    "SurfaceData",
    "SurfaceInvariants",
    "ZetaData",
    "block_diag",
    "blow_up",
    "brute_force_isometry",
    "build_field",
    "canonical_gram",
    "catalog",
    "catalog_lookup",
    "classify_form",
    "classify_gram",
    "compute_invariants",
    "count_blowup_p2",
    "count_hypersurface_p3",
    "count_p1xp1",
    "count_variety",
    "counterexample_report",
    "describe",
    "determinant",
    "diag",
    "fermat_form",
    "forms_isomorphic",
    "homeomorphic",
    "hypersurface",
    "intersection_form_class",
    "invariants",
    "is_unimodular",
    "parity",
    "random_unimodular_transform",
    "weil_bound_check",
    "zeta_counts",
]
