"""Exact Yetter-Drinfeld modules, braidings and truncated Nichols algebras
over the infinite dihedral group, with a finite-GK-dimension classifier."""

from .field import (
    DEFAULT_ORDER,
    Rational,
    Scalar,
    cyclotomic_polynomial,
    parse_scalar,
    root_of_unity_order,
    scalar_add,
    scalar_inv,
    scalar_mul,
)
from .group import (
    ConjClass,
    GroupElement,
    centralizer_contains,
    class_is_infinite,
    conj_class_of,
    conjugate,
    coset_reps,
    inverse,
    multiply,
    parse_element,
)
from .repn import (
    ALambdaElement,
    CheckResult,
    CornerData,
    FinRep,
    SimpleCandidate,
    alambda_multiply,
    corner_data,
    corner_power_identity,
    idempotent_pair,
    is_irreducible,
    module_axiom_check,
    radical_line,
    rep_iso_check,
    simple_modules,
)
from .ydmod import (
    A,
    B,
    BasisVector,
    BraidTerm,
    GClassModule,
    GhClassModule,
    HClassModule,
    OneClassModule,
    SignedVector,
    V1,
    V2,
    X1,
    X2,
    YDModule,
    braid_equation_check,
    diagonal_type,
    g_class,
    gh_class,
    h_class,
    one_class,
    yd_compat_check,
)
from .tables import braiding_table_check
from .nichols import (
    DEGREE_CAP,
    GrowthFit,
    HilbertPrefix,
    MonomialOperator,
    braid_at,
    graded_dims,
    growth_fit,
    lift_permutation,
    quantum_symmetrizer,
)
from .classify import (
    EvidenceError,
    FamilyInstance,
    ParamGrid,
    REPORT_SCHEMA,
    Verdict,
    classify,
    default_grid,
    enumerate_families,
    theorem_table,
)

__version__ = "0.1.0"
