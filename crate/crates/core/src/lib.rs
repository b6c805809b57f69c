//! Exact classification of Ulrich bundles on smooth bidouble planes.
//!
//! Given branch degrees (n1, n2, n3) of a (Z/2)²-cover of the projective
//! plane, the crate computes the surface invariants, decides whether the
//! Picard number is one, reports whether Ulrich line bundles exist, are
//! excluded, or remain undecided, and produces the numerical recipe for a
//! special rank-two Ulrich bundle. Non-existence arguments are replayed as
//! integer computations and every verdict carries its citation trail.

pub mod citation;
pub mod classifier;
pub mod construction;
pub mod error;
pub mod geometry;
pub mod lattice;
pub mod numerics;
pub mod query;

pub use citation::{Citation, TraceStep};
pub use classifier::{
    line_bundle_status, ulrich_complexity, ComplexityKind, ComplexityVerdict,
    LineBundleAvailability, LineBundleStatus,
};
pub use construction::{special_rank2_recipe, verify_recipe, CBRecipe, RecipeReport};
pub use error::{Error, Result};
pub use geometry::{
    intermediate_picard, invariants, picard_classification, validate_triple, BranchTriple, Parity,
    SurfaceInvariants,
};
pub use lattice::{
    brute_force_search, preset_lattice, DivisorClass, IntersectionLattice, Preset, RationalClass,
};
pub use numerics::{
    check_numerical_ulrich, is_perfect_square, odd_rank_obstruction, p1xp1_line_search,
    rank1_rho1_search, special_ulrich_targets, verify_024_certificate, FeasibilityStatus,
    FeasibilityVerdict, UlrichCandidate,
};
pub use query::{classify, classify_all, QueryResult};
