//! Mechanical checks of consensus-function axioms.
//!
//! Functions are wrapped as [`ConsensusFunction`]s and checked either
//! exhaustively over every profile within [`Bounds`] or on seeded random
//! samples. Failures carry a [`Witness`] that [`Witness::replays`] can
//! re-verify.

pub mod checks;
pub mod enumerate;
pub mod function;
pub mod lemmas;
pub mod oracle;
pub mod verdict;

pub use checks::{
    check_agreement, check_consistency, check_intersection_condition,
    check_intersection_condition_with, check_maj, check_min, check_rr, check_translation,
    single_vertex_intersection, verify_theorem1, Anchor,
};
pub use enumerate::{profiles_of, profiles_within, random_profile, Bounds, Mode};
pub use function::{ConsensusFunction, Winners};
pub use oracle::{oracle_argopt, Objective, Sense};
pub use verdict::{Axiom, AxiomVerdict, IntersectionSummary, Outcome, Witness};
