//! Consensus (location) functions on the n-dimensional hypercube.
//!
//! Vertices of `Q_n` are bitstrings and a profile is a list of them, for
//! example the approval ballots of a committee election. The crate computes
//! the center, median, mean, `ℓ_p` and anti-median of a profile, each as
//! the full set of optimal vertices, and ships a lab for checking the
//! translation, consistency, majority, minority and restricted-range axioms
//! against arbitrary consensus functions.
//!
//! ```
//! use hypercube_consensus::{median, Profile};
//!
//! let ballots = Profile::from_strs(&["110", "101", "011"]).unwrap();
//! let med = median(&ballots).unwrap();
//! assert_eq!(med.winners()[0].to_string(), "111");
//! ```

pub mod ballot;
pub mod consensus;
pub mod cube;
pub mod error;
pub mod lab;
pub mod profile;
pub mod run;
mod scan;

pub use ballot::{BallotFile, ParseError};
pub use consensus::{
    anti_median, center, condorcet_ties, lp_consensus, maj, mean, median, min_vertex,
    ConsensusOutcome, FunctionKind, Solver, TieSet,
};
pub use cube::{enumerate_vertices, GrayCode, Vertex};
pub use error::{Error, Result};
pub use profile::{ColumnStats, Exponent, Profile, Score};
