//! Consensus functions on `Q_n`.
//!
//! The median and anti-median come in closed form from the column sums: the
//! majority (minority) vertex, expanded by every subset of the tied
//! coordinates. Center and `ℓ_p` are exact Gray-code scans.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::cube::{Vertex, DEFAULT_SCAN_LIMIT};
use crate::error::{Error, Result};
use crate::profile::{ColumnStats, Exponent, Profile, Score};
use crate::scan::{scan_minimum, Measure};

/// Default cap on the number of tied coordinates expanded by the median.
pub const DEFAULT_TIE_EXPANSION_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionKind {
    Med,
    Cen,
    Lp,
    Am,
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FunctionKind::Med => "med",
            FunctionKind::Cen => "cen",
            FunctionKind::Lp => "lp",
            FunctionKind::Am => "am",
        })
    }
}

/// The complete optimal set of a consensus function and the optimal value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsensusOutcome {
    winners: Vec<Vertex>,
    score: Score,
    function: FunctionKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
}

impl ConsensusOutcome {
    pub(crate) fn new(
        mut winners: Vec<Vertex>,
        score: Score,
        function: FunctionKind,
        p: Option<f64>,
    ) -> Self {
        winners.sort();
        winners.dedup();
        Self {
            winners,
            score,
            function,
            p,
        }
    }

    /// Winners sorted by bitstring.
    pub fn winners(&self) -> &[Vertex] {
        &self.winners
    }

    pub fn into_winners(self) -> Vec<Vertex> {
        self.winners
    }

    pub fn score(&self) -> Score {
        self.score
    }

    pub fn function(&self) -> FunctionKind {
        self.function
    }

    pub fn exponent(&self) -> Option<f64> {
        self.p
    }

    pub fn contains(&self, x: &Vertex) -> bool {
        self.winners.binary_search(x).is_ok()
    }
}

/// Coordinates where exactly half of the profile votes 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TieSet {
    coordinates: Vec<usize>,
}

impl TieSet {
    pub fn from_stats(stats: &ColumnStats) -> Self {
        let coordinates = stats
            .sums()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| stats.vs_half(c) == Ordering::Equal)
            .map(|(i, _)| i + 1)
            .collect();
        Self { coordinates }
    }

    /// Tied coordinates, 1-based and ascending.
    pub fn coordinates(&self) -> &[usize] {
        &self.coordinates
    }

    /// The Condorcet score `Cs(π)`.
    pub fn score(&self) -> usize {
        self.coordinates.len()
    }
}

fn vertex_where(stats: &ColumnStats, keep: impl Fn(Ordering) -> bool) -> Vertex {
    let bits: Vec<bool> = stats
        .sums()
        .iter()
        .map(|&c| keep(stats.vs_half(c)))
        .collect();
    Vertex::from_bits(&bits).expect("profile dimension is valid")
}

/// `Maj(π)`: coordinate is 1 iff strictly more than half the entries have it.
pub fn maj(profile: &Profile) -> Vertex {
    majority_of(&profile.column_sums())
}

pub fn majority_of(stats: &ColumnStats) -> Vertex {
    vertex_where(stats, |o| o == Ordering::Greater)
}

/// `Min(π)`: coordinate is 1 iff strictly fewer than half the entries have it.
pub fn min_vertex(profile: &Profile) -> Vertex {
    minority_of(&profile.column_sums())
}

pub fn minority_of(stats: &ColumnStats) -> Vertex {
    vertex_where(stats, |o| o == Ordering::Less)
}

pub fn condorcet_ties(profile: &Profile) -> TieSet {
    TieSet::from_stats(&profile.column_sums())
}

/// Limits and parallelism for the consensus functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    /// Largest `n` for which a full `2^n` scan is attempted.
    pub max_scan_n: usize,
    /// Largest Condorcet score the median/anti-median will expand.
    pub max_tie_expansion: usize,
    pub workers: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Self {
            max_scan_n: DEFAULT_SCAN_LIMIT,
            max_tie_expansion: DEFAULT_TIE_EXPANSION_LIMIT,
            workers: 1,
        }
    }
}

impl Solver {
    fn expand(&self, seed: Vertex, ties: &TieSet) -> Result<Vec<Vertex>> {
        let t = ties.score();
        if t > self.max_tie_expansion {
            return Err(Error::TieExpansionLimit {
                ties: t,
                limit: self.max_tie_expansion,
            });
        }
        let mut out = Vec::with_capacity(1 << t);
        for mask in 0u64..1 << t {
            let mut x = seed.clone();
            for (b, &j) in ties.coordinates().iter().enumerate() {
                if (mask >> b) & 1 == 1 {
                    x.flip_bit(j - 1);
                }
            }
            out.push(x);
        }
        Ok(out)
    }

    /// `Med(π)` in `O(nk + 2^Cs)`, no scan of the cube.
    pub fn median(&self, profile: &Profile) -> Result<ConsensusOutcome> {
        let stats = profile.column_sums();
        let ties = TieSet::from_stats(&stats);
        let winners = self.expand(majority_of(&stats), &ties)?;
        let k = stats.len();
        let score: usize = stats.sums().iter().map(|&c| c.min(k - c)).sum();
        Ok(ConsensusOutcome::new(
            winners,
            score.into(),
            FunctionKind::Med,
            None,
        ))
    }

    /// `AM(π)`: the status maximizers, seeded by the minority vertex.
    pub fn anti_median(&self, profile: &Profile) -> Result<ConsensusOutcome> {
        let stats = profile.column_sums();
        let ties = TieSet::from_stats(&stats);
        let winners = self.expand(minority_of(&stats), &ties)?;
        let k = stats.len();
        let score: usize = stats.sums().iter().map(|&c| c.max(k - c)).sum();
        Ok(ConsensusOutcome::new(
            winners,
            score.into(),
            FunctionKind::Am,
            None,
        ))
    }

    /// `Cen(π)`: eccentricity minimizers by full scan.
    pub fn center(&self, profile: &Profile) -> Result<ConsensusOutcome> {
        let (winners, score) = scan_minimum(
            profile,
            Measure::Eccentricity,
            self.max_scan_n,
            self.workers,
        )?;
        Ok(ConsensusOutcome::new(
            winners,
            score,
            FunctionKind::Cen,
            None,
        ))
    }

    /// `ℓ_p(π)`: minimizers of the sum of `p`-th powers of distances.
    pub fn lp(&self, profile: &Profile, p: Exponent) -> Result<ConsensusOutcome> {
        let (winners, score) =
            scan_minimum(profile, Measure::Power(p), self.max_scan_n, self.workers)?;
        Ok(ConsensusOutcome::new(
            winners,
            score,
            FunctionKind::Lp,
            Some(p.value()),
        ))
    }

    /// `Mean(π) = ℓ_2(π)`.
    pub fn mean(&self, profile: &Profile) -> Result<ConsensusOutcome> {
        self.lp(profile, Exponent::TWO)
    }
}

pub fn median(profile: &Profile) -> Result<ConsensusOutcome> {
    Solver::default().median(profile)
}

pub fn anti_median(profile: &Profile) -> Result<ConsensusOutcome> {
    Solver::default().anti_median(profile)
}

pub fn center(profile: &Profile) -> Result<ConsensusOutcome> {
    Solver::default().center(profile)
}

pub fn lp_consensus(profile: &Profile, p: Exponent) -> Result<ConsensusOutcome> {
    Solver::default().lp(profile, p)
}

pub fn mean(profile: &Profile) -> Result<ConsensusOutcome> {
    Solver::default().mean(profile)
}
