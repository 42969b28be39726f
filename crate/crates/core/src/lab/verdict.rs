use std::fmt;

use serde::{Serialize, Serializer};

use crate::consensus::condorcet_ties;
use crate::cube::Vertex;
use crate::error::Result;
use crate::lab::enumerate::Mode;
use crate::lab::function::{ConsensusFunction, Winners};
use crate::profile::Profile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Axiom {
    /// (T)
    Translation,
    /// (C)
    Consistency,
    /// (Maj)
    Majority,
    /// (Min)
    Minority,
    /// (RR)
    RestrictedRange,
    /// Agreement of two functions at the named anchor vertex.
    Agreement(String),
    /// Non-empty intersection of the single-vertex winner sets.
    IntersectionCondition,
    /// Equality of two translation-invariant functions that agree at a vertex.
    Uniqueness,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Translation => f.write_str("T"),
            Axiom::Consistency => f.write_str("C"),
            Axiom::Majority => f.write_str("Maj"),
            Axiom::Minority => f.write_str("Min"),
            Axiom::RestrictedRange => f.write_str("RR"),
            Axiom::Agreement(at) => write!(f, "Agreement({at})"),
            Axiom::IntersectionCondition => f.write_str("IntersectionCondition"),
            Axiom::Uniqueness => f.write_str("Theorem1"),
        }
    }
}

impl Serialize for Axiom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails,
    HoldsWithinTrials,
    Inapplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::HoldsWithinTrials => "holds-within-trials",
            Outcome::Inapplicable => "inapplicable",
        })
    }
}

/// Concrete evidence that an axiom is violated.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `vertex ∈ f(profile)` but `vertex ⊕ shift ∉ f(profile ⊕ shift)`.
    Translation {
        profile: Profile,
        shift: Vertex,
        vertex: Vertex,
        winners: Winners,
        shifted_winners: Winners,
    },
    /// Membership of `vertex` differs between `f(profile)` and `g(profile)`.
    Agreement {
        profile: Profile,
        vertex: Vertex,
        in_first: bool,
        in_second: bool,
    },
    /// `f(first) ∩ f(second)` is non-empty but differs from `f(first second)`.
    Consistency {
        first: Profile,
        second: Profile,
        first_winners: Winners,
        second_winners: Winners,
        combined_winners: Winners,
    },
    Majority {
        profile: Profile,
        required: Vertex,
        winners: Winners,
    },
    Minority {
        profile: Profile,
        required: Vertex,
        winners: Winners,
    },
    /// `|f(profile)| > 2^Cs(profile)`.
    RestrictedRange {
        profile: Profile,
        winners: usize,
        condorcet_score: usize,
    },
    /// The single-vertex winner sets of `Q_n` have no common vertex.
    EmptyIntersection { dimension: usize },
    /// `f(profile) ≠ g(profile)`.
    Mismatch {
        profile: Profile,
        first_winners: Winners,
        second_winners: Winners,
    },
}

impl Witness {
    /// Re-evaluates the functions on the witness and reports whether the
    /// violation is still there. `g` is the second function for
    /// [`Witness::Agreement`] and [`Witness::Mismatch`].
    pub fn replays(&self, f: &ConsensusFunction, g: Option<&ConsensusFunction>) -> Result<bool> {
        Ok(match self {
            Witness::Translation {
                profile,
                shift,
                vertex,
                ..
            } => {
                f.evaluate(profile)?.contains(vertex)
                    && !f
                        .evaluate(&profile.translate(shift)?)?
                        .contains(&vertex.xor(shift)?)
            }
            Witness::Agreement {
                profile, vertex, ..
            } => {
                let Some(g) = g else { return Ok(false) };
                f.evaluate(profile)?.contains(vertex) != g.evaluate(profile)?.contains(vertex)
            }
            Witness::Consistency { first, second, .. } => {
                let a = f.evaluate(first)?;
                let b = f.evaluate(second)?;
                let both: Winners = a.intersection(&b).cloned().collect();
                !both.is_empty() && f.evaluate(&first.concat(second)?)? != both
            }
            Witness::Majority { profile, .. } => !f
                .evaluate(profile)?
                .contains(&crate::consensus::maj(profile)),
            Witness::Minority { profile, .. } => !f
                .evaluate(profile)?
                .contains(&crate::consensus::min_vertex(profile)),
            Witness::RestrictedRange { profile, .. } => {
                let cs = condorcet_ties(profile).score();
                cs < 64 && f.evaluate(profile)?.len() as u128 > 1u128 << cs
            }
            Witness::EmptyIntersection { dimension } => {
                crate::lab::checks::single_vertex_intersection(f, *dimension)?.is_empty()
            }
            Witness::Mismatch { profile, .. } => {
                let Some(g) = g else { return Ok(false) };
                f.evaluate(profile)? != g.evaluate(profile)?
            }
        })
    }
}

/// How far a function is from being pinned down as `f2` at one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntersectionSummary {
    pub dimension: usize,
    pub intersection: Winners,
    pub translation: Outcome,
    pub consistency: Outcome,
    pub hypotheses_met: bool,
    /// Whether `f` coincided with `f2` on the sampled profiles; present
    /// only when all hypotheses were met.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equals_f2: Option<bool>,
}

/// Result of one axiom check on one function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub function: String,
    pub mode: Mode,
    pub result: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub profiles_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<IntersectionSummary>,
}

impl AxiomVerdict {
    pub(crate) fn finish(
        axiom: Axiom,
        function: impl Into<String>,
        mode: Mode,
        witness: Option<Witness>,
        profiles_checked: u64,
    ) -> Self {
        let result = match (&witness, mode.is_exhaustive()) {
            (Some(_), _) => Outcome::Fails,
            (None, true) => Outcome::Holds,
            (None, false) => Outcome::HoldsWithinTrials,
        };
        Self {
            axiom,
            function: function.into(),
            mode,
            result,
            witness,
            seed: mode.seed(),
            profiles_checked,
            summary: None,
        }
    }

    /// Holds, exhaustively or within the sampled trials.
    pub fn holds(&self) -> bool {
        matches!(self.result, Outcome::Holds | Outcome::HoldsWithinTrials)
    }

    pub fn fails(&self) -> bool {
        self.result == Outcome::Fails
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

impl fmt::Display for AxiomVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on {}: {} ({} profiles",
            self.axiom, self.function, self.result, self.profiles_checked
        )?;
        if let Some(seed) = self.seed {
            write!(f, ", seed {seed}")?;
        }
        f.write_str(")")?;
        if let Some(w) = &self.witness {
            write!(
                f,
                "; witness {}",
                serde_json::to_string(w).unwrap_or_default()
            )?;
        }
        Ok(())
    }
}
